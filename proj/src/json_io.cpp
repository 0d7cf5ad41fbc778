// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gaborlab {

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json classes = ordered_json::array();
  for (const auto& c : g.conjugacy_classes()) classes.push_back(static_cast<int>(c.size()));
  return ordered_json{{"name", g.name()},
                      {"order", g.order()},
                      {"identity", g.identity()},
                      {"abelian", g.is_abelian()},
                      {"validation", g.validation_mode()},
                      {"class_sizes", classes},
                      {"center_size", static_cast<int>(g.center().size())},
                      {"mult", g.mult_table()}};
}

FiniteGroup group_from_json(const ordered_json& j) {
  if (!j.contains("mult")) fail(Errc::UnknownSpec, "group JSON lacks \"mult\"");
  std::vector<std::vector<int>> table;
  try {
    table = j.at("mult").get<std::vector<std::vector<int>>>();
  } catch (const std::exception& e) {
    fail(Errc::UnknownSpec, std::string("bad \"mult\" table: ") + e.what());
  }
  std::string name = j.value("name", "");
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
    fail(Errc::UnknownSpec, "declared order disagrees with the table size");
  return FiniteGroup::from_mult_table(std::move(table), std::move(name));
}

FiniteGroup group_from_spec(const std::string& spec, int order_cap) {
  const bool at = !spec.empty() && spec[0] == '@';
  const std::string path = at ? spec.substr(1) : spec;
  if (at || std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) fail(Errc::UnknownSpec, "cannot read \"" + path + "\"");
    ordered_json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      fail(Errc::UnknownSpec, path + ": " + e.what());
    }
    FiniteGroup g = group_from_json(j);
    if (g.order() > order_cap) fail(Errc::OrderCapExceeded, "group file exceeds order cap");
    return g;
  }
  return named_group(spec, order_cap);
}

ordered_json matrix_to_json(const CMat& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ordered_json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json dual_to_json(const UnitaryDual& d, const DualReport& report) {
  ordered_json irreps = ordered_json::array();
  ordered_json degrees = ordered_json::array();
  for (int i = 0; i < d.size(); ++i) {
    const Irrep& p = d.irrep(i);
    ordered_json mats = ordered_json::array();
    for (const auto& m : p.mats) mats.push_back(matrix_to_json(m));
    irreps.push_back(ordered_json{{"label", p.label},
                                  {"dim", p.dim},
                                  {"plancherel_weight", d.plancherel_weight(i)},
                                  {"matrices", std::move(mats)}});
    degrees.push_back(p.dim);
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back(ordered_json{{"check", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  return ordered_json{{"group", d.group().name()},
                      {"order", d.group().order()},
                      {"degrees", degrees},
                      {"sum_squared_degrees", d.sum_squared_degrees()},
                      {"irreps", irreps},
                      {"report", ordered_json{{"all_pass", report.all_pass},
                                              {"max_residual", report.max_residual},
                                              {"checks", checks}}}};
}

ordered_json rational_to_json(const Rational& r, const std::string& provenance) {
  return ordered_json{{"num", r.num}, {"den", r.den}, {"provenance", provenance}};
}

ordered_json operator_field_to_json(const OperatorField& f, double threshold) {
  ordered_json blocks = ordered_json::array();
  for (int i = 0; i < f.size(); ++i)
    blocks.push_back(ordered_json{{"irrep", f.dual().irrep(i).label},
                                  {"dim", f.dual().degree(i)},
                                  {"matrix", matrix_to_json(f.block(i))}});
  return ordered_json{
      {"group", f.dual().group().name()},
      {"blocks", blocks},
      {"weighted_hs_norm_squared", f.weighted_hs_norm_squared()},
      {"support", f.support(threshold)},
      {"support_threshold", threshold},
      {"plancherel_support_measure", rational_to_json(f.plancherel_support_measure(threshold), "enumerated")}};
}

ordered_json gabor_field_to_json(const GaborField& f, double threshold) {
  const int n = f.group().order();
  ordered_json grid = ordered_json::array();
  for (int x = 0; x < n; ++x) {
    ordered_json per_pi = ordered_json::array();
    for (int i = 0; i < f.dual().size(); ++i)
      per_pi.push_back(ordered_json{{"irrep", f.dual().irrep(i).label}, {"matrix", matrix_to_json(f.block(x, i))}});
    grid.push_back(ordered_json{{"x", x}, {"blocks", std::move(per_pi)}});
  }
  const GaborSupport supp = support_measure(f, threshold);
  ordered_json points = ordered_json::array();
  for (const auto& [x, i] : supp.points) points.push_back(ordered_json::array({x, i}));
  return ordered_json{{"group", f.group().name()},
                      {"window_norm", f.window_norm()},
                      {"h2_norm", f.h2_norm()},
                      {"grid", grid},
                      {"support", ordered_json{{"threshold", supp.threshold},
                                               {"points", points},
                                               {"measure", rational_to_json(supp.measure, "enumerated")}}}};
}

ordered_json qup_report_to_json(const QupReport& r) {
  ordered_json j{{"group", r.group},
                 {"experiment", r.experiment},
                 {"witness", ordered_json{{"f_spec", r.f_spec}, {"psi_spec", r.psi_spec}}},
                 {"verdict", r.verdict},
                 {"discrepancy", r.discrepancy},
                 {"threshold", r.threshold},
                 {"tolerance", r.tolerance},
                 {"seed", r.seed}};
  if (r.measure) j["measure"] = rational_to_json(*r.measure, "enumerated");
  if (r.prediction) j["prediction"] = rational_to_json(*r.prediction, "closed-form");
  if (!r.detail.is_null()) j["detail"] = r.detail;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string qup_reports_to_csv(const std::vector<QupReport>& reports) {
  std::ostringstream os;
  os << "group,experiment,f_spec,psi_spec,measure_num,measure_den,prediction_num,prediction_den,"
        "verdict,discrepancy,threshold,tolerance,seed\n";
  for (const auto& r : reports) {
    os << csv_escape(r.group) << ',' << csv_escape(r.experiment) << ',' << csv_escape(r.f_spec) << ','
       << csv_escape(r.psi_spec) << ',';
    if (r.measure) os << r.measure->num << ',' << r.measure->den << ',';
    else os << ",,";
    if (r.prediction) os << r.prediction->num << ',' << r.prediction->den << ',';
    else os << ",,";
    os << csv_escape(r.verdict) << ',' << (r.discrepancy ? 1 : 0) << ',' << r.threshold << ','
       << r.tolerance << ',' << r.seed << '\n';
  }
  return os.str();
}

}  // namespace gaborlab
