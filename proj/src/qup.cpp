// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/qup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaborlab {

namespace {

using nlohmann::ordered_json;

std::string elems_str(const std::vector<int>& elems) {
  std::ostringstream os;
  for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? "," : "") << elems[i];
  return os.str();
}

std::string chi_spec(const std::vector<int>& elems) { return "chi:" + elems_str(elems); }

ordered_json rational_json(const Rational& r, const std::string& provenance) {
  return ordered_json{{"num", r.num}, {"den", r.den}, {"provenance", provenance}};
}

ordered_json support_json(const GaborSupport& s) {
  ordered_json pts = ordered_json::array();
  for (const auto& [x, pi] : s.points) pts.push_back(ordered_json::array({x, pi}));
  return ordered_json{{"threshold", s.threshold},
                      {"points", pts},
                      {"measure", rational_json(s.measure, "enumerated")}};
}

// Families rotate dense, 1-sparse, 2-sparse, ceil(n/4)-sparse.
GroupFunction draw_from_family(const FiniteGroup& g, int family, Rng& rng, std::string* spec) {
  int k = 0;
  switch (family % 4) {
    case 1: k = 1; break;
    case 2: k = 2; break;
    case 3: k = (g.order() + 3) / 4; break;
    default: break;
  }
  *spec = k == 0 ? "random:dense" : "random:sparse" + std::to_string(k);
  GroupFunction f = k == 0 ? random_dense(g, rng) : random_sparse(g, k, rng);
  while (f.is_zero()) f = random_dense(g, rng);  // nonzero by contract
  return f;
}

}  // namespace

QupReport weak_qup_witness(const FiniteGroup& g, const QupOptions& opt) {
  QupReport rep;
  rep.group = g.name();
  rep.experiment = "weak_qup_witness";
  rep.threshold = opt.threshold;
  rep.tolerance = opt.tolerance;
  rep.seed = opt.seed;

  if (g.is_abelian()) {
    rep.verdict = "NoWitness";
    rep.detail["reason"] = "group is abelian: every quotient is abelian, no sub-1 witness exists";
    return rep;
  }

  const UnitaryDual dual = unitary_dual(g, opt.seed);

  // Candidate normal subgroups with nonabelian quotient. {e} always
  // qualifies for a nonabelian group; the full enumeration is informative
  // when the order cap allows it.
  std::vector<Subgroup> candidates;
  if (g.order() <= opt.subgroup_cap) {
    for (auto& h : normal_subgroups(g, opt.subgroup_cap))
      if (!quotient_group(g, h).quotient.is_abelian()) candidates.push_back(std::move(h));
  } else {
    candidates.push_back(trivial_subgroup(g));
  }

  struct Row {
    Rational measure;
    Rational prediction;
    bool match = false;
    bool strict = false;
    std::vector<int> elements;
    int index = 0;
    int mu_quotient_dual = 0;
    int mu_annihilator = 0;
  };
  std::vector<Row> rows;
  for (const auto& h : candidates) {
    const GroupFunction f = indicator(h);
    const GaborField field = gabor_transform(f, f, dual);
    const GaborSupport supp = support_measure(field, opt.threshold);

    const QuotientGroup q = quotient_group(g, h);
    const UnitaryDual qdual = unitary_dual(q.quotient, opt.seed);
    const int index = q.quotient.order();
    const Rational prediction{qdual.sum_degrees(), index};

    Row row;
    row.measure = supp.measure;
    row.prediction = prediction;
    row.match = supp.measure == prediction;
    // mu(G/H^) = sum d < sum d^2 = [G:H], strict for nonabelian quotients.
    row.strict = qdual.sum_degrees() < qdual.sum_squared_degrees() &&
                 qdual.sum_squared_degrees() == index;
    row.elements = h.elements;
    row.index = index;
    row.mu_quotient_dual = qdual.sum_degrees();
    row.mu_annihilator = static_cast<int>(annihilator_measure(annihilator(h, dual, opt.tolerance), dual).num);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.measure != b.measure) return a.measure < b.measure;
    return a.elements < b.elements;
  });

  // The preferred witness H = {e}.
  const Subgroup triv = trivial_subgroup(g);
  const Row* main_row = nullptr;
  for (const auto& r : rows)
    if (r.elements == triv.elements) main_row = &r;

  rep.f_spec = chi_spec(triv.elements);
  rep.psi_spec = rep.f_spec;
  rep.measure = main_row->measure;
  rep.prediction = main_row->prediction;

  bool all_ok = true;
  ordered_json table = ordered_json::array();
  for (const auto& r : rows) {
    all_ok = all_ok && r.match && r.strict && r.measure < Rational(1) &&
             r.mu_annihilator == r.mu_quotient_dual;
    table.push_back(ordered_json{{"subgroup", elems_str(r.elements)},
                                 {"quotient_order", r.index},
                                 {"measure", rational_json(r.measure, "enumerated")},
                                 {"prediction", rational_json(r.prediction, "closed-form")},
                                 {"mu_annihilator", r.mu_annihilator},
                                 {"matches", r.match},
                                 {"degree_sum_strictly_below_index", r.strict}});
  }
  rep.detail["witnesses"] = table;
  rep.detail["window_nonzero"] = true;  // chi_H is never the zero function

  rep.discrepancy = !all_ok;
  rep.verdict = all_ok ? "weak-QUP fails" : "DISCREPANCY";
  return rep;
}

QupReport abelian_lower_bound_scan(const FiniteGroup& g, int trials, std::uint64_t seed,
                                   const QupOptions& opt) {
  if (!g.is_abelian()) fail(Errc::NotAbelian, "lower-bound scan is an abelian experiment");
  QupReport rep;
  rep.group = g.name();
  rep.experiment = "abelian_lower_bound_scan";
  rep.threshold = opt.threshold;
  rep.tolerance = opt.tolerance;
  rep.seed = seed;

  const UnitaryDual dual = abelian_characters(g);
  Rng rng(seed);

  std::optional<Rational> min_measure;
  std::string min_f, min_psi;
  int violations = 0;
  ordered_json violation_list = ordered_json::array();

  auto run_pair = [&](const GroupFunction& f, const GroupFunction& psi, const std::string& fs,
                      const std::string& ps) {
    const GaborSupport supp = support_measure(gabor_transform(f, psi, dual), opt.threshold);
    if (!min_measure || supp.measure < *min_measure) {
      min_measure = supp.measure;
      min_f = fs;
      min_psi = ps;
    }
    if (supp.measure < Rational(1)) {
      ++violations;
      violation_list.push_back(ordered_json{{"f", fs},
                                            {"psi", ps},
                                            {"measure", rational_json(supp.measure, "enumerated")}});
    }
  };

  for (int t = 0; t < trials; ++t) {
    std::string fs, ps;
    const GroupFunction f = draw_from_family(g, t, rng, &fs);
    const GroupFunction psi = draw_from_family(g, t, rng, &ps);
    run_pair(f, psi, fs + "[trial " + std::to_string(t) + "]", ps + "[trial " + std::to_string(t) + "]");
  }

  int indicator_pairs = 0;
  if (g.order() <= opt.subgroup_cap) {
    const auto subs = all_subgroups(g, opt.subgroup_cap);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        run_pair(indicator(h), indicator(k), chi_spec(h.elements), chi_spec(k.elements));
        ++indicator_pairs;
      }
  }

  rep.measure = min_measure;
  rep.prediction = Rational(1);  // the Matolcsi-Szucs floor
  rep.f_spec = min_f;
  rep.psi_spec = min_psi;
  rep.discrepancy = violations > 0;
  rep.verdict = violations == 0 ? "lower bound holds" : "VIOLATION";
  rep.detail["trials"] = trials;
  rep.detail["indicator_pairs"] = indicator_pairs;
  rep.detail["violations"] = violations;
  if (violations > 0) rep.detail["violation_list"] = violation_list;
  rep.detail["min_measure"] = rational_json(*min_measure, "enumerated");
  return rep;
}

QupReport subgroup_gabor_profile(const FiniteGroup& g, const Subgroup& h, const QupOptions& opt) {
  if (!h.parent.same_as(g)) fail(Errc::GroupMismatch, "subgroup belongs to a different group");
  QupReport rep;
  rep.group = g.name();
  rep.experiment = "subgroup_gabor_profile";
  rep.threshold = opt.threshold;
  rep.tolerance = opt.tolerance;
  rep.seed = opt.seed;
  rep.f_spec = chi_spec(h.elements);
  rep.psi_spec = rep.f_spec;

  const UnitaryDual dual = unitary_dual(g, opt.seed);
  const GroupFunction f = indicator(h);
  const GaborField field = gabor_transform(f, f, dual);
  const GaborSupport supp = support_measure(field, opt.threshold);

  const Annihilator ann = annihilator(h, dual, opt.tolerance);
  std::vector<std::pair<int, int>> predicted;
  for (int x : h.elements)
    for (int i : ann.members) predicted.emplace_back(x, i);
  std::sort(predicted.begin(), predicted.end());

  const Rational m_h{static_cast<std::int64_t>(h.elements.size()), g.order()};
  const Rational mu_a = annihilator_measure(ann, dual);
  const Rational prediction = m_h * mu_a;

  const bool support_matches = supp.points == predicted;
  const bool measure_matches = supp.measure == prediction;
  const bool abelian_tight = !g.is_abelian() || supp.measure == Rational(1);

  rep.measure = supp.measure;
  rep.prediction = prediction;
  rep.discrepancy = !(support_matches && measure_matches && abelian_tight);
  rep.verdict = rep.discrepancy ? "DISCREPANCY" : "support = H x A(H)";
  rep.detail["support"] = support_json(supp);
  rep.detail["annihilator_members"] = ann.members;
  rep.detail["m_H"] = rational_json(m_h, "closed-form");
  rep.detail["mu_A"] = rational_json(mu_a, "closed-form");
  rep.detail["support_matches_H_x_A"] = support_matches;
  rep.detail["subgroup_is_normal"] = h.is_normal;
  if (!h.is_normal && !g.is_abelian())
    rep.detail["note"] = "A(H) is not a quotient dual for non-normal H; support may exceed H x A(H)";
  return rep;
}

QupReport restriction_inequality_check(const FiniteGroup& g, const Subgroup& h, int trials,
                                       std::uint64_t seed, const QupOptions& opt) {
  if (!h.parent.same_as(g)) fail(Errc::GroupMismatch, "subgroup belongs to a different group");
  if (!h.is_normal) fail(Errc::NotNormal, "restriction check needs a normal subgroup");

  QupReport rep;
  rep.group = g.name();
  rep.experiment = "restriction_inequality_check";
  rep.threshold = opt.threshold;
  rep.tolerance = opt.tolerance;
  rep.seed = seed;
  rep.f_spec = "random:dense";
  rep.psi_spec = "random:dense";

  const UnitaryDual dual_g = unitary_dual(g, opt.seed);
  const FiniteGroup hg = subgroup_as_group(g, h);
  const UnitaryDual dual_h = unitary_dual(hg, opt.seed);
  const int n = g.order();
  const int m = static_cast<int>(h.elements.size());

  Rng rng(seed);
  long combos = 0;
  int violations = 0;
  ordered_json violation_list = ordered_json::array();

  for (int t = 0; t < trials; ++t) {
    const GroupFunction f = random_dense(g, rng);
    const GroupFunction psi = random_dense(g, rng);

    // The slice u = f . conj(psi(x h^{-1} .)) depends on (x, h) only through
    // w = x h^{-1}; cache the G-side measure per w.
    std::vector<Rational> rhs_of_w(n, Rational(-1));
    std::vector<CVec> u_of_w(n);
    auto slice_for = [&](int w) -> const CVec& {
      if (rhs_of_w[w].num < 0) {
        CVec u(n);
        for (int y = 0; y < n; ++y) u[y] = f.value(y) * std::conj(psi.value(g.mul(w, y)));
        u_of_w[w] = u;
        rhs_of_w[w] =
            fourier_transform(GroupFunction(g, u), dual_g).plancherel_support_measure(opt.threshold);
      }
      return u_of_w[w];
    };

    for (int x = 0; x < n; ++x) {
      for (int hel : h.elements) {
        const int w = g.mul(x, g.inv(hel));
        const CVec& u = slice_for(w);
        const Rational rhs = rhs_of_w[w];
        for (int y = 0; y < n; ++y) {
          CVec v(m);
          for (int k = 0; k < m; ++k) v[k] = u[g.mul(h.elements[k], y)];
          const Rational lhs =
              fourier_transform(GroupFunction(hg, v), dual_h).plancherel_support_measure(opt.threshold);
          ++combos;
          if (lhs > rhs) {
            ++violations;
            ordered_json fv = ordered_json::array(), pv = ordered_json::array();
            for (int i = 0; i < n; ++i) {
              fv.push_back(ordered_json::array({f.value(i).real(), f.value(i).imag()}));
              pv.push_back(ordered_json::array({psi.value(i).real(), psi.value(i).imag()}));
            }
            violation_list.push_back(ordered_json{{"trial", t},
                                                  {"x", x},
                                                  {"h", hel},
                                                  {"y", y},
                                                  {"lhs_mu_H", lhs.num},
                                                  {"rhs_mu_G", rhs.num},
                                                  {"f", fv},
                                                  {"psi", pv}});
          }
        }
      }
    }
  }

  rep.discrepancy = violations > 0;
  rep.verdict = violations == 0 ? "no violations" : "VIOLATION";
  rep.detail["trials"] = trials;
  rep.detail["combinations_checked"] = combos;
  rep.detail["violations"] = violations;
  if (violations > 0) rep.detail["violation_list"] = violation_list;
  return rep;
}

std::vector<QupReport> qup_report_suite(const std::vector<std::string>& specs, const QupOptions& opt) {
  std::vector<QupReport> out;
  for (const auto& spec : specs) {
    FiniteGroup g = named_group("Z1");
    try {
      g = named_group(spec, opt.order_cap);
    } catch (const Error& e) {
      QupReport rep;
      rep.group = spec;
      rep.experiment = "resolve";
      rep.verdict = std::string("error: ") + e.what();
      rep.discrepancy = true;
      out.push_back(std::move(rep));
      continue;
    }

    out.push_back(weak_qup_witness(g, opt));
    if (g.is_abelian()) out.push_back(abelian_lower_bound_scan(g, opt.trials, opt.seed, opt));
    if (g.order() <= opt.subgroup_cap) {
      for (const auto& h : normal_subgroups(g, opt.subgroup_cap))
        out.push_back(subgroup_gabor_profile(g, h, opt));
    }
  }
  return out;
}

}  // namespace gaborlab
