// SPDX-License-Identifier: Apache-2.0
//
// gaborlab - group construction, unitary duals, Fourier / Gabor transforms,
// and the support-measure experiment suite, with machine-readable output.
//
// Exit codes: 0 success with all asserted invariants passing, 1 invariant
// violation (report still emitted), 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaborlab/funcspec.hpp"
#include "gaborlab/json_io.hpp"

namespace {

using namespace gaborlab;

struct RunConfig {
  double tolerance = 1e-9;
  double threshold = 1e-9;
  std::uint64_t seed = 0;
  int trials = 100;
  std::string format = "json";
  std::string out_path;

  void validate() const {
    if (tolerance <= 0) fail(Errc::BadFunctionSpec, "tolerance must be positive");
    if (threshold <= 0) fail(Errc::BadFunctionSpec, "threshold must be positive");
    if (trials < 1) fail(Errc::BadFunctionSpec, "trials must be >= 1");
    if (format != "json" && format != "csv") fail(Errc::BadFunctionSpec, "format must be json or csv");
  }

  QupOptions qup() const {
    QupOptions opt;
    opt.tolerance = tolerance;
    opt.threshold = threshold;
    opt.seed = seed;
    opt.trials = trials;
    return opt;
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) fail(Errc::BadFunctionSpec, "cannot write \"" + cfg.out_path + "\"");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

void emit_json(const RunConfig& cfg, const ordered_json& j) { emit(cfg, j.dump(2)); }

void emit_reports(const RunConfig& cfg, const std::vector<QupReport>& reports) {
  if (cfg.format == "csv") {
    emit(cfg, qup_reports_to_csv(reports));
  } else if (reports.size() == 1) {
    emit_json(cfg, qup_report_to_json(reports[0]));
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(qup_report_to_json(r));
    emit_json(cfg, arr);
  }
}

int reports_exit(const std::vector<QupReport>& reports) {
  for (const auto& r : reports)
    if (r.discrepancy) return 1;
  return 0;
}

Subgroup subgroup_from_csv(const FiniteGroup& g, const std::string& csv) {
  std::vector<int> elems;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      elems.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(Errc::NotSubgroup, "bad element \"" + tok + "\"");
    }
  }
  return make_subgroup(g, elems);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group Gabor transform laboratory"};
  app.require_subcommand(1);
  // Let global flags appear after the subcommand, e.g. `qup scan Z6 --seed 7`.
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--tolerance", cfg.tolerance, "residual tolerance")->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "support detection threshold")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "random trials for scans/checks")->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json or csv")->capture_default_str();
  app.add_option("--out", cfg.out_path, "write the report to this file instead of stdout");

  std::string group_spec, subgroup_csv, f_spec, psi_spec;
  std::vector<std::string> suite_specs;

  auto* group_cmd = app.add_subcommand("group", "group construction and structure");
  auto* group_info = group_cmd->add_subcommand("info", "validate and describe a group");
  group_info->add_option("spec", group_spec, "catalog spec (Z6, D4, S3, Q8, Z2xZ6) or JSON file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "compute and verify the unitary dual");
  dual_cmd->add_option("spec", group_spec)->required();

  auto* fourier_cmd = app.add_subcommand("fourier", "operator-valued Fourier transform");
  fourier_cmd->add_option("spec", group_spec)->required();
  fourier_cmd->add_option("--f", f_spec, "function spec")->required();

  auto* gabor_cmd = app.add_subcommand("gabor", "Gabor transform over the G x G^ grid");
  gabor_cmd->add_option("spec", group_spec)->required();
  gabor_cmd->add_option("--f", f_spec, "function spec")->required();
  gabor_cmd->add_option("--psi", psi_spec, "window spec")->required();

  auto* qup_cmd = app.add_subcommand("qup", "support-measure experiments");
  auto* qup_weak = qup_cmd->add_subcommand("weak", "weak-QUP witness construction");
  qup_weak->add_option("spec", group_spec)->required();
  auto* qup_scan = qup_cmd->add_subcommand("scan", "abelian lower-bound scan");
  qup_scan->add_option("spec", group_spec)->required();
  auto* qup_profile = qup_cmd->add_subcommand("profile", "subgroup indicator support profile");
  qup_profile->add_option("spec", group_spec)->required();
  qup_profile->add_option("--subgroup", subgroup_csv, "comma-separated element indices")->required();
  auto* qup_restrict = qup_cmd->add_subcommand("restrict", "subgroup restriction inequality check");
  qup_restrict->add_option("spec", group_spec)->required();
  qup_restrict->add_option("--subgroup", subgroup_csv, "comma-separated element indices")->required();
  auto* qup_suite = qup_cmd->add_subcommand("suite", "full experiment suite over several groups");
  qup_suite->add_option("specs", suite_specs, "group specs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.validate();

    if (group_info->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      emit_json(cfg, group_to_json(g));
      return 0;
    }

    if (dual_cmd->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      const UnitaryDual d = unitary_dual(g, cfg.seed);
      const DualReport rep = dual_verify(d, cfg.tolerance);
      ordered_json j = dual_to_json(d, rep);
      j["seed"] = cfg.seed;
      j["tolerance"] = cfg.tolerance;
      emit_json(cfg, j);
      return rep.all_pass ? 0 : 1;
    }

    if (fourier_cmd->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      const UnitaryDual d = unitary_dual(g, cfg.seed);
      Rng rng(cfg.seed);
      const ParsedFunction f = parse_function_spec(f_spec, g, rng);
      const OperatorField hat = fourier_transform(f.fn, d);
      const double parseval = std::abs(f.fn.norm2_squared() - hat.weighted_hs_norm_squared());
      ordered_json j = operator_field_to_json(hat, cfg.threshold);
      j["f_spec"] = f.canonical_spec;
      j["parseval_residual"] = ordered_json{{"value", parseval}, {"provenance", "threshold-dependent"}};
      j["m_support_f"] = rational_to_json(f.fn.haar_support_measure(cfg.threshold), "enumerated");
      emit_json(cfg, j);
      return parseval <= cfg.tolerance ? 0 : 1;
    }

    if (gabor_cmd->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      const UnitaryDual d = unitary_dual(g, cfg.seed);
      Rng rng(cfg.seed);
      const ParsedFunction f = parse_function_spec(f_spec, g, rng);
      const ParsedFunction psi = parse_function_spec(psi_spec, g, rng);
      const GaborField field = gabor_transform(f.fn, psi.fn, d);
      const double isometry = std::abs(field.h2_norm() - psi.fn.norm2() * f.fn.norm2());
      ordered_json j = gabor_field_to_json(field, cfg.threshold);
      j["f_spec"] = f.canonical_spec;
      j["psi_spec"] = psi.canonical_spec;
      j["isometry_residual"] = ordered_json{{"value", isometry}, {"provenance", "threshold-dependent"}};
      emit_json(cfg, j);
      return isometry <= cfg.tolerance ? 0 : 1;
    }

    if (qup_weak->parsed()) {
      const std::vector<QupReport> reports{weak_qup_witness(group_from_spec(group_spec), cfg.qup())};
      emit_reports(cfg, reports);
      return reports_exit(reports);
    }
    if (qup_scan->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      const std::vector<QupReport> reports{abelian_lower_bound_scan(g, cfg.trials, cfg.seed, cfg.qup())};
      emit_reports(cfg, reports);
      return reports_exit(reports);
    }
    if (qup_profile->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      const std::vector<QupReport> reports{
          subgroup_gabor_profile(g, subgroup_from_csv(g, subgroup_csv), cfg.qup())};
      emit_reports(cfg, reports);
      return reports_exit(reports);
    }
    if (qup_restrict->parsed()) {
      const FiniteGroup g = group_from_spec(group_spec);
      const std::vector<QupReport> reports{restriction_inequality_check(
          g, subgroup_from_csv(g, subgroup_csv), cfg.trials, cfg.seed, cfg.qup())};
      emit_reports(cfg, reports);
      return reports_exit(reports);
    }
    if (qup_suite->parsed()) {
      const std::vector<QupReport> reports = qup_report_suite(suite_specs, cfg.qup());
      emit_reports(cfg, reports);
      return reports_exit(reports);
    }
  } catch (const Error& e) {
    std::cerr << ordered_json{{"error", e.what()}, {"code", errc_name(e.code())}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
