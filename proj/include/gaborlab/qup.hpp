// SPDX-License-Identifier: Apache-2.0
//
// Experiment drivers for the support-measure dichotomy on G x G^: witness
// construction on nonabelian groups, lower-bound scans on abelian ones, the
// subgroup-indicator support profile, and the subgroup restriction
// inequality. All measure comparisons against 1 are exact rational; the
// support threshold is the only floating-point decision and is always
// recorded in the report.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaborlab/gabor.hpp"

namespace gaborlab {

struct QupOptions {
  double tolerance = 1e-9;
  double threshold = 1e-9;
  std::uint64_t seed = 0;
  int trials = 100;
  int subgroup_cap = 64;
  int order_cap = 256;
};

struct QupReport {
  std::string group;
  std::string experiment;
  std::string f_spec;
  std::string psi_spec;
  std::optional<Rational> measure;     // enumerated from the thresholded support
  std::optional<Rational> prediction;  // closed form
  std::string verdict;
  bool discrepancy = false;  // enumerated vs closed form disagree, or an asserted bound failed
  double threshold = 1e-9;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  nlohmann::ordered_json detail;  // experiment-specific payload
};

/// Nonabelian g: picks H = {e} (and tabulates every normal H with nonabelian
/// quotient within caps), sets f = psi = chi_H, and checks that the
/// enumerated support measure equals [G:H]^{-1} sum of quotient-dual degrees
/// and is < 1. Abelian g: reports NoWitness.
QupReport weak_qup_witness(const FiniteGroup& g, const QupOptions& opt = {});

/// Abelian g: `trials` seeded random pairs from dense / sparse / indicator
/// families plus all subgroup-indicator pairs; asserts measure >= 1 for each
/// and records the minimum and its witness.
QupReport abelian_lower_bound_scan(const FiniteGroup& g, int trials, std::uint64_t seed,
                                   const QupOptions& opt = {});

/// f = psi = chi_h: compares the enumerated support with h x A(h, G^) and the
/// measure with m(h) mu(A(h, G^)); for abelian g additionally asserts the
/// measure is exactly 1.
QupReport subgroup_gabor_profile(const FiniteGroup& g, const Subgroup& h, const QupOptions& opt = {});

/// For random (f, psi) and every (x, h, y): Plancherel measure of the dual
/// support of the restricted slice on H must not exceed that of the full
/// slice on G. Violations are fully serialized; none are expected.
QupReport restriction_inequality_check(const FiniteGroup& g, const Subgroup& h, int trials,
                                       std::uint64_t seed, const QupOptions& opt = {});

/// weak_qup_witness on every spec, abelian_lower_bound_scan on abelian ones,
/// subgroup_gabor_profile on every normal subgroup within caps. Per-spec
/// errors become report entries.
std::vector<QupReport> qup_report_suite(const std::vector<std::string>& specs,
                                        const QupOptions& opt = {});

}  // namespace gaborlab
