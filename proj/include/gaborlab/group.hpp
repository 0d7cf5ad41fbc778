// SPDX-License-Identifier: Apache-2.0
//
// Finite groups as validated multiplication tables. Elements are dense
// indices 0..n-1; the normalized Haar measure gives every point weight
// 1/|G|, so m(G) = 1 throughout the library.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gaborlab/error.hpp"
#include "gaborlab/rational.hpp"

namespace gaborlab {

class FiniteGroup {
 public:
  /// Validates a user-supplied Cayley table: Latin square, a two-sided
  /// identity, two-sided inverses, associativity. Associativity is checked
  /// exhaustively up to `exhaustive_cap` and on deterministic random triples
  /// above it; the mode used is recorded and queryable.
  static FiniteGroup from_mult_table(std::vector<std::vector<int>> table, std::string name = "",
                                     int exhaustive_cap = 128);

  [[nodiscard]] int order() const;
  [[nodiscard]] int mul(int a, int b) const;
  [[nodiscard]] int inv(int a) const;
  [[nodiscard]] int identity() const;
  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] const std::vector<std::vector<int>>& mult_table() const;

  /// Weight of a single point, 1/|G|; haar_weight() * order() == 1.
  [[nodiscard]] Rational haar_weight() const;

  /// "exhaustive" or "sampled" associativity validation.
  [[nodiscard]] const std::string& validation_mode() const;

  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] int element_order(int x) const;
  [[nodiscard]] int power(int x, int k) const;
  [[nodiscard]] std::vector<std::vector<int>> conjugacy_classes() const;
  [[nodiscard]] std::vector<int> center() const;

  /// Structural equality of the underlying table (labels ignored).
  [[nodiscard]] bool same_as(const FiniteGroup& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// The identity component of a finite (discrete) group is {e}. Exposed as a
// constant-style helper rather than a computation.
inline std::vector<int> identity_component(const FiniteGroup& g) { return {g.identity()}; }

struct Subgroup {
  FiniteGroup parent;
  std::vector<int> elements;  // sorted
  bool is_normal = false;
};

/// Validates closure/identity/inverses of `elements` inside g and computes
/// normality exhaustively.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

/// Smallest subgroup containing the given elements.
std::vector<int> generated_closure(const FiniteGroup& g, const std::vector<int>& generators);

/// All subgroups, by breadth-first closure of generator sets. Sorted by
/// (order, elements). Throws OrderCapExceeded above the cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_cap = 64);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int order_cap = 64);

/// The subgroup re-indexed as a standalone group (element i of the result is
/// h.elements[i]).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

struct QuotientGroup {
  FiniteGroup parent;
  Subgroup subgroup;
  std::vector<std::vector<int>> cosets;  // coset index -> sorted parent elements
  std::vector<int> coset_of;             // parent element -> coset index
  FiniteGroup quotient;                  // group on coset indices
};

/// Quotient by a normal subgroup; cosets are indexed by smallest member. The
/// projection (coset_of) is checked to be a homomorphism.
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& h);

/// Catalog grammar: "Z<n>", "D<n>" (order 2n), "S<n>" (n <= 5), "Q8", and
/// products joined with "x" such as "Z2xZ6". Canonical element orderings are
/// documented in the README.
FiniteGroup named_group(const std::string& spec, int order_cap = 256);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int order_cap = 256);

}  // namespace gaborlab
