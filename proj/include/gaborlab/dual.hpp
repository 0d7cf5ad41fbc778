// SPDX-License-Identifier: Apache-2.0
//
// The unitary dual of a finite group: exact characters for abelian groups,
// numerically computed unitary irreducibles for the rest. Plancherel weight
// of an irrep is its degree d, the normalization forced by Parseval when
// m(G) = 1.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaborlab/group.hpp"
#include "gaborlab/rational.hpp"
#include "gaborlab/rng.hpp"

namespace gaborlab {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// A character of an abelian group with exact root-of-unity values:
/// value(x) = exp(2*pi*i*phase(x)), phases stored as rationals in [0,1).
class Character {
 public:
  explicit Character(std::vector<Rational> phases);

  [[nodiscard]] int group_order() const { return static_cast<int>(phases_.size()); }
  [[nodiscard]] const Rational& phase(int x) const { return phases_[x]; }
  [[nodiscard]] const std::vector<Rational>& phases() const { return phases_; }
  [[nodiscard]] Complex value(int x) const;
  [[nodiscard]] CVec values() const;

  [[nodiscard]] Character pointwise_product(const Character& other) const;
  [[nodiscard]] Character inverse() const;

  friend bool operator==(const Character& a, const Character& b) { return a.phases_ == b.phases_; }
  friend bool operator<(const Character& a, const Character& b);

 private:
  std::vector<Rational> phases_;
};

struct Irrep {
  int dim = 0;
  std::vector<CMat> mats;  // per group element
  std::string label;

  [[nodiscard]] Complex character(int x) const { return mats[x].trace(); }
};

class UnitaryDual {
 public:
  UnitaryDual(FiniteGroup group, std::vector<Irrep> irreps, std::vector<Character> exact_characters = {});

  [[nodiscard]] const FiniteGroup& group() const;
  [[nodiscard]] int size() const;
  [[nodiscard]] const Irrep& irrep(int i) const;
  [[nodiscard]] const std::vector<Irrep>& irreps() const;
  [[nodiscard]] int degree(int i) const;
  /// Plancherel weight mu({pi}) = d_pi.
  [[nodiscard]] int plancherel_weight(int i) const { return degree(i); }
  [[nodiscard]] int sum_degrees() const;          // mu(G^)
  [[nodiscard]] int sum_squared_degrees() const;  // should equal |G|

  [[nodiscard]] bool has_exact_characters() const;
  [[nodiscard]] const std::vector<Character>& characters() const;
  /// Exact lookup among the stored characters; -1 if absent.
  [[nodiscard]] int character_index(const Character& chi) const;

  // Flat block layout used by the transforms. Block i occupies rows
  // [block_offset(i), block_offset(i) + d_i^2) with entry (r, c) at
  // block_offset(i) + r*d_i + c.
  [[nodiscard]] int flat_size() const;
  [[nodiscard]] int block_offset(int i) const;
  /// (flat_size x n) matrix A with (A u)[r] = Fourier coefficient entries of
  /// u: F(pi)(r,c) = (1/n) sum_y u(y) conj(pi(y)(c,r)).
  [[nodiscard]] const CMat& analysis_matrix() const;
  /// (n x flat_size) matrix S with f = S vec(F): f(x) = sum_pi d_pi tr(F(pi) pi(x)).
  [[nodiscard]] const CMat& synthesis_matrix() const;
  /// Per-flat-row Hilbert-Schmidt weight d_pi.
  [[nodiscard]] const Eigen::VectorXd& hs_weights() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Exact character dual of an abelian group: |G| characters built by lifting
/// along a cyclic tower, canonically ordered by phase vector. Throws
/// NotAbelian otherwise.
UnitaryDual abelian_characters(const FiniteGroup& g);

/// Decomposes the left regular representation: a random self-adjoint operator
/// is averaged over the group action, its eigenspaces are invariant subspaces
/// carrying the irreducibles, one representative per equivalence class is
/// kept and unitarized. Deterministic given the seed; retries with fresh
/// draws up to max_retries before giving up with DecompositionFailed.
UnitaryDual regular_decomposition(const FiniteGroup& g, std::uint64_t seed = 0, int max_retries = 8,
                                  double tol = 1e-9);

/// abelian_characters for abelian groups, regular_decomposition otherwise.
UnitaryDual unitary_dual(const FiniteGroup& g, std::uint64_t seed = 0);

struct DualCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct DualReport {
  std::vector<DualCheck> checks;
  bool all_pass = false;
  double max_residual = 0.0;
};

/// Residual report for homomorphism, unitarity, irreducibility (commutant
/// rank), completeness (sum d^2 = |G|), class count, and Schur orthogonality.
/// Failures are entries, never exceptions.
DualReport dual_verify(const UnitaryDual& d, double tol = 1e-9);

/// Dimension of {T : T pi(x) = pi(x) T for all x}, by SVD rank test.
int commutant_dimension(const FiniteGroup& g, const Irrep& pi, double tol = 1e-7);

/// Group-averaged candidate intertwiner T = (1/n) sum_g a(g) X b(g)^*,
/// HS-normalized to sqrt(dim). For equivalent irreps and generic X this is a
/// near-unitary intertwiner.
CMat average_intertwiner(const FiniteGroup& g, const Irrep& a, const Irrep& b, Rng& rng);

/// max_x |a(x) T - T b(x)| (max abs entry).
double intertwiner_residual(const FiniteGroup& g, const Irrep& a, const Irrep& b, const CMat& t);

struct DualEquivalence {
  bool equivalent = false;
  double max_residual = 0.0;
  std::vector<int> pairing;  // index in b matched to each irrep of a; -1 if none
};

/// Matches irreps across two duals of the same group by character, then
/// verifies each matched pair with a group-averaged intertwiner.
DualEquivalence duals_equivalent(const UnitaryDual& a, const UnitaryDual& b, std::uint64_t seed = 1,
                                 double tol = 1e-8);

}  // namespace gaborlab
