// SPDX-License-Identifier: Apache-2.0
//
// Windowed (Gabor) transform on the finite grid G x G^. A field F assigns a
// d_pi x d_pi matrix to each point (x, pi); the grid norm is
//
//   ||F||^2 = sum_x (1/|G|) sum_pi d_pi ||F(x,pi)||_HS^2
//
// which makes the transform a multiple of an isometry:
// ||G_psi f|| = ||psi||_2 ||f||_2.

#pragma once

#include <utility>
#include <vector>

#include "gaborlab/fourier.hpp"

namespace gaborlab {

class GaborField {
 public:
  GaborField(UnitaryDual dual, CMat coefficients, double window_norm);

  [[nodiscard]] const UnitaryDual& dual() const { return dual_; }
  [[nodiscard]] const FiniteGroup& group() const { return dual_.group(); }
  /// n x flat_size grid; row x holds the flattened Fourier blocks of the
  /// slice at x.
  [[nodiscard]] const CMat& coefficients() const { return coeffs_; }
  [[nodiscard]] CMat block(int x, int pi) const;
  [[nodiscard]] double window_norm() const { return window_norm_; }

  [[nodiscard]] double h2_norm_squared() const;
  [[nodiscard]] double h2_norm() const;

 private:
  UnitaryDual dual_;
  CMat coeffs_;
  double window_norm_;
};

/// Left translate (x0 f)(y) = f(x0 y).
GroupFunction translate(const GroupFunction& f, int x0);

/// Modulate (sigma f)(y) = sigma(y) f(y); abelian notion, the character comes
/// from an exact abelian dual.
GroupFunction modulate(const GroupFunction& f, const Character& sigma);

/// The slice f_x^psi(y) = f(y) conj(psi(x^{-1} y)).
GroupFunction windowed_slice(const GroupFunction& f, const GroupFunction& psi, int x);

/// G_psi f(x, pi) = Fourier transform of the slice at x. Throws ZeroWindow
/// for psi == 0 and GroupMismatch across groups.
GaborField gabor_transform(const GroupFunction& f, const GroupFunction& psi, const UnitaryDual& d);

struct GaborSupport {
  double threshold = 0.0;
  std::vector<std::pair<int, int>> points;  // (x, dual index), sorted
  Rational measure;                         // sum over points of (1/|G|) d_pi
};

GaborSupport support_measure(const GaborField& f, double threshold = 1e-9);

struct CovarianceResidual {
  double translation = 0.0;  // G_psi(x0 f)(x,c) vs c(x0) G_psi f(x0 x, c)
  double modulation = 0.0;   // G_psi(sigma f)(x,c) vs G_psi f(x, sigma^{-1} c)
};

/// Both covariance identities on an abelian group, max abs residual over the
/// whole grid. Throws NotAbelian when the dual lacks exact characters.
CovarianceResidual covariance_check(const GroupFunction& f, const GroupFunction& psi, int x0,
                                    const Character& sigma, const UnitaryDual& d);

/// Reproducing kernel of the transform range for abelian G. Grid points are
/// indexed a = x * n + c (x element, c character index);
/// entry(a', a) = <psi_{a'}, psi_a> / ||psi||^2 with
/// psi_{(x,c)}(y) = psi(x^{-1} y) chi_c(y).
class KernelMatrix {
 public:
  KernelMatrix(GroupFunction psi, UnitaryDual dual, int materialize_cap);

  [[nodiscard]] int grid_size() const { return grid_; }
  [[nodiscard]] bool materialized() const { return full_.size() > 0; }
  [[nodiscard]] Complex entry(int a_prime, int a) const;

  /// max over grid points a' of |<G_psi f, K^{(a')}>_{H^2} - G_psi f(a')|.
  [[nodiscard]] double reproducing_residual(const GroupFunction& f) const;

 private:
  [[nodiscard]] Complex compute_entry(int a_prime, int a) const;
  [[nodiscard]] CVec atom(int a) const;  // psi_{(x,c)} values

  GroupFunction psi_;
  UnitaryDual dual_;
  int grid_ = 0;
  double psi_norm_sq_ = 0.0;  // (1/n) sum |psi|^2
  CMat full_;
};

KernelMatrix kernel_matrix(const GroupFunction& psi, const UnitaryDual& d, int materialize_cap = 4096);

/// Adjoint-based inversion f = G_psi^* F / ||psi||_2^2. For F in the range of
/// G_psi this recovers f; for arbitrary F the result is the function whose
/// transform is the H^2-orthogonal projection of F onto the range (that
/// behaviour is documented, not asserted).
GroupFunction gabor_reconstruct(const GaborField& f, const GroupFunction& psi);

}  // namespace gaborlab
