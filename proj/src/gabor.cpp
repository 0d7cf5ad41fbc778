// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/gabor.hpp"

#include <algorithm>
#include <cmath>

namespace gaborlab {

GaborField::GaborField(UnitaryDual dual, CMat coefficients, double window_norm)
    : dual_(std::move(dual)), coeffs_(std::move(coefficients)), window_norm_(window_norm) {}

CMat GaborField::block(int x, int pi) const {
  const int dim = dual_.degree(pi);
  CMat b(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) b(r, c) = coeffs_(x, dual_.block_offset(pi) + r * dim + c);
  return b;
}

double GaborField::h2_norm_squared() const {
  const int n = group().order();
  const Eigen::VectorXd& w = dual_.hs_weights();
  double s = 0.0;
  for (int x = 0; x < n; ++x) s += (coeffs_.row(x).cwiseAbs2() * w).value();
  return s / n;
}

double GaborField::h2_norm() const { return std::sqrt(h2_norm_squared()); }

GroupFunction translate(const GroupFunction& f, int x0) {
  const FiniteGroup& g = f.group();
  CVec v(g.order());
  for (int y = 0; y < g.order(); ++y) v[y] = f.value(g.mul(x0, y));
  return {g, std::move(v)};
}

GroupFunction modulate(const GroupFunction& f, const Character& sigma) {
  if (sigma.group_order() != f.order()) fail(Errc::GroupMismatch, "character and function sizes differ");
  CVec v(f.order());
  for (int y = 0; y < f.order(); ++y) v[y] = sigma.value(y) * f.value(y);
  return {f.group(), std::move(v)};
}

GroupFunction windowed_slice(const GroupFunction& f, const GroupFunction& psi, int x) {
  const FiniteGroup& g = f.group();
  const int xi = g.inv(x);
  CVec v(g.order());
  for (int y = 0; y < g.order(); ++y) v[y] = f.value(y) * std::conj(psi.value(g.mul(xi, y)));
  return {g, std::move(v)};
}

GaborField gabor_transform(const GroupFunction& f, const GroupFunction& psi, const UnitaryDual& d) {
  if (!f.group().same_as(d.group()) || !psi.group().same_as(d.group()))
    fail(Errc::GroupMismatch, "function, window and dual must share one group");
  if (psi.is_zero()) fail(Errc::ZeroWindow, "window function is identically zero");

  const int n = d.group().order();
  CMat coeffs(n, d.flat_size());
  for (int x = 0; x < n; ++x)
    coeffs.row(x) = (d.analysis_matrix() * windowed_slice(f, psi, x).values()).transpose();
  return {d, std::move(coeffs), psi.norm2()};
}

GaborSupport support_measure(const GaborField& f, double threshold) {
  const UnitaryDual& d = f.dual();
  const int n = f.group().order();
  GaborSupport s;
  s.threshold = threshold;
  s.measure = Rational(0);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < d.size(); ++i) {
      const int dim = d.degree(i);
      const double hs =
          f.coefficients().row(x).segment(d.block_offset(i), dim * dim).norm();
      if (hs > threshold) {
        s.points.emplace_back(x, i);
        s.measure += Rational(dim, n);
      }
    }
  }
  return s;
}

CovarianceResidual covariance_check(const GroupFunction& f, const GroupFunction& psi, int x0,
                                    const Character& sigma, const UnitaryDual& d) {
  if (!d.has_exact_characters())
    fail(Errc::NotAbelian, "covariance identities require an abelian dual with exact characters");
  const FiniteGroup& g = d.group();
  const int n = g.order();

  const GaborField base = gabor_transform(f, psi, d);
  const GaborField translated = gabor_transform(translate(f, x0), psi, d);
  const GaborField modulated = gabor_transform(modulate(f, sigma), psi, d);

  // sigma^{-1} * chi_c as a dual index, exact.
  const Character sigma_inv = sigma.inverse();
  std::vector<int> shifted(n);
  for (int c = 0; c < n; ++c) {
    shifted[c] = d.character_index(sigma_inv.pointwise_product(d.characters()[c]));
    if (shifted[c] < 0) fail(Errc::DecompositionFailed, "dual not closed under character product");
  }

  CovarianceResidual res;
  for (int x = 0; x < n; ++x) {
    for (int c = 0; c < n; ++c) {
      const Complex lhs_t = translated.coefficients()(x, c);
      const Complex rhs_t = d.characters()[c].value(x0) * base.coefficients()(g.mul(x0, x), c);
      res.translation = std::max(res.translation, std::abs(lhs_t - rhs_t));

      const Complex lhs_m = modulated.coefficients()(x, c);
      const Complex rhs_m = base.coefficients()(x, shifted[c]);
      res.modulation = std::max(res.modulation, std::abs(lhs_m - rhs_m));
    }
  }
  return res;
}

KernelMatrix::KernelMatrix(GroupFunction psi, UnitaryDual dual, int materialize_cap)
    : psi_(std::move(psi)), dual_(std::move(dual)) {
  if (!dual_.has_exact_characters())
    fail(Errc::NotAbelian, "kernel matrix is defined for abelian duals");
  if (!psi_.group().same_as(dual_.group())) fail(Errc::GroupMismatch, "window and dual on different groups");
  if (psi_.is_zero()) fail(Errc::ZeroWindow, "window function is identically zero");

  const int n = dual_.group().order();
  grid_ = n * n;
  psi_norm_sq_ = psi_.norm2_squared();

  if (grid_ <= materialize_cap) {
    CMat atoms(n, grid_);
    for (int a = 0; a < grid_; ++a) atoms.col(a) = atom(a);
    // entry(a', a) = (1/(n ||psi||^2)) sum_y psi_{a'}(y) conj(psi_a(y)).
    full_ = (atoms.transpose() * atoms.conjugate()) / (n * psi_norm_sq_);
  }
}

CVec KernelMatrix::atom(int a) const {
  const FiniteGroup& g = dual_.group();
  const int n = g.order();
  const int x = a / n, c = a % n;
  const int xi = g.inv(x);
  const Character& chi = dual_.characters()[c];
  CVec v(n);
  for (int y = 0; y < n; ++y) v[y] = psi_.value(g.mul(xi, y)) * chi.value(y);
  return v;
}

Complex KernelMatrix::compute_entry(int a_prime, int a) const {
  const int n = dual_.group().order();
  const CVec u = atom(a_prime), w = atom(a);
  Complex s = 0.0;
  for (int y = 0; y < n; ++y) s += u[y] * std::conj(w[y]);
  return s / (n * psi_norm_sq_);
}

Complex KernelMatrix::entry(int a_prime, int a) const {
  if (materialized()) return full_(a_prime, a);
  return compute_entry(a_prime, a);
}

double KernelMatrix::reproducing_residual(const GroupFunction& f) const {
  const FiniteGroup& g = dual_.group();
  const int n = g.order();
  const GaborField field = gabor_transform(f, psi_, dual_);

  // Abelian grid: coefficient (x, c) sits at flat column c of row x.
  double res = 0.0;
  for (int ap = 0; ap < grid_; ++ap) {
    Complex inner = 0.0;
    for (int x = 0; x < n; ++x)
      for (int c = 0; c < n; ++c) inner += field.coefficients()(x, c) * std::conj(entry(ap, x * n + c));
    inner /= static_cast<double>(n);
    const Complex direct = field.coefficients()(ap / n, ap % n);
    res = std::max(res, std::abs(inner - direct));
  }
  return res;
}

KernelMatrix kernel_matrix(const GroupFunction& psi, const UnitaryDual& d, int materialize_cap) {
  return {psi, d, materialize_cap};
}

GroupFunction gabor_reconstruct(const GaborField& f, const GroupFunction& psi) {
  if (psi.is_zero()) fail(Errc::ZeroWindow, "window function is identically zero");
  const UnitaryDual& d = f.dual();
  const FiniteGroup& g = d.group();
  if (!psi.group().same_as(g)) fail(Errc::GroupMismatch, "window and field on different groups");
  const int n = g.order();

  // f = G_psi^* F / ||psi||^2 with
  // (G_psi^* F)(y) = (1/n) sum_x psi(x^{-1} y) [synthesis of F(x, .)](y).
  CVec acc = CVec::Zero(n);
  for (int x = 0; x < n; ++x) {
    const CVec slice = d.synthesis_matrix() * f.coefficients().row(x).transpose();
    const int xi = g.inv(x);
    for (int y = 0; y < n; ++y) acc[y] += psi.value(g.mul(xi, y)) * slice[y];
  }
  acc /= static_cast<double>(n) * psi.norm2_squared();
  return {g, std::move(acc)};
}

}  // namespace gaborlab
