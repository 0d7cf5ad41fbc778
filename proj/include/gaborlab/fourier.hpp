// SPDX-License-Identifier: Apache-2.0
//
// Operator-valued Fourier transform on a finite group. Conventions, fixed
// everywhere: the Haar integral is (1/|G|) sum_x, so
//
//   F(pi) = (1/|G|) sum_x f(x) pi(x)^*       (analysis)
//   f(x)  = sum_pi d_pi tr(F(pi) pi(x))      (synthesis)
//   ||f||_2^2 = sum_pi d_pi ||F(pi)||_HS^2   (Parseval, mu({pi}) = d_pi)

#pragma once

#include <utility>
#include <vector>

#include "gaborlab/dual.hpp"

namespace gaborlab {

class GroupFunction {
 public:
  GroupFunction(FiniteGroup group, CVec values);

  [[nodiscard]] const FiniteGroup& group() const { return group_; }
  [[nodiscard]] int order() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] const CVec& values() const { return values_; }
  [[nodiscard]] Complex value(int x) const { return values_[x]; }

  [[nodiscard]] double norm2_squared() const;  // (1/n) sum |f|^2
  [[nodiscard]] double norm2() const;
  [[nodiscard]] bool is_zero() const;  // exactly zero everywhere

  [[nodiscard]] std::vector<int> support(double eps) const;
  /// m(A_f) = |support| / |G|, exact given the threshold.
  [[nodiscard]] Rational haar_support_measure(double eps) const;

 private:
  FiniteGroup group_;
  CVec values_;
};

GroupFunction indicator(const FiniteGroup& g, const std::vector<int>& elems);
GroupFunction indicator(const Subgroup& h);
GroupFunction delta(const FiniteGroup& g, int x);
GroupFunction constant_one(const FiniteGroup& g);
GroupFunction random_dense(const FiniteGroup& g, Rng& rng);
GroupFunction random_sparse(const FiniteGroup& g, int k, Rng& rng);

class OperatorField {
 public:
  OperatorField(UnitaryDual dual, std::vector<CMat> blocks);

  [[nodiscard]] const UnitaryDual& dual() const { return dual_; }
  [[nodiscard]] int size() const { return static_cast<int>(blocks_.size()); }
  [[nodiscard]] const CMat& block(int i) const { return blocks_[i]; }

  /// sum_pi d_pi ||F(pi)||_HS^2.
  [[nodiscard]] double weighted_hs_norm_squared() const;
  [[nodiscard]] std::vector<int> support(double eps) const;  // blocks with HS norm > eps
  /// mu(B) = sum of d_pi over supported blocks (an integer).
  [[nodiscard]] Rational plancherel_support_measure(double eps) const;

 private:
  UnitaryDual dual_;
  std::vector<CMat> blocks_;
};

OperatorField fourier_transform(const GroupFunction& f, const UnitaryDual& d);
GroupFunction inverse_fourier(const OperatorField& f);

struct Annihilator {
  Subgroup subgroup;
  std::vector<int> members;  // dual indices with pi|_H = identity
};

/// A(H, G^) = {pi : pi(h) = I for all h in H}, tested entrywise at tol.
Annihilator annihilator(const Subgroup& h, const UnitaryDual& d, double tol = 1e-9);

/// mu(A(H, G^)) = sum of degrees over members.
Rational annihilator_measure(const Annihilator& a, const UnitaryDual& d);

/// max_x |pi(x) - pi(rep of coset(x))|: zero exactly when pi factors through
/// the quotient.
double factor_through_residual(const Irrep& pi, const QuotientGroup& q);

/// Pushes the annihilator members through the projection, giving irreps of
/// G/H. For normal H this is a complete dual of the quotient (verifiable via
/// dual_verify).
UnitaryDual annihilator_as_quotient_dual(const Annihilator& a, const UnitaryDual& d,
                                         const QuotientGroup& q);

}  // namespace gaborlab
