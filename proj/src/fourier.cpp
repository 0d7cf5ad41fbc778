// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace gaborlab {

GroupFunction::GroupFunction(FiniteGroup group, CVec values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order())
    fail(Errc::GroupMismatch, "function has " + std::to_string(values_.size()) + " values, group has " +
                                  std::to_string(group_.order()) + " elements");
}

double GroupFunction::norm2_squared() const { return values_.squaredNorm() / order(); }
double GroupFunction::norm2() const { return std::sqrt(norm2_squared()); }
bool GroupFunction::is_zero() const { return values_.cwiseAbs().maxCoeff() == 0.0; }

std::vector<int> GroupFunction::support(double eps) const {
  std::vector<int> s;
  for (int x = 0; x < order(); ++x)
    if (std::abs(values_[x]) > eps) s.push_back(x);
  return s;
}

Rational GroupFunction::haar_support_measure(double eps) const {
  return {static_cast<std::int64_t>(support(eps).size()), order()};
}

GroupFunction indicator(const FiniteGroup& g, const std::vector<int>& elems) {
  CVec v = CVec::Zero(g.order());
  for (int x : elems) {
    if (x < 0 || x >= g.order()) fail(Errc::BadFunctionSpec, "element " + std::to_string(x) + " out of range");
    v[x] = 1.0;
  }
  return {g, std::move(v)};
}

GroupFunction indicator(const Subgroup& h) { return indicator(h.parent, h.elements); }

GroupFunction delta(const FiniteGroup& g, int x) { return indicator(g, std::vector<int>{x}); }

GroupFunction constant_one(const FiniteGroup& g) { return {g, CVec::Ones(g.order())}; }

GroupFunction random_dense(const FiniteGroup& g, Rng& rng) {
  CVec v(g.order());
  for (int x = 0; x < g.order(); ++x) v[x] = rng.cgaussian();
  return {g, std::move(v)};
}

GroupFunction random_sparse(const FiniteGroup& g, int k, Rng& rng) {
  const int n = g.order();
  k = std::min(std::max(k, 1), n);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  // Partial Fisher-Yates for the support set.
  for (int i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  CVec v = CVec::Zero(n);
  for (int i = 0; i < k; ++i) v[idx[i]] = rng.cgaussian();
  return {g, std::move(v)};
}

OperatorField::OperatorField(UnitaryDual dual, std::vector<CMat> blocks)
    : dual_(std::move(dual)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != dual_.size())
    fail(Errc::GroupMismatch, "operator field block count does not match dual");
}

double OperatorField::weighted_hs_norm_squared() const {
  double s = 0.0;
  for (int i = 0; i < size(); ++i) s += dual_.degree(i) * blocks_[i].squaredNorm();
  return s;
}

std::vector<int> OperatorField::support(double eps) const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i)
    if (blocks_[i].norm() > eps) s.push_back(i);
  return s;
}

Rational OperatorField::plancherel_support_measure(double eps) const {
  std::int64_t s = 0;
  for (int i : support(eps)) s += dual_.degree(i);
  return {s, 1};
}

OperatorField fourier_transform(const GroupFunction& f, const UnitaryDual& d) {
  if (!f.group().same_as(d.group())) fail(Errc::GroupMismatch, "function and dual on different groups");
  const CVec flat = d.analysis_matrix() * f.values();
  std::vector<CMat> blocks;
  blocks.reserve(d.size());
  for (int i = 0; i < d.size(); ++i) {
    const int dim = d.degree(i);
    CMat b(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) b(r, c) = flat[d.block_offset(i) + r * dim + c];
    blocks.push_back(std::move(b));
  }
  return {d, std::move(blocks)};
}

GroupFunction inverse_fourier(const OperatorField& f) {
  const UnitaryDual& d = f.dual();
  CVec flat(d.flat_size());
  for (int i = 0; i < d.size(); ++i) {
    const int dim = d.degree(i);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) flat[d.block_offset(i) + r * dim + c] = f.block(i)(r, c);
  }
  return {d.group(), d.synthesis_matrix() * flat};
}

Annihilator annihilator(const Subgroup& h, const UnitaryDual& d, double tol) {
  if (!h.parent.same_as(d.group())) fail(Errc::GroupMismatch, "subgroup and dual on different groups");
  Annihilator a{h, {}};
  for (int i = 0; i < d.size(); ++i) {
    const CMat eye = CMat::Identity(d.degree(i), d.degree(i));
    bool trivial_on_h = true;
    for (int x : h.elements)
      if ((d.irrep(i).mats[x] - eye).cwiseAbs().maxCoeff() > tol) {
        trivial_on_h = false;
        break;
      }
    if (trivial_on_h) a.members.push_back(i);
  }
  return a;
}

Rational annihilator_measure(const Annihilator& a, const UnitaryDual& d) {
  std::int64_t s = 0;
  for (int i : a.members) s += d.degree(i);
  return {s, 1};
}

double factor_through_residual(const Irrep& pi, const QuotientGroup& q) {
  double r = 0.0;
  const int n = q.parent.order();
  for (int x = 0; x < n; ++x) {
    const int rep = q.cosets[q.coset_of[x]][0];
    r = std::max(r, (pi.mats[x] - pi.mats[rep]).cwiseAbs().maxCoeff());
  }
  return r;
}

UnitaryDual annihilator_as_quotient_dual(const Annihilator& a, const UnitaryDual& d,
                                         const QuotientGroup& q) {
  if (!q.parent.same_as(d.group())) fail(Errc::GroupMismatch, "quotient and dual on different groups");
  std::vector<Irrep> irreps;
  irreps.reserve(a.members.size());
  for (std::size_t k = 0; k < a.members.size(); ++k) {
    const Irrep& pi = d.irrep(a.members[k]);
    Irrep pushed;
    pushed.dim = pi.dim;
    pushed.label = "pi" + std::to_string(k);
    pushed.mats.reserve(q.quotient.order());
    for (const auto& coset : q.cosets) pushed.mats.push_back(pi.mats[coset[0]]);
    irreps.push_back(std::move(pushed));
  }
  return {q.quotient, std::move(irreps)};
}

}  // namespace gaborlab
