// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/dual.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>

namespace gaborlab {

Character::Character(std::vector<Rational> phases) : phases_(std::move(phases)) {
  for (auto& q : phases_) q = mod1(q);
}

Complex Character::value(int x) const {
  const double theta = 2.0 * M_PI * phases_[x].to_double();
  return {std::cos(theta), std::sin(theta)};
}

CVec Character::values() const {
  CVec v(group_order());
  for (int x = 0; x < group_order(); ++x) v[x] = value(x);
  return v;
}

Character Character::pointwise_product(const Character& other) const {
  std::vector<Rational> p(phases_.size());
  for (std::size_t i = 0; i < phases_.size(); ++i) p[i] = mod1(phases_[i] + other.phases_[i]);
  return Character(std::move(p));
}

Character Character::inverse() const {
  std::vector<Rational> p(phases_.size());
  for (std::size_t i = 0; i < phases_.size(); ++i) p[i] = mod1(Rational(0) - phases_[i]);
  return Character(std::move(p));
}

bool operator<(const Character& a, const Character& b) {
  return std::lexicographical_compare(a.phases_.begin(), a.phases_.end(), b.phases_.begin(),
                                      b.phases_.end());
}

struct UnitaryDual::Data {
  FiniteGroup group;
  std::vector<Irrep> irreps;
  std::vector<Character> characters;  // abelian exact path only
  std::vector<int> offsets;
  int flat = 0;
  CMat analysis;
  CMat synthesis;
  Eigen::VectorXd hs_w;

  explicit Data(FiniteGroup g) : group(std::move(g)) {}

  void assemble() {
    const int n = group.order();
    offsets.resize(irreps.size() + 1);
    offsets[0] = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i)
      offsets[i + 1] = offsets[i] + irreps[i].dim * irreps[i].dim;
    flat = offsets.back();

    analysis.resize(flat, n);
    synthesis.resize(n, flat);
    hs_w.resize(flat);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      const int d = irreps[i].dim;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const int row = offsets[i] + r * d + c;
          hs_w[row] = d;
          for (int y = 0; y < n; ++y) {
            analysis(row, y) = std::conj(irreps[i].mats[y](c, r)) / static_cast<double>(n);
            synthesis(y, row) = static_cast<double>(d) * irreps[i].mats[y](c, r);
          }
        }
    }
  }
};

UnitaryDual::UnitaryDual(FiniteGroup group, std::vector<Irrep> irreps,
                         std::vector<Character> exact_characters) {
  auto d = std::make_shared<Data>(std::move(group));
  d->irreps = std::move(irreps);
  d->characters = std::move(exact_characters);
  d->assemble();
  d_ = std::move(d);
}

const FiniteGroup& UnitaryDual::group() const { return d_->group; }
int UnitaryDual::size() const { return static_cast<int>(d_->irreps.size()); }
const Irrep& UnitaryDual::irrep(int i) const { return d_->irreps[i]; }
const std::vector<Irrep>& UnitaryDual::irreps() const { return d_->irreps; }
int UnitaryDual::degree(int i) const { return d_->irreps[i].dim; }

int UnitaryDual::sum_degrees() const {
  int s = 0;
  for (const auto& p : d_->irreps) s += p.dim;
  return s;
}

int UnitaryDual::sum_squared_degrees() const {
  int s = 0;
  for (const auto& p : d_->irreps) s += p.dim * p.dim;
  return s;
}

bool UnitaryDual::has_exact_characters() const { return !d_->characters.empty(); }
const std::vector<Character>& UnitaryDual::characters() const { return d_->characters; }

int UnitaryDual::character_index(const Character& chi) const {
  for (std::size_t i = 0; i < d_->characters.size(); ++i)
    if (d_->characters[i] == chi) return static_cast<int>(i);
  return -1;
}

int UnitaryDual::flat_size() const { return d_->flat; }
int UnitaryDual::block_offset(int i) const { return d_->offsets[i]; }
const CMat& UnitaryDual::analysis_matrix() const { return d_->analysis; }
const CMat& UnitaryDual::synthesis_matrix() const { return d_->synthesis; }
const Eigen::VectorXd& UnitaryDual::hs_weights() const { return d_->hs_w; }

// ---------------------------------------------------------------------------
// Abelian characters, exact.

UnitaryDual abelian_characters(const FiniteGroup& g) {
  if (!g.is_abelian()) fail(Errc::NotAbelian, "abelian_characters on nonabelian " + g.name());
  const int n = g.order();

  // Lift characters along a tower <S, g0>: each character of S extends in
  // exactly r ways, r = index of S in the enlarged subgroup, by choosing an
  // r-th root of chi(g0^r) for the value at g0.
  std::vector<char> in_s(n, 0);
  in_s[g.identity()] = 1;
  std::vector<int> members{g.identity()};
  std::vector<std::vector<Rational>> chars{std::vector<Rational>(n, Rational(0))};

  while (static_cast<int>(members.size()) < n) {
    int g0 = -1;
    for (int x = 0; x < n; ++x)
      if (!in_s[x]) {
        g0 = x;
        break;
      }
    int r = 1;
    int p = g0;
    while (!in_s[p]) {
      p = g.mul(p, g0);
      ++r;
    }
    // p == g0^r is in S here.
    const int g0r = p;

    // Decompose each element of S' = union_j g0^j S as g0^j * h.
    std::vector<int> new_members;
    std::vector<int> j_of(n, -1), h_of(n, -1);
    for (int j = 0; j < r; ++j) {
      const int g0j = g.power(g0, j);
      for (int h : members) {
        const int z = g.mul(g0j, h);
        j_of[z] = j;
        h_of[z] = h;
        new_members.push_back(z);
      }
    }

    std::vector<std::vector<Rational>> extended;
    extended.reserve(chars.size() * r);
    for (const auto& chi : chars) {
      const Rational q = chi[g0r];  // phase of chi(g0^r)
      for (int t = 0; t < r; ++t) {
        const Rational zeta{q.num + static_cast<std::int64_t>(t) * q.den,
                            q.den * static_cast<std::int64_t>(r)};
        std::vector<Rational> ext(n, Rational(0));
        for (int z : new_members)
          ext[z] = mod1(Rational(j_of[z]) * zeta + chi[h_of[z]]);
        extended.push_back(std::move(ext));
      }
    }
    chars = std::move(extended);
    members = std::move(new_members);
    std::sort(members.begin(), members.end());
    for (int x : members) in_s[x] = 1;
  }

  std::vector<Character> characters;
  characters.reserve(chars.size());
  for (auto& p : chars) characters.emplace_back(std::move(p));
  std::sort(characters.begin(), characters.end());

  // Multiplicativity is the defining invariant; check it exactly.
  for (const auto& chi : characters)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (mod1(chi.phase(x) + chi.phase(y)) != chi.phase(g.mul(x, y)))
          fail(Errc::DecompositionFailed, "character tower produced a non-multiplicative map");

  std::vector<Irrep> irreps;
  irreps.reserve(characters.size());
  for (std::size_t i = 0; i < characters.size(); ++i) {
    Irrep p;
    p.dim = 1;
    p.label = "chi" + std::to_string(i);
    p.mats.reserve(n);
    for (int x = 0; x < n; ++x) {
      CMat m(1, 1);
      m(0, 0) = characters[i].value(x);
      p.mats.push_back(std::move(m));
    }
    irreps.push_back(std::move(p));
  }
  return UnitaryDual(g, std::move(irreps), std::move(characters));
}

// ---------------------------------------------------------------------------
// Regular representation decomposition.

namespace {

// Canonical sort key: (dim, character values element by element, real part
// descending then imaginary ascending) so the trivial irrep sorts first and
// the order is independent of the seed.
std::vector<std::int64_t> sort_key(const Irrep& p, int n) {
  std::vector<std::int64_t> key;
  key.reserve(1 + 2 * n);
  key.push_back(p.dim);
  for (int x = 0; x < n; ++x) {
    const Complex c = p.character(x);
    key.push_back(-std::llround(c.real() * 1e6));
    key.push_back(std::llround(c.imag() * 1e6));
  }
  return key;
}

double hom_residual(const FiniteGroup& g, const Irrep& p) {
  double r = 0.0;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      r = std::max(r, (p.mats[x] * p.mats[y] - p.mats[g.mul(x, y)]).cwiseAbs().maxCoeff());
  return r;
}

double unitarity_residual(const Irrep& p) {
  double r = 0.0;
  const CMat eye = CMat::Identity(p.dim, p.dim);
  for (const auto& m : p.mats) r = std::max(r, (m * m.adjoint() - eye).cwiseAbs().maxCoeff());
  return r;
}

bool characters_match(const Irrep& a, const Irrep& b, int n, double tol) {
  if (a.dim != b.dim) return false;
  for (int x = 0; x < n; ++x)
    if (std::abs(a.character(x) - b.character(x)) > tol) return false;
  return true;
}

}  // namespace

int commutant_dimension(const FiniteGroup& g, const Irrep& pi, double tol) {
  const int d = pi.dim;
  const int n = g.order();
  // Stack the constraints pi(x) T - T pi(x) = 0 over all x, column-major
  // vec index (i + j*d): (pi T)(i,j) = sum_p pi(i,p) T(p,j);
  // (T pi)(i,j) = sum_q T(i,q) pi(q,j).
  CMat k(static_cast<long>(n) * d * d, d * d);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const long row = static_cast<long>(x) * d * d + (i + j * d);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) {
            Complex v = 0.0;
            if (j == q) v += pi.mats[x](i, p);
            if (i == p) v -= pi.mats[x](q, j);
            k(row, p + q * d) = v;
          }
      }
  }
  Eigen::JacobiSVD<CMat> svd(k);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() ? sv[0] : 0.0;
  int nullity = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] <= tol * std::max(1.0, scale)) ++nullity;
  return nullity;
}

UnitaryDual regular_decomposition(const FiniteGroup& g, std::uint64_t seed, int max_retries, double tol) {
  const int n = g.order();
  if (n > 256)
    fail(Errc::OrderCapExceeded, "regular decomposition capped at order 256, group has " + std::to_string(n));
  const int n_classes = static_cast<int>(g.conjugacy_classes().size());
  Rng rng(seed ^ 0xabcdef1234567890ULL);

  std::string last_failure = "no attempt";
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    // Random hermitian seed matrix, then average over conjugation by the
    // regular representation to land in its commutant.
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.cgaussian();
    a = (a + a.adjoint().eval()) / 2.0;

    CMat t = CMat::Zero(n, n);
    for (int h = 0; h < n; ++h) {
      const int hi = g.inv(h);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) t(u, v) += a(g.mul(hi, u), g.mul(hi, v));
    }
    t /= static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<CMat> es(t);
    if (es.info() != Eigen::Success) {
      last_failure = "eigensolver failure";
      continue;
    }
    const Eigen::VectorXd w = es.eigenvalues();
    const CMat vecs = es.eigenvectors();

    // Cluster eigenvalues; each cluster spans an invariant subspace.
    const double span = std::max(1.0, w[n - 1] - w[0]);
    const double gap = 1e-6 * span;
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == n || w[i] - w[i - 1] > gap) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    }

    std::vector<Irrep> kept;
    std::vector<int> copies_seen;
    bool bad = false;
    for (const auto& [b, e] : clusters) {
      const int d = e - b;
      const CMat q = vecs.middleCols(b, d);
      Irrep p;
      p.dim = d;
      p.mats.reserve(n);
      for (int x = 0; x < n; ++x) {
        // (P_x q)(u) = q(x^{-1} u).
        CMat pq(n, d);
        const int xi = g.inv(x);
        for (int u = 0; u < n; ++u) pq.row(u) = q.row(g.mul(xi, u));
        p.mats.push_back(q.adjoint() * pq);
      }
      // Merge with an existing equivalence class or keep as new.
      bool matched = false;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (characters_match(kept[i], p, n, 1e-5)) {
          ++copies_seen[i];
          matched = true;
          break;
        }
      }
      if (!matched) {
        kept.push_back(std::move(p));
        copies_seen.push_back(1);
      }
    }

    // Each class must occur with multiplicity equal to its degree.
    for (std::size_t i = 0; i < kept.size() && !bad; ++i)
      if (copies_seen[i] != kept[i].dim) {
        last_failure = "isotypic multiplicity mismatch (degenerate eigenvalue split)";
        bad = true;
      }
    if (!bad) {
      int sum_sq = 0;
      for (const auto& p : kept) sum_sq += p.dim * p.dim;
      if (sum_sq != n || static_cast<int>(kept.size()) != n_classes) {
        last_failure = "completeness mismatch: sum d^2 = " + std::to_string(sum_sq);
        bad = true;
      }
    }
    if (bad) continue;

    // Unitarize via the invariant inner product S = (1/n) sum_x pi(x)* pi(x).
    for (auto& p : kept) {
      CMat s = CMat::Zero(p.dim, p.dim);
      for (const auto& m : p.mats) s += m.adjoint() * m;
      s /= static_cast<double>(n);
      Eigen::SelfAdjointEigenSolver<CMat> se(s);
      const CMat shalf = se.operatorSqrt();
      const CMat sinvhalf = se.operatorInverseSqrt();
      for (auto& m : p.mats) m = shalf * m * sinvhalf;
    }

    for (const auto& p : kept) {
      if (hom_residual(g, p) > tol || unitarity_residual(p) > tol) {
        last_failure = "residuals above tolerance after unitarization";
        bad = true;
        break;
      }
      if (commutant_dimension(g, p) != 1) {
        last_failure = "commutant rank test failed (block not irreducible)";
        bad = true;
        break;
      }
    }
    if (bad) continue;

    std::sort(kept.begin(), kept.end(),
              [n](const Irrep& x, const Irrep& y) { return sort_key(x, n) < sort_key(y, n); });
    for (std::size_t i = 0; i < kept.size(); ++i) kept[i].label = "pi" + std::to_string(i);
    return UnitaryDual(g, std::move(kept));
  }
  fail(Errc::DecompositionFailed,
       g.name() + ": " + last_failure + " after " + std::to_string(max_retries) + " draws");
}

UnitaryDual unitary_dual(const FiniteGroup& g, std::uint64_t seed) {
  return g.is_abelian() ? abelian_characters(g) : regular_decomposition(g, seed);
}

// ---------------------------------------------------------------------------
// Verification.

DualReport dual_verify(const UnitaryDual& d, double tol) {
  const FiniteGroup& g = d.group();
  const int n = g.order();
  DualReport rep;
  auto add = [&](const std::string& name, bool pass, double residual) {
    rep.checks.push_back({name, pass, residual});
  };

  double hom = 0.0, uni = 0.0;
  for (const auto& p : d.irreps()) {
    hom = std::max(hom, hom_residual(g, p));
    uni = std::max(uni, unitarity_residual(p));
  }
  add("homomorphism", hom <= tol, hom);
  add("unitarity", uni <= tol, uni);

  bool irred = true;
  for (const auto& p : d.irreps())
    if (commutant_dimension(g, p) != 1) irred = false;
  add("irreducibility", irred, irred ? 0.0 : 1.0);

  const int sum_sq = d.sum_squared_degrees();
  add("completeness", sum_sq == n, std::abs(static_cast<double>(sum_sq - n)));

  const int classes = static_cast<int>(g.conjugacy_classes().size());
  add("class_count", d.size() == classes, std::abs(static_cast<double>(d.size() - classes)));

  // Schur orthogonality of matrix coefficients:
  // (1/n) sum_x pi(x)(i,j) conj(rho(x)(k,l)) = delta_{pi,rho} delta_ik delta_jl / d.
  double schur = 0.0;
  for (int a = 0; a < d.size(); ++a) {
    for (int b = a; b < d.size(); ++b) {
      const int da = d.degree(a), db = d.degree(b);
      CMat acc = CMat::Zero(da * da, db * db);
      for (int x = 0; x < n; ++x) {
        CMat va = d.irrep(a).mats[x];
        CMat vb = d.irrep(b).mats[x];
        va.resize(da * da, 1);
        vb.resize(db * db, 1);
        acc += va * vb.adjoint();
      }
      acc /= static_cast<double>(n);
      if (a == b)
        acc -= CMat::Identity(da * da, da * da) / static_cast<double>(da);
      schur = std::max(schur, acc.cwiseAbs().maxCoeff());
    }
  }
  add("schur_orthogonality", schur <= tol, schur);

  rep.all_pass = true;
  rep.max_residual = 0.0;
  for (const auto& c : rep.checks) {
    rep.all_pass = rep.all_pass && c.pass;
    rep.max_residual = std::max(rep.max_residual, c.residual);
  }
  return rep;
}

CMat average_intertwiner(const FiniteGroup& g, const Irrep& a, const Irrep& b, Rng& rng) {
  const int n = g.order();
  CMat x(a.dim, b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) x(i, j) = rng.cgaussian();
  CMat t = CMat::Zero(a.dim, b.dim);
  for (int h = 0; h < n; ++h) t += a.mats[h] * x * b.mats[h].adjoint();
  t /= static_cast<double>(n);
  const double norm = t.norm();
  if (norm > 0) t *= std::sqrt(static_cast<double>(a.dim)) / norm;
  return t;
}

double intertwiner_residual(const FiniteGroup& g, const Irrep& a, const Irrep& b, const CMat& t) {
  double r = 0.0;
  for (int x = 0; x < g.order(); ++x)
    r = std::max(r, (a.mats[x] * t - t * b.mats[x]).cwiseAbs().maxCoeff());
  return r;
}

DualEquivalence duals_equivalent(const UnitaryDual& a, const UnitaryDual& b, std::uint64_t seed,
                                 double tol) {
  DualEquivalence res;
  if (!a.group().same_as(b.group()) || a.size() != b.size()) return res;
  const FiniteGroup& g = a.group();
  Rng rng(seed);
  res.pairing.assign(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  res.equivalent = true;
  for (int i = 0; i < a.size(); ++i) {
    int match = -1;
    for (int j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if (characters_match(a.irrep(i), b.irrep(j), g.order(), 1e-5)) {
        match = j;
        break;
      }
    }
    if (match < 0) {
      res.equivalent = false;
      continue;
    }
    used[match] = 1;
    res.pairing[i] = match;
    const CMat t = average_intertwiner(g, a.irrep(i), b.irrep(match), rng);
    const double r = intertwiner_residual(g, a.irrep(i), b.irrep(match), t);
    res.max_residual = std::max(res.max_residual, r);
    if (r > tol) res.equivalent = false;
  }
  return res;
}

}  // namespace gaborlab
