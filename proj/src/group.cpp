// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/group.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gaborlab/rng.hpp"

namespace gaborlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::UnknownSpec: return "UnknownSpec";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::ZeroWindow: return "ZeroWindow";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::BadFunctionSpec: return "BadFunctionSpec";
  }
  return "UnknownError";
}

struct FiniteGroup::Data {
  int order = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> inv;
  int identity = 0;
  std::string name;
  std::string validation_mode;
  bool abelian = false;
};

namespace {

std::string triple_str(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_mult_table(std::vector<std::vector<int>> table, std::string name,
                                         int exhaustive_cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(Errc::NotLatinSquare, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(Errc::NotLatinSquare, "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(Errc::NotLatinSquare,
             "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
  }

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[table[i][j]]) fail(Errc::NotLatinSquare, "row " + std::to_string(i) + " repeats a value");
      seen[table[i][j]] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[table[i][j]]) fail(Errc::NotLatinSquare, "column " + std::to_string(j) + " repeats a value");
      seen[table[i][j]] = 1;
    }
  }

  // Two-sided identity, derived rather than supplied.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail(Errc::NoIdentity, "no two-sided identity element");

  // Two-sided inverses.
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    int right = -1;
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity) {
        right = y;
        break;
      }
    }
    if (right < 0 || table[right][x] != identity)
      fail(Errc::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
    inv[x] = right;
  }

  // Associativity: exhaustive up to the cap, deterministic samples above.
  std::string mode;
  if (n <= exhaustive_cap) {
    mode = "exhaustive";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            fail(Errc::NotAssociative, "triple " + triple_str(a, b, c));
  } else {
    mode = "sampled";
    Rng rng(0x9e3779b97f4a7c15ULL);
    const std::int64_t samples = 1LL << 21;
    for (std::int64_t s = 0; s < samples; ++s) {
      const int a = rng.below(n), b = rng.below(n), c = rng.below(n);
      if (table[table[a][b]][c] != table[a][table[b][c]])
        fail(Errc::NotAssociative, "triple " + triple_str(a, b, c));
    }
  }

  bool abelian = true;
  for (int a = 0; a < n && abelian; ++a)
    for (int b = a + 1; b < n && abelian; ++b) abelian = table[a][b] == table[b][a];

  auto d = std::make_shared<Data>();
  d->order = n;
  d->mult = std::move(table);
  d->inv = std::move(inv);
  d->identity = identity;
  d->name = name.empty() ? "G" + std::to_string(n) : std::move(name);
  d->validation_mode = mode;
  d->abelian = abelian;
  return FiniteGroup(std::move(d));
}

int FiniteGroup::order() const { return d_->order; }
int FiniteGroup::mul(int a, int b) const { return d_->mult[a][b]; }
int FiniteGroup::inv(int a) const { return d_->inv[a]; }
int FiniteGroup::identity() const { return d_->identity; }
const std::string& FiniteGroup::name() const { return d_->name; }
const std::vector<std::vector<int>>& FiniteGroup::mult_table() const { return d_->mult; }
Rational FiniteGroup::haar_weight() const { return {1, d_->order}; }
const std::string& FiniteGroup::validation_mode() const { return d_->validation_mode; }
bool FiniteGroup::is_abelian() const { return d_->abelian; }

int FiniteGroup::element_order(int x) const {
  int k = 1;
  int p = x;
  while (p != d_->identity) {
    p = mul(p, x);
    ++k;
  }
  return k;
}

int FiniteGroup::power(int x, int k) const {
  int r = d_->identity;
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  const int n = d_->order;
  std::vector<char> placed(n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (placed[x]) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(mul(mul(g, x), inv(g)));
    std::vector<int> v(cls.begin(), cls.end());
    for (int y : v) placed[y] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int x = 0; x < d_->order; ++x) {
    bool central = true;
    for (int y = 0; y < d_->order && central; ++y) central = mul(x, y) == mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  if (d_ == other.d_) return true;
  return d_->order == other.d_->order && d_->mult == other.d_->mult;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = g.order();
  for (int x : elements)
    if (x < 0 || x >= n) fail(Errc::NotSubgroup, "element index " + std::to_string(x) + " out of range");
  if (elements.empty()) fail(Errc::NotSubgroup, "empty element set");

  std::vector<char> in(n, 0);
  for (int x : elements) in[x] = 1;
  if (!in[g.identity()]) fail(Errc::NotSubgroup, "identity not contained");
  for (int a : elements) {
    if (!in[g.inv(a)]) fail(Errc::NotSubgroup, "not closed under inverse at " + std::to_string(a));
    for (int b : elements)
      if (!in[g.mul(a, b)])
        fail(Errc::NotSubgroup, "not closed under product at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }

  bool normal = true;
  for (int x = 0; x < n && normal; ++x)
    for (int h : elements)
      if (!in[g.mul(g.mul(x, h), g.inv(x))]) {
        normal = false;
        break;
      }

  return Subgroup{g, std::move(elements), normal};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return make_subgroup(g, {g.identity()}); }

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, std::move(all));
}

std::vector<int> generated_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> frontier{g.identity()};
  in[g.identity()] = 1;
  std::vector<int> members{g.identity()};
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (int s : generators) {
      for (int y : {g.mul(x, s), g.mul(x, g.inv(s))}) {
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_cap) {
  if (g.order() > order_cap)
    fail(Errc::OrderCapExceeded,
         "subgroup enumeration capped at order " + std::to_string(order_cap) + ", group has " +
             std::to_string(g.order()));

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  std::vector<int> triv{g.identity()};
  found.insert(triv);
  frontier.push_back(triv);

  while (!frontier.empty()) {
    const std::vector<int> h = std::move(frontier.back());
    frontier.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      std::vector<int> k = generated_closure(g, gens);
      if (found.insert(k).second) frontier.push_back(std::move(k));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(make_subgroup(g, elems));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int order_cap) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g, order_cap))
    if (h.is_normal) out.push_back(std::move(h));
  return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent.same_as(g)) fail(Errc::GroupMismatch, "subgroup belongs to a different group");
  const int m = static_cast<int>(h.elements.size());
  std::vector<int> index_of(g.order(), -1);
  for (int i = 0; i < m; ++i) index_of[h.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = index_of[g.mul(h.elements[i], h.elements[j])];
  return FiniteGroup::from_mult_table(std::move(table), g.name() + ":sub" + std::to_string(m));
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent.same_as(g)) fail(Errc::GroupMismatch, "subgroup belongs to a different group");
  if (!h.is_normal) fail(Errc::NotNormal, "subgroup is not normal in " + g.name());

  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int hh : h.elements) coset.push_back(g.mul(x, hh));
    std::sort(coset.begin(), coset.end());
    const int idx = static_cast<int>(cosets.size());
    for (int y : coset) coset_of[y] = idx;
    cosets.push_back(std::move(coset));
  }
  // Re-index cosets by smallest member so the ordering is canonical.
  std::vector<int> perm(cosets.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return cosets[a][0] < cosets[b][0]; });
  std::vector<std::vector<int>> sorted_cosets;
  std::vector<int> new_index(cosets.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = static_cast<int>(i);
    sorted_cosets.push_back(cosets[perm[i]]);
  }
  for (int x = 0; x < n; ++x) coset_of[x] = new_index[coset_of[x]];

  const int q = static_cast<int>(sorted_cosets.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a][b] = coset_of[g.mul(sorted_cosets[a][0], sorted_cosets[b][0])];

  std::ostringstream name;
  name << g.name() << "/{";
  for (std::size_t i = 0; i < h.elements.size(); ++i) name << (i ? "," : "") << h.elements[i];
  name << "}";
  FiniteGroup quot = FiniteGroup::from_mult_table(std::move(table), name.str());

  // Projection must be a homomorphism on all pairs.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (coset_of[g.mul(x, y)] != quot.mul(coset_of[x], coset_of[y]))
        fail(Errc::NotNormal, "projection fails to be a homomorphism at (" + std::to_string(x) + ", " +
                                  std::to_string(y) + ")");

  return QuotientGroup{g, h, std::move(sorted_cosets), std::move(coset_of), std::move(quot)};
}

namespace {

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_mult_table(std::move(t), "Z" + std::to_string(n));
}

// Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s*r^i,
// with s*r^i*s = r^{-i}.
FiniteGroup dihedral_group(int n) {
  const int m = 2 * n;
  auto enc = [n](int bit, int rot) { return bit * n + ((rot % n + n) % n); };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    const int ab = a / n, ar = a % n;
    for (int b = 0; b < m; ++b) {
      const int bb = b / n, br = b % n;
      // (s^ab r^ar)(s^bb r^br) = s^(ab^bb) r^((-1)^bb * ar + br)
      t[a][b] = enc(ab ^ bb, (bb ? -ar : ar) + br);
    }
  }
  return FiniteGroup::from_mult_table(std::move(t), "D" + std::to_string(n));
}

// Permutations of {0..n-1} in lexicographic one-line order; composition
// (p*q)(i) = p(q(i)).
FiniteGroup symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
      t[i][j] = index.at(comp);
    }
  return FiniteGroup::from_mult_table(std::move(t), "S" + std::to_string(n));
}

// Canonical order: 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group() {
  // Axis table for {1,i,j,k} products with sign: axis_mul[a][b] = (axis, sign).
  static constexpr int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  auto enc = [](int ax, int s) { return 2 * ax + (s < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int aa = a / 2, sa = a % 2 ? -1 : +1;
      const int bb = b / 2, sb = b % 2 ? -1 : +1;
      t[a][b] = enc(axis[aa][bb], sa * sb * sign[aa][bb]);
    }
  return FiniteGroup::from_mult_table(std::move(t), "Q8");
}

FiniteGroup named_atom(const std::string& tok, int order_cap) {
  auto parse_n = [&](std::size_t off) -> int {
    if (tok.size() <= off) fail(Errc::UnknownSpec, "missing order in \"" + tok + "\"");
    int n = 0;
    for (std::size_t i = off; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') fail(Errc::UnknownSpec, "bad group spec \"" + tok + "\"");
      n = n * 10 + (tok[i] - '0');
      if (n > 100000) fail(Errc::OrderCapExceeded, "order in \"" + tok + "\" is absurd");
    }
    if (n <= 0) fail(Errc::UnknownSpec, "order must be positive in \"" + tok + "\"");
    return n;
  };
  auto check_cap = [&](int n) {
    if (n > order_cap)
      fail(Errc::OrderCapExceeded, "\"" + tok + "\" exceeds order cap " + std::to_string(order_cap));
  };
  if (tok == "Q8") return quaternion_group();
  if (!tok.empty() && tok[0] == 'Z') {
    const int n = parse_n(1);
    check_cap(n);
    return cyclic_group(n);
  }
  if (!tok.empty() && tok[0] == 'D') {
    const int n = parse_n(1);
    check_cap(2 * n);
    return dihedral_group(n);
  }
  if (!tok.empty() && tok[0] == 'S') {
    const int n = parse_n(1);
    if (n > 5) fail(Errc::UnknownSpec, "S" + std::to_string(n) + " not in catalog (n <= 5)");
    int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    check_cap(f);
    return symmetric_group(n);
  }
  fail(Errc::UnknownSpec, "\"" + tok + "\" is not in the catalog");
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int order_cap) {
  const long long n = static_cast<long long>(a.order()) * b.order();
  if (n > order_cap)
    fail(Errc::OrderCapExceeded, "product order " + std::to_string(n) + " exceeds cap " +
                                     std::to_string(order_cap));
  const int na = a.order(), nb = b.order(), m = static_cast<int>(n);
  auto enc = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup::from_mult_table(std::move(t), a.name() + "x" + b.name());
}

FiniteGroup named_group(const std::string& spec, int order_cap) {
  if (spec.empty()) fail(Errc::UnknownSpec, "empty group spec");
  std::vector<std::string> toks;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  toks.push_back(cur);
  FiniteGroup g = named_atom(toks[0], order_cap);
  for (std::size_t i = 1; i < toks.size(); ++i)
    g = direct_product(g, named_atom(toks[i], order_cap), order_cap);
  return g;
}

}  // namespace gaborlab
