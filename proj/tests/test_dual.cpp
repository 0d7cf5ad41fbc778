// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/dual.hpp"

#include <algorithm>
#include <complex>

#include "doctest.h"

using namespace gaborlab;

namespace {

std::vector<int> degrees(const UnitaryDual& d) {
  std::vector<int> v;
  for (int i = 0; i < d.size(); ++i) v.push_back(d.degree(i));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("abelian characters of the trivial group") {
  const UnitaryDual d = abelian_characters(named_group("Z1"));
  CHECK(d.size() == 1);
  CHECK(d.degree(0) == 1);
  CHECK(std::abs(d.irrep(0).mats[0](0, 0) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("Z4 characters form the DFT matrix i^(jk)") {
  const FiniteGroup g = named_group("Z4");
  const UnitaryDual d = abelian_characters(g);
  REQUIRE(d.size() == 4);
  const Complex i_unit(0, 1);
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < 4; ++j) {
      Complex expect = 1;
      for (int k = 0; k < (c * j) % 4; ++k) expect *= i_unit;
      CHECK(std::abs(d.characters()[c].value(j) - expect) < 1e-14);
    }
  // Orthogonality in the counting measure: sum_x chi_a conj(chi_b) = n delta.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Complex s = 0;
      for (int x = 0; x < 4; ++x) s += d.characters()[a].value(x) * std::conj(d.characters()[b].value(x));
      CHECK(std::abs(s - Complex(a == b ? 4.0 : 0.0, 0)) < 1e-12);
    }
}

TEST_CASE("Z2xZ2 characters are real with values +-1") {
  const UnitaryDual d = abelian_characters(named_group("Z2xZ2"));
  REQUIRE(d.size() == 4);
  for (const auto& chi : d.characters())
    for (int x = 0; x < 4; ++x) {
      const Complex v = chi.value(x);
      CHECK(std::abs(v.imag()) < 1e-15);
      CHECK(std::abs(std::abs(v.real()) - 1.0) < 1e-15);
    }
}

TEST_CASE("abelian dual is closed under pointwise product and inverse") {
  const UnitaryDual d = abelian_characters(named_group("Z6"));
  for (int a = 0; a < d.size(); ++a) {
    CHECK(d.character_index(d.characters()[a].inverse()) >= 0);
    for (int b = 0; b < d.size(); ++b)
      CHECK(d.character_index(d.characters()[a].pointwise_product(d.characters()[b])) >= 0);
  }
  // Multiplicativity and unit modulus, exactly via phases.
  const FiniteGroup g = named_group("Z6");
  for (const auto& chi : d.characters())
    for (int x = 0; x < 6; ++x) {
      CHECK(std::abs(std::abs(chi.value(x)) - 1.0) < 1e-15);
      for (int y = 0; y < 6; ++y)
        CHECK(mod1(chi.phase(x) + chi.phase(y)) == chi.phase(g.mul(x, y)));
    }
}

TEST_CASE("abelian_characters rejects nonabelian groups") {
  CHECK_THROWS_AS(abelian_characters(named_group("S3")), Error);
}

TEST_CASE("regular decomposition degree multisets") {
  // Sum d^2 = |G| with the class count forces these multisets.
  CHECK(degrees(regular_decomposition(named_group("S3"), 0)) == std::vector<int>{1, 1, 2});
  CHECK(degrees(regular_decomposition(named_group("Q8"), 0)) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(degrees(regular_decomposition(named_group("D4"), 0)) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(degrees(regular_decomposition(named_group("S4"), 0)) == std::vector<int>{1, 1, 2, 3, 3});
  // Abelian groups get all-ones.
  CHECK(degrees(regular_decomposition(named_group("Z5"), 0)) == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("regular decomposition of an abelian group matches the exact characters") {
  const FiniteGroup g = named_group("Z5");
  const DualEquivalence eq = duals_equivalent(abelian_characters(g), regular_decomposition(g, 3), 11);
  CHECK(eq.equivalent);
  CHECK(eq.max_residual < 1e-8);
}

TEST_CASE("dual_verify passes on catalog duals") {
  for (const char* spec : {"S3", "D4", "Q8", "Z12"}) {
    const UnitaryDual d = unitary_dual(named_group(spec), 0);
    const DualReport rep = dual_verify(d, 1e-9);
    CHECK(rep.all_pass);
    CHECK(rep.max_residual < 1e-9);
  }
}

TEST_CASE("dual_verify reports a deleted irrep as incompleteness") {
  const UnitaryDual d = unitary_dual(named_group("S3"), 0);
  std::vector<Irrep> partial(d.irreps().begin(), d.irreps().end() - 1);
  const int dropped = d.irreps().back().dim;
  const UnitaryDual broken(d.group(), std::move(partial));
  const DualReport rep = dual_verify(broken);
  bool completeness_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "completeness") {
      completeness_failed = !c.pass;
      CHECK(c.residual == doctest::Approx(dropped * dropped));
    }
  CHECK(completeness_failed);
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("dual_verify flags a perturbed matrix at the perturbation scale") {
  const UnitaryDual d = unitary_dual(named_group("S3"), 0);
  std::vector<Irrep> irreps = d.irreps();
  irreps[2].mats[1](0, 0) += 1e-3;
  const UnitaryDual broken(d.group(), std::move(irreps));
  const DualReport rep = dual_verify(broken);
  for (const auto& c : rep.checks)
    if (c.name == "homomorphism") {
      CHECK_FALSE(c.pass);
      CHECK(c.residual > 1e-4);
      CHECK(c.residual < 1e-1);
    }
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("second orthogonality: characters separate conjugacy classes") {
  const FiniteGroup g = named_group("S3");
  const UnitaryDual d = unitary_dual(g, 0);
  const auto classes = g.conjugacy_classes();
  std::vector<int> class_of(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) class_of[x] = static_cast<int>(c);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      Complex s = 0;
      for (int i = 0; i < d.size(); ++i) s += d.irrep(i).character(x) * std::conj(d.irrep(i).character(y));
      const double expect =
          class_of[x] == class_of[y] ? static_cast<double>(g.order()) / classes[class_of[x]].size() : 0.0;
      CHECK(std::abs(s - Complex(expect, 0)) < 1e-9);
    }
}

TEST_CASE("commutant dimension distinguishes irreducible from reducible") {
  const FiniteGroup g = named_group("S3");
  const UnitaryDual d = unitary_dual(g, 0);
  CHECK(commutant_dimension(g, d.irrep(2)) == 1);

  // Direct sum of the two 1-dim irreps has a 2-dim commutant.
  Irrep sum;
  sum.dim = 2;
  for (int x = 0; x < g.order(); ++x) {
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = d.irrep(0).mats[x](0, 0);
    m(1, 1) = d.irrep(1).mats[x](0, 0);
    sum.mats.push_back(std::move(m));
  }
  CHECK(commutant_dimension(g, sum) == 2);
}

TEST_CASE("two seeds give equivalent duals") {
  for (const char* spec : {"S3", "D4", "Q8"}) {
    const FiniteGroup g = named_group(spec);
    const DualEquivalence eq = duals_equivalent(regular_decomposition(g, 0), regular_decomposition(g, 1), 7);
    CHECK(eq.equivalent);
    CHECK(eq.max_residual < 1e-8);
    // Canonical ordering makes the pairing the identity.
    for (std::size_t i = 0; i < eq.pairing.size(); ++i) CHECK(eq.pairing[i] == static_cast<int>(i));
  }
}

TEST_CASE("S4 characters match the classical table") {
  const FiniteGroup g = named_group("S4");
  const UnitaryDual d = unitary_dual(g, 0);
  REQUIRE(degrees(d) == std::vector<int>{1, 1, 2, 3, 3});

  // Classes keyed by (element order, class size): e, transpositions, double
  // transpositions, 3-cycles, 4-cycles.
  const auto classes = g.conjugacy_classes();
  REQUIRE(classes.size() == 5);
  auto class_rep = [&](int order, int size) {
    for (const auto& c : classes)
      if (static_cast<int>(c.size()) == size && g.element_order(c[0]) == order) return c[0];
    FAIL("class not found");
    return -1;
  };
  const int e = class_rep(1, 1), t2 = class_rep(2, 6), t22 = class_rep(2, 3), t3 = class_rep(3, 8),
            t4 = class_rep(4, 6);

  // Character table rows sorted by (degree, value on transpositions desc).
  struct Row {
    double chi_e, chi_2, chi_22, chi_3, chi_4;
  };
  std::vector<Row> got;
  for (int i = 0; i < d.size(); ++i)
    got.push_back({d.irrep(i).character(e).real(), d.irrep(i).character(t2).real(),
                   d.irrep(i).character(t22).real(), d.irrep(i).character(t3).real(),
                   d.irrep(i).character(t4).real()});
  auto key = [](const Row& r) { return std::make_pair(std::llround(r.chi_e * 64), -std::llround(r.chi_2 * 64)); };
  std::sort(got.begin(), got.end(), [&](const Row& a, const Row& b) { return key(a) < key(b); });
  const std::vector<Row> expect{{1, 1, 1, 1, 1},    // trivial
                                {1, -1, 1, 1, -1},  // sign
                                {2, 0, 2, -1, 0},   // degree-2
                                {3, 1, -1, 0, -1},  // standard
                                {3, -1, -1, 0, 1}}; // standard (x) sign
  for (std::size_t r = 0; r < expect.size(); ++r) {
    CHECK(got[r].chi_e == doctest::Approx(expect[r].chi_e).epsilon(1e-8));
    CHECK(got[r].chi_2 == doctest::Approx(expect[r].chi_2).epsilon(1e-8));
    CHECK(got[r].chi_22 == doctest::Approx(expect[r].chi_22).epsilon(1e-8));
    CHECK(got[r].chi_3 == doctest::Approx(expect[r].chi_3).epsilon(1e-8));
    CHECK(got[r].chi_4 == doctest::Approx(expect[r].chi_4).epsilon(1e-8));
  }
  // Imaginary parts vanish: all S4 characters are real.
  for (int i = 0; i < d.size(); ++i)
    for (int x = 0; x < g.order(); ++x) CHECK(std::abs(d.irrep(i).character(x).imag()) < 1e-9);
}

TEST_CASE("S5 decomposes with the right degrees") {
  const UnitaryDual d = regular_decomposition(named_group("S5"), 0);
  CHECK(degrees(d) == std::vector<int>{1, 1, 4, 4, 5, 5, 6});
  CHECK(d.sum_squared_degrees() == 120);
}

TEST_CASE("trivial irrep sorts first") {
  for (const char* spec : {"S3", "Q8", "Z6"}) {
    const UnitaryDual d = unitary_dual(named_group(spec), 0);
    CHECK(d.degree(0) == 1);
    for (int x = 0; x < d.group().order(); ++x)
      CHECK(std::abs(d.irrep(0).mats[x](0, 0) - Complex(1, 0)) < 1e-12);
  }
}
