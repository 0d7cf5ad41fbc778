// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/qup.hpp"

#include <algorithm>

#include "doctest.h"

using namespace gaborlab;

TEST_CASE("weak QUP witnesses on the paper's trio") {
  struct Case {
    const char* spec;
    Rational measure;
  };
  for (const Case& c : {Case{"S3", {2, 3}}, Case{"D4", {3, 4}}, Case{"Q8", {3, 4}}}) {
    const QupReport rep = weak_qup_witness(named_group(c.spec));
    CHECK(rep.verdict == "weak-QUP fails");
    CHECK_FALSE(rep.discrepancy);
    REQUIRE(rep.measure.has_value());
    REQUIRE(rep.prediction.has_value());
    CHECK(*rep.measure == c.measure);
    CHECK(*rep.prediction == c.measure);
    CHECK(*rep.measure < Rational(1));
  }
}

TEST_CASE("weak QUP witness support for S3 is {e} x the whole dual") {
  const FiniteGroup g = named_group("S3");
  const UnitaryDual d = unitary_dual(g, 0);
  const GroupFunction f = delta(g, g.identity());
  const GaborSupport supp = support_measure(gabor_transform(f, f, d), 1e-9);
  REQUIRE(supp.points.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(supp.points[i].first == g.identity());
    CHECK(supp.points[i].second == i);
  }
  CHECK(supp.measure == Rational(2, 3));
}

TEST_CASE("weak QUP witness above the subgroup-enumeration cap falls back to H = {e}") {
  // S5 has order 120 > 64, so only the trivial subgroup is tabulated;
  // measure = (1 + 1 + 4 + 4 + 5 + 5 + 6) / 120 = 13/60.
  const QupReport rep = weak_qup_witness(named_group("S5"));
  CHECK(rep.verdict == "weak-QUP fails");
  CHECK(*rep.measure == Rational(13, 60));
  CHECK(*rep.prediction == Rational(13, 60));
  CHECK(rep.detail.at("witnesses").size() == 1);
}

TEST_CASE("abelian groups yield no witness") {
  const QupReport rep = weak_qup_witness(named_group("Z6"));
  CHECK(rep.verdict == "NoWitness");
  CHECK_FALSE(rep.measure.has_value());
}

TEST_CASE("weak QUP witness table covers every normal subgroup with nonabelian quotient") {
  const QupReport rep = weak_qup_witness(named_group("D4"));
  // D4 has nonabelian quotient only for H = {e} (all proper quotients of
  // order <= 4 are abelian), so exactly one table row.
  CHECK(rep.detail.at("witnesses").size() == 1);

  const QupReport rep2 = weak_qup_witness(named_group("S3xZ2"));
  // H = {e} and H = Z2 factor both leave nonabelian quotients.
  CHECK(rep2.detail.at("witnesses").size() >= 2);
  CHECK_FALSE(rep2.discrepancy);
}

TEST_CASE("abelian lower-bound scan") {
  SUBCASE("Z12 subgroup indicators achieve the tight value 1") {
    const QupReport rep = abelian_lower_bound_scan(named_group("Z12"), 50, 7);
    CHECK(rep.verdict == "lower bound holds");
    CHECK_FALSE(rep.discrepancy);
    REQUIRE(rep.measure.has_value());
    CHECK(*rep.measure == Rational(1));  // indicator pairs reach the floor
  }
  SUBCASE("Z4 one-point windows give measure exactly 1") {
    const FiniteGroup g = named_group("Z4");
    const UnitaryDual d = abelian_characters(g);
    const GaborSupport supp = support_measure(gabor_transform(delta(g, 1), delta(g, 0), d), 1e-9);
    CHECK(supp.measure == Rational(1));
  }
  SUBCASE("dense draws on Z6 stay at or above the floor") {
    const QupReport rep = abelian_lower_bound_scan(named_group("Z6"), 500, 3);
    CHECK_FALSE(rep.discrepancy);
    CHECK(rep.detail.at("violations").get<int>() == 0);
    REQUIRE(rep.measure.has_value());
    CHECK(*rep.measure >= Rational(1));
  }
  SUBCASE("nonabelian input is rejected") {
    CHECK_THROWS_AS(abelian_lower_bound_scan(named_group("S3"), 10, 0), Error);
  }
}

TEST_CASE("subgroup gabor profile") {
  SUBCASE("full group") {
    const FiniteGroup g = named_group("Z6");
    const QupReport rep = subgroup_gabor_profile(g, full_subgroup(g));
    CHECK_FALSE(rep.discrepancy);
    CHECK(*rep.measure == Rational(1));
  }
  SUBCASE("index-3 subgroup of Z12") {
    const FiniteGroup g = named_group("Z12");
    const QupReport rep = subgroup_gabor_profile(g, make_subgroup(g, {0, 3, 6, 9}));
    CHECK_FALSE(rep.discrepancy);
    CHECK(*rep.measure == Rational(1));
    CHECK(*rep.prediction == Rational(1));
  }
  SUBCASE("A3 inside S3") {
    const FiniteGroup g = named_group("S3");
    const Subgroup a3 = make_subgroup(g, generated_closure(g, {3}));
    const QupReport rep = subgroup_gabor_profile(g, a3);
    CHECK_FALSE(rep.discrepancy);
    CHECK(*rep.measure == Rational(1));
    CHECK(rep.detail.at("annihilator_members").size() == 2);
  }
  SUBCASE("non-normal subgroup of S3: support exceeds H x A(H), honestly flagged") {
    const FiniteGroup g = named_group("S3");
    const Subgroup h = make_subgroup(g, generated_closure(g, {1}));
    REQUIRE_FALSE(h.is_normal);
    const QupReport rep = subgroup_gabor_profile(g, h);
    CHECK(rep.discrepancy);
    CHECK_FALSE(rep.detail.at("support_matches_H_x_A").get<bool>());
    // The 2-dim irrep restricted to an order-2 subgroup contains the trivial
    // rep, so the enumerated measure is (2/6)(1+2) = 1 while the A(H)
    // prediction is (2/6)(1) = 1/3.
    CHECK(*rep.measure == Rational(1));
    CHECK(*rep.prediction == Rational(1, 3));
  }
}

TEST_CASE("restriction inequality check") {
  SUBCASE("trivial subgroup") {
    const FiniteGroup g = named_group("Z4");
    const QupReport rep = restriction_inequality_check(g, trivial_subgroup(g), 5, 1);
    CHECK(rep.verdict == "no violations");
  }
  SUBCASE("S3 over A3") {
    const FiniteGroup g = named_group("S3");
    const Subgroup a3 = make_subgroup(g, generated_closure(g, {3}));
    const QupReport rep = restriction_inequality_check(g, a3, 20, 11);
    CHECK(rep.verdict == "no violations");
    CHECK(rep.detail.at("violations").get<int>() == 0);
    CHECK(rep.detail.at("combinations_checked").get<long>() == 20L * 6 * 3 * 6);
  }
  SUBCASE("Z6 over Z3") {
    const FiniteGroup g = named_group("Z6");
    const Subgroup z3 = make_subgroup(g, {0, 2, 4});
    const QupReport rep = restriction_inequality_check(g, z3, 20, 12);
    CHECK(rep.verdict == "no violations");
  }
  SUBCASE("non-normal subgroup is rejected") {
    const FiniteGroup g = named_group("S3");
    const Subgroup h = make_subgroup(g, generated_closure(g, {1}));
    CHECK_THROWS_AS(restriction_inequality_check(g, h, 1, 0), Error);
  }
}

TEST_CASE("report suite") {
  SUBCASE("empty") { CHECK(qup_report_suite({}).empty()); }
  SUBCASE("single abelian group") {
    QupOptions opt;
    opt.trials = 30;
    const auto reports = qup_report_suite({"Z4"}, opt);
    REQUIRE(reports.size() >= 2);
    CHECK(reports[0].experiment == "weak_qup_witness");
    CHECK(reports[0].verdict == "NoWitness");
    CHECK(reports[1].experiment == "abelian_lower_bound_scan");
    CHECK(*reports[1].measure >= Rational(1));
    for (const auto& r : reports) CHECK_FALSE(r.discrepancy);
  }
  SUBCASE("the nonabelian trio") {
    QupOptions opt;
    opt.trials = 10;
    const auto reports = qup_report_suite({"S3", "D4", "Q8"}, opt);
    std::vector<Rational> witness_measures;
    for (const auto& r : reports)
      if (r.experiment == "weak_qup_witness") witness_measures.push_back(*r.measure);
    CHECK(witness_measures == std::vector<Rational>{{2, 3}, {3, 4}, {3, 4}});
  }
  SUBCASE("unresolvable spec becomes an error entry") {
    const auto reports = qup_report_suite({"NOSUCH"});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].discrepancy);
    CHECK(reports[0].verdict.find("UnknownSpec") != std::string::npos);
  }
}

TEST_CASE("dichotomy at desk scale") {
  for (const char* spec : {"Z8", "Z9", "Z2xZ6", "S3", "D4", "D5", "Q8", "S4"}) {
    const FiniteGroup g = named_group(spec);
    const QupReport rep = weak_qup_witness(g);
    if (g.is_abelian()) {
      CHECK(rep.verdict == "NoWitness");
    } else {
      CHECK(rep.verdict == "weak-QUP fails");
      CHECK(*rep.measure < Rational(1));
    }
  }
}
