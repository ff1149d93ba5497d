#include "cgf/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "cgf/families.hpp"
#include "doctest.h"

namespace {

using cgf::Diagnostics;
using cgf::RationalForm;
using VL = std::vector<long>;

RationalForm ratform(VL numer, VL denom, long beta = 0) {
  RationalForm rf;
  rf.numer = std::move(numer);
  rf.denom = std::move(denom);
  rf.beta = beta;
  return rf;
}

TEST_SUITE("asymptotics") {

TEST_CASE("macmahon ratio fixtures") {
  CHECK(cgf::diaconis_diagnostics(cgf::macmahon_box(2, 1, 1)).ratio ==
        doctest::Approx(3.0 / 11.0).epsilon(1e-12));
  CHECK(cgf::diaconis_diagnostics(cgf::macmahon_box(2, 2, 1)).ratio ==
        doctest::Approx(7.0 / 17.0).epsilon(1e-12));
  CHECK(cgf::diaconis_diagnostics(cgf::macmahon_box(3, 2, 2)).ratio ==
        doctest::Approx(37.0 / 121.0).epsilon(1e-12));
  // The reduced representation of the same polynomial scores differently:
  // diagnostics are deliberately representation sensitive.
  CHECK(cgf::diaconis_diagnostics(ratform({6, 5, 5, 4}, {3, 2, 2, 1})).ratio ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("macmahon ratio follows the closed form") {
  for (long x = 1; x <= 4; ++x)
    for (long y = 1; y <= 4; ++y)
      for (long z = 1; z <= 4; ++z) {
        double g = (2.0 * x * x + 3.0 * x * y + 2.0 * y * y - 7.0) / 6.0;
        double want = g / (g + z * (x + y + z));
        Diagnostics d = cgf::diaconis_diagnostics(cgf::macmahon_box(x, y, z));
        CHECK(d.ratio == doctest::Approx(want).epsilon(1e-9));
      }
}

TEST_CASE("macmahon scale diagnostics") {
  Diagnostics d = cgf::diaconis_diagnostics(cgf::macmahon_box(3, 2, 2));
  CHECK(d.mu == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(d.sigma == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));
  // s2 = xyz(x+y+z) for the box, so ms_bound = (x+y+z-1)/sqrt(xyz(x+y+z)).
  for (long x = 1; x <= 4; ++x)
    for (long y = 1; y <= 4; ++y)
      for (long z = 1; z <= 4; ++z) {
        Diagnostics b = cgf::diaconis_diagnostics(cgf::macmahon_box(x, y, z));
        double want = (x + y + z - 1.0) /
                      std::sqrt(static_cast<double>(x * y * z) * (x + y + z));
        CHECK(b.ms_bound == doctest::Approx(want).epsilon(1e-9));
      }
}

TEST_CASE("std_k4 matches the exact cumulant ratio") {
  for (const RationalForm& rf :
       {cgf::qbinomial(10, 5), cgf::macmahon_box(3, 2, 2),
        ratform({6, 5, 5, 4}, {3, 2, 2, 1})}) {
    Diagnostics d = cgf::diaconis_diagnostics(rf);
    cgf::Rat k4 = cgf::cumulant(rf, 4);
    cgf::Rat v = cgf::cumulant(rf, 2);
    double want = cgf::Rat(k4 / (v * v)).convert_to<double>();
    CHECK(d.std_k4 == doctest::Approx(want).epsilon(1e-12));
    CHECK(d.std_k3 == 0.0);
  }
}

TEST_CASE("quartic and ratio ranges") {
  for (const RationalForm& rf :
       {cgf::qbinomial(8, 4), cgf::qfactorial(5), cgf::macmahon_box(2, 2, 2)}) {
    Diagnostics d = cgf::diaconis_diagnostics(rf);
    CHECK(d.ratio >= 0.0);
    CHECK(d.ratio < 1.0);
    CHECK(d.quartic >= 1.0);
  }
  CHECK_THROWS_AS(cgf::diaconis_diagnostics(ratform({1, 1}, {1})),
                  std::invalid_argument);
}

TEST_CASE("qbinomial scan trends") {
  std::vector<cgf::ScanPoint> points;
  for (long k : {5L, 10L, 20L, 40L})
    points.push_back({k, cgf::qbinomial(2 * k, k)});
  cgf::ScanReport rep = cgf::normality_scan(points);
  CHECK(rep.std_k4_decreasing);
  CHECK(rep.ratio_ok);
  double first = std::fabs(rep.table.front().second.std_k4);
  double last = std::fabs(rep.table.back().second.std_k4);
  CHECK(last < first / 4.0);
}

TEST_CASE("macmahon cubes are normal-consistent") {
  cgf::MultisetSeq seq;
  seq.label = "macmahon";
  for (long k : {2L, 4L, 8L})
    seq.points.push_back({k, cgf::macmahon_box(k, k, k)});
  cgf::ScanReport rep = cgf::normality_scan(seq);
  CHECK(rep.ratio_ok);
  CHECK(rep.quartic_increasing);
  CHECK(rep.quartic_min_ok);
  CHECK(rep.std_k4_decreasing);
  CHECK_FALSE(rep.eventually_constant);
  CHECK(rep.verdict == "normal-consistent");
}

TEST_CASE("constant family is inconclusive") {
  std::vector<cgf::ScanPoint> points;
  for (long k : {1L, 2L, 3L}) points.push_back({k, cgf::qfactorial(6)});
  cgf::ScanReport rep = cgf::normality_scan(points);
  CHECK(rep.eventually_constant);
  CHECK_FALSE(rep.std_k4_decreasing);
  CHECK(rep.verdict == "inconclusive");
}

TEST_CASE("scan preconditions") {
  std::vector<cgf::ScanPoint> two{{1, cgf::qfactorial(3)},
                                  {2, cgf::qfactorial(4)}};
  CHECK_THROWS_AS(cgf::normality_scan(two), std::invalid_argument);
  std::vector<cgf::ScanPoint> bad{{1, ratform({6}, {4})},
                                  {2, ratform({6}, {4})},
                                  {3, ratform({6}, {4})}};
  CHECK_THROWS_AS(cgf::normality_scan(bad), std::invalid_argument);
}

TEST_CASE("rescaled_multiset") {
  auto [single, inf_norm] = cgf::rescaled_multiset({7},
      std::numeric_limits<double>::infinity());
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(1.0));
  CHECK(inf_norm == doctest::Approx(7.0));

  auto [pair2, two_norm] = cgf::rescaled_multiset({3, 3}, 2.0);
  CHECK(two_norm == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pair2[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  long n = 1000;
  auto [hook, norm] = cgf::rescaled_multiset({n, n / 2}, 2.0);
  CHECK(hook[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(hook[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(norm == doctest::Approx(std::sqrt(1.25) * n).epsilon(1e-9));

  CHECK_THROWS_AS(cgf::rescaled_multiset({}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(cgf::rescaled_multiset({1}, 0.5), std::invalid_argument);
}

TEST_CASE("uniform_sum_cumulant") {
  CHECK(cgf::uniform_sum_cumulant({1.0}, 2) == doctest::Approx(1.0 / 12.0));
  CHECK(cgf::uniform_sum_cumulant({2.0, 2.0}, 2) == doctest::Approx(2.0 / 3.0));
  for (int k = 1; k <= 5; ++k) {
    std::vector<double> ones(k, 1.0);
    CHECK(cgf::uniform_sum_cumulant(ones, 4) ==
          doctest::Approx(-k / 120.0).epsilon(1e-12));
  }
  CHECK(cgf::uniform_sum_cumulant({1.0, 2.0}, 1) == 0.0);
  CHECK(cgf::uniform_sum_cumulant({1.0, 2.0}, 3) == 0.0);
}

TEST_CASE("uniform sum limits of rescaled q-integer products") {
  // kappa_d of prod [n t_i] / n^d approaches the uniform-sum cumulant.
  const std::vector<long> t{1, 2, 2};
  long n = 1000;
  RationalForm rf;
  for (long ti : t) {
    rf.numer.push_back(n * ti);
    rf.denom.push_back(1);
  }
  std::vector<double> td(t.begin(), t.end());
  for (int d = 2; d <= 6; d += 2) {
    double exact = cgf::Rat(cgf::cumulant(rf, d) /
                            cgf::Rat(cgf::int_pow(cgf::Int(n), d)))
                       .convert_to<double>();
    double limit = cgf::uniform_sum_cumulant(td, d);
    CHECK(std::fabs(exact - limit) <= 0.01 * std::fabs(limit));
  }
}

}  // TEST_SUITE

}  // namespace
