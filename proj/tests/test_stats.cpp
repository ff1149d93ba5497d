#include "cgf/stats.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cgf/families.hpp"
#include "doctest.h"

namespace {

using cgf::CycloForm;
using cgf::Int;
using cgf::IntPoly;
using cgf::Rat;
using cgf::RationalForm;
using VL = std::vector<long>;

RationalForm ratform(VL numer, VL denom, long beta = 0) {
  RationalForm rf;
  rf.numer = std::move(numer);
  rf.denom = std::move(denom);
  rf.beta = beta;
  return rf;
}

// The moment identities are formal algebra over the expansion, so negative
// coefficients are fine here; only true non-polynomials are excluded.
IntPoly expand(const RationalForm& rf) {
  auto res = cgf::rational_to_poly(rf);
  REQUIRE(res.status != cgf::ExpandStatus::NotPolynomial);
  return res.poly;
}

const RationalForm kMacMahon = ratform({6, 5, 5, 4}, {3, 2, 2, 1});

TEST_SUITE("stats") {

TEST_CASE("cumulant fixtures") {
  RationalForm two = ratform({2}, {1});
  CHECK(cgf::cumulant(two, 1) == Rat(1, 2));
  CHECK(cgf::cumulant(two, 2) == Rat(1, 4));
  CHECK(cgf::cumulant(two, 3) == Rat(0));
  CHECK(cgf::cumulant(two, 4) == Rat(-1, 8));

  CHECK(cgf::cumulant(kMacMahon, 1) == Rat(6));
  CHECK(cgf::cumulant(kMacMahon, 2) == Rat(7));

  CHECK(cgf::mean(kMacMahon) == Rat(6));
  CHECK(cgf::variance(kMacMahon) == Rat(7));
}

TEST_CASE("cumulants are representation independent") {
  // [2] as {2}/{} and as {2}/{1} describe the same polynomial.
  RationalForm bare = ratform({2}, {});
  RationalForm padded = ratform({2}, {1});
  for (int d = 1; d <= 10; ++d)
    CHECK(cgf::cumulant(bare, d) == cgf::cumulant(padded, d));
  // An unreduced representation with extra matched elements.
  RationalForm redundant = ratform({2, 7}, {7, 1});
  for (int d = 1; d <= 10; ++d)
    CHECK(cgf::cumulant(redundant, d) == cgf::cumulant(padded, d));
}

TEST_CASE("beta shifts the mean only, alpha nothing") {
  RationalForm shifted = ratform({6, 5, 5, 4}, {3, 2, 2, 1}, 5);
  CHECK(cgf::cumulant(shifted, 1) == Rat(11));
  for (int d = 2; d <= 8; ++d)
    CHECK(cgf::cumulant(shifted, d) == cgf::cumulant(kMacMahon, d));
  RationalForm scaled = kMacMahon;
  scaled.alpha = 9;
  for (int d = 1; d <= 8; ++d)
    CHECK(cgf::cumulant(scaled, d) == cgf::cumulant(kMacMahon, d));
}

TEST_CASE("odd cumulants vanish, even ones alternate") {
  for (int d = 3; d <= 11; d += 2) CHECK(cgf::cumulant(kMacMahon, d) == Rat(0));
  for (int d = 1; d <= 5; ++d) {
    Rat k = cgf::cumulant(kMacMahon, 2 * d);
    CHECK((d % 2 == 1 ? k >= 0 : k <= 0));
  }
}

TEST_CASE("cumulants add over products") {
  RationalForm f = ratform({4, 3}, {2, 1}, 1);
  RationalForm g = ratform({6, 5}, {3, 2}, 2);
  RationalForm fg = ratform({4, 3, 6, 5}, {2, 1, 3, 2}, 3);
  for (int d = 1; d <= 10; ++d)
    CHECK(cgf::cumulant(fg, d) == cgf::cumulant(f, d) + cgf::cumulant(g, d));
}

TEST_CASE("cyclo_cumulant") {
  for (long p : {2L, 3L, 5L, 7L})
    CHECK(cgf::cyclo_cumulant(p, 1) == Rat(p - 1, 2));
  CHECK(cgf::cyclo_cumulant(4, 2) == Rat(1));
  CHECK(cgf::cyclo_cumulant(6, 2) == Rat(2));
  CHECK_THROWS_AS(cgf::cyclo_cumulant(1, 2), std::invalid_argument);

  // Cross-check against the rational-form cumulants of a single Phi_n.
  for (long n = 2; n <= 40; ++n) {
    CycloForm f;
    f.indices = {n};
    RationalForm rf = cgf::cyclo_to_rational(f);
    for (int d = 1; d <= 8; ++d)
      CHECK(cgf::cyclo_cumulant(n, d) == cgf::cumulant(rf, d));
  }
}

TEST_CASE("moment fixtures") {
  CHECK(cgf::moment(kMacMahon, 1) == Rat(6));
  CHECK(cgf::moment(kMacMahon, 2) == Rat(43));
  RationalForm two = ratform({2}, {1});
  CHECK(cgf::central_moment(two, 4) == Rat(1, 16));
  CHECK(cgf::moment(two, 0) == Rat(1));
}

TEST_CASE("moment oracles") {
  CHECK(cgf::moment_oracle(expand(kMacMahon), 1) == Rat(6));
  CHECK(cgf::moment_oracle(expand(ratform({2}, {1})), 2) == Rat(1, 2));
  IntPoly phi4(std::vector<Int>{1, 0, 1});
  CHECK(cgf::moment_oracle(phi4, 2) == Rat(2));
}

TEST_CASE("moments match oracle on assorted forms") {
  std::vector<RationalForm> forms{
      kMacMahon,
      ratform({2}, {1}),
      ratform({4, 3}, {2, 1}, 3),
      cgf::hook_cgf(cgf::Partition{{2, 1}}),
      cgf::hook_cgf(cgf::Partition{{3, 2}}),
      cgf::qfactorial(4),
      cgf::qbinomial(6, 2),
  };
  std::mt19937 rng(4242);
  const VL pool{2, 3, 4, 5, 6, 8, 9, 10, 12};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<long> beta_dist(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    CycloForm f;
    int k = count_dist(rng);
    for (int i = 0; i < k; ++i) f.indices.push_back(pool[pick(rng)]);
    RationalForm rf = cgf::cyclo_to_rational(f);
    rf.beta = beta_dist(rng);
    forms.push_back(rf);
  }
  for (const RationalForm& rf : forms) {
    IntPoly p = expand(rf);
    for (int d = 0; d <= 8; ++d) {
      CHECK(cgf::moment(rf, d) == cgf::moment_oracle(p, d));
      CHECK(cgf::central_moment(rf, d) == cgf::central_moment_oracle(p, d));
    }
  }
}

TEST_CASE("charfun basics") {
  IntPoly mac = expand(kMacMahon);
  CHECK(std::abs(cgf::charfun_eval(mac, 0.0) - std::complex<double>(1, 0)) <
        1e-15);
  for (double t = -3.0; t <= 3.0; t += 0.37) {
    CHECK(std::abs(cgf::charfun_eval(mac, t)) <= 1.0 + 1e-12);
    CHECK(std::abs(cgf::charfun_eval(mac, t, true)) <= 1.0 + 1e-12);
    // Conjugate symmetry: phi(-t) = conj(phi(t)).
    std::complex<double> a = cgf::charfun_eval(mac, t);
    std::complex<double> b = std::conj(cgf::charfun_eval(mac, -t));
    CHECK(std::abs(a - b) < 1e-12);
  }
}

TEST_CASE("charfun standardized [2] is cosine") {
  IntPoly two = expand(ratform({2}, {1}));
  for (double t = -2.0; t <= 2.0; t += 0.23) {
    std::complex<double> phi = cgf::charfun_eval(two, t, true);
    CHECK(phi.real() == doctest::Approx(std::cos(t)).epsilon(1e-12));
    CHECK(std::fabs(phi.imag()) < 1e-12);
  }
}

TEST_CASE("charfun of [n] vanishes at 2 pi / n") {
  for (long n : {3L, 5L, 8L}) {
    IntPoly p = expand(ratform({n}, {1}));
    double t = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
    CHECK(std::abs(cgf::charfun_eval(p, t)) < 1e-12);
  }
}

TEST_CASE("charfun_eval agrees with the sinc product") {
  std::vector<RationalForm> forms{kMacMahon, ratform({4, 3}, {2, 1}),
                                  ratform({2}, {1}, 1),
                                  cgf::qbinomial(6, 3)};
  for (const RationalForm& rf : forms) {
    IntPoly p = expand(rf);
    for (double t : {0.1, 0.3, 0.7, 1.1, 1.5}) {
      std::complex<double> direct = cgf::charfun_eval(p, t);
      std::complex<double> sinc = cgf::charfun_sinc(rf, t);
      CHECK(std::abs(direct - sinc) < 1e-9);
    }
  }
  CHECK(std::abs(cgf::charfun_sinc(kMacMahon, 0.0) -
                 std::complex<double>(1, 0)) < 1e-15);
}

TEST_CASE("log charfun coefficients") {
  auto coeffs = cgf::log_charfun_coeffs(ratform({2}, {1}), 4);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0].two_d == 2);
  CHECK(coeffs[0].kappa == Rat(1, 4));
  CHECK(coeffs[0].sigma_pow == Rat(1, 4));
  CHECK(coeffs[0].signed_coeff == Rat(-1));
  CHECK(coeffs[0].standardized == doctest::Approx(1.0));
  CHECK(coeffs[1].two_d == 4);
  CHECK(coeffs[1].kappa == Rat(-1, 8));
  CHECK(coeffs[1].sigma_pow == Rat(1, 16));
  CHECK(coeffs[1].signed_coeff == Rat(-2));
  CHECK(coeffs[1].standardized == doctest::Approx(-2.0));

  CHECK_THROWS_AS(cgf::log_charfun_coeffs(ratform({1}, {1}), 4),
                  std::invalid_argument);
}

TEST_CASE("power_sum_delta") {
  CHECK(cgf::power_sum_delta(kMacMahon, 2) == Int(84));
  CHECK(cgf::power_sum_delta(ratform({2}, {1}), 4) == Int(15));
}

}  // TEST_SUITE

}  // namespace
