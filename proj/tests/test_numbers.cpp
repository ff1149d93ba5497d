#include "cgf/numbers.hpp"

#include <numeric>

#include "doctest.h"

namespace {

using cgf::Int;
using cgf::Rat;

long brute_phi(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

Int brute_jordan(int d, long n) {
  // J_d(n) = sum over divisors d' of n of mu(n/d') d'^d.
  Int s = 0;
  for (long dv : cgf::divisors(n))
    s += Int(cgf::mobius(n / dv)) * cgf::int_pow(Int(dv), d);
  return s;
}

TEST_SUITE("numbers") {

TEST_CASE("factorize fixtures") {
  CHECK(cgf::factorize(1).empty());
  std::vector<std::pair<long, int>> f12{{2, 2}, {3, 1}};
  CHECK(cgf::factorize(12) == f12);
  std::vector<std::pair<long, int>> f97{{97, 1}};
  CHECK(cgf::factorize(97) == f97);
  std::vector<std::pair<long, int>> f360{{2, 3}, {3, 2}, {5, 1}};
  CHECK(cgf::factorize(360) == f360);
}

TEST_CASE("divisors sorted") {
  std::vector<long> d12{1, 2, 3, 4, 6, 12};
  CHECK(cgf::divisors(12) == d12);
  std::vector<long> d1{1};
  CHECK(cgf::divisors(1) == d1);
}

TEST_CASE("euler_phi matches gcd count") {
  for (long n = 1; n <= 200; ++n) CHECK(cgf::euler_phi(n) == brute_phi(n));
  CHECK(cgf::euler_phi(105) == 48);
}

TEST_CASE("mobius values and divisor sum") {
  CHECK(cgf::mobius(1) == 1);
  CHECK(cgf::mobius(2) == -1);
  CHECK(cgf::mobius(4) == 0);
  CHECK(cgf::mobius(6) == 1);
  CHECK(cgf::mobius(30) == -1);
  for (long n = 1; n <= 200; ++n) {
    long s = 0;
    for (long d : cgf::divisors(n)) s += cgf::mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("jordan totient") {
  CHECK(cgf::jordan_totient(2, 6) == 24);
  for (long n = 1; n <= 60; ++n) {
    CHECK(cgf::jordan_totient(1, n) == Int(cgf::euler_phi(n)));
    for (int d = 1; d <= 4; ++d)
      CHECK(cgf::jordan_totient(d, n) == brute_jordan(d, n));
  }
}

TEST_CASE("bernoulli values") {
  CHECK(cgf::bernoulli(0) == Rat(1));
  CHECK(cgf::bernoulli(1) == Rat(1, 2));
  CHECK(cgf::bernoulli(2) == Rat(1, 6));
  CHECK(cgf::bernoulli(3) == Rat(0));
  CHECK(cgf::bernoulli(4) == Rat(-1, 30));
  CHECK(cgf::bernoulli(6) == Rat(1, 42));
  CHECK(cgf::bernoulli(8) == Rat(-1, 30));
  CHECK(cgf::bernoulli(12) == Rat(-691, 2730));
  for (int d = 3; d <= 29; d += 2) CHECK(cgf::bernoulli(d) == Rat(0));
  // Even Bernoulli numbers alternate in sign.
  for (int d = 1; d <= 15; ++d) {
    Rat b = cgf::bernoulli(2 * d);
    CHECK((d % 2 == 1 ? b > 0 : b < 0));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(cgf::factorial(0) == 1);
  CHECK(cgf::factorial(5) == 120);
  CHECK(cgf::binomial(Int(10), 3) == 120);
  CHECK(cgf::binomial(Int(10), 0) == 1);
  CHECK(cgf::binomial(Int(3), 5) == 0);
  // Generalized upper argument, used for negative-multiplicity expansions.
  CHECK(cgf::binomial(Int(-1), 3) == -1);
  CHECK(cgf::binomial(Int(-2), 2) == 3);
}

TEST_CASE("int_pow") {
  CHECK(cgf::int_pow(Int(2), 10) == 1024);
  CHECK(cgf::int_pow(Int(0), 0) == 1);
  CHECK(cgf::int_pow(Int(7), 1) == 7);
}

TEST_CASE("nt_profile") {
  cgf::NTProfile p = cgf::nt_profile(12, 4);
  CHECK(p.n == 12);
  CHECK(p.phi == 4);
  CHECK(p.mu == 0);
  REQUIRE(p.jordan.size() == 4);
  CHECK(p.jordan.at(2) == cgf::jordan_totient(2, 12));
}

}  // TEST_SUITE

}  // namespace
