#include "cgf/cyclotomic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <thread>
#include <vector>

#include "doctest.h"

namespace {

using cgf::Int;
using cgf::IntPoly;

IntPoly poly(std::vector<long> cs) {
  std::vector<Int> v(cs.begin(), cs.end());
  return IntPoly(v);
}

IntPoly q_pow_minus_one(long n) {
  IntPoly p = IntPoly::monomial(n);
  return p - IntPoly::one();
}

TEST_SUITE("cyclotomic") {

TEST_CASE("small fixtures") {
  CHECK(cgf::cyclo(1) == poly({-1, 1}));
  CHECK(cgf::cyclo(2) == poly({1, 1}));
  CHECK(cgf::cyclo(3) == poly({1, 1, 1}));
  CHECK(cgf::cyclo(4) == poly({1, 0, 1}));
  CHECK(cgf::cyclo(6) == poly({1, -1, 1}));
  CHECK(cgf::cyclo(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("degree equals totient") {
  for (long n = 1; n <= 300; ++n)
    CHECK(cgf::cyclo(n).degree() == cgf::euler_phi(n));
}

TEST_CASE("product over divisors") {
  for (long n = 1; n <= 200; ++n) {
    IntPoly prod = IntPoly::one();
    for (long d : cgf::divisors(n)) prod = prod * cgf::cyclo(d);
    CHECK(prod == q_pow_minus_one(n));
  }
}

TEST_CASE("prime power substitution") {
  // Phi_{p^k}(q) = Phi_p(q^{p^{k-1}}).
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long pk = p * p; pk <= 128; pk *= p) {
      long step = pk / p;
      const IntPoly& base = cgf::cyclo(p);
      IntPoly subst;
      for (long i = 0; i <= base.degree(); ++i)
        subst = subst + IntPoly::monomial(i * step, base.coeff(i));
      CHECK(cgf::cyclo(pk) == subst);
    }
  }
}

TEST_CASE("value at one") {
  CHECK(cgf::cyclo(1).value_at_one() == 0);
  for (long n = 2; n <= 200; ++n) {
    auto factors = cgf::factorize(n);
    Int expected = factors.size() == 1 ? Int(factors[0].first) : Int(1);
    CHECK(cgf::cyclo(n).value_at_one() == expected);
  }
}

TEST_CASE("coefficient minus two appears at 105") {
  const IntPoly& p = cgf::cyclo(105);
  bool has_minus_two = false;
  for (long i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) == -2) has_minus_two = true;
  CHECK(has_minus_two);
}

TEST_CASE("q-integer factorization") {
  for (long n = 1; n <= 60; ++n) {
    IntPoly prod = IntPoly::one();
    for (long d : cgf::divisors(n))
      if (d > 1) prod = prod * cgf::cyclo(d);
    CHECK(prod == IntPoly(std::vector<Int>(n, Int(1))));
    CHECK(cgf::q_int(n) == prod);
  }
}

TEST_CASE("cyclo_rational fixtures") {
  using VL = std::vector<long>;
  for (long p : {2L, 3L, 5L, 13L}) {
    auto [num, den] = cgf::cyclo_rational(p);
    CHECK(num == VL{p});
    CHECK(den == VL{1});
  }
  {
    auto [num, den] = cgf::cyclo_rational(4);
    CHECK(num == VL{4});
    CHECK(den == VL{2});
  }
  {
    auto [num, den] = cgf::cyclo_rational(6);
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    CHECK(num == VL{1, 6});
    CHECK(den == VL{2, 3});
  }
  {
    auto [num, den] = cgf::cyclo_rational(12);
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    CHECK(num == VL{2, 12});
    CHECK(den == VL{4, 6});
  }
  CHECK_THROWS_AS(cgf::cyclo_rational(1), std::invalid_argument);
}

TEST_CASE("moebius identity cross multiplied") {
  // Phi_n(q) * prod_{mu(n/d)=-1} (q^d - 1) = prod_{mu(n/d)=+1} (q^d - 1).
  for (long n = 2; n <= 60; ++n) {
    IntPoly lhs = cgf::cyclo(n);
    IntPoly rhs = IntPoly::one();
    for (long d : cgf::divisors(n)) {
      int mu = cgf::mobius(n / d);
      if (mu == 1)
        rhs = rhs * q_pow_minus_one(d);
      else if (mu == -1)
        lhs = lhs * q_pow_minus_one(d);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cache save and load") {
  cgf::cyclo(30);
  const std::string path = "cyclo_cache_test.json";
  CHECK(cgf::cyclo_cache_save(path));
  CHECK(cgf::cyclo_cache_load(path));
  CHECK(cgf::cyclo_cache_size() >= 8);

  std::ofstream bad("cyclo_cache_corrupt.json");
  bad << "this is not json";
  bad.close();
  CHECK_FALSE(cgf::cyclo_cache_load("cyclo_cache_corrupt.json"));
  CHECK_FALSE(cgf::cyclo_cache_load("no_such_file_cyclo.json"));
  std::remove(path.c_str());
  std::remove("cyclo_cache_corrupt.json");
}

TEST_CASE("concurrent access") {
  std::vector<long> ns;
  for (long n = 1; n <= 150; ++n) ns.push_back(n);
  std::mt19937 rng(7);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    std::vector<long> order = ns;
    std::shuffle(order.begin(), order.end(), rng);
    workers.emplace_back([order] {
      for (long n : order) {
        const IntPoly& p = cgf::cyclo(n);
        if (p.degree() != cgf::euler_phi(n)) std::abort();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (long n = 1; n <= 150; ++n)
    CHECK(cgf::cyclo(n).degree() == cgf::euler_phi(n));
}

}  // TEST_SUITE

}  // namespace
