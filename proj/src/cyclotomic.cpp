#include "cgf/cyclotomic.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include <json.hpp>

namespace cgf {

namespace {

std::shared_mutex cache_mtx;
// std::map nodes are pointer-stable, so returned references stay valid while
// the cache only ever grows.
std::map<long, IntPoly>& cache() {
  static std::map<long, IntPoly> m;
  return m;
}

const IntPoly* lookup(long n) {
  std::shared_lock lock(cache_mtx);
  auto it = cache().find(n);
  return it == cache().end() ? nullptr : &it->second;
}

const IntPoly& insert(long n, IntPoly p) {
  std::unique_lock lock(cache_mtx);
  return cache().emplace(n, std::move(p)).first->second;
}

IntPoly compute_cyclo(long n) {
  // q^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Int> qn(n + 1, Int(0));
  qn[0] = -1;
  qn[n] = 1;
  IntPoly residue{std::move(qn)};
  for (long d : divisors(n)) {
    if (d == n) continue;
    auto quot = residue.divexact(cyclo(d));
    if (!quot) throw std::logic_error("cyclo: inexact division");
    residue = std::move(*quot);
  }
  return residue;
}

}  // namespace

const IntPoly& cyclo(long n) {
  if (n < 1) throw std::invalid_argument("cyclo: n must be >= 1");
  if (const IntPoly* hit = lookup(n)) return *hit;
  IntPoly p = compute_cyclo(n);
  return insert(n, std::move(p));
}

IntPoly q_int(long n) {
  if (n < 1) throw std::invalid_argument("q_int: n must be >= 1");
  return IntPoly(std::vector<Int>(n, Int(1)));
}

std::pair<std::vector<long>, std::vector<long>> cyclo_rational(long n) {
  if (n < 2) throw std::invalid_argument("cyclo_rational: n must be >= 2");
  std::vector<long> numer, denom;
  for (long d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 1) numer.push_back(d);
    if (mu == -1) denom.push_back(d);
  }
  return {numer, denom};
}

size_t cyclo_cache_size() {
  std::shared_lock lock(cache_mtx);
  return cache().size();
}

bool cyclo_cache_save(const std::string& path) {
  nlohmann::json j = nlohmann::json::object();
  {
    std::shared_lock lock(cache_mtx);
    for (const auto& [n, p] : cache()) {
      nlohmann::json coeffs = nlohmann::json::array();
      bool fits = true;
      for (const Int& ck : p.coeffs()) {
        if (ck > (std::numeric_limits<std::int64_t>::max)() ||
            ck < (std::numeric_limits<std::int64_t>::min)()) {
          fits = false;
          break;
        }
        coeffs.push_back(ck.convert_to<std::int64_t>());
      }
      if (fits) j[std::to_string(n)] = std::move(coeffs);
    }
  }
  std::ofstream out(path);
  if (!out) return false;
  out << j.dump() << '\n';
  return out.good();
}

bool cyclo_cache_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (!j.is_object()) return false;
  for (const auto& [key, coeffs] : j.items()) {
    long n;
    try {
      n = std::stol(key);
    } catch (const std::exception&) {
      return false;
    }
    if (n < 1 || !coeffs.is_array()) return false;
    std::vector<Int> c;
    for (const auto& v : coeffs) {
      if (!v.is_number_integer()) return false;
      c.emplace_back(v.get<std::int64_t>());
    }
    IntPoly p{std::move(c)};
    // Trust but verify: a corrupted entry would poison every computation
    // built on it, so check degree and the value at 1 before install.
    if (p.degree() != euler_phi(n)) return false;
    Int expected_at_one = 0;  // Phi_1(1) = 0
    if (n >= 2) {
      auto fac = factorize(n);
      expected_at_one = (fac.size() == 1) ? Int(fac[0].first) : Int(1);
    }
    if (p.value_at_one() != expected_at_one) return false;
    if (lookup(n) == nullptr) insert(n, std::move(p));
  }
  return true;
}

}  // namespace cgf
