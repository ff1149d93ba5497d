// Exact cyclotomic polynomials Phi_n over Z, the q-integers [n]_q, and the
// Mobius-form numerator/denominator index multisets for a single Phi_n.
// Phi_n is computed by exact division of q^n - 1 by the product of Phi_d
// over proper divisors d, with a process-wide memo cache.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgf/int_poly.hpp"

namespace cgf {

// The n-th cyclotomic polynomial, n >= 1. Thread-safe memoized.
const IntPoly& cyclo(long n);

// [n]_q = 1 + q + ... + q^(n-1), n >= 1.
IntPoly q_int(long n);

// Index multisets (numer, denom) with Phi_n = prod [d]^(mu(n/d)) over d | n,
// split by the sign of mu(n/d). Requires n >= 2 (Phi_1 has no such form
// with nonnegative exponents on both sides alone; it is [1] shifted).
std::pair<std::vector<long>, std::vector<long>> cyclo_rational(long n);

size_t cyclo_cache_size();

// Optional persistence of the memo cache as a JSON file mapping n to the
// coefficient vector of Phi_n. Both return false on I/O or format trouble
// and leave the cache usable.
bool cyclo_cache_save(const std::string& path);
bool cyclo_cache_load(const std::string& path);

}  // namespace cgf
