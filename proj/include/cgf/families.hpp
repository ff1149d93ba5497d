// Named CGF families in rational form (possibly unreduced, exactly as the
// classical product formulas present them) and independent brute-force
// oracles that recount the same generating functions object by object.
#pragma once

#include <string>
#include <vector>

#include "cgf/forms.hpp"

namespace cgf {

// Integer partition, parts weakly decreasing and positive.
struct Partition {
  std::vector<long> parts;
  long size() const;         // sum of parts
  Partition conjugate() const;
};

// Gaussian binomial [n choose k]_q = ({n-k+1..n}, {1..k}).
RationalForm qbinomial(long n, long k);

// [n]_q! = ({1..n}, {1 repeated n times}).
RationalForm qfactorial(long n);

// [c_1 + ... + c_r choose c_1, ..., c_r]_q.
RationalForm qmultinomial(const std::vector<long>& comp);

// q-Catalan [2n]!/([n]! [n+1]!) = ({n+2..2n}, {1..n}).
RationalForm qcatalan(long n);

// MacMahon box product prod_{i<=x, j<=y} [i+j+z-1]/[i+j-1], unreduced.
RationalForm macmahon_box(long x, long y, long z);

// q-hook-length form q^b(lambda) * [n]! / prod_cells [hook], with
// b(lambda) = sum (i-1) lambda_i; generating function of the major index
// over standard Young tableaux of shape lambda.
RationalForm hook_cgf(const Partition& lambda);

// Hook lengths of lambda, row-major order.
std::vector<long> hook_lengths(const Partition& lambda);

// Dispatcher by family name for the CLI: qbinomial, qfactorial,
// qmultinomial, qcatalan, macmahon, hook.
RationalForm family(const std::string& name, const std::vector<long>& params);

// Brute-force counting oracles. Each enumerates objects directly and
// returns the generating polynomial; each rejects inputs whose state-space
// estimate exceeds ten million.

// Plane partitions in an x * y * z box, weight = number of boxes.
IntPoly oracle_plane_partitions(long x, long y, long z);

// Standard Young tableaux of shape lambda, weight = major index.
IntPoly oracle_syt_maj(const Partition& lambda);

// Partitions inside a k * (n-k) box, weight = size.
IntPoly oracle_box_partitions(long n, long k);

}  // namespace cgf
