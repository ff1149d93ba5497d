#include "cgf/families.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cgf {

namespace {

constexpr double kMaxStates = 1e7;

void check_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    if (lambda.parts[i] < 1)
      throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && lambda.parts[i] > lambda.parts[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

}  // namespace

long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

Partition Partition::conjugate() const {
  Partition conj;
  if (parts.empty()) return conj;
  for (long j = 1; j <= parts[0]; ++j) {
    long col = 0;
    for (long part : parts)
      if (part >= j) ++col;
    conj.parts.push_back(col);
  }
  return conj;
}

RationalForm qbinomial(long n, long k) {
  if (k < 0 || n < k) throw std::invalid_argument("qbinomial: need 0<=k<=n");
  RationalForm rf;
  for (long j = n - k + 1; j <= n; ++j) rf.numer.push_back(j);
  for (long j = 1; j <= k; ++j) rf.denom.push_back(j);
  return rf;
}

RationalForm qfactorial(long n) {
  if (n < 0) throw std::invalid_argument("qfactorial: n must be >= 0");
  RationalForm rf;
  for (long j = 1; j <= n; ++j) {
    rf.numer.push_back(j);
    rf.denom.push_back(1);
  }
  return rf;
}

RationalForm qmultinomial(const std::vector<long>& comp) {
  long total = 0;
  for (long c : comp) {
    if (c < 0) throw std::invalid_argument("qmultinomial: negative part");
    total += c;
  }
  RationalForm rf;
  for (long j = 1; j <= total; ++j) rf.numer.push_back(j);
  for (long c : comp)
    for (long j = 1; j <= c; ++j) rf.denom.push_back(j);
  while (rf.denom.size() < rf.numer.size()) rf.denom.push_back(1);
  return rf;
}

RationalForm qcatalan(long n) {
  if (n < 0) throw std::invalid_argument("qcatalan: n must be >= 0");
  RationalForm rf;
  for (long j = n + 2; j <= 2 * n; ++j) rf.numer.push_back(j);
  for (long j = 1; j <= n; ++j) rf.denom.push_back(j);
  while (rf.numer.size() < rf.denom.size()) rf.numer.push_back(1);
  return rf;
}

RationalForm macmahon_box(long x, long y, long z) {
  if (x < 1 || y < 1 || z < 1)
    throw std::invalid_argument("macmahon_box: sides must be >= 1");
  RationalForm rf;
  for (long i = 1; i <= x; ++i) {
    for (long j = 1; j <= y; ++j) {
      rf.numer.push_back(i + j + z - 1);
      rf.denom.push_back(i + j - 1);
    }
  }
  return rf;
}

std::vector<long> hook_lengths(const Partition& lambda) {
  check_partition(lambda);
  Partition conj = lambda.conjugate();
  std::vector<long> hooks;
  for (size_t i = 0; i < lambda.parts.size(); ++i)
    for (long j = 1; j <= lambda.parts[i]; ++j)
      hooks.push_back(lambda.parts[i] - j + conj.parts[j - 1] -
                      static_cast<long>(i) - 1 + 1);
  return hooks;
}

RationalForm hook_cgf(const Partition& lambda) {
  check_partition(lambda);
  if (lambda.parts.empty())
    throw std::invalid_argument("hook_cgf: partition must be nonempty");
  RationalForm rf;
  long n = lambda.size();
  for (long j = 1; j <= n; ++j) rf.numer.push_back(j);
  rf.denom = hook_lengths(lambda);
  for (size_t i = 0; i < lambda.parts.size(); ++i)
    rf.beta += static_cast<long>(i) * lambda.parts[i];
  return rf;
}

RationalForm family(const std::string& name, const std::vector<long>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("family " + name + ": expected " +
                                  std::to_string(n) + " parameters");
  };
  if (name == "qbinomial") {
    need(2);
    return qbinomial(params[0], params[1]);
  }
  if (name == "qfactorial") {
    need(1);
    return qfactorial(params[0]);
  }
  if (name == "qmultinomial") {
    if (params.empty())
      throw std::invalid_argument("family qmultinomial: needs parts");
    return qmultinomial(params);
  }
  if (name == "qcatalan") {
    need(1);
    return qcatalan(params[0]);
  }
  if (name == "macmahon") {
    need(3);
    return macmahon_box(params[0], params[1], params[2]);
  }
  if (name == "hook") {
    Partition lambda{params};
    return hook_cgf(lambda);
  }
  throw std::invalid_argument("family: unknown name " + name);
}

IntPoly oracle_plane_partitions(long x, long y, long z) {
  if (x < 0 || y < 0 || z < 0)
    throw std::invalid_argument("oracle_plane_partitions: sides must be >= 0");
  if (static_cast<double>(x) * y * std::log1p(z) > std::log(kMaxStates))
    throw std::invalid_argument("oracle_plane_partitions: state space too big");
  long cells = x * y;
  std::vector<long> entry(cells, 0);
  std::vector<Int> counts(x * y * z + 1, Int(0));
  std::function<void(long, long)> fill = [&](long cell, long weight) {
    if (cell == cells) {
      counts[weight] += 1;
      return;
    }
    long i = cell / y, j = cell % y;
    long cap = z;
    if (i > 0) cap = std::min(cap, entry[cell - y]);
    if (j > 0) cap = std::min(cap, entry[cell - 1]);
    for (long v = 0; v <= cap; ++v) {
      entry[cell] = v;
      fill(cell + 1, weight + v);
    }
  };
  fill(0, 0);
  return IntPoly(std::move(counts));
}

IntPoly oracle_syt_maj(const Partition& lambda) {
  check_partition(lambda);
  long n = lambda.size();
  // Tableau count from the hook length formula, to guard the search.
  {
    double logcount = 0;
    for (long j = 2; j <= n; ++j) logcount += std::log(j);
    for (long h : hook_lengths(lambda)) logcount -= std::log(h);
    if (logcount > std::log(kMaxStates))
      throw std::invalid_argument("oracle_syt_maj: too many tableaux");
  }
  long rows = static_cast<long>(lambda.parts.size());
  std::vector<long> fill_count(rows, 0);
  std::vector<long> row_of(n + 1, 0);
  long max_maj = n * (n - 1) / 2;
  std::vector<Int> counts(max_maj + 1, Int(0));
  std::function<void(long)> place = [&](long k) {
    if (k > n) {
      long maj = 0;
      for (long i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) maj += i;
      counts[maj] += 1;
      return;
    }
    for (long r = 0; r < rows; ++r) {
      if (fill_count[r] >= lambda.parts[r]) continue;
      if (r > 0 && fill_count[r - 1] <= fill_count[r]) continue;
      ++fill_count[r];
      row_of[k] = r;
      place(k + 1);
      --fill_count[r];
    }
  };
  if (n == 0) return IntPoly::one();
  place(1);
  return IntPoly(std::move(counts));
}

IntPoly oracle_box_partitions(long n, long k) {
  if (k < 0 || n < k)
    throw std::invalid_argument("oracle_box_partitions: need 0<=k<=n");
  long width = n - k;
  // Loose bound: each of the k parts ranges over 0..width.
  if (static_cast<double>(k) * std::log1p(width) > std::log(kMaxStates))
    throw std::invalid_argument("oracle_box_partitions: state space too big");
  std::vector<Int> counts(k * width + 1, Int(0));
  std::function<void(long, long, long)> walk = [&](long row, long cap,
                                                   long weight) {
    if (row == k) {
      counts[weight] += 1;
      return;
    }
    for (long v = 0; v <= cap; ++v) walk(row + 1, v, weight + v);
  };
  walk(0, width, 0);
  return IntPoly(std::move(counts));
}

}  // namespace cgf
