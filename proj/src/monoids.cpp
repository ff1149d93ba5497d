#include "cgf/monoids.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <thread>

namespace cgf {

namespace {

constexpr std::uint8_t kPlusBit = 1;
constexpr std::uint8_t kUniBit = 2;
constexpr std::uint8_t kLccBit = 4;
constexpr std::uint8_t kGaleBit = 8;

std::string key_of(const IndexMultiset& ms) {
  std::string key;
  key.reserve(2 * ms.size());
  for (long v : ms) {
    if (v < 0 || v > 0xffff) throw std::logic_error("key_of: index too large");
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

bool gale_of_indices(const IndexMultiset& ms) {
  CycloForm form;
  form.indices = ms;
  RationalForm rf = cyclo_to_rational(form);
  std::vector<long> a = rf.numer, b = rf.denom;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Class bitmask of a product of cyclotomics with all indices >= 2.
std::uint8_t classify_indices(const IndexMultiset& ms) {
  IntPoly p = IntPoly::one();
  for (long n : ms) p *= cyclo(n);
  CoeffProfile prof = p.profile();
  if (!prof.nonnegative) return 0;
  std::uint8_t mask = kPlusBit;
  if (prof.unimodal) mask |= kUniBit;
  if (prof.log_concave_no_internal_zeros) mask |= kLccBit;
  if (gale_of_indices(ms)) mask |= kGaleBit;
  return mask;
}

// All multisets of indices >= 2 with total totient degree n, emitted in
// lexicographic order of the ascending index vectors.
std::vector<IndexMultiset> candidates(int n, const std::vector<long>& pool,
                                      const std::vector<long>& pool_phi) {
  std::vector<IndexMultiset> out;
  IndexMultiset current;
  std::function<void(long, size_t)> walk = [&](long budget, size_t pos) {
    if (budget == 0) {
      out.push_back(current);
      return;
    }
    for (size_t i = pos; i < pool.size(); ++i) {
      if (pool_phi[i] > budget) continue;
      current.push_back(pool[i]);
      walk(budget - pool_phi[i], i);
      current.pop_back();
    }
  };
  walk(n, 0);
  return out;
}

void parallel_for(size_t count, int threads,
                  const std::function<void(size_t)>& body) {
  if (threads <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<size_t> next{0};
  int n_workers = std::min<int>(threads, static_cast<int>(count));
  for (int w = 0; w < n_workers; ++w) {
    workers.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        body(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

const char* class_name(MonoidClass cls) {
  switch (cls) {
    case MonoidClass::PM:
      return "pm";
    case MonoidClass::PLUS:
      return "plus";
    case MonoidClass::UNI:
      return "uni";
    case MonoidClass::LCC:
      return "lcc";
    case MonoidClass::GALE:
      return "gale";
  }
  return "?";
}

MonoidClass class_from_name(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(c)));
  if (lower == "pm") return MonoidClass::PM;
  if (lower == "plus") return MonoidClass::PLUS;
  if (lower == "uni") return MonoidClass::UNI;
  if (lower == "lcc") return MonoidClass::LCC;
  if (lower == "gale") return MonoidClass::GALE;
  throw std::invalid_argument("unknown monoid class: " + name);
}

bool class_membership(const IndexMultiset& indices, MonoidClass cls) {
  for (long n : indices)
    if (n < 1) throw std::invalid_argument("class_membership: index < 1");
  if (cls == MonoidClass::PM) return true;
  for (long n : indices)
    if (n == 1) return false;  // Phi_1 factor forces f(1) = 0
  IndexMultiset sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::uint8_t mask = classify_indices(sorted);
  switch (cls) {
    case MonoidClass::PLUS:
      return mask & kPlusBit;
    case MonoidClass::UNI:
      return mask & kUniBit;
    case MonoidClass::LCC:
      return mask & kLccBit;
    case MonoidClass::GALE:
      return (mask & kPlusBit) && (mask & kGaleBit);
    default:
      return true;
  }
}

bool class_membership(const IntPoly& p, MonoidClass cls) {
  if (p.is_zero()) return false;
  if (cls == MonoidClass::PM) {
    // Monic with all roots on the unit circle: constant term +-1, and the
    // ascending cyclotomic division scan must exhaust the polynomial.
    if (p.coeff(p.degree()) != 1) return false;
    if (p.coeff(0) != 1 && p.coeff(0) != -1) return false;
    IntPoly residue = p;
    long n = 1;
    while (residue.degree() > 0) {
      long d = residue.degree();
      if (n > 2 * d * d) return false;
      if (n == 1 || euler_phi(n) <= d) {
        while (auto quot = residue.divexact(cyclo(n))) {
          residue = std::move(*quot);
          if (residue.degree() == 0) break;
        }
      }
      ++n;
    }
    return residue == IntPoly::one();
  }
  CgfCheckResult res = cgf_check(p);
  if (!res.is_cgf || res.form.alpha != 1 || res.form.beta != 0) return false;
  return class_membership(res.form.indices, cls);
}

MonoidTable::MonoidTable(int max_degree, int threads)
    : max_degree_(max_degree) {
  if (max_degree < 1)
    throw std::invalid_argument("MonoidTable: max_degree must be >= 1");
  elems_.resize(max_degree + 1);
  gens_.resize(max_degree + 1);
  build(threads);
}

bool MonoidTable::member(const IndexMultiset& ms, MonoidClass cls) const {
  if (cls == MonoidClass::PM) return true;
  for (long v : ms)
    if (v == 1) return false;
  auto it = mask_.find(key_of(ms));
  if (it == mask_.end())
    throw std::logic_error("MonoidTable::member: multiset outside table");
  switch (cls) {
    case MonoidClass::PLUS:
      return it->second & kPlusBit;
    case MonoidClass::UNI:
      return it->second & kUniBit;
    case MonoidClass::LCC:
      return it->second & kLccBit;
    case MonoidClass::GALE:
      return (it->second & kPlusBit) && (it->second & kGaleBit);
    default:
      return true;
  }
}

bool MonoidTable::is_generator(const IndexMultiset& ms, MonoidClass cls) const {
  // Group equal indices and walk every proper nonempty sub-multiset via a
  // mixed-radix odometer over per-value multiplicities.
  std::vector<std::pair<long, long>> groups;
  for (long v : ms) {
    if (!groups.empty() && groups.back().first == v)
      ++groups.back().second;
    else
      groups.emplace_back(v, 1);
  }
  std::vector<long> sub(groups.size(), 0);
  while (true) {
    size_t pos = 0;
    while (pos < groups.size() && sub[pos] == groups[pos].second)
      sub[pos++] = 0;
    if (pos == groups.size()) break;
    ++sub[pos];
    bool all = true, none = true;
    for (size_t i = 0; i < groups.size(); ++i) {
      if (sub[i] != groups[i].second) all = false;
      if (sub[i] != 0) none = false;
    }
    if (all || none) continue;
    IndexMultiset part, rest;
    for (size_t i = 0; i < groups.size(); ++i) {
      for (long j = 0; j < sub[i]; ++j) part.push_back(groups[i].first);
      for (long j = sub[i]; j < groups[i].second; ++j)
        rest.push_back(groups[i].first);
    }
    if (member(part, cls) && member(rest, cls)) return false;
  }
  return true;
}

void MonoidTable::build(int threads) {
  std::vector<long> pool, pool_phi;
  for (long m = 2; m <= 2L * max_degree_ * max_degree_; ++m) {
    long phi = euler_phi(m);
    if (phi <= max_degree_) {
      pool.push_back(m);
      pool_phi.push_back(phi);
    }
  }

  std::vector<std::vector<IndexMultiset>> base(max_degree_ + 1);
  for (int n = 1; n <= max_degree_; ++n) {
    std::vector<IndexMultiset> cand = candidates(n, pool, pool_phi);
    std::vector<std::uint8_t> masks(cand.size(), 0);
    parallel_for(cand.size(), threads,
                 [&](size_t i) { masks[i] = classify_indices(cand[i]); });
    for (size_t i = 0; i < cand.size(); ++i)
      mask_.emplace(key_of(cand[i]), masks[i]);
    base[n] = std::move(cand);
  }

  for (int n = 1; n <= max_degree_; ++n) {
    // PM at degree n: 1^j prepended to every index-(>=2) multiset of degree
    // n - j; descending j keeps the whole list lexicographic.
    auto& pm_elems = elems_[n][static_cast<int>(MonoidClass::PM)];
    for (int j = n; j >= 0; --j) {
      if (j == n) {
        pm_elems.push_back(IndexMultiset(n, 1));
        continue;
      }
      for (const IndexMultiset& ms : base[n - j]) {
        IndexMultiset full(j, 1);
        full.insert(full.end(), ms.begin(), ms.end());
        pm_elems.push_back(std::move(full));
      }
    }
    for (const IndexMultiset& ms : base[n]) {
      std::uint8_t mask = mask_.at(key_of(ms));
      if (mask & kPlusBit)
        elems_[n][static_cast<int>(MonoidClass::PLUS)].push_back(ms);
      if (mask & kUniBit)
        elems_[n][static_cast<int>(MonoidClass::UNI)].push_back(ms);
      if (mask & kLccBit)
        elems_[n][static_cast<int>(MonoidClass::LCC)].push_back(ms);
      if ((mask & kPlusBit) && (mask & kGaleBit))
        elems_[n][static_cast<int>(MonoidClass::GALE)].push_back(ms);
    }
  }

  for (int n = 1; n <= max_degree_; ++n) {
    for (int c = 0; c < 5; ++c) {
      const auto& elems = elems_[n][c];
      std::vector<std::uint8_t> is_gen(elems.size(), 0);
      parallel_for(elems.size(), threads, [&](size_t i) {
        is_gen[i] = is_generator(elems[i], static_cast<MonoidClass>(c));
      });
      for (size_t i = 0; i < elems.size(); ++i)
        if (is_gen[i]) gens_[n][c].push_back(elems[i]);
    }
  }
}

const std::vector<IndexMultiset>& MonoidTable::elements(MonoidClass cls,
                                                        int degree) const {
  if (degree < 1 || degree > max_degree_)
    throw std::invalid_argument("MonoidTable: degree out of range");
  return elems_[degree][static_cast<int>(cls)];
}

const std::vector<IndexMultiset>& MonoidTable::generators(MonoidClass cls,
                                                          int degree) const {
  if (degree < 1 || degree > max_degree_)
    throw std::invalid_argument("MonoidTable: degree out of range");
  return gens_[degree][static_cast<int>(cls)];
}

long MonoidTable::count(MonoidClass cls, int degree) const {
  return static_cast<long>(elements(cls, degree).size());
}

long MonoidTable::generator_count(MonoidClass cls, int degree) const {
  return static_cast<long>(generators(cls, degree).size());
}

std::vector<IndexMultiset> MonoidTable::non_gale_elements(int degree) const {
  std::vector<IndexMultiset> out;
  const auto& plus = elements(MonoidClass::PLUS, degree);
  const auto& gale = elements(MonoidClass::GALE, degree);
  size_t g = 0;
  for (const IndexMultiset& ms : plus) {
    if (g < gale.size() && gale[g] == ms) {
      ++g;
      continue;
    }
    out.push_back(ms);
  }
  return out;
}

std::vector<Int> pm_counts_via_gf(int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("pm_counts_via_gf: negative degree");
  std::vector<long> g(max_degree + 1, 0);
  for (long m = 1; m <= 2L * max_degree * max_degree && max_degree >= 1; ++m) {
    long phi = euler_phi(m);
    if (phi <= max_degree) ++g[phi];
  }
  std::vector<Int> series(max_degree + 1, Int(0));
  series[0] = 1;
  for (int v = 1; v <= max_degree; ++v)
    for (long rep = 0; rep < g[v]; ++rep)
      for (int k = v; k <= max_degree; ++k) series[k] += series[k - v];
  return series;
}

ConjectureReport conjecture_scan(const std::string& which, int max_degree,
                                 int threads) {
  ConjectureReport rep;
  rep.which = which;
  rep.max_degree = max_degree;
  MonoidTable table(max_degree, threads);
  if (which == "majorization") {
    for (int n = 1; n <= max_degree; ++n) {
      for (const IndexMultiset& ms : table.elements(MonoidClass::PLUS, n)) {
        CycloForm form;
        form.indices = ms;
        NecessaryReport nec = necessary_conditions(cyclo_to_rational(form));
        if (!nec.majorization_ok) rep.violations.push_back(ms);
      }
    }
    rep.holds = rep.violations.empty();
    return rep;
  }
  if (which == "uni_prime_factor") {
    for (int n = 1; n <= max_degree; ++n) {
      for (const IndexMultiset& ms : table.elements(MonoidClass::UNI, n)) {
        bool has_prime = false;
        for (long v : ms) {
          auto fac = factorize(v);
          if (fac.size() == 1 && fac[0].second == 1) has_prime = true;
        }
        if (!has_prime) rep.violations.push_back(ms);
      }
    }
    rep.holds = rep.violations.empty();
    return rep;
  }
  if (which == "nongale_count") {
    for (int n = 1; n <= max_degree; ++n)
      rep.degree_counts.emplace_back(
          n, table.count(MonoidClass::PLUS, n) -
                 table.count(MonoidClass::GALE, n));
    rep.holds = true;
    return rep;
  }
  throw std::invalid_argument("conjecture_scan: unknown conjecture " + which);
}

std::vector<std::vector<long>> cgf_graph_path(const std::vector<long>& B,
                                              const std::vector<long>& A,
                                              const std::vector<long>& A2) {
  std::vector<long> a = A, a2 = A2;
  while (a.size() < a2.size()) a.push_back(1);
  while (a2.size() < a.size()) a2.push_back(1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a2[i] < 1)
      throw std::invalid_argument("cgf_graph_path: elements must be >= 1");
    if (a[i] > 1000000 / a2[i])
      throw std::invalid_argument("cgf_graph_path: product too large");
  }

  auto is_cgf_vertex = [&B](const std::vector<long>& v) {
    RationalForm rf;
    rf.numer = v;
    rf.denom = B;
    return rational_to_poly(rf).status == ExpandStatus::Polynomial;
  };
  if (!is_cgf_vertex(a))
    throw std::invalid_argument("cgf_graph_path: A is not a vertex over B");
  if (!is_cgf_vertex(a2))
    throw std::invalid_argument("cgf_graph_path: A2 is not a vertex over B");

  std::vector<std::vector<long>> path{a};
  std::vector<long> cur = a;
  auto step = [&](size_t i, long value) {
    if (cur[i] == value) return;
    cur[i] = value;
    if (!is_cgf_vertex(cur))
      throw std::logic_error("cgf_graph_path: intermediate vertex failed");
    path.push_back(cur);
  };
  for (size_t i = 0; i < cur.size(); ++i) step(i, a[i] * a2[i]);
  for (size_t i = 0; i < cur.size(); ++i) step(i, a2[i]);
  return path;
}

}  // namespace cgf
