// Exhaustive enumeration of the monoids of cyclotomic products by degree:
// all products of cyclotomic polynomials (PM), those with nonnegative
// coefficients (PLUS), the unimodal (UNI) and log-concave (LCC) ones, and
// those whose reduced rational form is pointwise dominated (GALE). Includes
// irreducible-element (generator) detection, conjecture scans over the
// enumerated tables, and multiplicative paths in the numerator graph.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgf/forms.hpp"

namespace cgf {

enum class MonoidClass { PM = 0, PLUS = 1, UNI = 2, LCC = 3, GALE = 4 };

const char* class_name(MonoidClass cls);
// Accepts pm, plus, uni, lcc, gale (case-insensitive); throws otherwise.
MonoidClass class_from_name(const std::string& name);

// Index multiset of a product of cyclotomics, sorted ascending.
using IndexMultiset = std::vector<long>;

// Class membership for an explicit product of cyclotomics given by its
// index multiset (any index >= 1).
bool class_membership(const IndexMultiset& indices, MonoidClass cls);

// Class membership for an expanded polynomial: factors p over the
// cyclotomics first (monic, constant term +-1 required for PM; a CGF with
// alpha = 1, beta = 0 for the others).
bool class_membership(const IntPoly& p, MonoidClass cls);

// Degree-by-degree tables of elements and generators for every class,
// built once up to max_degree. Elements are listed in lexicographic order
// of their ascending index multisets. A generator is an element with no
// factorization into two proper sub-multisets that both lie in the class.
class MonoidTable {
 public:
  explicit MonoidTable(int max_degree, int threads = 1);

  int max_degree() const { return max_degree_; }
  const std::vector<IndexMultiset>& elements(MonoidClass cls, int degree) const;
  const std::vector<IndexMultiset>& generators(MonoidClass cls,
                                               int degree) const;
  long count(MonoidClass cls, int degree) const;
  long generator_count(MonoidClass cls, int degree) const;
  // Elements of PLUS at this degree that are not in GALE.
  std::vector<IndexMultiset> non_gale_elements(int degree) const;

 private:
  void build(int threads);
  bool member(const IndexMultiset& ms, MonoidClass cls) const;
  bool is_generator(const IndexMultiset& ms, MonoidClass cls) const;

  int max_degree_;
  // [degree][class] element and generator lists; degree index from 1.
  std::vector<std::array<std::vector<IndexMultiset>, 5>> elems_;
  std::vector<std::array<std::vector<IndexMultiset>, 5>> gens_;
  // Class bitmask per enumerated multiset with all indices >= 2.
  std::unordered_map<std::string, std::uint8_t> mask_;
};

// Independent count of PM by degree via the Euler product
// prod_v (1 - x^v)^(-g_v) with g_v = #{m >= 1 : phi(m) = v}; index 0 of the
// result is the unit. Used as a structural cross-check on the enumerator.
std::vector<Int> pm_counts_via_gf(int max_degree);

struct ConjectureReport {
  std::string which;
  int max_degree = 0;
  bool holds = true;
  std::vector<IndexMultiset> violations;
  // For nongale_count: (degree, #PLUS - #GALE).
  std::vector<std::pair<int, long>> degree_counts;
};

// which is one of:
//   majorization    - every PLUS element's reduced form passes two-sided
//                     sorted prefix-sum domination
//   uni_prime_factor - every UNI element has at least one prime index
//   nongale_count   - tabulate #(PLUS \ GALE) per degree
ConjectureReport conjecture_scan(const std::string& which, int max_degree,
                                 int threads = 1);

// Multiplicative path between numerator multisets A and A2 in the graph of
// CGF numerators over fixed denominator B: climb from A to the elementwise
// product H (replacing one position at a time, left to right), then descend
// to A2. Every intermediate vertex V is verified to make [V]/[B] a CGF;
// endpoint failures throw std::invalid_argument, intermediate failures
// (which the path construction rules out mathematically) std::logic_error.
std::vector<std::vector<long>> cgf_graph_path(const std::vector<long>& B,
                                              const std::vector<long>& A,
                                              const std::vector<long>& A2);

}  // namespace cgf
