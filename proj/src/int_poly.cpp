#include "cgf/int_poly.hpp"

#include <stdexcept>

namespace cgf {

namespace {

void normalize(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  normalize(c_);
}

IntPoly IntPoly::constant(const Int& c) {
  if (c == 0) return IntPoly();
  return IntPoly(std::vector<Int>{c});
}

IntPoly IntPoly::monomial(long k, const Int& c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  if (c == 0) return IntPoly();
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(long k) const {
  static const Int zero(0);
  if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
  return c_[k];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      out[i + j] += c_[i] * rhs.c_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::optional<IntPoly> IntPoly::divexact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divexact: zero divisor");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Int> rem = c_;
  long dq = degree() - divisor.degree();
  std::vector<Int> quot(dq + 1, Int(0));
  const Int& lead = divisor.c_.back();
  for (long k = dq; k >= 0; --k) {
    Int top = rem[k + divisor.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    quot[k] = q;
    for (size_t j = 0; j < divisor.c_.size(); ++j)
      rem[k + j] -= q * divisor.c_[j];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::value_at_one() const {
  Int acc = 0;
  for (const Int& ck : c_) acc += ck;
  return acc;
}

IntPoly IntPoly::shifted(long k) const {
  if (is_zero()) return IntPoly();
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  std::vector<Int> out(c_.size() + k, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return IntPoly(std::move(out));
}

CoeffProfile IntPoly::profile() const {
  if (is_zero()) throw std::invalid_argument("profile: zero polynomial");
  CoeffProfile prof;
  long n = degree();

  prof.nonnegative = true;
  for (const Int& ck : c_)
    if (ck < 0) prof.nonnegative = false;

  prof.monic = (c_.back() == 1);

  prof.palindromic = true;
  for (long k = 0; k <= n; ++k)
    if (c_[k] != c_[n - k]) prof.palindromic = false;

  prof.unimodal = true;
  {
    long k = 0;
    while (k < n && c_[k] <= c_[k + 1]) ++k;
    while (k < n && c_[k] >= c_[k + 1]) ++k;
    if (k < n) prof.unimodal = false;
  }

  prof.zero_order = 0;
  while (c_[prof.zero_order] == 0) ++prof.zero_order;

  prof.log_concave_no_internal_zeros = true;
  for (long k = prof.zero_order; k <= n; ++k)
    if (c_[k] == 0) prof.log_concave_no_internal_zeros = false;
  if (prof.log_concave_no_internal_zeros) {
    for (long k = prof.zero_order + 1; k < n; ++k)
      if (c_[k] * c_[k] < c_[k - 1] * c_[k + 1])
        prof.log_concave_no_internal_zeros = false;
  }

  Int g = 0;
  for (const Int& ck : c_) g = boost::multiprecision::gcd(g, ck);
  prof.content = g;

  return prof;
}

}  // namespace cgf
