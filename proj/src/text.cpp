#include "cgf/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cgf {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

long parse_long(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty number in list");
  size_t consumed = 0;
  long value;
  try {
    value = std::stol(token, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number: " + token);
  }
  if (consumed != token.size())
    throw std::invalid_argument("bad number: " + token);
  return value;
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  std::vector<Int> coeffs;
  for (const std::string& token : split(text, ',')) {
    if (token.empty()) throw std::invalid_argument("empty coefficient");
    try {
      coeffs.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient: " + token);
    }
  }
  return IntPoly(std::move(coeffs));
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& token : split(text, ','))
    out.push_back(parse_long(token));
  return out;
}

RationalForm parse_ratform(const std::string& text) {
  auto slash = text.find('/');
  RationalForm rf;
  if (slash == std::string::npos) {
    rf.numer = parse_long_list(text);
  } else {
    std::string numer = text.substr(0, slash);
    std::string denom = text.substr(slash + 1);
    if (denom.find('/') != std::string::npos)
      throw std::invalid_argument("ratform: more than one '/'");
    rf.numer = parse_long_list(numer);
    if (!denom.empty()) rf.denom = parse_long_list(denom);
  }
  for (long a : rf.numer)
    if (a < 1) throw std::invalid_argument("ratform: elements must be >= 1");
  for (long b : rf.denom)
    if (b < 1) throw std::invalid_argument("ratform: elements must be >= 1");
  return rf;
}

Partition parse_partition(const std::string& text) {
  Partition lambda;
  if (!text.empty()) lambda.parts = parse_long_list(text);
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    if (lambda.parts[i] < 1)
      throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && lambda.parts[i] > lambda.parts[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
  return lambda;
}

std::string poly_to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  for (long k = 0; k <= p.degree(); ++k) {
    if (k) out << ',';
    out << p.coeff(k);
  }
  return out.str();
}

std::string ratform_to_string(const RationalForm& rf) {
  std::vector<long> numer = rf.numer, denom = rf.denom;
  std::sort(numer.rbegin(), numer.rend());
  std::sort(denom.rbegin(), denom.rend());
  std::ostringstream out;
  for (size_t i = 0; i < numer.size(); ++i) {
    if (i) out << ',';
    out << numer[i];
  }
  out << '/';
  for (size_t i = 0; i < denom.size(); ++i) {
    if (i) out << ',';
    out << denom[i];
  }
  return out.str();
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    out << '/' << boost::multiprecision::denominator(r);
  return out.str();
}

std::string double_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

}  // namespace cgf
