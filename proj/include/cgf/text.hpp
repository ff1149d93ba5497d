// Text grammar shared by the command-line tool and tests: comma-separated
// coefficient lists (low degree first), slash-separated rational forms,
// partitions, and the fixed-precision float/rational formatting rules.
#pragma once

#include <string>
#include <vector>

#include "cgf/families.hpp"
#include "cgf/forms.hpp"

namespace cgf {

// "1,1,3,4" -> 1 + q + 3q^2 + 4q^3. Negative coefficients allowed.
IntPoly parse_poly(const std::string& text);

// "4,4,15/2,3,5" -> numerator and denominator index multisets.
RationalForm parse_ratform(const std::string& text);

// "4,2,1" -> partition, validated weakly decreasing.
Partition parse_partition(const std::string& text);

std::vector<long> parse_long_list(const std::string& text);

// Comma-separated coefficients, low degree first; "0" for the zero poly.
std::string poly_to_string(const IntPoly& p);

// "6,5,5,4/3,2,2,1", elements printed in descending order.
std::string ratform_to_string(const RationalForm& rf);

// Exact rational as p/q, or just p when q == 1.
std::string rat_to_string(const Rat& r);

// 12 significant digits (%.12g).
std::string double_to_string(double x);

}  // namespace cgf
