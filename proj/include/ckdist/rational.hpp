#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ckdist {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parses "p", "-p", "p/q" with q > 0 after sign normalization.
Rat parse_rational(std::string_view text);

// Inverse of parse_rational: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rat& r);

// floor(r) as an integer.
Int rat_floor(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace ckdist
