#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/error.hpp"

namespace diffset {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor(num / den) for den > 0
Int floor_div(const Int& num, const Int& den);
Int ceil_div(const Int& num, const Int& den);

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(rat_num(r), rat_den(r)); }

Int int_pow(Int base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

// largest x >= 0 with x^e <= value (value >= 0, e >= 1)
Int int_root_floor(const Int& value, unsigned e);

Int binomial(const Int& n, unsigned k);
inline long long binomial_ll(long long n, unsigned k) {
  return static_cast<long long>(binomial(Int(n), k));
}

// smallest integer M with M >= a * n^(p/q); all arguments positive
Int ceil_rational_power(const Int& n, const Rat& exponent, const Rat& scale);

std::string rat_to_string(const Rat& r);                 // "p" or "p/q"
std::optional<Rat> rat_from_string(const std::string&);  // accepts "p", "p/q", "-p/q"

}  // namespace diffset
