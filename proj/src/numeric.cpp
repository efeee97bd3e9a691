#include "diffset/numeric.hpp"

#include <cctype>

namespace diffset {

const char* errc_name(errc code) {
  switch (code) {
    case errc::identity_satisfied: return "IdentitySatisfied";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::empty_index_set: return "EmptyIndexSet";
    case errc::too_many_subsets: return "TooManySubsets";
    case errc::empty_set: return "EmptySet";
    case errc::not_a_solution: return "NotASolution";
    case errc::retry_limit_exceeded: return "RetryLimitExceeded";
    case errc::range_error: return "RangeError";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::insufficient_density: return "InsufficientDensity";
    case errc::not_found: return "NotFound";
    case errc::degenerate_cube: return "DegenerateCube";
    case errc::divisibility_error: return "DivisibilityError";
    case errc::anchor_missing: return "AnchorMissing";
    case errc::not_independent: return "NotIndependent";
    case errc::not_two_good: return "NotTwoGood";
    case errc::not_a_path: return "NotAPath";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::not_valid: return "NotValid";
    case errc::unknown_lemma: return "UnknownLemma";
    case errc::parse_error: return "ParseError";
    case errc::internal_invariant: return "InternalInvariant";
  }
  return "Error";
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
  return q;
}

Int int_pow(Int base, unsigned exp) {
  Int result = 1;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

Rat rat_pow(const Rat& base, unsigned exp) {
  return Rat(int_pow(rat_num(base), exp), int_pow(rat_den(base), exp));
}

Int int_root_floor(const Int& value, unsigned e) {
  require(value >= 0 && e >= 1, errc::range_error, "int_root_floor needs value >= 0, e >= 1");
  if (value == 0 || e == 1) return value;
  Int lo = 0;
  Int hi = 1;
  while (int_pow(hi, e) <= value) hi <<= 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) >> 1;
    if (int_pow(mid, e) <= value)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Int binomial(const Int& n, unsigned k) {
  if (n < 0) return 0;
  if (Int(k) > n) return 0;
  Int result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= (n - Int(j - 1));
    result /= Int(j);
  }
  return result;
}

Int ceil_rational_power(const Int& n, const Rat& exponent, const Rat& scale) {
  require(n >= 1 && exponent > 0 && scale > 0, errc::range_error, "ceil_rational_power domain");
  const Int p = rat_num(exponent), q = rat_den(exponent);
  const Int u = rat_num(scale), v = rat_den(scale);
  // smallest M with (M*v/u)^q >= n^p, i.e. (M*v)^q >= n^p * u^q
  const Int rhs = int_pow(n, static_cast<unsigned>(p)) * int_pow(u, static_cast<unsigned>(q));
  Int mv = int_root_floor(rhs, static_cast<unsigned>(q));
  if (int_pow(mv, static_cast<unsigned>(q)) < rhs) ++mv;
  return ceil_div(mv, v);
}

std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

std::optional<Rat> rat_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parse_int = [](const std::string& s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return Int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace diffset
