#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffset/numeric.hpp"

namespace diffset {

struct OracleResult {
  std::optional<long long> value;                 // empty means +infinity
  std::optional<std::vector<long long>> witness;  // attaining set, min element 0
  long long grid_bound = 0;
  bool exact = true;

  bool infinite() const { return !value.has_value(); }
};

// Minimum |A - A| over n-element subsets of {0..M} with the (k, ell)-local
// property, by branch and bound. +infinity when ell > C(k,2) or no subset of
// the grid qualifies.
OracleResult brute_force_g(int n, int k, long long ell, long long grid_bound,
                           std::size_t budget = 50'000'000, int jobs = 1);

// g_M(n,k,ell) >= g_M(n,k-1,ell-k+1) together with monotonicity in ell.
bool check_monotonicity(int n, int k, long long ell, long long grid_bound,
                        std::size_t budget = 50'000'000);

// ceil((c-1)(k-1)/c)^2
Int upper_bound_ell(int k, const Rat& c);

struct LowerBoundEll {
  Int ell;
  Rat ell_exact;  // the formula value before rounding up
  Rat exponent;   // 1 + 1/(2^t - 1)
};

LowerBoundEll lower_bound_ell(int k, int t, bool require_divisibility);

// (lower, upper) enclosure of the quadratic threshold
std::pair<Int, Int> quadratic_threshold(int k);

struct NcThresholdCoefficients {
  Rat a1;
  Rat a2;
  int t;
};

NcThresholdCoefficients nc_threshold_coefficients(const Rat& c);

// (c1, c2) with a lower-bound exponent c1 and upper-bound exponent c2 for
// ell = a k^2
std::pair<Rat, Rat> poly_bounds_exponents(const Rat& a);

struct SkLadderRow {
  Int t;          // 10^i
  Rat ell_plus;   // lower-bound ell at exponent 1 + 1/(2^t - 1)
  Int ell_minus;  // upper-bound ell at the same exponent
};

struct SkLadder {
  long long r = 0;
  std::vector<SkLadderRow> rows;
  Int distinct_exponent_lower_bound;  // max(r, 1)
};

SkLadder sk_ladder(const Int& k);

// ell_plus(10 t) <= ell_minus(t + 1), evaluated exactly
bool claim_10t_inequality(int t, const Int& k);

struct CurvePoint {
  Rat coeff;     // ell / k^2
  Rat exponent;  // c
  std::string direction;
  std::string source;
};

std::vector<CurvePoint> figure_curve_data(int k);

struct ThresholdRow {
  std::string source;
  Int ell;
  Rat exponent;
  std::string direction;  // "upper" or "lower"
  bool in_range;          // 0 <= ell <= C(k,2)
};

std::vector<ThresholdRow> threshold_report(int k);

}  // namespace diffset
