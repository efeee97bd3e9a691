#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "diffset/solution.hpp"
#include "diffset/thresholds.hpp"

using namespace diffset;

namespace {

// test-side exhaustive minimum over all n-subsets of {0..M}
std::optional<long long> oracle_min_diffs(int n, int k, long long ell, long long grid) {
  std::optional<long long> best;
  std::vector<long long> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  auto diffs_of = [](const std::vector<long long>& vals) {
    std::set<long long> d;
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j) d.insert(vals[j] - vals[i]);
    return static_cast<long long>(d.size());
  };
  while (true) {
    bool ok = true;
    std::vector<std::size_t> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = i;
    while (ok) {
      std::vector<long long> vals(k);
      for (int i = 0; i < k; ++i) vals[i] = pick[sub[i]];
      if (diffs_of(vals) < ell) ok = false;
      int j = k - 1;
      while (j >= 0 && sub[j] == static_cast<std::size_t>(n - (k - j))) --j;
      if (j < 0) break;
      ++sub[j];
      for (int t = j + 1; t < k; ++t) sub[t] = sub[t - 1] + 1;
    }
    if (ok) {
      const long long d = diffs_of(pick);
      if (!best || d < *best) best = d;
    }
    int j = n - 1;
    while (j >= 0 && pick[j] == grid - (n - 1 - j)) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
  }
  return best;
}

}  // namespace

TEST_CASE("grid oracle pins") {
  for (int n = 3; n <= 8; ++n) {
    const auto r = brute_force_g(n, 3, 2, 16);
    REQUIRE_FALSE(r.infinite());
    CHECK(*r.value == n - 1);
    REQUIRE(r.witness.has_value());
    // the witness is an arithmetic progression
    CHECK(distinct_differences(PointSet::from_integers(*r.witness)) ==
          static_cast<std::size_t>(n - 1));
  }

  const auto r12 = brute_force_g(4, 3, 3, 12);
  REQUIRE_FALSE(r12.infinite());
  CHECK(*r12.value == 4);
  const auto r16 = brute_force_g(4, 3, 3, 16);
  CHECK(*r16.value == 4);  // stabilized across the larger grid

  CHECK(brute_force_g(5, 4, 7, 20).infinite());
  CHECK(brute_force_g(10, 4, 7, 20).infinite());
}

TEST_CASE("grid oracle agrees with plain enumeration") {
  for (const auto& [n, k, ell, grid] :
       std::vector<std::array<long long, 4>>{{4, 3, 3, 12}, {5, 3, 2, 10}, {4, 4, 5, 9},
                                             {5, 4, 4, 8},  {4, 3, 2, 7},  {5, 5, 9, 10}}) {
    const auto expected = oracle_min_diffs(static_cast<int>(n), static_cast<int>(k), ell, grid);
    const auto got = brute_force_g(static_cast<int>(n), static_cast<int>(k), ell, grid);
    if (expected.has_value()) {
      REQUIRE_FALSE(got.infinite());
      CHECK(*got.value == *expected);
    } else {
      CHECK(got.infinite());
    }
  }
}

TEST_CASE("grid oracle monotonicity") {
  // weakly decreasing in the grid bound, weakly increasing in ell
  const auto m8 = brute_force_g(5, 3, 3, 8);
  const auto m10 = brute_force_g(5, 3, 3, 10);
  const auto m12 = brute_force_g(5, 3, 3, 12);
  REQUIRE((m8.value && m10.value && m12.value));
  CHECK(*m8.value >= *m10.value);
  CHECK(*m10.value >= *m12.value);

  const auto l2 = brute_force_g(5, 3, 2, 12);
  const auto l3 = brute_force_g(5, 3, 3, 12);
  REQUIRE((l2.value && l3.value));
  CHECK(*l2.value <= *l3.value);

  CHECK(check_monotonicity(6, 4, 5, 20));
  CHECK(check_monotonicity(5, 3, 2, 16));
  CHECK(check_monotonicity(5, 3, 3, 16));

  // identical results regardless of worker count
  const auto serial = brute_force_g(5, 4, 5, 14, 50'000'000, 1);
  const auto parallel = brute_force_g(5, 4, 5, 14, 50'000'000, 4);
  CHECK(serial.value == parallel.value);
  CHECK(serial.witness == parallel.witness);

  CHECK_THROWS_AS(brute_force_g(6, 3, 3, 40, /*budget=*/10), error);
}

TEST_CASE("threshold formula evaluations") {
  CHECK(upper_bound_ell(8, Rat(2)) == 16);
  CHECK(upper_bound_ell(7, Rat(2)) == 9);
  CHECK(upper_bound_ell(2, Rat(2)) == 1);
  CHECK(upper_bound_ell(2, Rat(3, 2)) == 1);
  CHECK_THROWS_AS(upper_bound_ell(5, Rat(1)), error);

  const auto even = lower_bound_ell(8, 1, true);
  CHECK(even.ell == 17);
  CHECK(even.exponent == Rat(2));
  const auto deep = lower_bound_ell(8, 2, true);
  CHECK(deep.ell == 14);
  CHECK(deep.exponent == Rat(4, 3));
  CHECK_THROWS_AS(lower_bound_ell(7, 1, true), error);
  const auto general = lower_bound_ell(7, 1, false);
  CHECK(general.ell_exact == Rat(109, 4));
  CHECK(general.ell == 28);
  CHECK(general.exponent == Rat(2));

  CHECK(quadratic_threshold(8) == std::make_pair(Int(17), Int(17)));
  CHECK(quadratic_threshold(7) == std::make_pair(Int(13), Int(16)));
  CHECK(quadratic_threshold(4) == std::make_pair(Int(5), Int(5)));
  CHECK_THROWS_AS(quadratic_threshold(3), error);

  // the two sides meet for even k
  for (int k = 4; k <= 16; k += 2)
    CHECK(upper_bound_ell(k, Rat(2)) + 1 == lower_bound_ell(k, 1, true).ell);
}

TEST_CASE("coefficients for the general exponent threshold") {
  const auto two = nc_threshold_coefficients(Rat(2));
  CHECK(two.t == 1);
  CHECK(two.a1 == Rat(1, 8));
  CHECK(two.a2 == Rat(9, 32));

  const auto mid = nc_threshold_coefficients(Rat(3, 2));
  CHECK(mid.t == 1);
  CHECK(mid.a1 == Rat(1, 18));
  CHECK(mid.a2 == Rat(9, 32));

  const auto low = nc_threshold_coefficients(Rat(17, 16));
  CHECK(low.t == 4);
  CHECK(low.a2 == Rat(243, 2048));  // (3/4)^5 / 2
}

TEST_CASE("exponent pair for quadratic ell") {
  const auto [c1a, c2a] = poly_bounds_exponents(Rat(1, 5));
  CHECK(c1a == Rat(4, 3));
  CHECK(c2a > c1a);

  const auto [c1b, c2b] = poly_bounds_exponents(Rat(3, 16));
  CHECK(c1b == Rat(8, 7));
  CHECK(c2b > c1b);

  // both exponents shrink toward 1 along a decreasing sequence
  Rat prev_c1(3), prev_c2(3);
  for (const Rat& a : {Rat(1, 5), Rat(1, 16), Rat(1, 64), Rat(1, 256)}) {
    const auto [c1, c2] = poly_bounds_exponents(a);
    CHECK(c1 > 1);
    CHECK(c2 > 1);
    CHECK(c1 <= prev_c1);
    CHECK(c2 <= prev_c2);
    prev_c1 = c1;
    prev_c2 = c2;
  }
  CHECK_THROWS_AS(poly_bounds_exponents(Rat(1, 4)), error);
  CHECK_THROWS_AS(poly_bounds_exponents(Rat(0)), error);
}

TEST_CASE("exponent ladder for huge k") {
  const Int k100 = Int(3) * int_pow(Int(4), 100);
  const auto ladder = sk_ladder(k100);
  CHECK(ladder.r == 2);
  REQUIRE(ladder.rows.size() == 2);
  CHECK(ladder.rows[0].t == 10);
  CHECK(ladder.rows[1].t == 100);
  CHECK(ladder.distinct_exponent_lower_bound == 2);

  // ladder values strictly decrease and interleave with the upper-bound side
  CHECK(ladder.rows[1].ell_plus < ladder.rows[0].ell_plus);
  CHECK(claim_10t_inequality(10, k100));  // ell_plus(100) <= ell_minus(11)

  const auto small = sk_ladder(Int(16));
  CHECK(small.r == 0);
  CHECK(small.rows.empty());
  CHECK(small.distinct_exponent_lower_bound == 1);

  for (int t = 2; t <= 4; ++t) {
    const Int k = Int(3) * int_pow(Int(4), static_cast<unsigned>(10 * t));
    CHECK(claim_10t_inequality(t, k));
  }
  CHECK(claim_10t_inequality(2, Int(3) * int_pow(Int(4), 20)));
}

TEST_CASE("figure curve rows") {
  const auto rows = figure_curve_data(8);
  REQUIRE(rows.size() >= 12);
  CHECK(rows[0].coeff == Rat(1, 4));
  CHECK(rows[0].exponent == Rat(2));
  CHECK(rows[0].direction == "lower");
  CHECK(rows[1].coeff == Rat(3, 16));
  CHECK(rows[1].exponent == Rat(4, 3));

  bool found_endpoint = false;
  for (const auto& p : rows)
    if (p.direction == "upper" && p.exponent == Rat(2)) {
      CHECK(p.coeff == Rat(1, 4));
      found_endpoint = true;
    }
  CHECK(found_endpoint);
  CHECK_THROWS_AS(figure_curve_data(3), error);
}

TEST_CASE("threshold report rows") {
  const auto rows = threshold_report(8);
  bool found = false;
  for (const auto& row : rows)
    if (row.direction == "lower" && row.ell == 17 && row.exponent == Rat(2)) found = true;
  CHECK(found);
  for (const auto& row : rows) CHECK(row.in_range);

  const auto odd_rows = threshold_report(7);
  bool found_odd_upper = false;
  for (const auto& row : odd_rows)
    if (row.source == "odd-upper-bound") {
      CHECK(row.ell == 12);
      found_odd_upper = true;
    }
  CHECK(found_odd_upper);
}
