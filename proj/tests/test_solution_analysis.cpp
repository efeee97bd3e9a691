#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "diffset/construct.hpp"
#include "diffset/rng.hpp"
#include "diffset/solution.hpp"
#include "diffset/verify.hpp"

using namespace diffset;

namespace {

Configuration worked_six_variable_config() {
  return Configuration::from_quadruples(6, {{{1, 2, 3, 4}}, {{1, 2, 5, 6}}});
}

// test-side difference counting by direct set construction
std::size_t oracle_diff_count(const std::vector<long long>& vals) {
  std::set<long long> d;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (vals[i] < vals[j]) d.insert(vals[j] - vals[i]);
  return d.size();
}

PointTuple tuple_of(std::initializer_list<long long> values) {
  PointTuple t;
  for (long long v : values) t.emplace_back(v);
  return t;
}

}  // namespace

TEST_CASE("distinct differences") {
  CHECK(distinct_differences(PointSet::from_integers({0, 1, 2, 3, 4})) == 4);
  CHECK(distinct_differences(PointSet::from_integers({0, 1, 3})) == 3);
  CHECK(distinct_differences(PointSet::from_integers({0, 1, 10, 11})) ==
        oracle_diff_count({0, 1, 10, 11}));
  CHECK(distinct_differences(PointSet::from_integers({0, 1, 10, 11})) == 4);
  CHECK(distinct_differences(PointSet::from_integers({5})) == 0);
  CHECK_THROWS_AS(distinct_differences(PointSet{}), error);

  std::size_t dropped = 0;
  const auto deduped = PointSet::from_values({Rat(1), Rat(2), Rat(2), Rat(1)}, &dropped);
  CHECK(deduped.size() == 2);
  CHECK(dropped == 2);

  // n-1 differences exactly for arithmetic progressions
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + rng.below_int(20);
    const long long start = static_cast<long long>(rng.below(100));
    const long long step = 1 + static_cast<long long>(rng.below(40));
    std::vector<long long> ap(n);
    for (int i = 0; i < n; ++i) ap[i] = start + i * step;
    CHECK(distinct_differences(PointSet::from_integers(ap)) == static_cast<std::size_t>(n - 1));
    // push one interior element above the maximum, off any progression
    ap[1 + rng.below_int(n - 2)] += step * n + 1;
    const auto perturbed = PointSet::from_integers(ap);
    REQUIRE(perturbed.size() == static_cast<std::size_t>(n));
    CHECK(distinct_differences(perturbed) > static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("configuration_of collects exactly the satisfied equalities") {
  const auto ap = configuration_of(tuple_of({0, 1, 2}));
  CHECK(ap.implies(DifferenceEquality::canonicalize(1, 2, 2, 3, 3)));

  CHECK(configuration_of(tuple_of({0, 1, 10, 100})).size() == 0);

  const auto c = configuration_of(tuple_of({1, 2, 4, 5, 9, 10}));
  // x1 - x4 = x4 - x5 holds for this tuple
  CHECK(c.implies(DifferenceEquality::canonicalize(1, 4, 4, 5, 6)));
  const auto base = worked_six_variable_config();
  for (const auto& e : base.equalities()) CHECK(c.implies(e));
}

TEST_CASE("generic solutions satisfy exactly the implied equalities") {
  const auto c = worked_six_variable_config();
  CHECK(is_generic(c, tuple_of({1, 2, 4, 5, 10, 11})));
  CHECK_FALSE(is_generic(c, tuple_of({1, 2, 4, 5, 9, 10})));
  CHECK_THROWS_AS(is_generic(c, tuple_of({1, 2, 3, 4, 5, 7})), error);

  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    const auto sol = generic_solution(c, seed);
    CHECK(is_generic(c, sol.tuple));
    for (const auto& e : sol.satisfied) CHECK(c.implies(e));
  }

  const auto empty2 = Configuration::empty(2);
  const auto sol2 = generic_solution(empty2, 9);
  CHECK(sol2.tuple.size() == 2);
  CHECK(sol2.tuple[0] != sol2.tuple[1]);
  CHECK(is_generic(empty2, tuple_of({0, 1})));
}

TEST_CASE("generic difference counts and the equality-case regressions") {
  CHECK(generic_diff_count(c_sum_configuration(4), 3) == 4);
  CHECK(generic_diff_count(c_sum_plus_configuration(7), 3) == 12);
  CHECK(generic_diff_count(Configuration::empty(4), 3) == 6);

  for (int k : {4, 6, 8}) {
    const auto c = c_sum_configuration(k);
    const int d = c.dim();
    CHECK(d == k / 2 + 1);
    const std::size_t expected = static_cast<std::size_t>(
        binomial_ll(k, 2) - static_cast<long long>(k - d) * (k - d + 1));
    for (std::uint64_t seed : {1ull, 77ull}) CHECK(generic_diff_count(c, seed) == expected);
  }
  for (int k : {7, 9}) {
    const auto c = c_sum_plus_configuration(k);
    const std::size_t expected = static_cast<std::size_t>((k + 1) * (k + 1) / 4 - 4);
    for (std::uint64_t seed : {1ull, 77ull}) CHECK(generic_diff_count(c, seed) == expected);
  }

  // reproducible across seeds
  const auto c = c_sum_configuration(6);
  const auto a = generic_diff_count(c, 5);
  const auto b = generic_diff_count(c, 1234567);
  CHECK(a == b);
}

TEST_CASE("difference-count lower bound formulas") {
  CHECK(bounding_diffs_lower(6, 4) == 9);
  CHECK(bounding_diffs_lower(6, 5) == 13);
  CHECK(bounding_diffs_lower(4, 1) == 0);
  CHECK_THROWS_AS(bounding_diffs_lower(4, 0), error);
  CHECK_THROWS_AS(bounding_diffs_lower(4, 5), error);

  for (int k = 2; k <= 12; k += 2) {
    const int d = k / 2 + 1;
    // both branch formulas agree at the crossover point
    CHECK(static_cast<long long>(d - 1) * (d - 1) ==
          binomial_ll(k, 2) - static_cast<long long>(k - d) * (k - d + 1));
  }
  for (int k = 2; k <= 10; ++k)
    for (int d = 2; d <= k; ++d)
      CHECK(bounding_diffs_lower(k, d) >= bounding_diffs_lower(k, d - 1));

  CHECK(odd_bounding_diffs_lower(7) == 12);
  CHECK(odd_bounding_diffs_lower(3) == 0);
  CHECK(odd_bounding_diffs_lower(9) == 21);
  CHECK_THROWS_AS(odd_bounding_diffs_lower(6), error);
}

TEST_CASE("occurrence enumeration in a point set") {
  const auto c = worked_six_variable_config();
  const auto a = PointSet::from_integers({1, 2, 4, 5, 9, 10, 11});

  const auto full = find_occurrences(c, a);
  CHECK(std::find(full.begin(), full.end(), tuple_of({1, 2, 4, 5, 9, 10})) != full.end());
  CHECK(std::find(full.begin(), full.end(), tuple_of({1, 2, 4, 5, 10, 11})) != full.end());
  for (const auto& occ : full) {
    for (const auto& e : c.equalities()) CHECK(e.evaluate(occ) == 0);
    auto sorted = occ;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }

  const auto projected = find_occurrences(c, a, std::vector<int>{1, 2, 3, 4});
  CHECK(std::find(projected.begin(), projected.end(), tuple_of({1, 10, 2, 11})) !=
        projected.end());

  const auto invalid = Configuration::from_quadruples(4, {{{1, 2, 3, 4}}, {{1, 2, 4, 3}}});
  CHECK(find_occurrences(invalid, PointSet::from_integers({1, 2, 3, 4, 5})).empty());

  // limit and determinism
  const auto limited = find_occurrences(c, a, {}, 3);
  CHECK(limited.size() == 3);
  CHECK(limited == std::vector<PointTuple>(full.begin(), full.begin() + 3));
}

TEST_CASE("local property verdicts") {
  const auto good = satisfies_local_property(PointSet::from_integers({0, 1, 3, 4}), 3, 3);
  CHECK(good.holds);
  CHECK(good.exhaustive);

  const auto ap = satisfies_local_property(PointSet::from_integers({0, 1, 2, 3, 4}), 3, 3);
  CHECK_FALSE(ap.holds);
  REQUIRE(ap.witness.has_value());
  CHECK(ap.witness->size() == 3);
  // the witness is a 3-term progression: only 2 distinct differences
  const auto witness_set = PointSet::from_values(*ap.witness);
  CHECK(distinct_differences(witness_set) == 2);

  CHECK(satisfies_local_property(PointSet::from_integers({5, 9, 100}), 3, 0).holds);

  std::vector<long long> big(30);
  for (int i = 0; i < 30; ++i) big[i] = 1ll << i;
  CHECK_THROWS_AS(satisfies_local_property(PointSet::from_integers(big), 10, 2, /*budget=*/1000),
                  error);
  const auto sampled = satisfies_local_property(PointSet::from_integers(big), 10, 2, 1000,
                                                SampleMode{200, 9});
  CHECK(sampled.holds);
  CHECK_FALSE(sampled.exhaustive);
}

TEST_CASE("generic difference counts dominate the dimension bound on samples") {
  const auto report = run_lemma_suite("bounding-diffs", 7, 60, 2024);
  const auto& check = report.checks.at("bounding-diffs");
  CHECK(check.checked == 60);
  CHECK(check.passed == 60);

  const auto odd = run_lemma_suite("odd-bounding-diffs", 7, 40, 11);
  const auto& odd_check = odd.checks.at("odd-bounding-diffs");
  CHECK(odd_check.checked == 40);
  CHECK(odd_check.passed == 40);
}
