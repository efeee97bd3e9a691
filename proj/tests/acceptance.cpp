// Acceptance suite: runs every criterion and prints one pass/fail line each.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "diffset/cli.hpp"
#include "diffset/construct.hpp"
#include "diffset/implication.hpp"
#include "diffset/io.hpp"
#include "diffset/solution.hpp"
#include "diffset/thresholds.hpp"
#include "diffset/verify.hpp"

using namespace diffset;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& log, const std::string& what) {
  if (!condition) log += "    failed: " + what + "\n";
  return condition;
}

bool criterion_worked_examples(std::string& log) {
  bool ok = true;
  const auto c = Configuration::from_quadruples(6, {{{1, 2, 3, 4}}, {{1, 2, 5, 6}}});
  ok &= expect(c.dim() == 4, log, "dim = 4");
  ok &= expect(c.dim_restricted({1, 2, 3, 4}) == 3, log, "dim_{1,2,3,4} = 3");
  ok &= expect(c.dim_restricted({3, 4, 5, 6}) == 3, log, "dim_{3,4,5,6} = 3");
  ok &= expect(c.dim_restricted({1, 2, 3, 5}) == 4, log, "dim_{1,2,3,5} = 4");

  const auto a = Configuration::from_quadruples(4, {{{1, 2, 3, 4}}, {{1, 2, 4, 3}}});
  ok &= expect(!a.is_valid() && a.is_c_good(Rat(2)).reason == "invalid", log, "(a) invalid");

  const auto b = Configuration::from_quadruples(5, {{{1, 2, 3, 4}}, {{1, 3, 5, 2}}});
  ok &= expect(b.is_valid() && !b.is_ap_free() && b.is_c_good(Rat(2)).reason == "AP-containing",
               log, "(b) AP-containing");

  const auto cc = Configuration::from_quadruples(
      12, {{{1, 2, 3, 4}}, {{1, 2, 5, 6}}, {{1, 2, 7, 8}}, {{1, 3, 5, 7}}, {{9, 10, 11, 12}}});
  const auto heavy = cc.heavy_parts(Rat(2));
  const std::vector<int> part{1, 2, 3, 4, 5, 6, 7, 8};
  ok &= expect(cc.is_valid() && cc.is_ap_free(), log, "(c) valid and AP-free");
  ok &= expect(std::find(heavy.begin(), heavy.end(), part) != heavy.end(), log,
               "(c) 2-heavy with part {1..8}");

  const auto d = Configuration::from_quadruples(6, {{{1, 2, 5, 4}}, {{1, 3, 6, 4}}});
  ok &= expect(d.is_c_good(Rat(2)).good, log, "(d) 2-good");
  return ok;
}

bool criterion_equality_cases(std::string& log) {
  bool ok = true;
  for (int k : {4, 6, 8}) {
    const auto c = c_sum_configuration(k);
    const int d = c.dim();
    const auto expected = static_cast<std::size_t>(
        binomial_ll(k, 2) - static_cast<long long>(k - d) * (k - d + 1));
    for (std::uint64_t seed : {11ull, 5077ull})
      ok &= expect(generic_diff_count(c, seed) == expected, log,
                   "equal-sum chain count at k=" + std::to_string(k));
  }
  for (int k : {7, 9}) {
    const auto c = c_sum_plus_configuration(k);
    const auto expected = static_cast<std::size_t>((k + 1) * (k + 1) / 4 - 4);
    for (std::uint64_t seed : {11ull, 5077ull})
      ok &= expect(generic_diff_count(c, seed) == expected, log,
                   "augmented chain count at k=" + std::to_string(k));
  }
  return ok;
}

bool criterion_certify_bound(std::string& log) {
  bool ok = true;
  int near_equality_cases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng(split_seed(2024, trial));
    const int k = 6 + trial % 5;  // 6..10
    const auto s = sample_two_good_anchored(k, 1, 2, 4, rng);
    const auto certified = certified_indices(s, 1);
    const int cert = static_cast<int>(certified.size());
    const int size = static_cast<int>(s.size());
    ok &= expect(cert <= 2 * size, log, "certified bound at trial " + std::to_string(trial));
    if (cert >= 2 * size - 1) {
      ++near_equality_cases;
      const auto sprime = normalize_to_sprime(s, 1);
      int aligned = 0;
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
          if (alignment(sprime.equalities()[i], sprime.equalities()[j]).difference_aligned())
            ++aligned;
      const int predicted = cert == 2 * size ? 0 : 1;
      ok &= expect(aligned == predicted, log,
                   "normalized alignment count at trial " + std::to_string(trial));
    }
  }
  ok &= expect(near_equality_cases > 0, log, "near-equality cases exercised");
  return ok;
}

bool criterion_implication_structure(std::string& log) {
  bool ok = true;
  const auto report = verify_structure_lemmas(9, 500, 7);
  for (const auto& name :
       {"3-impls-path", "3-impls-disjoint", "2-impls", "4-impl", "min-impl-unique"}) {
    const auto it = report.checks.find(name);
    if (it == report.checks.end()) continue;
    ok &= expect(it->second.passed == it->second.checked, log, std::string(name) + " violations");
  }
  ok &= expect(report.all_passed(), log, "full structural report");

  // the two fixed nine-variable collections and their produced equality
  const auto produced = DifferenceEquality::canonicalize(3, 8, 9, 6, 9);
  for (const auto& quads : std::vector<std::vector<std::array<int, 4>>>{
           {{{1, 2, 3, 4}}, {{1, 5, 6, 2}}, {{1, 5, 7, 4}}, {{1, 8, 9, 7}}},
           {{{1, 2, 3, 4}}, {{1, 5, 6, 2}}, {{1, 7, 8, 4}}, {{1, 5, 9, 7}}}}) {
    const auto s = Configuration::from_quadruples(9, quads);
    const auto fours = find_n_implications(s, 1, 4);
    ok &= expect(fours.size() == 1, log, "one 4-implication in the fixed example");
    if (fours.size() != 1) continue;
    ok &= expect(fours[0].produced == produced, log, "produced equality of the fixed example");
    int diff_pairs = 0, sum_pairs = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const auto rel = alignment(fours[0].members[i], fours[0].members[j]);
        if (rel.difference_aligned()) ++diff_pairs;
        if (rel.sum_aligned()) ++sum_pairs;
      }
    ok &= expect(diff_pairs == 1 && sum_pairs == 1, log, "alignment pattern of the example");
  }

  // a fixed collection carrying two 3-implications: they are disjoint and
  // both alignment graphs are paths
  const auto twin = Configuration::from_quadruples(15, {{{1, 2, 3, 4}},
                                                        {{1, 5, 6, 2}},
                                                        {{1, 3, 5, 7}},
                                                        {{1, 8, 9, 6}},
                                                        {{1, 10, 11, 12}},
                                                        {{1, 13, 14, 10}},
                                                        {{1, 13, 15, 12}}});
  ImplicationOptions wide;
  wide.subset_cap = std::size_t{1} << 15;
  const auto threes = find_n_implications(twin, 1, 3, wide);
  ok &= expect(threes.size() == 2, log, "two 3-implications in the fixed collection");
  if (threes.size() == 2) {
    std::vector<std::size_t> overlap;
    std::set_intersection(threes[0].member_indices.begin(), threes[0].member_indices.end(),
                          threes[1].member_indices.begin(), threes[1].member_indices.end(),
                          std::back_inserter(overlap));
    ok &= expect(overlap.empty(), log, "3-implications disjoint");
    for (const auto& three : threes) {
      try {
        g3_graph(three);
      } catch (const error&) {
        ok &= expect(false, log, "3-implication alignment graph is a path");
      }
    }
  }
  return ok;
}

bool criterion_repeated_sums(std::string& log) {
  bool ok = true;
  const auto report = run_lemma_suite("repeated-sums", 8, 1000, 99);
  for (const auto& [name, check] : report.checks) {
    ok &= expect(check.checked == 1000, log, name + " ran 1000 trials");
    ok &= expect(check.passed == check.checked, log, name + " violations");
  }
  ok &= expect(additive_energy(PointSet::from_integers({0, 1, 2, 3})) == 44, log,
               "energy of {0,1,2,3}");
  return ok;
}

bool criterion_cubes(std::string& log) {
  bool ok = true;
  // stated grid: success plus difference bound whenever the hypothesis holds
  for (int n = 20; n <= 60; ++n) {
    std::vector<long long> range(n);
    for (int i = 0; i < n; ++i) range[i] = i + 1;
    const auto a = PointSet::from_integers(range);
    for (int s : {1, 2})
      for (int t : {1, 2, 3}) {
        if (!cube_hypothesis_holds(a, s, t)) continue;
        try {
          const auto cube = find_equal_sum_cubes(a, s, t, CubeMode::guaranteed);
          cube_point_set(cube);  // checks the bound exactly
        } catch (const error& e) {
          ok &= expect(false, log, "guaranteed construction at n=" + std::to_string(n));
        }
      }
  }
  // larger ranges where the hypothesis actually holds, so the implication is
  // exercised non-vacuously
  for (const auto& [n, s, t] : std::vector<std::array<int, 3>>{{64, 1, 1}, {100, 1, 1},
                                                               {256, 2, 1}, {300, 2, 1}}) {
    std::vector<long long> range(n);
    for (int i = 0; i < n; ++i) range[i] = i + 1;
    const auto a = PointSet::from_integers(range);
    if (!expect(cube_hypothesis_holds(a, s, t), log,
                "hypothesis at n=" + std::to_string(n) + " s=" + std::to_string(s))) {
      ok = false;
      continue;
    }
    try {
      const auto cube = find_equal_sum_cubes(a, s, t, CubeMode::guaranteed);
      const auto points = cube_point_set(cube);
      const Int bound = int_pow(Int(3), t - 1) * s * s + (int_pow(Int(3), t - 1) - 1) / 2;
      ok &= expect(Int(distinct_differences(points)) <= bound, log, "difference bound");
    } catch (const error&) {
      ok &= expect(false, log, "guaranteed construction at n=" + std::to_string(n));
    }
  }
  return ok;
}

bool criterion_local_set(std::string& log) {
  bool ok = true;
  for (int n : {40, 60, 80}) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const auto [a, trace] = random_local_set(n, 4, Rat(2), Rat(1), seed);
      ok &= expect(a.size() == static_cast<std::size_t>(n), log, "size n");
      const Rat bound = Rat(n) * n;  // a = 1, c = 2
      bool in_range = true;
      for (const Rat& v : a.elements())
        if (v < 1 || v > rat_ceil(bound)) in_range = false;
      ok &= expect(in_range, log, "range bound at n=" + std::to_string(n));
      ok &= expect(Rat(Int(distinct_differences(a))) <= bound, log, "difference bound");
      ok &= expect(!has_three_term_ap(a), log, "progression-free at n=" + std::to_string(n));
      ok &= expect(!find_subset_rank_violation(a, 4, Rat(2)).has_value(), log,
                   "no heavy subset at n=" + std::to_string(n));
      const auto local = satisfies_local_property(a, 4, 4);
      ok &= expect(local.holds, log, "local property at ell=4");
    }
  }
  return ok;
}

bool criterion_oracle(std::string& log) {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    const auto r = brute_force_g(n, 3, 2, 16);
    ok &= expect(!r.infinite() && *r.value == n - 1, log, "g(n,3,2) at n=" + std::to_string(n));
    ok &= expect(r.witness.has_value() &&
                     distinct_differences(PointSet::from_integers(*r.witness)) ==
                         static_cast<std::size_t>(n - 1),
                 log, "progression witness at n=" + std::to_string(n));
  }
  const auto r12 = brute_force_g(4, 3, 3, 12);
  const auto r16 = brute_force_g(4, 3, 3, 16);
  ok &= expect(!r12.infinite() && *r12.value == 4, log, "g_12(4,3,3) = 4");
  ok &= expect(!r16.infinite() && *r16.value == 4, log, "stabilization at M=16");
  ok &= expect(brute_force_g(6, 4, 7, 20).infinite(), log, "g(.,4,7) infinite");

  for (int n = 3; n <= 7; ++n)
    for (int k = 2; k <= n; ++k)
      for (long long ell = 0; ell <= binomial_ll(k, 2); ++ell)
        ok &= expect(check_monotonicity(n, k, ell, 20), log,
                     "monotonicity at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " ell=" + std::to_string(ell));
  return ok;
}

bool criterion_thresholds(std::string& log) {
  bool ok = true;
  ok &= expect(quadratic_threshold(8) == std::make_pair(Int(17), Int(17)), log,
               "quadratic threshold at k=8");
  ok &= expect(quadratic_threshold(7) == std::make_pair(Int(13), Int(16)), log,
               "quadratic threshold at k=7");
  const auto lb = lower_bound_ell(8, 2, true);
  ok &= expect(lb.ell == 14 && lb.exponent == Rat(4, 3), log, "lower-bound ell at (8,2)");
  ok &= expect(upper_bound_ell(7, Rat(2)) == 9, log, "generic upper-bound ell at k=7");
  ok &= expect(Int(7 + 1) * (7 + 1) / 4 - 4 == 12, log, "odd improvement value 12");
  const auto rows = figure_curve_data(8);
  ok &= expect(rows[0].coeff == Rat(1, 4) && rows[0].exponent == Rat(2), log, "first curve row");
  ok &= expect(rows[1].coeff == Rat(3, 16) && rows[1].exponent == Rat(4, 3), log,
               "second curve row");
  ok &= expect(claim_10t_inequality(2, Int(3) * int_pow(Int(4), 20)), log,
               "exponent-ladder inequality at t=2, k=3*4^20");
  return ok;
}

bool criterion_determinism(std::string& log) {
  bool ok = true;
  auto invoke = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    run_cli(args, out, err);
    return out.str();
  };
  const std::vector<std::string> oracle_args{"oracle", "g", "--n", "6", "--k", "4",
                                             "--ell", "5",  "--M", "16"};
  const auto once = invoke(oracle_args);
  ok &= expect(once == invoke(oracle_args), log, "oracle rerun identical");
  auto oracle_jobs = oracle_args;
  oracle_jobs.insert(oracle_jobs.end(), {"--jobs", "4"});
  ok &= expect(once == invoke(oracle_jobs), log, "oracle jobs=4 identical");

  const std::vector<std::string> verify_args{"verify",    "--lemma", "2s-certify", "--k", "8",
                                             "--samples", "60",      "--seed",     "12"};
  const auto v = invoke(verify_args);
  ok &= expect(v == invoke(verify_args), log, "verify rerun identical");
  auto verify_jobs = verify_args;
  verify_jobs.insert(verify_jobs.end(), {"--jobs", "4"});
  ok &= expect(v == invoke(verify_jobs), log, "verify jobs=4 identical");

  const std::vector<std::string> enum_args{"enumerate", "--k", "5"};
  ok &= expect(invoke(enum_args) == invoke(enum_args), log, "enumerate rerun identical");
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"worked-example regression (dim/dim_I and classifications)", criterion_worked_examples},
      {"equality-case regression for the chained-sum configurations", criterion_equality_cases},
      {"certified-index bound on 500 sampled collections", criterion_certify_bound},
      {"implication-structure suite with fixed nine-variable examples",
       criterion_implication_structure},
      {"repeated-sums and additive-energy bounds on 1000 random sets", criterion_repeated_sums},
      {"equal-sum cube construction under the exact hypothesis", criterion_cubes},
      {"alteration construction postconditions over three seeds", criterion_local_set},
      {"grid oracle pins and monotonicity sweep", criterion_oracle},
      {"threshold formula pins", criterion_thresholds},
      {"byte-identical CLI output across reruns and worker counts", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string log;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].run(log);
    } catch (const std::exception& e) {
      log += std::string("    exception: ") + e.what() + "\n";
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << " (" << std::fixed;
    line.precision(2);
    line << seconds << "s): " << criteria[i].name;
    std::cout << line.str() << "\n";
    if (!ok) {
      std::cout << log;
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
