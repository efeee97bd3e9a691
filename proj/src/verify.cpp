#include "diffset/verify.hpp"

#include <algorithm>
#include <set>

#include "diffset/construct.hpp"
#include "diffset/solution.hpp"

namespace diffset {

namespace {

const std::vector<std::string> kStructureNames = {
    "2s-certify",   "2s-certify-equality", "2-eqns-5-vars",
    "gen-min-impl", "2-good-min-impl",     "min-impl-unique",
    "3-impls-path", "3-impls-disjoint",    "2-impls",
    "4-impl",       "4-impls-overlap",     "many-4-impls",
    "impls-not-i",  "no-simultaneous-alignment"};

void note(LemmaReport& report, const std::string& name, bool ok, const std::string& cex) {
  auto& check = report.checks[name];
  ++check.checked;
  if (ok)
    ++check.passed;
  else if (check.counterexamples.size() < 10)
    check.counterexamples.push_back(cex);
}

// random collection of nondegenerate equalities, kept only if valid
Configuration sample_valid(int k, int max_size, Rng& rng) {
  const auto pool = enumerate_equalities(k, {}, /*nondegenerate_only=*/true);
  while (true) {
    const int size = 1 + rng.below_int(max_size);
    std::vector<DifferenceEquality> eqs;
    for (int j = 0; j < size; ++j) eqs.push_back(pool[rng.below(pool.size())]);
    Configuration c(k, std::move(eqs));
    if (c.is_valid()) return c;
  }
}

LemmaReport bounding_diffs_suite(int samples, std::uint64_t seed) {
  LemmaReport report;
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(split_seed(seed, trial));
    const int k = 4 + rng.below_int(4);  // 4..7
    const Configuration c = sample_valid(k, 3, rng);
    const auto d = static_cast<std::size_t>(c.dim());
    const std::size_t count = generic_diff_count(c, rng.next());
    note(report, "bounding-diffs",
         count >= static_cast<std::size_t>(bounding_diffs_lower(k, static_cast<int>(d))),
         c.to_string());
  }
  return report;
}

LemmaReport odd_bounding_diffs_suite(int samples, std::uint64_t seed) {
  LemmaReport report;
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(split_seed(seed, trial));
    const int k = rng.below_int(2) == 0 ? 5 : 7;
    Configuration c = sample_two_good_anchored(k, 1, 1, 3, rng);
    const std::size_t count = generic_diff_count(c, rng.next());
    note(report, "odd-bounding-diffs",
         count >= static_cast<std::size_t>(odd_bounding_diffs_lower(k)), c.to_string());
  }
  return report;
}

LemmaReport repeated_sums_suite(int samples, std::uint64_t seed) {
  LemmaReport report;
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(split_seed(seed, trial));
    const int n = 2 + rng.below_int(59);  // 2..60
    std::set<long long> values;
    while (static_cast<int>(values.size()) < n)
      values.insert(static_cast<long long>(rng.below(4 * n * n + 1)));
    const PointSet a = PointSet::from_integers({values.begin(), values.end()});
    const Int nn = Int(n);
    const Int m = Int(max_sum_multiplicity(a).second);
    const Int d = 2 * Int(distinct_differences(a)) + 1;
    note(report, "repeated-sums", m * d >= nn * nn, "n=" + std::to_string(n));
    const Int energy = additive_energy(a);
    note(report, "repeated-sums-energy",
         energy * d >= nn * nn * nn * nn && energy <= nn * nn * m, "n=" + std::to_string(n));
  }
  return report;
}

LemmaReport c_light_alt_suite(int k, int samples, std::uint64_t seed) {
  LemmaReport report;
  const int kk = std::min(std::max(k, 5), 8);
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng(split_seed(seed, trial));
    const Configuration c = sample_two_good_anchored(kk, 1, 1, 3, rng);
    const auto implied = c.implied_difference_equalities({}, /*nondegenerate_only=*/true);
    // every linearly independent sub-collection of t implied equalities
    // involves at least 2t + 1 variables
    const int max_t = kk - c.dim();
    bool ok = true;
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
      if (!ok || stack.size() > static_cast<std::size_t>(max_t)) return;
      if (!stack.empty()) {
        IntRows rows;
        std::set<int> vars;
        for (std::size_t idx : stack) {
          rows.push_back(implied[idx].content_ll());
          for (int v : implied[idx].variables()) vars.insert(v);
        }
        if (int_rank(rows, kk) == static_cast<int>(rows.size()) &&
            static_cast<int>(vars.size()) < 2 * static_cast<int>(stack.size()) + 1)
          ok = false;
      }
      for (std::size_t next = start; next < implied.size() && ok; ++next) {
        stack.push_back(next);
        self(self, next + 1);
        stack.pop_back();
      }
    };
    dfs(dfs, 0);
    note(report, "c-light-alt", ok, c.to_string());
  }
  return report;
}

LemmaReport find_cube_suite(int samples, std::uint64_t seed) {
  LemmaReport report;
  // dense ranges {1..n}; construction must succeed whenever the hypothesis
  // holds, and every output must satisfy the cube difference bound
  (void)seed;
  const int limit = std::max(1, samples);
  int done = 0;
  for (int n = 20; n <= 300 && done < limit; n += 7) {
    const PointSet a = PointSet::from_integers([&] {
      std::vector<long long> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      return v;
    }());
    for (int s = 1; s <= 2; ++s)
      for (int t = 1; t <= 3; ++t) {
        if (!cube_hypothesis_holds(a, s, t)) continue;
        ++done;
        bool ok = true;
        std::string detail = "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                             " t=" + std::to_string(t);
        try {
          const CubeStructure cube = find_equal_sum_cubes(a, s, t, CubeMode::guaranteed);
          cube_point_set(cube);  // re-checks the difference bound
        } catch (const error&) {
          ok = false;
        }
        note(report, "find-cube", ok, detail);
      }
  }
  return report;
}

}  // namespace

std::vector<std::string> lemma_suite_names() {
  std::vector<std::string> names = kStructureNames;
  names.push_back("bounding-diffs");
  names.push_back("odd-bounding-diffs");
  names.push_back("repeated-sums");
  names.push_back("c-light-alt");
  names.push_back("find-cube");
  std::sort(names.begin(), names.end());
  return names;
}

LemmaReport run_lemma_suite(const std::string& name, int k, int samples, std::uint64_t seed,
                            int jobs) {
  if (std::find(kStructureNames.begin(), kStructureNames.end(), name) != kStructureNames.end()) {
    LemmaReport full = verify_structure_lemmas(k, samples, seed, jobs);
    LemmaReport filtered;
    const auto it = full.checks.find(name);
    if (it != full.checks.end()) filtered.checks[name] = it->second;
    return filtered;
  }
  if (name == "bounding-diffs") return bounding_diffs_suite(samples, seed);
  if (name == "odd-bounding-diffs") return odd_bounding_diffs_suite(samples, seed);
  if (name == "repeated-sums") return repeated_sums_suite(samples, seed);
  if (name == "c-light-alt") return c_light_alt_suite(k, samples, seed);
  if (name == "find-cube") return find_cube_suite(samples, seed);
  raise(errc::unknown_lemma, "no property suite named '" + name + "'");
}

}  // namespace diffset
