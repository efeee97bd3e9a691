#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "diffset/configuration.hpp"
#include "diffset/solution.hpp"

namespace diffset {

// A subset of {1..n} with no 3-term arithmetic progression. Exact maximum for
// small n; sphere-layer digit construction with greedy extension beyond.
PointSet behrend_set(long long n);

bool has_three_term_ap(const PointSet& a);

struct HeavyDeletion {
  std::vector<long long> support;  // offending subset (values)
  int rank;                        // rank of its satisfied difference equalities
  long long deleted;               // removed element (the largest of the support)
};

struct ConstructionTrace {
  std::size_t behrend_size = 0;
  std::size_t sampled_size = 0;
  std::size_t deleted_count = 0;
  std::vector<HeavyDeletion> heavy_deletions;
  std::uint64_t seed = 0;
};

// n-element subset of {1..ceil(a*n^c)} that is 3-AP-free and contains no
// m-element subset (m <= k) whose satisfied difference equalities have rank
// greater than (m-1)/c.
std::pair<PointSet, ConstructionTrace> random_local_set(int n, int k, const Rat& c, const Rat& a,
                                                        std::uint64_t seed,
                                                        std::size_t budget = 10'000'000);

struct SubsetRankViolation {
  std::vector<Rat> subset;
  int rank;
};

// Exhaustive scan over all m-element subsets, 2 <= m <= k; the verification
// side of the construction's postcondition.
std::optional<SubsetRankViolation> find_subset_rank_violation(const PointSet& a, int k,
                                                              const Rat& c,
                                                              std::size_t budget = 100'000'000);

// Most frequent ordered-pair sum over A x A (pairs (a, a) included) and its
// multiplicity; ties resolved toward the smallest sum.
std::pair<Rat, std::size_t> max_sum_multiplicity(const PointSet& a);

// Number of quadruples with a1 - a2 = a3 - a4.
Int additive_energy(const PointSet& a);

struct CubeStructure {
  int s = 0;
  int t = 0;
  std::vector<Rat> centers;  // a_1..a_{2s} with a_1 + a_{s+1} = ... = a_s + a_{2s}
  std::vector<Rat> steps;    // d_1..d_{t-1}, positive
};

enum class CubeMode { opportunistic, guaranteed };

CubeStructure find_equal_sum_cubes(const PointSet& a, int s, int t,
                                   CubeMode mode = CubeMode::opportunistic);

// Whether |A-A| <= (n/8s)^(1 + 1/(2^t - 1)), evaluated exactly.
bool cube_hypothesis_holds(const PointSet& a, int s, int t);

PointSet cube_point_set(const CubeStructure& cube);

Configuration c_sum_configuration(int k);       // even k >= 4
Configuration c_sum_plus_configuration(int k);  // odd k >= 7

}  // namespace diffset
