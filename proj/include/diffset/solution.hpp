#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "diffset/configuration.hpp"

namespace diffset {

using PointTuple = std::vector<Rat>;

// A finite subset of the rationals, kept strictly increasing.
class PointSet {
 public:
  PointSet() = default;

  // Sorts and removes exact duplicates; the number of dropped duplicates is
  // reported through the optional out-parameter.
  static PointSet from_values(std::vector<Rat> values, std::size_t* dropped_duplicates = nullptr);
  static PointSet from_integers(const std::vector<long long>& values);

  const std::vector<Rat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Rat& value) const;

  // All elements as long long, when exact conversion is possible.
  std::optional<std::vector<long long>> as_ll() const;

 private:
  std::vector<Rat> elements_;
};

std::size_t distinct_differences(const PointSet& a);

// The configuration of every canonical difference equality the tuple
// satisfies exactly.
Configuration configuration_of(const PointTuple& tuple);

struct GenericSolution {
  PointTuple tuple;
  std::vector<DifferenceEquality> satisfied;  // all implied by the source configuration
};

GenericSolution generic_solution(const Configuration& c, std::uint64_t seed);
bool is_generic(const Configuration& c, const PointTuple& tuple);

// Number of distinct differences in a generic solution; recomputed under a
// second derived seed and required to agree.
std::size_t generic_diff_count(const Configuration& c, std::uint64_t seed);

long long bounding_diffs_lower(int k, int d);
long long odd_bounding_diffs_lower(int k);

std::vector<PointTuple> find_occurrences(const Configuration& c, const PointSet& a,
                                         std::optional<std::vector<int>> index_set = {},
                                         std::size_t limit = static_cast<std::size_t>(-1),
                                         std::size_t budget = 10'000'000);

struct LocalPropertyCheck {
  bool holds = false;
  std::optional<std::vector<Rat>> witness;  // violating subset when holds is false
  bool exhaustive = true;
  std::size_t checked = 0;
};

struct SampleMode {
  std::size_t samples;
  std::uint64_t seed;
};

LocalPropertyCheck satisfies_local_property(const PointSet& a, int k, long long ell,
                                            std::size_t budget = 10'000'000,
                                            std::optional<SampleMode> sample_mode = {});

}  // namespace diffset
