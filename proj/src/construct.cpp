#include "diffset/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diffset/rng.hpp"

namespace diffset {

namespace {

bool extends_ap_free(const std::vector<long long>& s, const std::vector<char>& member,
                     long long x, long long n) {
  for (long long v : s) {
    const long long third = 2 * v - x;  // x, v, third with v in the middle
    if (third >= 1 && third <= n && third != x && member[third]) return false;
    const long long mid = 2 * x - v;  // v, x, mid with x in the middle
    if (mid >= 1 && mid <= n && mid != v && member[mid]) return false;
  }
  return true;
}

// exact maximum 3-AP-free subset of {1..n} by branch and bound
std::vector<long long> exact_ap_free(long long n) {
  std::vector<long long> best, cur;
  std::vector<char> member(n + 2, 0);
  auto dfs = [&](auto&& self, long long next) -> void {
    if (cur.size() + static_cast<std::size_t>(n - next + 1) <= best.size()) return;
    if (next > n) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (extends_ap_free(cur, member, next, n)) {
      cur.push_back(next);
      member[next] = 1;
      self(self, next + 1);
      member[next] = 0;
      cur.pop_back();
    }
    self(self, next + 1);
  };
  dfs(dfs, 1);
  return best;
}

// one sphere layer of the digit construction: digits < d in base 2d-1 with a
// fixed sum of squares; no 3-term progression within a layer
std::vector<long long> best_sphere_layer(long long n) {
  std::vector<long long> best;
  for (long long d = 2; d <= 16; ++d) {
    const long long q = 2 * d - 1;
    long long qt = q;
    int t = 1;
    while (qt <= n / q) {
      qt *= q;
      ++t;
    }
    for (; t >= 1; --t) {
      double count = 1;
      for (int j = 0; j < t; ++j) count *= static_cast<double>(d);
      if (count > 4e6) continue;
      // enumerate all digit vectors, bucket by norm
      std::map<long long, std::vector<long long>> layers;
      std::vector<int> digits(t, 0);
      while (true) {
        long long value = 0, norm = 0;
        for (int j = t - 1; j >= 0; --j) {
          value = value * q + digits[j];
          norm += static_cast<long long>(digits[j]) * digits[j];
        }
        if (value + 1 <= n) layers[norm].push_back(value + 1);
        int j = 0;
        while (j < t && digits[j] == d - 1) digits[j++] = 0;
        if (j == t) break;
        ++digits[j];
      }
      for (auto& [norm, layer] : layers)
        if (layer.size() > best.size()) best = std::move(layer);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<long long> greedy_extend(std::vector<long long> s, long long n) {
  std::vector<char> member(n + 2, 0);
  for (long long v : s) member[v] = 1;
  for (long long x = 1; x <= n; ++x) {
    if (member[x]) continue;
    if (extends_ap_free(s, member, x, n)) {
      s.push_back(x);
      member[x] = 1;
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

PointSet behrend_set(long long n) {
  require(n >= 1, errc::range_error, "n must be positive");
  require(n <= 10'000'000, errc::budget_exceeded, "range bound too large");
  if (n <= 30) return PointSet::from_integers(exact_ap_free(n));
  if (n > 100'000) return PointSet::from_integers(best_sphere_layer(n));
  const auto from_layer = greedy_extend(best_sphere_layer(n), n);
  const auto from_scratch = greedy_extend({}, n);
  return PointSet::from_integers(from_layer.size() >= from_scratch.size() ? from_layer
                                                                          : from_scratch);
}

bool has_three_term_ap(const PointSet& a) {
  const auto& e = a.elements();
  std::set<Rat> lookup(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (lookup.count(e[j] * 2 - e[i])) return true;  // e[i], e[j], 2e[j]-e[i]
  return false;
}

namespace {

// Satisfied difference equalities of a tuple of distinct values from a
// 3-AP-free set are exactly the disjoint-pair sum coincidences.
struct SumEquality {
  std::array<std::size_t, 4> support;  // indices into the host set, sorted
};

std::vector<SumEquality> sum_equalities(const std::vector<long long>& vals) {
  std::map<long long, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j) by_sum[vals[i] + vals[j]].push_back({i, j});
  std::vector<SumEquality> out;
  for (const auto& [sum, pairs] : by_sum) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = p + 1; q < pairs.size(); ++q) {
        std::array<std::size_t, 4> sup{pairs[p].first, pairs[p].second, pairs[q].first,
                                       pairs[q].second};
        std::sort(sup.begin(), sup.end());
        out.push_back(SumEquality{sup});
      }
  }
  return out;
}

// rank of all sum-coincidence equalities among the given positions; chains
// from different sums may be linearly dependent, so the rank is computed on
// the actual relation matrix
int sum_rank(const std::vector<long long>& vals, const std::vector<std::size_t>& positions) {
  const int m = static_cast<int>(positions.size());
  std::map<long long, std::vector<std::pair<int, int>>> classes;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      classes[vals[positions[i]] + vals[positions[j]]].push_back({i, j});
  IntRows rows;
  for (const auto& [sum, pairs] : classes)
    for (std::size_t q = 1; q < pairs.size(); ++q) {
      IntVec row(m, 0);
      row[pairs[0].first] += 1;
      row[pairs[0].second] += 1;
      row[pairs[q].first] -= 1;
      row[pairs[q].second] -= 1;
      rows.push_back(std::move(row));
    }
  return rows.empty() ? 0 : int_rank(rows, m);
}

}  // namespace

std::pair<PointSet, ConstructionTrace> random_local_set(int n, int k, const Rat& c, const Rat& a,
                                                        std::uint64_t seed, std::size_t budget) {
  require(n >= 1, errc::range_error, "n must be positive");
  require(k >= 2, errc::range_error, "k must be at least 2");
  require(Rat(1) < c && c <= Rat(2), errc::range_error, "c must lie in (1, 2]");
  require(a > 0, errc::range_error, "a must be positive");

  ConstructionTrace trace;
  trace.seed = seed;

  const Int grid = ceil_rational_power(Int(n), c, a);
  require(grid <= Int(10'000'000), errc::budget_exceeded, "grid bound too large");
  const PointSet behrend = behrend_set(static_cast<long long>(grid));
  trace.behrend_size = behrend.size();
  const auto s_vals = *behrend.as_ll();

  // keep each element with probability p = 3n/s
  std::vector<long long> kept;
  const Int p_num = Int(3) * n, p_den = Int(s_vals.size());
  Rng rng(seed);
  if (p_num >= p_den) {
    kept = s_vals;
  } else {
    for (long long v : s_vals)
      if (rng.bernoulli(static_cast<std::uint64_t>(p_num), static_cast<std::uint64_t>(p_den)))
        kept.push_back(v);
  }
  trace.sampled_size = kept.size();

  // destroy every subset of at most k elements whose satisfied-equality rank r
  // exceeds (m-1)/c, by deleting the largest element of each offender; it is
  // enough to visit unions of supports of satisfied equalities
  const Int cn = rat_num(c), cd = rat_den(c);
  std::vector<char> deleted(kept.size(), 0);
  const auto equalities = sum_equalities(kept);
  std::size_t nodes = 0;

  // extension candidates are found through an element index: a union can only
  // stay within k elements if the new equality overlaps the current support
  // (or fewer than k - 4 elements are used so far)
  std::vector<std::vector<std::size_t>> touching(kept.size());
  for (std::size_t e = 0; e < equalities.size(); ++e)
    for (std::size_t idx : equalities[e].support) touching[idx].push_back(e);

  auto offending = [&](const std::vector<std::size_t>& support) {
    const int m = static_cast<int>(support.size());
    const int r = sum_rank(kept, support);
    return std::make_pair(Int(r) * cn > Int(m - 1) * cd, r);
  };

  auto dfs = [&](auto&& self, std::vector<std::size_t> support, std::size_t next_eq) -> void {
    require(++nodes <= budget, errc::budget_exceeded, "heavy-subset scan budget exhausted");
    for (std::size_t idx : support)
      if (deleted[idx]) return;
    auto [bad, r] = offending(support);
    if (bad) {
      const std::size_t victim = support.back();  // largest position = largest value
      deleted[victim] = 1;
      ++trace.deleted_count;
      HeavyDeletion hd;
      for (std::size_t idx : support) hd.support.push_back(kept[idx]);
      hd.rank = r;
      hd.deleted = kept[victim];
      trace.heavy_deletions.push_back(std::move(hd));
      return;
    }
    // a same-support extension revisits this node, so only unions that grow
    // the support within the k-element room matter
    const std::size_t room = static_cast<std::size_t>(k) - support.size();
    if (room == 0) return;
    std::vector<std::size_t> candidates;
    if (room >= 4) {
      for (std::size_t e = next_eq; e < equalities.size(); ++e) candidates.push_back(e);
    } else {
      for (std::size_t idx : support)
        for (std::size_t e : touching[idx])
          if (e >= next_eq) candidates.push_back(e);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (std::size_t e : candidates) {
      std::size_t fresh = 0;
      for (std::size_t idx : equalities[e].support)
        if (std::find(support.begin(), support.end(), idx) == support.end()) ++fresh;
      if (fresh == 0 || fresh > room) continue;
      std::vector<std::size_t> merged = support;
      for (std::size_t idx : equalities[e].support)
        if (std::find(merged.begin(), merged.end(), idx) == merged.end()) merged.push_back(idx);
      std::sort(merged.begin(), merged.end());
      self(self, std::move(merged), e + 1);
    }
  };
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    std::vector<std::size_t> support(equalities[e].support.begin(), equalities[e].support.end());
    if (support.size() <= static_cast<std::size_t>(k)) dfs(dfs, std::move(support), e + 1);
  }

  std::vector<long long> result;
  for (std::size_t i = 0; i < kept.size() && result.size() < static_cast<std::size_t>(n); ++i)
    if (!deleted[i]) result.push_back(kept[i]);
  require(result.size() == static_cast<std::size_t>(n), errc::insufficient_density,
          "fewer than n elements survive the alteration; retry with larger n or another seed");
  return {PointSet::from_integers(result), std::move(trace)};
}

namespace {

template <typename T>
std::optional<SubsetRankViolation> scan_subset_ranks(const std::vector<T>& elems, int k,
                                                     const Int& cn, const Int& cd,
                                                     std::size_t budget) {
  const std::size_t n = elems.size();
  std::size_t used = 0;
  for (int m = 2; m <= k && static_cast<std::size_t>(m) <= n; ++m) {
    // minimal rank that makes an m-subset offending
    const Int min_rank = floor_div(Int(m - 1) * cd, cn) + 1;
    std::vector<std::vector<int>> contents;
    for (const auto& e : enumerate_equalities(m)) contents.push_back(e.content());
    std::vector<std::size_t> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    std::vector<T> vals(m);
    while (true) {
      require(++used <= budget, errc::budget_exceeded, "subset-rank scan budget exhausted");
      for (int i = 0; i < m; ++i) vals[i] = elems[pick[i]];
      IntRows satisfied;
      for (const auto& content : contents) {
        T acc{};
        for (int i = 0; i < m; ++i)
          if (content[i] != 0) acc += content[i] * vals[i];
        if (acc == 0) satisfied.emplace_back(content.begin(), content.end());
      }
      if (Int(satisfied.size()) >= min_rank) {
        const int r = int_rank(satisfied, m);
        if (Int(r) >= min_rank) {
          SubsetRankViolation v;
          v.subset.assign(vals.begin(), vals.end());
          v.rank = r;
          return v;
        }
      }
      int j = m - 1;
      while (j >= 0 && pick[j] == n - static_cast<std::size_t>(m - j)) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t2 = j + 1; t2 < m; ++t2) pick[t2] = pick[t2 - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SubsetRankViolation> find_subset_rank_violation(const PointSet& a, int k,
                                                              const Rat& c, std::size_t budget) {
  require(k >= 2, errc::range_error, "k must be at least 2");
  require(Rat(1) < c && c <= Rat(2), errc::range_error, "c must lie in (1, 2]");
  const Int cn = rat_num(c), cd = rat_den(c);
  if (auto ll = a.as_ll()) return scan_subset_ranks(*ll, k, cn, cd, budget);
  return scan_subset_ranks(a.elements(), k, cn, cd, budget);
}

std::pair<Rat, std::size_t> max_sum_multiplicity(const PointSet& a) {
  require(!a.empty(), errc::empty_set, "sum multiplicity of an empty set");
  std::map<Rat, std::size_t> counts;
  const auto& e = a.elements();
  for (const Rat& x : e)
    for (const Rat& y : e) ++counts[x + y];
  Rat best_value = 0;
  std::size_t best_count = 0;
  for (const auto& [value, count] : counts)
    if (count > best_count) {
      best_count = count;
      best_value = value;
    }
  return {best_value, best_count};
}

Int additive_energy(const PointSet& a) {
  require(!a.empty(), errc::empty_set, "additive energy of an empty set");
  std::map<Rat, Int> counts;
  const auto& e = a.elements();
  for (const Rat& x : e)
    for (const Rat& y : e) ++counts[x - y];
  Int energy = 0;
  for (const auto& [diff, count] : counts) energy += count * count;
  return energy;
}

namespace {

// exact |A-A| for a sorted vector of values
template <typename T>
std::size_t diff_count_of(const std::vector<T>& elems) {
  std::set<T> d;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) d.insert(elems[j] - elems[i]);
  return d.size();
}

template <typename T>
bool cube_hypothesis_on(const std::vector<T>& elems, int s, int t) {
  const Int n = Int(elems.size());
  if (n <= 1) return false;
  const Int d = Int(diff_count_of(elems));
  const unsigned e = static_cast<unsigned>(1) << t;
  return int_pow(d, e - 1) * int_pow(Int(8) * s, e) <= int_pow(n, e);
}

template <typename T>
struct CubeParts {
  std::vector<T> centers;
  std::vector<T> steps;
};

// elems sorted ascending
template <typename T>
CubeParts<T> find_cubes_on(const std::vector<T>& elems, int s, int t, CubeMode mode) {
  if (t == 1) {
    std::map<T, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        by_sum[elems[i] + elems[j]].push_back({i, j});
    const T* chosen = nullptr;
    if (mode == CubeMode::guaranteed) {
      // smallest sum with ordered-pair multiplicity at least 3s; a middle
      // element x with x + x = sum contributes one ordered pair
      for (const auto& [sum, pairs] : by_sum) {
        std::size_t ordered = 2 * pairs.size();
        const auto it = std::lower_bound(elems.begin(), elems.end(), sum / 2);
        if (it != elems.end() && *it + *it == sum) ++ordered;
        if (ordered >= static_cast<std::size_t>(3 * s)) {
          chosen = &sum;
          break;
        }
      }
    } else {
      // sum with the most disjoint distinct-element pairs
      std::size_t best = 0;
      for (const auto& [sum, pairs] : by_sum)
        if (pairs.size() > best) {
          best = pairs.size();
          chosen = &sum;
        }
    }
    require(chosen != nullptr && by_sum[*chosen].size() >= static_cast<std::size_t>(s),
            errc::not_found, "no sum with enough disjoint equal-sum pairs");
    CubeParts<T> parts;
    parts.centers.resize(2 * s);
    const auto& pairs = by_sum[*chosen];  // pairs with equal sum are disjoint
    for (int i = 0; i < s; ++i) {
      parts.centers[i] = elems[pairs[i].first];
      parts.centers[s + i] = elems[pairs[i].second];
    }
    return parts;
  }

  // find the most repeated positive difference, extract disjoint pairs by
  // taking alternating links of each arithmetic chain
  std::map<T, std::size_t> diff_counts;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) ++diff_counts[elems[j] - elems[i]];
  const T* delta = nullptr;
  std::size_t best = 0;
  for (const auto& [d, count] : diff_counts)
    if (count > best) {
      best = count;
      delta = &d;
    }
  require(delta != nullptr, errc::not_found, "set has no repeated structure to recurse on");

  std::vector<T> left;
  std::set<T> used;
  for (const T& x : elems) {
    if (used.count(x)) continue;
    if (!std::binary_search(elems.begin(), elems.end(), x + *delta)) continue;
    // x starts a pair; mark both endpoints so the next link is skipped
    left.push_back(x);
    used.insert(x);
    used.insert(x + *delta);
  }
  if (mode == CubeMode::guaranteed)
    require(cube_hypothesis_on(left, s, t - 1), errc::not_found, "recursive hypothesis failed");
  CubeParts<T> parts = find_cubes_on(left, s, t - 1, mode);
  parts.steps.push_back(*delta);
  return parts;
}

}  // namespace

// d <= (n/8s)^(e/(e-1)) with e = 2^t, compared as d^(e-1) (8s)^e <= n^e
bool cube_hypothesis_holds(const PointSet& a, int s, int t) {
  require(s >= 1 && t >= 1, errc::range_error, "s and t must be positive");
  if (auto ll = a.as_ll()) return cube_hypothesis_on(*ll, s, t);
  return cube_hypothesis_on(a.elements(), s, t);
}

CubeStructure find_equal_sum_cubes(const PointSet& a, int s, int t, CubeMode mode) {
  require(s >= 1 && t >= 1, errc::range_error, "s and t must be positive");
  require(a.size() >= 2, errc::range_error, "need at least two elements");
  if (mode == CubeMode::guaranteed)
    require(cube_hypothesis_holds(a, s, t), errc::not_found,
            "difference set too large for the guaranteed mode hypothesis");
  CubeStructure cube;
  cube.s = s;
  cube.t = t;
  if (auto ll = a.as_ll()) {
    const CubeParts<long long> parts = find_cubes_on(*ll, s, t, mode);
    cube.centers.assign(parts.centers.begin(), parts.centers.end());
    cube.steps.assign(parts.steps.begin(), parts.steps.end());
  } else {
    CubeParts<Rat> parts = find_cubes_on(a.elements(), s, t, mode);
    cube.centers = std::move(parts.centers);
    cube.steps = std::move(parts.steps);
  }
  // expansion points must be distinct elements of the input set
  const PointSet expanded = cube_point_set(cube);
  for (const Rat& x : expanded.elements())
    require(a.contains(x), errc::internal_invariant, "expansion point escapes the input set");
  require(expanded.size() == static_cast<std::size_t>(2 * s) << (t - 1), errc::internal_invariant,
          "expansion points collide");
  return cube;
}

PointSet cube_point_set(const CubeStructure& cube) {
  const int s = cube.s, t = cube.t;
  require(s >= 1 && t >= 1 && cube.centers.size() == static_cast<std::size_t>(2 * s) &&
              cube.steps.size() == static_cast<std::size_t>(t - 1),
          errc::range_error, "malformed cube structure");
  const Rat common = cube.centers[0] + cube.centers[s];
  for (int i = 0; i < s; ++i)
    require(cube.centers[i] + cube.centers[s + i] == common, errc::range_error,
            "center pairs do not share a common sum");
  for (const Rat& d : cube.steps)
    require(d > 0, errc::range_error, "steps must be positive");

  std::vector<Rat> points;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (t - 1)); ++mask)
    for (const Rat& center : cube.centers) {
      Rat x = center;
      for (int j = 0; j < t - 1; ++j)
        if (mask & (std::size_t{1} << j)) x += cube.steps[j];
      points.push_back(x);
    }
  std::size_t dropped = 0;
  PointSet out = PointSet::from_values(std::move(points), &dropped);
  require(dropped == 0, errc::degenerate_cube, "expansion points collide");

  // |A' - A'| <= 3^(t-1) s^2 + (3^(t-1) - 1)/2
  const Int three = int_pow(Int(3), static_cast<unsigned>(t - 1));
  const Int bound = three * s * s + (three - 1) / 2;
  require(Int(distinct_differences(out)) <= bound, errc::internal_invariant,
          "cube difference bound violated");
  return out;
}

Configuration c_sum_configuration(int k) {
  require(k >= 4 && k % 2 == 0, errc::range_error, "k must be even and at least 4");
  const int d = k / 2 + 1;
  std::vector<std::array<int, 4>> quads;
  for (int j = 1; j <= k - d; ++j) quads.push_back({j, j + 1, j + d, j + d - 1});
  Configuration c = Configuration::from_quadruples(k, quads);
  if (k <= 12)
    require(c.is_c_good(Rat(2)).good, errc::internal_invariant,
            "equal-sum chain configuration must be 2-good");
  return c;
}

Configuration c_sum_plus_configuration(int k) {
  require(k >= 7 && k % 2 == 1, errc::range_error, "k must be odd and at least 7");
  const int d = (k + 1) / 2;
  std::vector<std::array<int, 4>> quads;
  for (int j = 1; j <= k - 1 - d; ++j) quads.push_back({j, j + 1, j + d, j + d - 1});
  quads.push_back({1, 2, 3, k});
  Configuration c = Configuration::from_quadruples(k, quads);
  if (k <= 12)
    require(c.is_c_good(Rat(2)).good, errc::internal_invariant,
            "augmented equal-sum configuration must be 2-good");
  return c;
}

}  // namespace diffset
