#include "diffset/solution.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "diffset/rng.hpp"

namespace diffset {

PointSet PointSet::from_values(std::vector<Rat> values, std::size_t* dropped_duplicates) {
  std::sort(values.begin(), values.end());
  const auto last = std::unique(values.begin(), values.end());
  if (dropped_duplicates) *dropped_duplicates = std::distance(last, values.end());
  values.erase(last, values.end());
  PointSet s;
  s.elements_ = std::move(values);
  return s;
}

PointSet PointSet::from_integers(const std::vector<long long>& values) {
  std::vector<Rat> v(values.begin(), values.end());
  return from_values(std::move(v));
}

bool PointSet::contains(const Rat& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::optional<std::vector<long long>> PointSet::as_ll() const {
  std::vector<long long> out;
  out.reserve(elements_.size());
  for (const Rat& r : elements_) {
    if (!is_integer(r)) return std::nullopt;
    const Int n = rat_num(r);
    if (n > std::numeric_limits<long long>::max() / 4 ||
        n < std::numeric_limits<long long>::min() / 4)
      return std::nullopt;
    out.push_back(static_cast<long long>(n));
  }
  return out;
}

std::size_t distinct_differences(const PointSet& a) {
  require(!a.empty(), errc::empty_set, "difference set of an empty set");
  if (auto ll = a.as_ll()) {
    std::vector<long long> diffs;
    diffs.reserve(ll->size() * (ll->size() - 1) / 2);
    for (std::size_t i = 0; i < ll->size(); ++i)
      for (std::size_t j = i + 1; j < ll->size(); ++j) diffs.push_back((*ll)[j] - (*ll)[i]);
    std::sort(diffs.begin(), diffs.end());
    return std::unique(diffs.begin(), diffs.end()) - diffs.begin();
  }
  std::set<Rat> diffs;
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) diffs.insert(e[j] - e[i]);
  return diffs.size();
}

Configuration configuration_of(const PointTuple& tuple) {
  const int k = static_cast<int>(tuple.size());
  require(k >= 2, errc::range_error, "configuration_of needs at least two coordinates");
  std::vector<DifferenceEquality> satisfied;
  for (auto& e : enumerate_equalities(k))
    if (e.evaluate(tuple) == 0) satisfied.push_back(std::move(e));
  return Configuration(k, std::move(satisfied));
}

namespace {

PointTuple solve_with_free_values(const Configuration& c, const std::vector<Rat>& free_values) {
  const auto& rref = c.rational_matrix().rref();
  const int k = c.variable_count();
  std::vector<bool> is_pivot(k, false);
  for (int p : rref.pivot_cols) is_pivot[p] = true;
  PointTuple x(k);
  std::size_t fi = 0;
  for (int i = 0; i < k; ++i)
    if (!is_pivot[i]) x[i] = free_values[fi++];
  for (std::size_t r = 0; r < rref.rows.size(); ++r) {
    Rat v = 0;
    for (int j = 0; j < k; ++j)
      if (!is_pivot[j] && rref.rows[r][j] != 0) v -= rref.rows[r][j] * x[j];
    x[rref.pivot_cols[r]] = v;
  }
  return x;
}

bool solves(const Configuration& c, const PointTuple& t) {
  for (const auto& e : c.equalities())
    if (e.evaluate(t) != 0) return false;
  return true;
}

}  // namespace

GenericSolution generic_solution(const Configuration& c, std::uint64_t seed) {
  const int k = c.variable_count();
  const int free_count = c.dim();
  const auto all = enumerate_equalities(k);
  std::vector<bool> implied(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) implied[i] = c.implies(all[i]);

  Rng rng(seed);
  Int range = 1'000'000;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rat> free_values;
    free_values.reserve(free_count);
    for (int f = 0; f < free_count; ++f) {
      const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(range)) + 1;
      Int draw = 0;
      for (unsigned b = 0; b < bits; b += 32) draw = (draw << 32) | Int(rng.next() & 0xffffffffull);
      free_values.emplace_back(draw % range);
    }
    PointTuple x = solve_with_free_values(c, free_values);
    bool generic = true;
    std::vector<DifferenceEquality> satisfied;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const bool sat = all[i].evaluate(x) == 0;
      if (sat && !implied[i]) {
        generic = false;
        break;
      }
      if (sat) satisfied.push_back(all[i]);
    }
    if (generic) return GenericSolution{std::move(x), std::move(satisfied)};
    range *= range;
  }
  raise(errc::retry_limit_exceeded, "no generic solution found within the retry limit");
}

bool is_generic(const Configuration& c, const PointTuple& tuple) {
  require(static_cast<int>(tuple.size()) == c.variable_count(), errc::dimension_mismatch,
          "tuple length does not match the configuration");
  require(solves(c, tuple), errc::not_a_solution, "tuple does not solve the configuration");
  for (const auto& e : enumerate_equalities(c.variable_count()))
    if (e.evaluate(tuple) == 0 && !c.implies(e)) return false;
  return true;
}

std::size_t generic_diff_count(const Configuration& c, std::uint64_t seed) {
  require(c.is_valid(), errc::not_valid, "generic_diff_count needs a valid configuration");
  auto count_for = [&](std::uint64_t s) {
    auto sol = generic_solution(c, s);
    return distinct_differences(PointSet::from_values(sol.tuple));
  };
  const std::size_t first = count_for(seed);
  const std::size_t second = count_for(split_seed(seed, 0x5eed));
  require(first == second, errc::internal_invariant,
          "generic difference count disagreed between two seeds");
  return first;
}

long long bounding_diffs_lower(int k, int d) {
  require(k >= 1 && 1 <= d && d <= k, errc::range_error, "need 1 <= d <= k");
  if (2 * d <= k + 2) return static_cast<long long>(d - 1) * (d - 1);
  const long long kk = k;
  return kk * (kk - 1) / 2 - static_cast<long long>(k - d) * (k - d + 1);
}

long long odd_bounding_diffs_lower(int k) {
  require(k >= 1 && k % 2 == 1, errc::range_error, "k must be odd");
  const long long v = static_cast<long long>(k + 1) * (k + 1) / 4 - 4;
  return std::max(0ll, v);
}

std::vector<PointTuple> find_occurrences(const Configuration& c, const PointSet& a,
                                         std::optional<std::vector<int>> index_set,
                                         std::size_t limit, std::size_t budget) {
  const int k = c.variable_count();
  std::vector<int> idx;
  if (index_set) {
    idx = *index_set;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    require(!idx.empty(), errc::empty_index_set, "index set must be nonempty");
    for (int i : idx) require(1 <= i && i <= k, errc::index_out_of_range, "index outside 1..k");
  } else {
    idx.resize(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
  }
  const int m = static_cast<int>(idx.size());

  // Forms supported on the index set: eliminate the complement columns first,
  // then keep the rows whose pivots land inside the set.
  std::vector<int> order;
  std::vector<bool> in_set(k, false);
  for (int i : idx) in_set[i - 1] = true;
  for (int j = 0; j < k; ++j)
    if (!in_set[j]) order.push_back(j);
  for (int i : idx) order.push_back(i - 1);
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : c.matrix()) rows.emplace_back(r.begin(), r.end());
  const RatRref full = rat_rref_ordered(std::move(rows), order, k);

  std::vector<int> col_of(k, -1);  // original column -> position within the set
  for (int j = 0; j < m; ++j) col_of[idx[j] - 1] = j;
  std::vector<std::vector<Rat>> proj_rows;
  std::vector<int> proj_pivots;
  for (std::size_t r = 0; r < full.rows.size(); ++r) {
    if (col_of[full.pivot_cols[r]] < 0) continue;
    std::vector<Rat> row(m);
    for (int j = 0; j < m; ++j) row[j] = full.rows[r][idx[j] - 1];
    proj_rows.push_back(std::move(row));
    proj_pivots.push_back(col_of[full.pivot_cols[r]]);
  }

  std::vector<bool> is_pivot(m, false);
  for (int p : proj_pivots) is_pivot[p] = true;
  std::vector<int> free_pos;
  for (int j = 0; j < m; ++j)
    if (!is_pivot[j]) free_pos.push_back(j);
  const auto& elems = a.elements();
  const std::size_t base = elems.size();
  require(base > 0, errc::empty_set, "point set is empty");

  std::vector<PointTuple> out;
  std::vector<std::size_t> odo(free_pos.size(), 0);
  std::size_t used = 0;
  while (true) {
    require(++used <= budget, errc::budget_exceeded, "occurrence enumeration budget exhausted");
    PointTuple vals(m);
    for (std::size_t f = 0; f < free_pos.size(); ++f) vals[free_pos[f]] = elems[odo[f]];
    bool ok = true;
    for (std::size_t r = 0; r < proj_rows.size() && ok; ++r) {
      Rat v = 0;
      for (int j = 0; j < m; ++j)
        if (!is_pivot[j] && proj_rows[r][j] != 0) v -= proj_rows[r][j] * vals[j];
      vals[proj_pivots[r]] = v;
      if (!a.contains(v)) ok = false;
    }
    if (ok) {
      std::vector<Rat> sorted = vals;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (ok) {
      out.push_back(std::move(vals));
      if (out.size() >= limit) break;
    }
    // advance the odometer in lexicographic order of free values
    std::size_t f = free_pos.size();
    while (f > 0) {
      --f;
      if (++odo[f] < base) break;
      odo[f] = 0;
      if (f == 0) return out;
    }
    if (free_pos.empty()) break;
  }
  return out;
}

namespace {

template <typename T>
std::size_t count_diffs_small(const std::vector<T>& vals) {
  std::vector<T> d;
  d.reserve(vals.size() * (vals.size() - 1) / 2);
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      d.push_back(vals[j] > vals[i] ? vals[j] - vals[i] : vals[i] - vals[j]);
  std::sort(d.begin(), d.end());
  return std::unique(d.begin(), d.end()) - d.begin();
}

}  // namespace

LocalPropertyCheck satisfies_local_property(const PointSet& a, int k, long long ell,
                                            std::size_t budget,
                                            std::optional<SampleMode> sample_mode) {
  const std::size_t n = a.size();
  require(k >= 1 && n >= static_cast<std::size_t>(k), errc::range_error,
          "need at least k elements");
  LocalPropertyCheck result;
  if (ell <= 0) {
    result.holds = true;
    return result;
  }
  const auto ll = a.as_ll();

  std::vector<long long> ll_vals(k);
  std::vector<long long> ll_diffs;
  ll_diffs.reserve(static_cast<std::size_t>(k) * k);
  auto subset_ok = [&](const std::vector<std::size_t>& pick) {
    if (ll) {
      ll_diffs.clear();
      for (int i = 0; i < k; ++i) ll_vals[i] = (*ll)[pick[i]];
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) ll_diffs.push_back(ll_vals[j] - ll_vals[i]);
      std::sort(ll_diffs.begin(), ll_diffs.end());
      const auto distinct = std::unique(ll_diffs.begin(), ll_diffs.end()) - ll_diffs.begin();
      return distinct >= ell;
    }
    std::vector<Rat> vals(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) vals[i] = a.elements()[pick[i]];
    return count_diffs_small(vals) >= static_cast<std::size_t>(ell);
  };
  auto witness_of = [&](const std::vector<std::size_t>& pick) {
    std::vector<Rat> w(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) w[i] = a.elements()[pick[i]];
    return w;
  };

  if (sample_mode) {
    Rng rng(sample_mode->seed);
    result.exhaustive = false;
    for (std::size_t s = 0; s < sample_mode->samples; ++s) {
      std::vector<std::size_t> pool(n);
      for (std::size_t i = 0; i < n; ++i) pool[i] = i;
      std::vector<std::size_t> pick;
      for (int j = 0; j < k; ++j) {
        const std::size_t at = rng.below(pool.size());
        pick.push_back(pool[at]);
        pool.erase(pool.begin() + at);
      }
      std::sort(pick.begin(), pick.end());
      ++result.checked;
      if (!subset_ok(pick)) {
        result.witness = witness_of(pick);
        return result;
      }
    }
    result.holds = true;
    return result;
  }

  const Int total = binomial(Int(n), static_cast<unsigned>(k));
  require(total <= Int(budget), errc::budget_exceeded,
          "subset count " + total.str() + " exceeds the budget; use sampled mode");
  std::vector<std::size_t> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ++result.checked;
    if (!subset_ok(pick)) {
      result.witness = witness_of(pick);
      return result;
    }
    int j = k - 1;
    while (j >= 0 && pick[j] == n - static_cast<std::size_t>(k - j)) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  result.holds = true;
  return result;
}

}  // namespace diffset
