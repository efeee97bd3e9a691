#include "diffset/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace diffset {

namespace {

using I128 = __int128;

long long llgcd(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void gcd_reduce(IntVec& row) {
  long long g = 0;
  for (long long x : row) g = llgcd(g, x);
  if (g > 1)
    for (long long& x : row) x /= g;
}

constexpr I128 kEntryLimit = static_cast<I128>(1) << 62;
constexpr long long kReduceThreshold = 1ll << 40;

// row = pivot_val * row - factor * pivot_row. Entries are gcd-reduced only
// once they grow, which keeps the common small-entry case allocation-free.
// Returns false if a value leaves the safe int64 range even after reduction.
bool eliminate(IntVec& row, const IntVec& pivot_row, long long pivot_val, long long factor) {
  static thread_local std::vector<I128> wide;
  wide.assign(row.size(), 0);
  bool large = false;
  for (std::size_t c = 0; c < row.size(); ++c) {
    wide[c] = static_cast<I128>(pivot_val) * row[c] - static_cast<I128>(factor) * pivot_row[c];
    if (wide[c] >= kReduceThreshold || wide[c] <= -kReduceThreshold) large = true;
  }
  I128 g = 0;
  if (large) {
    for (std::size_t c = 0; c < row.size() && g != 1; ++c) {
      I128 a = wide[c] < 0 ? -wide[c] : wide[c];
      while (g != 0 && a != 0) {
        I128 t = a % g;
        a = g;
        g = t;
      }
      if (g == 0) g = a;
    }
  }
  for (std::size_t c = 0; c < row.size(); ++c) {
    I128 v = g > 1 ? wide[c] / g : wide[c];
    if (v >= kEntryLimit || v <= -kEntryLimit) return false;
    row[c] = static_cast<long long>(v);
  }
  return true;
}

int rank_via_rationals(const IntRows& rows, int cols) {
  std::vector<std::vector<Rat>> rr;
  rr.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rat> v(r.begin(), r.end());
    v.resize(cols);
    rr.push_back(std::move(v));
  }
  return static_cast<int>(rat_rref(std::move(rr), cols).rows.size());
}

}  // namespace

IntRowBasis::IntRowBasis(const IntRows& input, int cols) : cols_(cols) {
  for (const auto& r : input) {
    IntVec v = r;
    v.resize(cols);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      long long f = v[pivots_[i]];
      if (f == 0) continue;
      if (!eliminate(v, rows_[i], rows_[i][pivots_[i]], f))
        raise(errc::internal_invariant, "integer elimination overflow");
    }
    int pc = -1;
    for (int c = 0; c < cols; ++c)
      if (v[c] != 0) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    gcd_reduce(v);
    if (v[pc] < 0)
      for (auto& x : v) x = -x;
    // keep echelon order by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pc);
  }
}

bool IntRowBasis::contains(IntVec v) const {
  v.resize(cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long long f = v[pivots_[i]];
    if (f == 0) continue;
    if (!eliminate(v, rows_[i], rows_[i][pivots_[i]], f))
      raise(errc::internal_invariant, "integer elimination overflow");
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

int int_rank(const IntRows& rows, int cols) {
  IntRows work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    IntVec v = r;
    v.resize(cols);
    work.push_back(std::move(v));
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(work.size()); ++c) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(work.size()); ++r)
      if (work[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(work[rank], work[sel]);
    const long long pv = work[rank][c];
    for (int r = rank + 1; r < static_cast<int>(work.size()); ++r) {
      if (work[r][c] == 0) continue;
      if (!eliminate(work[r], work[rank], pv, work[r][c])) return rank_via_rationals(rows, cols);
    }
    ++rank;
  }
  return rank;
}

int int_rank_columns(const IntRows& rows, const std::vector<int>& columns) {
  IntRows sub(rows.size(), IntVec(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) sub[r][j] = rows[r][columns[j]];
  return int_rank(sub, static_cast<int>(columns.size()));
}

RatRref rat_rref(std::vector<std::vector<Rat>> rows, int cols) {
  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  return rat_rref_ordered(std::move(rows), order, cols);
}

RatRref rat_rref_ordered(std::vector<std::vector<Rat>> rows, const std::vector<int>& col_order,
                         int cols) {
  for (auto& r : rows) r.resize(cols);
  RatRref out;
  out.cols = cols;
  std::size_t next = 0;
  for (int c : col_order) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    const Rat pv = rows[next][c];
    for (auto& x : rows[next]) x /= pv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      const Rat f = rows[r][c];
      for (int j = 0; j < cols; ++j) rows[r][j] -= f * rows[next][j];
    }
    out.pivot_cols.push_back(c);
    ++next;
    if (next == rows.size()) break;
  }
  rows.resize(next);
  // report rows sorted by pivot column
  std::vector<std::size_t> perm(next);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return out.pivot_cols[a] < out.pivot_cols[b]; });
  RatRref sorted;
  sorted.cols = cols;
  for (std::size_t i : perm) {
    sorted.rows.push_back(std::move(rows[i]));
    sorted.pivot_cols.push_back(out.pivot_cols[i]);
  }
  return sorted;
}

bool rref_contains(const RatRref& rref, std::vector<Rat> v) {
  v.resize(rref.cols);
  for (std::size_t i = 0; i < rref.rows.size(); ++i) {
    const Rat f = v[rref.pivot_cols[i]];
    if (f == 0) continue;
    for (int j = 0; j < rref.cols; ++j) v[j] -= f * rref.rows[i][j];
  }
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::optional<std::vector<Rat>> combination_coefficients(const IntRows& rows, const IntVec& target,
                                                         int cols) {
  // Solve the k x t system  sum_i eps_i rows[i][c] = target[c].
  const int t = static_cast<int>(rows.size());
  std::vector<std::vector<Rat>> aug(cols, std::vector<Rat>(t + 1));
  for (int c = 0; c < cols; ++c) {
    for (int i = 0; i < t; ++i) aug[c][i] = rows[i][c];
    aug[c][t] = c < static_cast<int>(target.size()) ? target[c] : 0;
  }
  RatRref rr = rat_rref(std::move(aug), t + 1);
  std::vector<Rat> eps(t, Rat(0));
  for (std::size_t i = 0; i < rr.rows.size(); ++i) {
    if (rr.pivot_cols[i] == t) return std::nullopt;  // inconsistent
    eps[rr.pivot_cols[i]] = rr.rows[i][t];
  }
  return eps;
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(static_cast<std::size_t>(rows) * cols == entries_.size(), errc::dimension_mismatch,
          "entry count does not match the matrix shape");
  std::vector<std::vector<Rat>> rr(rows);
  for (int r = 0; r < rows; ++r)
    rr[r].assign(entries_.begin() + static_cast<std::size_t>(r) * cols,
                 entries_.begin() + static_cast<std::size_t>(r + 1) * cols);
  rref_ = rat_rref(std::move(rr), cols);
}

RationalMatrix RationalMatrix::from_int_rows(const IntRows& rows, int cols) {
  std::vector<Rat> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows)
    for (int c = 0; c < cols; ++c) entries.emplace_back(c < static_cast<int>(r.size()) ? r[c] : 0);
  return RationalMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

}  // namespace diffset
