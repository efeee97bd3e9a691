#pragma once

#include <optional>
#include <vector>

#include "diffset/numeric.hpp"

namespace diffset {

using IntVec = std::vector<long long>;
using IntRows = std::vector<IntVec>;

// Row-echelon basis of an integer row space. Rows are kept integral and
// gcd-reduced; membership tests never leave exact arithmetic.
class IntRowBasis {
 public:
  IntRowBasis() = default;
  IntRowBasis(const IntRows& rows, int cols);

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const IntRows& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  bool contains(IntVec v) const;

 private:
  int cols_ = 0;
  IntRows rows_;
  std::vector<int> pivots_;
};

int int_rank(const IntRows& rows, int cols);

// Rank of the matrix restricted to the given columns.
int int_rank_columns(const IntRows& rows, const std::vector<int>& columns);

struct RatRref {
  std::vector<std::vector<Rat>> rows;  // reduced row echelon form, nonzero rows only
  std::vector<int> pivot_cols;         // one per row, strictly increasing
  int cols = 0;
};

RatRref rat_rref(std::vector<std::vector<Rat>> rows, int cols);

// RREF with columns eliminated in the given priority order. pivot_cols are
// reported in original column indices.
RatRref rat_rref_ordered(std::vector<std::vector<Rat>> rows, const std::vector<int>& col_order,
                         int cols);

bool rref_contains(const RatRref& rref, std::vector<Rat> v);

// Solves sum_i eps_i * rows[i] = target exactly. Returns one solution if
// consistent. Unique when the rows are linearly independent.
std::optional<std::vector<Rat>> combination_coefficients(const IntRows& rows,
                                                         const IntVec& target, int cols);

// Exact-rational matrix with its reduced row echelon form computed on
// construction, so values are immutable and freely shareable.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols, std::vector<Rat> entries);
  static RationalMatrix from_int_rows(const IntRows& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const RatRref& rref() const { return rref_; }
  int rank() const { return static_cast<int>(rref_.rows.size()); }
  bool row_space_contains(std::vector<Rat> v) const { return rref_contains(rref_, std::move(v)); }

 private:
  int rows_;
  int cols_;
  std::vector<Rat> entries_;
  RatRref rref_;
};

}  // namespace diffset
