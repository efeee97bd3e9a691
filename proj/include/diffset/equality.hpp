#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffset/linalg.hpp"
#include "diffset/numeric.hpp"

namespace diffset {

using IndexPair = std::pair<int, int>;  // sorted, 1-based

// A linear form over x_1..x_k as its coefficient vector. Forms coming from
// difference equalities have integer coefficients summing to zero.
using LinearForm = std::vector<Rat>;

// One equation x_{i1} - x_{i2} - x_{i3} + x_{i4} = 0 with {i1,i4} != {i2,i3},
// stored as the multiset pair ({i1,i4}, {i2,i3}) oriented so that the sorted
// positive pair precedes the sorted negative pair. Identity is identity of
// the oriented multiset pair; the reduced content is cached.
class DifferenceEquality {
 public:
  DifferenceEquality() = default;  // empty sentinel; only canonicalize builds real values

  static DifferenceEquality canonicalize(int i1, int i2, int i3, int i4, int k);

  int variable_count() const { return k_; }
  IndexPair positives() const { return pos_; }
  IndexPair negatives() const { return neg_; }
  // (i1, i2, i3, i4) with {i1,i4} = positives, {i2,i3} = negatives
  std::array<int, 4> quadruple() const { return {pos_.first, neg_.first, neg_.second, pos_.second}; }

  // positives and negatives intersect but differ; the content reduces to
  // x_a - x_b
  bool degenerate() const { return degenerate_; }

  const std::vector<int>& content() const { return content_; }
  std::vector<Rat> content_rat() const;
  IntVec content_ll() const { return IntVec(content_.begin(), content_.end()); }

  bool involves(int i) const { return content_[i - 1] != 0; }
  std::vector<int> variables() const;

  bool opposite_sign(int i, int j) const;
  bool same_sign(int i, int j) const;
  std::vector<IndexPair> opposite_sign_pairs() const;
  std::vector<IndexPair> same_sign_pairs() const;

  // Evaluates the content at a point; zero means the tuple satisfies the
  // equation.
  Rat evaluate(const std::vector<Rat>& point) const;

  std::string to_string() const;

  friend bool operator==(const DifferenceEquality& a, const DifferenceEquality& b) {
    return a.k_ == b.k_ && a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }
  // lexicographic on (content, positives, negatives)
  friend bool operator<(const DifferenceEquality& a, const DifferenceEquality& b);

 private:
  int k_ = 0;
  IndexPair pos_{};
  IndexPair neg_{};
  bool degenerate_ = false;
  std::vector<int> content_;
};

// All canonical difference equalities on k variables in a fixed deterministic
// order, optionally restricted to those involving a given variable and/or the
// nondegenerate ones.
std::vector<DifferenceEquality> enumerate_equalities(int k, std::optional<int> involving = {},
                                                     bool nondegenerate_only = false);

// Recovers the equality whose content equals the given form, if the form is a
// difference-equality content. Degenerate contents x_a - x_b admit several
// quadruple representations; a fixed representative is returned.
std::optional<DifferenceEquality> equality_from_content(const std::vector<Rat>& form, int k);

}  // namespace diffset
