#include "diffset/equality.hpp"

#include <algorithm>

namespace diffset {

namespace {

std::vector<int> content_of(int k, IndexPair pos, IndexPair neg) {
  std::vector<int> c(k, 0);
  c[pos.first - 1] += 1;
  c[pos.second - 1] += 1;
  c[neg.first - 1] -= 1;
  c[neg.second - 1] -= 1;
  return c;
}

}  // namespace

DifferenceEquality DifferenceEquality::canonicalize(int i1, int i2, int i3, int i4, int k) {
  require(k >= 1, errc::range_error, "variable count must be positive");
  for (int i : {i1, i2, i3, i4})
    require(1 <= i && i <= k, errc::index_out_of_range,
            "index " + std::to_string(i) + " outside 1.." + std::to_string(k));
  IndexPair pos = std::minmax(i1, i4);
  IndexPair neg = std::minmax(i2, i3);
  require(pos != neg, errc::identity_satisfied, "equation is identically satisfied");
  if (neg < pos) std::swap(pos, neg);

  DifferenceEquality e;
  e.k_ = k;
  e.pos_ = pos;
  e.neg_ = neg;
  e.content_ = content_of(k, pos, neg);
  const bool disjoint = pos.first != neg.first && pos.first != neg.second &&
                        pos.second != neg.first && pos.second != neg.second;
  e.degenerate_ = !disjoint;
  return e;
}

std::vector<Rat> DifferenceEquality::content_rat() const {
  return std::vector<Rat>(content_.begin(), content_.end());
}

std::vector<int> DifferenceEquality::variables() const {
  std::vector<int> vars;
  for (int i = 0; i < k_; ++i)
    if (content_[i] != 0) vars.push_back(i + 1);
  return vars;
}

bool DifferenceEquality::opposite_sign(int i, int j) const {
  if (i == j) return false;
  const bool i_pos = i == pos_.first || i == pos_.second;
  const bool i_neg = i == neg_.first || i == neg_.second;
  const bool j_pos = j == pos_.first || j == pos_.second;
  const bool j_neg = j == neg_.first || j == neg_.second;
  return (i_pos && j_neg) || (i_neg && j_pos);
}

bool DifferenceEquality::same_sign(int i, int j) const {
  if (i == j) return false;
  const IndexPair p{std::min(i, j), std::max(i, j)};
  return pos_ == p || neg_ == p;
}

std::vector<IndexPair> DifferenceEquality::opposite_sign_pairs() const {
  std::vector<IndexPair> out;
  for (int p : {pos_.first, pos_.second})
    for (int n : {neg_.first, neg_.second}) {
      if (p == n) continue;
      IndexPair pr = std::minmax(p, n);
      if (std::find(out.begin(), out.end(), pr) == out.end()) out.push_back(pr);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexPair> DifferenceEquality::same_sign_pairs() const {
  std::vector<IndexPair> out;
  if (pos_.first != pos_.second) out.push_back(pos_);
  if (neg_.first != neg_.second && neg_ != pos_) out.push_back(neg_);
  std::sort(out.begin(), out.end());
  return out;
}

Rat DifferenceEquality::evaluate(const std::vector<Rat>& point) const {
  require(static_cast<int>(point.size()) == k_, errc::dimension_mismatch,
          "tuple length does not match variable count");
  return point[pos_.first - 1] + point[pos_.second - 1] - point[neg_.first - 1] -
         point[neg_.second - 1];
}

std::string DifferenceEquality::to_string() const {
  std::string s;
  for (int i = 0; i < k_; ++i) {
    int c = content_[i];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c > 0 ? " + " : " - ";
    }
    if (std::abs(c) != 1) s += std::to_string(std::abs(c)) + "*";
    s += "x" + std::to_string(i + 1);
  }
  return s + " = 0";
}

bool operator<(const DifferenceEquality& a, const DifferenceEquality& b) {
  if (a.content_ != b.content_) return a.content_ < b.content_;
  if (a.pos_ != b.pos_) return a.pos_ < b.pos_;
  return a.neg_ < b.neg_;
}

std::vector<DifferenceEquality> enumerate_equalities(int k, std::optional<int> involving,
                                                     bool nondegenerate_only) {
  require(k >= 2, errc::range_error, "enumeration needs k >= 2");
  if (involving) require(1 <= *involving && *involving <= k, errc::index_out_of_range, "anchor");
  std::vector<IndexPair> multisets;
  for (int a = 1; a <= k; ++a)
    for (int b = a; b <= k; ++b) multisets.emplace_back(a, b);
  std::vector<DifferenceEquality> out;
  for (std::size_t p = 0; p < multisets.size(); ++p)
    for (std::size_t q = p + 1; q < multisets.size(); ++q) {
      auto e = DifferenceEquality::canonicalize(multisets[p].first, multisets[q].first,
                                                multisets[q].second, multisets[p].second, k);
      if (nondegenerate_only && e.degenerate()) continue;
      if (involving && !e.involves(*involving)) continue;
      out.push_back(std::move(e));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DifferenceEquality> equality_from_content(const std::vector<Rat>& form, int k) {
  if (static_cast<int>(form.size()) != k) return std::nullopt;
  std::vector<int> pos, neg;
  Rat sum = 0;
  for (int i = 0; i < k; ++i) {
    const Rat& c = form[i];
    sum += c;
    if (c == 0) continue;
    if (!is_integer(c)) return std::nullopt;
    const Int n = rat_num(c);
    if (n > 2 || n < -2) return std::nullopt;
    for (Int j = 0; j < (n > 0 ? n : -n); ++j) (n > 0 ? pos : neg).push_back(i + 1);
  }
  if (sum != 0) return std::nullopt;
  if (pos.size() == 2 && neg.size() == 2)
    return DifferenceEquality::canonicalize(pos[0], neg[0], neg[1], pos[1], k);
  if (pos.size() == 1 && neg.size() == 1) {
    // degenerate content x_a - x_b; representative quadruple (a, b, a, a)
    return DifferenceEquality::canonicalize(pos[0], neg[0], pos[0], pos[0], k);
  }
  return std::nullopt;
}

}  // namespace diffset
