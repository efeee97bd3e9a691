#include "diffset/configuration.hpp"

#include <algorithm>

namespace diffset {

Configuration::Configuration(int k, std::vector<DifferenceEquality> equalities) : k_(k) {
  require(k >= 1, errc::range_error, "variable count must be positive");
  for (auto& e : equalities) {
    require(e.variable_count() == k, errc::dimension_mismatch,
            "equality variable count differs from configuration");
    if (std::find(equalities_.begin(), equalities_.end(), e) == equalities_.end())
      equalities_.push_back(std::move(e));
  }
  matrix_.reserve(equalities_.size());
  for (const auto& e : equalities_) matrix_.push_back(e.content_ll());
  rat_matrix_ = std::make_shared<RationalMatrix>(RationalMatrix::from_int_rows(matrix_, k_));
  basis_ = std::make_shared<IntRowBasis>(matrix_, k_);
  rank_ = basis_->rank();
}

Configuration Configuration::from_quadruples(int k, const std::vector<std::array<int, 4>>& quads) {
  std::vector<DifferenceEquality> eqs;
  eqs.reserve(quads.size());
  for (const auto& q : quads)
    eqs.push_back(DifferenceEquality::canonicalize(q[0], q[1], q[2], q[3], k));
  return Configuration(k, std::move(eqs));
}

int Configuration::dim_restricted(const std::vector<int>& index_set) const {
  require(!index_set.empty(), errc::empty_index_set, "dim_restricted needs a nonempty index set");
  std::vector<bool> in_set(k_ + 1, false);
  for (int i : index_set) {
    require(1 <= i && i <= k_, errc::index_out_of_range, "index outside 1..k");
    in_set[i] = true;
  }
  std::vector<int> complement_cols;
  int m = 0;
  for (int i = 1; i <= k_; ++i) {
    if (in_set[i])
      ++m;
    else
      complement_cols.push_back(i - 1);
  }
  // dim of the projection onto I: |I| - (rank(M) - rank(M restricted to the
  // complement columns)), by duality between the projection and the forms
  // supported on I.
  const int comp_rank = int_rank_columns(matrix_, complement_cols);
  return m - (rank_ - comp_rank);
}

bool Configuration::implies(const DifferenceEquality& target) const {
  require(target.variable_count() == k_, errc::dimension_mismatch,
          "target lives on a different variable count");
  return basis_->contains(target.content_ll());
}

bool Configuration::implies_form(const IntVec& content) const { return basis_->contains(content); }

std::optional<ImplicationCertificate> Configuration::minimally_implies(
    const DifferenceEquality& target) const {
  require(target.variable_count() == k_, errc::dimension_mismatch,
          "target lives on a different variable count");
  if (!linearly_independent()) return std::nullopt;
  auto eps = combination_coefficients(matrix_, target.content_ll(), k_);
  if (!eps) return std::nullopt;
  for (const Rat& e : *eps)
    if (e == 0) return std::nullopt;
  return ImplicationCertificate{std::move(*eps)};
}

std::vector<DifferenceEquality> Configuration::implied_difference_equalities(
    std::optional<int> involving, bool nondegenerate_only) const {
  std::vector<DifferenceEquality> out;
  if (rank_ == 0) return out;
  for (auto& e : enumerate_equalities(k_, involving, nondegenerate_only))
    if (implies(e)) out.push_back(std::move(e));
  return out;
}

bool Configuration::is_valid() const {
  if (rank_ == 0) return true;
  IntVec form(k_, 0);
  for (int a = 1; a <= k_; ++a)
    for (int b = a + 1; b <= k_; ++b) {
      form[a - 1] = 1;
      form[b - 1] = -1;
      const bool implied = basis_->contains(form);
      form[a - 1] = 0;
      form[b - 1] = 0;
      if (implied) return false;
    }
  return true;
}

bool Configuration::is_ap_free() const {
  if (rank_ == 0) return true;
  IntVec form(k_, 0);
  for (int mid = 1; mid <= k_; ++mid)
    for (int a = 1; a <= k_; ++a) {
      if (a == mid) continue;
      for (int b = a + 1; b <= k_; ++b) {
        if (b == mid) continue;
        form[a - 1] = 1;
        form[b - 1] = 1;
        form[mid - 1] = -2;
        const bool implied = basis_->contains(form);
        form[a - 1] = 0;
        form[b - 1] = 0;
        form[mid - 1] = 0;
        if (implied) return false;
      }
    }
  return true;
}

std::vector<std::vector<int>> Configuration::heavy_parts(const Rat& c,
                                                         std::size_t subset_cap) const {
  require(Rat(1) < c && c <= Rat(2), errc::range_error, "c must lie in (1, 2]");
  require(k_ < 63, errc::too_many_subsets, "variable count too large to enumerate subsets");
  const std::size_t total = (std::size_t{1} << k_) - 1;
  require(total <= subset_cap, errc::too_many_subsets,
          "2^k - 1 = " + std::to_string(total) + " subsets exceed the cap of " +
              std::to_string(subset_cap));
  const Int cn = rat_num(c), cd = rat_den(c);
  std::vector<std::vector<int>> heavy;
  std::vector<int> subset;
  for (std::size_t mask = 1; mask <= total; ++mask) {
    subset.clear();
    for (int i = 0; i < k_; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i + 1);
    const int m = static_cast<int>(subset.size());
    const int d = dim_restricted(subset);
    // d < ((c-1) m + 1) / c, i.e. c d < (c-1) m + 1, with c = cn/cd exact
    if (Int(d) * cn < (cn - cd) * m + cd) heavy.push_back(subset);
  }
  return heavy;
}

CGoodness Configuration::is_c_good(const Rat& c, std::size_t subset_cap) const {
  require(Rat(1) < c && c <= Rat(2), errc::range_error, "c must lie in (1, 2]");
  CGoodness result;
  if (!is_valid()) {
    result.reason = "invalid";
    for (auto& e : implied_difference_equalities()) {
      if (e.degenerate()) {
        result.witness_equality = e;
        break;
      }
      // a two-variable scaled form 2x_a - 2x_b also witnesses invalidity
      if (e.variables().size() == 2 && !e.degenerate()) {
        result.witness_equality = e;
        break;
      }
    }
    return result;
  }
  if (!is_ap_free()) {
    result.reason = "AP-containing";
    for (auto& e : implied_difference_equalities({}, true)) {
      if (e.variables().size() == 3) {
        result.witness_equality = e;
        break;
      }
    }
    return result;
  }
  auto heavy = heavy_parts(c, subset_cap);
  if (!heavy.empty()) {
    result.reason = "c-heavy";
    result.heavy_part = heavy.front();
    return result;
  }
  result.good = true;
  return result;
}

Configuration Configuration::with_equality(const DifferenceEquality& e) const {
  auto eqs = equalities_;
  eqs.push_back(e);
  return Configuration(k_, std::move(eqs));
}

Configuration Configuration::without_index(std::size_t idx) const {
  auto eqs = equalities_;
  eqs.erase(eqs.begin() + idx);
  return Configuration(k_, std::move(eqs));
}

std::string Configuration::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < equalities_.size(); ++i) {
    if (i) s += ", ";
    s += equalities_[i].to_string();
  }
  return s + "}";
}

bool equivalent(const Configuration& a, const Configuration& b) {
  require(a.variable_count() == b.variable_count(), errc::dimension_mismatch,
          "configurations live on different variable counts");
  if (a.rank() != b.rank()) return false;
  for (const auto& row : b.matrix())
    if (!a.implies_form(row)) return false;
  return true;
}

}  // namespace diffset
