#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diffset/equality.hpp"
#include "diffset/linalg.hpp"

namespace diffset {

// Subset cap for the heavy-part scan: exhaustive through k = 12 by default.
inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 12;

struct ImplicationCertificate {
  std::vector<Rat> coefficients;  // one per equality of the implying collection
};

struct CGoodness {
  bool good = false;
  std::string reason;  // "" when good; otherwise names the failing property
  std::optional<DifferenceEquality> witness_equality;  // implied equality, for invalid/AP cases
  std::optional<std::vector<int>> heavy_part;
};

// A finite collection of canonical difference equalities on x_1..x_k with its
// exact constraint matrix. Immutable; all caches are built on construction.
class Configuration {
 public:
  Configuration(int k, std::vector<DifferenceEquality> equalities);
  static Configuration empty(int k) { return Configuration(k, {}); }
  static Configuration from_quadruples(int k, const std::vector<std::array<int, 4>>& quads);

  int variable_count() const { return k_; }
  std::size_t size() const { return equalities_.size(); }
  const std::vector<DifferenceEquality>& equalities() const { return equalities_; }
  const IntRows& matrix() const { return matrix_; }
  const RationalMatrix& rational_matrix() const { return *rat_matrix_; }

  int rank() const { return rank_; }
  bool linearly_independent() const { return rank_ == static_cast<int>(equalities_.size()); }

  int dim() const { return k_ - rank_; }
  int dim_restricted(const std::vector<int>& index_set) const;

  bool implies(const DifferenceEquality& target) const;
  bool implies_form(const IntVec& content) const;

  // Nonempty exactly when this collection, taken as a whole, minimally
  // implies the target: linearly independent equalities, target in the span,
  // and every combination coefficient nonzero.
  std::optional<ImplicationCertificate> minimally_implies(const DifferenceEquality& target) const;

  std::vector<DifferenceEquality> implied_difference_equalities(
      std::optional<int> involving = {}, bool nondegenerate_only = false) const;

  bool is_valid() const;
  bool is_ap_free() const;

  std::vector<std::vector<int>> heavy_parts(const Rat& c,
                                            std::size_t subset_cap = kDefaultSubsetCap) const;
  CGoodness is_c_good(const Rat& c, std::size_t subset_cap = kDefaultSubsetCap) const;

  Configuration with_equality(const DifferenceEquality& e) const;
  Configuration without_index(std::size_t idx) const;

  std::string to_string() const;

 private:
  int k_;
  std::vector<DifferenceEquality> equalities_;
  IntRows matrix_;
  std::shared_ptr<const RationalMatrix> rat_matrix_;
  std::shared_ptr<const IntRowBasis> basis_;
  int rank_ = 0;
};

bool equivalent(const Configuration& a, const Configuration& b);

}  // namespace diffset
