#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffset/configuration.hpp"
#include "diffset/rng.hpp"

namespace diffset {

// How two difference equalities line up: pairs (i, j) whose variables appear
// with opposite sign in both (difference-aligned) or with the same sign in
// both (sum-aligned). Either list may be empty.
struct AlignmentRelation {
  std::vector<IndexPair> difference_at;
  std::vector<IndexPair> sum_at;

  bool none() const { return difference_at.empty() && sum_at.empty(); }
  bool difference_aligned() const { return !difference_at.empty(); }
  bool sum_aligned() const { return !sum_at.empty(); }
};

AlignmentRelation alignment(const DifferenceEquality& e1, const DifferenceEquality& e2);

struct ImplicationOptions {
  std::size_t subset_cap = kDefaultSubsetCap;  // forwarded to the 2-good gate
};

// All indices j != i such that the collection implies a nondegenerate
// difference equality in which x_i and x_j appear with opposite sign.
std::vector<int> certified_indices(const Configuration& anchored, int i);

struct Box {
  std::vector<std::size_t> members;  // indices into the collection
  DifferenceEquality produced;
  std::vector<Rat> coefficients;
};

struct BlobDecomposition {
  std::vector<Box> boxes;                       // singleton boxes included
  std::vector<std::vector<std::size_t>> blobs;  // partition of the collection
};

BlobDecomposition decompose_boxes_blobs(const Configuration& anchored, int i,
                                        const ImplicationOptions& opts = {});

struct NImplication {
  int order = 0;  // 2, 3 or 4
  std::vector<std::size_t> member_indices;
  std::vector<DifferenceEquality> members;
  DifferenceEquality produced;
  std::vector<Rat> coefficients;
};

std::vector<NImplication> find_n_implications(const Configuration& anchored, int i, int order,
                                              const ImplicationOptions& opts = {});

// The alignment graph of a 3-implication together with the equality it
// produces: four vertices, difference-aligned pairs as labelled edges. The
// result is required to be a path on the four vertices.
struct G3Graph {
  std::vector<DifferenceEquality> vertices;                 // members then produced
  std::vector<std::pair<std::pair<int, int>, IndexPair>> edges;  // (vertex pair, aligned-at pair)
  std::vector<int> path_order;                              // vertex indices along the path
};

G3Graph g3_graph(const NImplication& three_implication);

// Equivalent same-size anchored collection in which the certified indices can
// be read directly off the opposite-sign pairs.
Configuration normalize_to_sprime(const Configuration& anchored, int i,
                                  const ImplicationOptions& opts = {});

long long count_implied_not_involving(const Configuration& anchored, int i,
                                      const ImplicationOptions& opts = {});

struct LemmaCheck {
  long long checked = 0;
  long long passed = 0;
  std::vector<std::string> counterexamples;
};

struct LemmaReport {
  std::map<std::string, LemmaCheck> checks;
  bool all_passed() const;
  void merge(const LemmaReport& other);
};

// Samples random anchored 2-good collections and exhaustively tests the
// structural claims about boxes, alignments and implication counts on each.
// Trials carry independent derived seeds, so results do not depend on the
// number of worker threads.
LemmaReport verify_structure_lemmas(int k, int samples, std::uint64_t seed, int jobs = 1);

// Random anchored 2-good collection of linearly independent equalities, used
// by the verification suites. Size is drawn from [min_size, max_size].
Configuration sample_two_good_anchored(int k, int anchor, int min_size, int max_size, Rng& rng,
                                       int max_attempts = 20000);

}  // namespace diffset
