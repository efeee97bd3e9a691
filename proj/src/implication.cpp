#include "diffset/implication.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace diffset {

namespace {

void check_anchored(const Configuration& s, int i) {
  require(1 <= i && i <= s.variable_count(), errc::index_out_of_range, "anchor outside 1..k");
  for (const auto& e : s.equalities())
    require(e.involves(i), errc::anchor_missing,
            "every equality must involve the anchor variable x" + std::to_string(i));
}

void check_two_good(const Configuration& s, const ImplicationOptions& opts) {
  const auto good = s.is_c_good(Rat(2), opts.subset_cap);
  require(good.good, errc::not_two_good, "collection is not 2-good (" + good.reason + ")");
}

std::vector<int> support_union(const std::vector<const DifferenceEquality*>& eqs) {
  std::set<int> vars;
  for (const auto* e : eqs)
    for (int v : e->variables()) vars.insert(v);
  return std::vector<int>(vars.begin(), vars.end());
}

// Canonical difference equalities whose variables all lie in the given
// support, expressed on k variables.
std::vector<DifferenceEquality> candidates_on_support(const std::vector<int>& support, int k) {
  std::vector<DifferenceEquality> out;
  const int m = static_cast<int>(support.size());
  if (m < 2) return out;
  std::vector<IndexPair> multisets;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) multisets.emplace_back(support[a], support[b]);
  for (std::size_t p = 0; p < multisets.size(); ++p)
    for (std::size_t q = p + 1; q < multisets.size(); ++q)
      out.push_back(DifferenceEquality::canonicalize(multisets[p].first, multisets[q].first,
                                                     multisets[q].second, multisets[p].second, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct MinimalImplication {
  DifferenceEquality produced;
  std::vector<Rat> coefficients;
};

// All difference equalities a fixed linearly independent sub-collection
// minimally implies (every combination coefficient nonzero).
std::vector<MinimalImplication> minimal_implications(const Configuration& s,
                                                     const std::vector<std::size_t>& idxs) {
  const int k = s.variable_count();
  std::vector<const DifferenceEquality*> members;
  IntRows rows;
  for (std::size_t idx : idxs) {
    members.push_back(&s.equalities()[idx]);
    rows.push_back(s.matrix()[idx]);
  }
  std::vector<MinimalImplication> out;
  IntRowBasis basis(rows, k);
  if (basis.rank() != static_cast<int>(rows.size())) return out;
  for (auto& cand : candidates_on_support(support_union(members), k)) {
    if (!basis.contains(cand.content_ll())) continue;
    auto eps = combination_coefficients(rows, cand.content_ll(), k);
    if (!eps) continue;
    if (std::any_of(eps->begin(), eps->end(), [](const Rat& e) { return e == 0; })) continue;
    out.push_back(MinimalImplication{std::move(cand), std::move(*eps)});
  }
  return out;
}

template <typename Fn>
void for_each_subset(std::size_t n, int size, Fn&& fn) {
  if (size <= 0 || static_cast<std::size_t>(size) > n) return;
  std::vector<std::size_t> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    fn(const_cast<const std::vector<std::size_t>&>(pick));
    int j = size - 1;
    while (j >= 0 && pick[j] == n - static_cast<std::size_t>(size - j)) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace

AlignmentRelation alignment(const DifferenceEquality& e1, const DifferenceEquality& e2) {
  require(!e1.degenerate() && !e2.degenerate(), errc::degenerate_input,
          "alignment is defined for nondegenerate equalities");
  require(!(e1 == e2), errc::degenerate_input, "alignment needs two distinct equalities");
  AlignmentRelation rel;
  const auto opp1 = e1.opposite_sign_pairs();
  const auto opp2 = e2.opposite_sign_pairs();
  std::set_intersection(opp1.begin(), opp1.end(), opp2.begin(), opp2.end(),
                        std::back_inserter(rel.difference_at));
  const auto same1 = e1.same_sign_pairs();
  const auto same2 = e2.same_sign_pairs();
  std::set_intersection(same1.begin(), same1.end(), same2.begin(), same2.end(),
                        std::back_inserter(rel.sum_at));
  return rel;
}

std::vector<int> certified_indices(const Configuration& anchored, int i) {
  check_anchored(anchored, i);
  require(anchored.is_valid(), errc::not_valid, "collection must be valid");
  std::set<int> certified;
  for (const auto& e : anchored.implied_difference_equalities(i, /*nondegenerate_only=*/true))
    for (const auto& [a, b] : e.opposite_sign_pairs()) {
      if (a == i) certified.insert(b);
      if (b == i) certified.insert(a);
    }
  return std::vector<int>(certified.begin(), certified.end());
}

BlobDecomposition decompose_boxes_blobs(const Configuration& anchored, int i,
                                        const ImplicationOptions& opts) {
  check_anchored(anchored, i);
  require(anchored.is_valid(), errc::not_valid, "collection must be valid");
  require(anchored.linearly_independent(), errc::not_independent,
          "collection must be linearly independent");

  const std::size_t s = anchored.size();
  require(s < 63 && (std::size_t{1} << s) <= opts.subset_cap, errc::too_many_subsets,
          "too many sub-collections to scan for boxes");
  BlobDecomposition out;
  for (std::size_t idx = 0; idx < s; ++idx)
    out.boxes.push_back(Box{{idx}, anchored.equalities()[idx], {Rat(1)}});

  // A sub-collection of size t minimally implying a difference equality
  // involves at most 2t + 2 variables, which screens out almost every subset
  // before the candidate scan.
  for (int size = 2; size <= static_cast<int>(s); ++size) {
    for_each_subset(s, size, [&](const std::vector<std::size_t>& pick) {
      std::set<int> vars;
      for (std::size_t idx : pick)
        for (int v : anchored.equalities()[idx].variables()) vars.insert(v);
      if (static_cast<int>(vars.size()) > 2 * size + 2) return;
      for (auto& mi : minimal_implications(anchored, pick)) {
        if (!mi.produced.involves(i)) continue;
        out.boxes.push_back(Box{pick, std::move(mi.produced), std::move(mi.coefficients)});
      }
    });
  }

  // blobs = connected components of the box-overlap graph
  std::vector<std::size_t> parent(s);
  for (std::size_t j = 0; j < s; ++j) parent[j] = j;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& box : out.boxes)
    for (std::size_t j = 1; j < box.members.size(); ++j)
      parent[find(box.members[j])] = find(box.members[0]);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < s; ++j) groups[find(j)].push_back(j);
  for (auto& [root, members] : groups) out.blobs.push_back(std::move(members));
  std::sort(out.blobs.begin(), out.blobs.end());
  return out;
}

std::vector<NImplication> find_n_implications(const Configuration& anchored, int i, int order,
                                              const ImplicationOptions& opts) {
  require(order == 2 || order == 3 || order == 4, errc::range_error, "order must be 2, 3 or 4");
  check_anchored(anchored, i);
  require(anchored.is_valid(), errc::not_valid, "collection must be valid");
  check_two_good(anchored, opts);

  std::vector<NImplication> out;
  for_each_subset(anchored.size(), order, [&](const std::vector<std::size_t>& pick) {
    std::vector<NImplication> here;
    for (auto& mi : minimal_implications(anchored, pick)) {
      const bool wants_anchor = (order == 3);
      if (mi.produced.involves(i) != wants_anchor) continue;
      NImplication n;
      n.order = order;
      n.member_indices = pick;
      for (std::size_t idx : pick) n.members.push_back(anchored.equalities()[idx]);
      n.produced = std::move(mi.produced);
      n.coefficients = std::move(mi.coefficients);
      here.push_back(std::move(n));
    }
    require(here.size() <= 1, errc::internal_invariant,
            "a sub-collection produced more than one difference equality");
    for (auto& n : here) out.push_back(std::move(n));
  });
  return out;
}

G3Graph g3_graph(const NImplication& ti) {
  require(ti.order == 3 && ti.members.size() == 3, errc::range_error,
          "g3_graph expects a 3-implication");
  G3Graph g;
  g.vertices = ti.members;
  g.vertices.push_back(ti.produced);
  std::vector<int> degree(4, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const auto rel = alignment(g.vertices[a], g.vertices[b]);
      if (!rel.difference_aligned()) continue;
      require(rel.difference_at.size() == 1, errc::internal_invariant,
              "difference alignment at more than one pair inside a 3-implication");
      g.edges.push_back({{a, b}, rel.difference_at.front()});
      ++degree[a];
      ++degree[b];
    }
  require(g.edges.size() == 3, errc::not_a_path, "alignment graph does not have 3 edges");
  int start = -1;
  int deg1 = 0, deg2 = 0;
  for (int v = 0; v < 4; ++v) {
    if (degree[v] == 1) {
      ++deg1;
      if (start < 0) start = v;
    } else if (degree[v] == 2) {
      ++deg2;
    }
  }
  require(deg1 == 2 && deg2 == 2, errc::not_a_path, "alignment graph is not a 4-vertex path");
  // walk the path from the first endpoint
  g.path_order.push_back(start);
  int prev = -1, cur = start;
  for (int step = 0; step < 3; ++step) {
    for (const auto& [vp, at] : g.edges) {
      int nxt = -1;
      if (vp.first == cur && vp.second != prev) nxt = vp.second;
      if (vp.second == cur && vp.first != prev) nxt = vp.first;
      if (nxt >= 0) {
        g.path_order.push_back(nxt);
        prev = cur;
        cur = nxt;
        break;
      }
    }
  }
  require(g.path_order.size() == 4, errc::not_a_path, "alignment graph is disconnected");
  return g;
}

Configuration normalize_to_sprime(const Configuration& anchored, int i,
                                  const ImplicationOptions& opts) {
  check_anchored(anchored, i);
  require(anchored.is_valid(), errc::not_valid, "collection must be valid");
  require(anchored.linearly_independent(), errc::not_independent,
          "collection must be linearly independent");
  check_two_good(anchored, opts);

  const auto threes = find_n_implications(anchored, i, 3, opts);
  std::vector<bool> in_three(anchored.size(), false);
  for (const auto& t : threes)
    for (std::size_t idx : t.member_indices) {
      require(!in_three[idx], errc::internal_invariant, "overlapping 3-implications");
      in_three[idx] = true;
    }

  std::vector<DifferenceEquality> sprime;
  for (std::size_t idx = 0; idx < anchored.size(); ++idx)
    if (!in_three[idx]) sprime.push_back(anchored.equalities()[idx]);
  for (const auto& t : threes) {
    const G3Graph g = g3_graph(t);
    // drop the larger of the two interior vertices, keep the other three
    const int a = g.path_order[1], b = g.path_order[2];
    const int drop = g.vertices[a] < g.vertices[b] ? b : a;
    for (int v = 0; v < 4; ++v)
      if (v != drop) sprime.push_back(g.vertices[v]);
  }
  Configuration result(anchored.variable_count(), std::move(sprime));

  require(result.size() == anchored.size() && equivalent(result, anchored),
          errc::internal_invariant, "normalized collection is not an equivalent same-size one");
  std::set<int> read_off;
  for (const auto& e : result.equalities())
    for (const auto& [a, b] : e.opposite_sign_pairs()) {
      if (a == i) read_off.insert(b);
      if (b == i) read_off.insert(a);
    }
  const auto certified = certified_indices(anchored, i);
  require(std::vector<int>(read_off.begin(), read_off.end()) == certified,
          errc::internal_invariant,
          "certified indices cannot be read off the normalized collection");
  return result;
}

long long count_implied_not_involving(const Configuration& anchored, int i,
                                      const ImplicationOptions& opts) {
  check_anchored(anchored, i);
  require(anchored.is_valid(), errc::not_valid, "collection must be valid");
  require(anchored.linearly_independent(), errc::not_independent,
          "collection must be linearly independent");
  check_two_good(anchored, opts);

  std::vector<const DifferenceEquality*> members;
  for (const auto& e : anchored.equalities()) members.push_back(&e);
  long long count = 0;
  for (const auto& cand :
       candidates_on_support(support_union(members), anchored.variable_count())) {
    if (cand.degenerate() || cand.involves(i)) continue;
    if (anchored.implies(cand)) ++count;
  }
  return count;
}

bool LemmaReport::all_passed() const {
  for (const auto& [name, check] : checks)
    if (check.passed != check.checked) return false;
  return true;
}

Configuration sample_two_good_anchored(int k, int anchor, int min_size, int max_size, Rng& rng,
                                       int max_attempts) {
  const auto pool = enumerate_equalities(k, anchor, /*nondegenerate_only=*/true);
  // a 2-light collection of t independent equalities needs at least 2t+1
  // variables, so sizes beyond (k-1)/2 are unreachable
  const int cap = std::max(1, (k - 1) / 2);
  const int hi = std::min(max_size, cap);
  const int lo = std::min(min_size, hi);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const int size = lo + rng.below_int(hi - lo + 1);
    std::vector<DifferenceEquality> eqs;
    std::set<std::size_t> chosen;
    while (static_cast<int>(eqs.size()) < size) {
      const std::size_t at = rng.below(pool.size());
      if (chosen.insert(at).second) eqs.push_back(pool[at]);
    }
    Configuration c(k, std::move(eqs));
    if (!c.linearly_independent()) continue;
    if (!c.is_c_good(Rat(2)).good) continue;
    return c;
  }
  raise(errc::not_found, "no 2-good anchored collection found within the attempt budget");
}

namespace {

void record(LemmaReport& report, const std::string& name, bool ok, const Configuration& s) {
  auto& check = report.checks[name];
  ++check.checked;
  if (ok)
    ++check.passed;
  else if (check.counterexamples.size() < 10)
    check.counterexamples.push_back(s.to_string());
}

int shared_variable_count(const DifferenceEquality& a, const DifferenceEquality& b) {
  const auto va = a.variables();
  const auto vb = b.variables();
  std::vector<int> inter;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(inter));
  return static_cast<int>(inter.size());
}

void check_collection(LemmaReport& report, const Configuration& s, int anchor) {
  const int size = static_cast<int>(s.size());
  const ImplicationOptions opts;

  // pairwise variable sharing and alignment exclusivity
  int diff_aligned_pairs = 0;
  int sum_aligned_pairs = 0;
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b) {
      const auto& ea = s.equalities()[a];
      const auto& eb = s.equalities()[b];
      record(report, "2-eqns-5-vars", shared_variable_count(ea, eb) <= 2, s);
      const auto rel = alignment(ea, eb);
      record(report, "no-simultaneous-alignment",
             !(rel.difference_aligned() && rel.sum_aligned()), s);
      if (rel.difference_aligned()) ++diff_aligned_pairs;
      if (rel.sum_aligned()) ++sum_aligned_pairs;
    }
  const bool all_sum = sum_aligned_pairs == size * (size - 1) / 2 && size >= 2;

  // certified index bound and the near-equality characterization
  const auto certified = certified_indices(s, anchor);
  record(report, "2s-certify", static_cast<int>(certified.size()) <= 2 * size, s);
  if (static_cast<int>(certified.size()) >= 2 * size - 1) {
    const Configuration sprime = normalize_to_sprime(s, anchor, opts);
    int sprime_diff_pairs = 0;
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        if (alignment(sprime.equalities()[a], sprime.equalities()[b]).difference_aligned())
          ++sprime_diff_pairs;
    if (static_cast<int>(certified.size()) == 2 * size)
      record(report, "2s-certify-equality", sprime_diff_pairs == 0, s);
    else
      record(report, "2s-certify-equality", sprime_diff_pairs == 1, s);
  }

  // minimal implications of every sub-collection of order <= 4
  std::vector<NImplication> all_implications;
  for (int order = 1; order <= std::min(4, size); ++order) {
    for_each_subset(s.size(), order, [&](const std::vector<std::size_t>& pick) {
      std::vector<NImplication> found;
      for (auto& mi : minimal_implications(s, pick)) {
        NImplication n;
        n.order = order;
        n.member_indices = pick;
        for (std::size_t idx : pick) n.members.push_back(s.equalities()[idx]);
        n.produced = std::move(mi.produced);
        n.coefficients = std::move(mi.coefficients);
        found.push_back(std::move(n));
      }

      record(report, "min-impl-unique", found.size() <= 1, s);
      for (const auto& n : found) {
        // variable counts over the members and sign structure of the witness
        std::set<int> vars;
        for (const auto& m : n.members)
          for (int v : m.variables()) vars.insert(v);
        const int t = order;
        record(report, "gen-min-impl", static_cast<int>(vars.size()) <= 2 * t + 2, s);
        std::map<int, int> appearances;  // equations involving each variable
        for (const auto& m : n.members)
          for (int v : m.variables()) ++appearances[v];
        for (int v : n.produced.variables()) ++appearances[v];
        if (static_cast<int>(vars.size()) == 2 * t + 2) {
          bool all_twice = true;
          for (int v : vars)
            if (appearances[v] != 2) all_twice = false;
          record(report, "gen-min-impl", all_twice, s);
        }
        for (int sub_size = 1; sub_size < t; ++sub_size) {
          bool ok = true;
          for_each_subset(pick.size(), sub_size, [&](const std::vector<std::size_t>& inner) {
            std::set<int> inner_vars, outer_vars;
            std::vector<bool> is_inner(pick.size(), false);
            for (std::size_t x : inner) is_inner[x] = true;
            for (std::size_t x = 0; x < pick.size(); ++x)
              for (int v : n.members[x].variables()) (is_inner[x] ? inner_vars : outer_vars).insert(v);
            int fresh = 0;
            for (int v : inner_vars)
              if (!outer_vars.count(v)) ++fresh;
            if (fresh > 2 * sub_size) ok = false;
          });
          record(report, "gen-min-impl", ok, s);
        }

        bool signs_unit = true;
        for (const Rat& e : n.coefficients)
          if (e != 1 && e != -1) signs_unit = false;
        record(report, "2-good-min-impl", signs_unit, s);
        const int m = static_cast<int>(vars.size());
        bool pattern_ok = false;
        if (m == 2 * t + 2) {
          pattern_ok = true;
          for (int v : vars)
            if (appearances[v] != 2) pattern_ok = false;
        } else if (m == 2 * t + 1) {
          int fours = 0, twos = 0;
          for (int v : vars) {
            if (appearances[v] == 4) ++fours;
            if (appearances[v] == 2) ++twos;
          }
          pattern_ok = fours == 1 && twos == m - 1;
        }
        record(report, "2-good-min-impl", pattern_ok, s);

        if (order >= 2) all_implications.push_back(n);
      }
    });
  }

  // per-order structure
  std::vector<const NImplication*> threes, fours;
  for (const auto& n : all_implications) {
    if (n.order == 2 && !n.produced.involves(anchor)) {
      const auto rel = alignment(n.members[0], n.members[1]);
      record(report, "2-impls", rel.difference_aligned() || rel.sum_aligned(), s);
    }
    if (n.order == 3 && n.produced.involves(anchor)) {
      bool is_path = true;
      try {
        g3_graph(n);
      } catch (const error&) {
        is_path = false;
      }
      record(report, "3-impls-path", is_path, s);
      threes.push_back(&n);
    }
    if (n.order == 4 && !n.produced.involves(anchor)) fours.push_back(&n);
  }

  for (std::size_t a = 0; a < threes.size(); ++a)
    for (std::size_t b = a + 1; b < threes.size(); ++b) {
      std::vector<std::size_t> inter;
      std::set_intersection(threes[a]->member_indices.begin(), threes[a]->member_indices.end(),
                            threes[b]->member_indices.begin(), threes[b]->member_indices.end(),
                            std::back_inserter(inter));
      record(report, "3-impls-disjoint", inter.empty(), s);
    }

  for (const auto* f : fours) {
    int dp = 0, sp = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        const auto rel = alignment(f->members[a], f->members[b]);
        if (rel.difference_aligned()) ++dp;
        if (rel.sum_aligned()) ++sp;
      }
    if (dp <= 1) record(report, "4-impl", dp == 1 && sp == 1, s);
  }

  if (diff_aligned_pairs == 1 && fours.size() >= 2) {
    for (std::size_t a = 0; a < fours.size(); ++a)
      for (std::size_t b = a + 1; b < fours.size(); ++b) {
        std::vector<std::size_t> inter;
        std::set_intersection(fours[a]->member_indices.begin(), fours[a]->member_indices.end(),
                              fours[b]->member_indices.begin(), fours[b]->member_indices.end(),
                              std::back_inserter(inter));
        bool ok = inter.size() == 3;
        if (ok) {
          std::set<int> vars;
          for (std::size_t idx : inter)
            for (int v : s.equalities()[idx].variables()) vars.insert(v);
          ok = vars.size() == 7;
        }
        record(report, "4-impls-overlap", ok, s);
      }
  }
  if (diff_aligned_pairs <= 1 && fours.size() >= 2) {
    // three equations common to every 4-implication, fourth ones sum-aligned
    std::vector<std::size_t> common = fours[0]->member_indices;
    for (const auto* f : fours) {
      std::vector<std::size_t> inter;
      std::set_intersection(common.begin(), common.end(), f->member_indices.begin(),
                            f->member_indices.end(), std::back_inserter(inter));
      common = std::move(inter);
    }
    bool ok = common.size() == 3;
    if (ok) {
      std::vector<std::size_t> fourth;
      for (const auto* f : fours)
        for (std::size_t idx : f->member_indices)
          if (std::find(common.begin(), common.end(), idx) == common.end()) fourth.push_back(idx);
      for (std::size_t a = 0; a < fourth.size() && ok; ++a)
        for (std::size_t b = a + 1; b < fourth.size() && ok; ++b)
          if (!alignment(s.equalities()[fourth[a]], s.equalities()[fourth[b]]).sum_aligned())
            ok = false;
    }
    record(report, "many-4-impls", ok, s);
  }

  // implied equalities avoiding the anchor, classified by alignment pattern
  if (diff_aligned_pairs <= 1) {
    const long long count = count_implied_not_involving(s, anchor, opts);
    const long long s1 = size;
    if (all_sum)
      record(report, "impls-not-i", count == s1 * (s1 - 1) / 2, s);
    else if (diff_aligned_pairs == 0)
      record(report, "impls-not-i", count <= (s1 - 1) * (s1 - 2) / 2, s);
    else
      record(report, "impls-not-i", count <= (s1 - 1) * (s1 - 2) / 2 + 1, s);
  }
}

Configuration example_four_implication(int which) {
  // two anchored collections of four equalities, each with a unique
  // 4-implication producing the equality x3 + x6 - x8 - x9 = 0
  if (which == 0)
    return Configuration::from_quadruples(9, {{{1, 2, 3, 4}},
                                              {{1, 5, 6, 2}},
                                              {{1, 5, 7, 4}},
                                              {{1, 8, 9, 7}}});
  return Configuration::from_quadruples(9, {{{1, 2, 3, 4}},
                                            {{1, 5, 6, 2}},
                                            {{1, 7, 8, 4}},
                                            {{1, 5, 9, 7}}});
}

}  // namespace

void LemmaReport::merge(const LemmaReport& other) {
  for (const auto& [name, check] : other.checks) {
    auto& mine = checks[name];
    mine.checked += check.checked;
    mine.passed += check.passed;
    for (const auto& cex : check.counterexamples)
      if (mine.counterexamples.size() < 10) mine.counterexamples.push_back(cex);
  }
}

LemmaReport verify_structure_lemmas(int k, int samples, std::uint64_t seed, int jobs) {
  require(k >= 5 && k <= 12, errc::range_error, "verification runs for 5 <= k <= 12");
  const bool inject = samples > 0 && k >= 9;
  const int total = samples + (inject ? 2 : 0);
  std::vector<LemmaReport> partial(total);
  std::vector<std::string> failures(total);

  std::atomic<int> cursor{0};
  auto worker = [&]() {
    while (true) {
      const int trial = cursor.fetch_add(1);
      if (trial >= total) break;
      try {
        if (trial < samples) {
          Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
          const Configuration s = sample_two_good_anchored(k, 1, 2, 5, rng);
          check_collection(partial[trial], s, 1);
        } else {
          check_collection(partial[trial], example_four_implication(trial - samples), 1);
        }
      } catch (const error& e) {
        failures[trial] = e.what();
      }
    }
  };
  const int workers = std::max(1, std::min(jobs, total == 0 ? 1 : total));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& message : failures)
    if (!message.empty()) raise(errc::internal_invariant, message);

  LemmaReport report;
  for (const auto& p : partial) report.merge(p);
  return report;
}

}  // namespace diffset
