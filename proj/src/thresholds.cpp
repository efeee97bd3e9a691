#include "diffset/thresholds.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace diffset {

namespace {

struct SearchTask {
  int n;
  int k;
  long long ell;
  long long grid;
  long long first;  // second element of the set (after the fixed 0)
  std::size_t budget;
};

struct TaskResult {
  std::optional<long long> value;
  std::vector<long long> witness;
};

// distinct differences of a small fixed subset
long long subset_diff_count(const std::vector<long long>& vals) {
  long long buf[64];
  int cnt = 0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j) buf[cnt++] = vals[j] - vals[i];
  std::sort(buf, buf + cnt);
  return std::unique(buf, buf + cnt) - buf;
}

class OracleSearch {
 public:
  explicit OracleSearch(const SearchTask& task) : t_(task), diff_seen_(task.grid + 1, 0) {}

  TaskResult run() {
    chosen_.push_back(0);
    if (t_.first > t_.grid) return result_;
    push(t_.first);
    dfs(t_.first + 1);
    return result_;
  }

 private:
  void push(long long x) {
    std::vector<long long> added;
    for (long long y : chosen_) {
      const long long d = x - y;
      if (!diff_seen_[d]) {
        diff_seen_[d] = 1;
        added.push_back(d);
      }
    }
    distinct_ += static_cast<long long>(added.size());
    added_.push_back(std::move(added));
    chosen_.push_back(x);
  }

  void pop() {
    for (long long d : added_.back()) diff_seen_[d] = 0;
    distinct_ -= static_cast<long long>(added_.back().size());
    added_.pop_back();
    chosen_.pop_back();
  }

  bool local_property_ok(long long x) const {
    // every k-subset ending at x must span at least ell differences; k
    // distinct reals always span at least k-1
    if (t_.ell <= t_.k - 1) return true;
    const int prior = static_cast<int>(chosen_.size());
    if (prior + 1 < t_.k) return true;
    std::vector<std::size_t> pick(t_.k - 1);
    for (int i = 0; i < t_.k - 1; ++i) pick[i] = i;
    std::vector<long long> vals(t_.k);
    while (true) {
      for (int i = 0; i < t_.k - 1; ++i) vals[i] = chosen_[pick[i]];
      vals[t_.k - 1] = x;
      if (subset_diff_count(vals) < t_.ell) return false;
      int j = t_.k - 2;
      while (j >= 0 && pick[j] == static_cast<std::size_t>(prior - (t_.k - 1 - j))) --j;
      if (j < 0) break;
      ++pick[j];
      for (int q = j + 1; q < t_.k - 1; ++q) pick[q] = pick[q - 1] + 1;
    }
    return true;
  }

  bool canonical_under_reflection() const {
    const long long top = chosen_.back();
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      const long long mirrored = top - chosen_[chosen_.size() - 1 - i];
      if (chosen_[i] != mirrored) return chosen_[i] < mirrored;
    }
    return true;
  }

  void dfs(long long next) {
    require(++nodes_ <= t_.budget, errc::budget_exceeded, "oracle search budget exhausted");
    if (static_cast<int>(chosen_.size()) == t_.n) {
      if (!canonical_under_reflection()) return;
      if (!result_.value || distinct_ < *result_.value) {
        result_.value = distinct_;
        result_.witness = chosen_;
      }
      return;
    }
    const int remaining = t_.n - static_cast<int>(chosen_.size());
    for (long long x = next; x + remaining - 1 <= t_.grid; ++x) {
      // each new element contributes at least one fresh difference (its gap
      // to 0 exceeds every previous difference)
      if (result_.value && distinct_ + remaining >= *result_.value) return;
      if (!local_property_ok(x)) continue;
      push(x);
      dfs(x + 1);
      pop();
    }
  }

  SearchTask t_;
  TaskResult result_;
  std::vector<long long> chosen_;
  std::vector<std::vector<long long>> added_;
  std::vector<char> diff_seen_;
  long long distinct_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force_g(int n, int k, long long ell, long long grid_bound, std::size_t budget,
                           int jobs) {
  require(n >= k && k >= 1, errc::range_error, "need n >= k >= 1");
  require(k <= 11, errc::range_error, "oracle supports k up to 11");
  require(grid_bound >= 0 && grid_bound <= 4096, errc::range_error,
          "grid bound must lie in 0..4096");
  OracleResult out;
  out.grid_bound = grid_bound;
  if (ell > binomial_ll(k, 2)) return out;  // no set can satisfy the property
  if (n == 1) {
    out.value = 0;
    out.witness = std::vector<long long>{0};
    return out;
  }

  std::vector<SearchTask> tasks;
  for (long long first = 1; first + n - 2 <= grid_bound; ++first)
    tasks.push_back(SearchTask{n, k, ell, grid_bound, first,
                               std::max<std::size_t>(1, budget / std::max<long long>(1, grid_bound))});
  std::vector<TaskResult> results(tasks.size());
  std::vector<std::string> errors(tasks.size());

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        results[i] = OracleSearch(tasks[i]).run();
      } catch (const error& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& message : errors)
    if (!message.empty()) raise(errc::budget_exceeded, message);

  for (const auto& r : results) {
    if (!r.value) continue;
    if (!out.value || *r.value < *out.value ||
        (*r.value == *out.value && r.witness < *out.witness)) {
      out.value = r.value;
      out.witness = r.witness;
    }
  }
  if (!out.value) out.witness.reset();
  return out;
}

bool check_monotonicity(int n, int k, long long ell, long long grid_bound, std::size_t budget) {
  require(k >= 2, errc::range_error, "monotonicity check needs k >= 2");
  auto value_of = [&](int kk, long long l) -> std::optional<long long> {
    return brute_force_g(n, kk, l, grid_bound, budget).value;
  };
  const auto base = value_of(k, ell);
  const auto reduced = value_of(k - 1, ell - k + 1);
  // +infinity dominates everything
  if (base && reduced && *base < *reduced) return false;
  if (base && !reduced) return false;

  if (ell + 1 <= binomial_ll(k, 2)) {
    const auto stronger = value_of(k, ell + 1);
    if (!base && stronger) return false;
    if (base && stronger && *stronger < *base) return false;
  }
  return true;
}

Int upper_bound_ell(int k, const Rat& c) {
  require(k >= 1, errc::range_error, "k must be positive");
  require(Rat(1) < c && c <= Rat(2), errc::range_error, "c must lie in (1, 2]");
  const Int v = rat_ceil((c - 1) * (k - 1) / c);
  return v * v;
}

namespace {

Rat ell_plus_general(int t, const Int& k) {
  const Int three = int_pow(Int(3), static_cast<unsigned>(t - 1));
  const Int four = int_pow(Int(4), static_cast<unsigned>(t));
  const Int two = int_pow(Int(2), static_cast<unsigned>(t));
  return Rat(three, four) * Rat(k * k) + Rat(two * k) + Rat(three + 1, 2);
}

Rat ell_plus_general(const Int& t, const Int& k) {
  require(t >= 1 && t <= Int(1'000'000), errc::range_error, "ladder exponent too large");
  return ell_plus_general(static_cast<int>(t), k);
}

Int ell_minus(const Int& t, const Int& k) {
  require(t >= 1 && t <= Int(1'000'000), errc::range_error, "ladder exponent too large");
  const Int two = int_pow(Int(2), static_cast<unsigned>(t));
  const Int v = ceil_div(k - 1, two);
  return v * v;
}

}  // namespace

LowerBoundEll lower_bound_ell(int k, int t, bool require_divisibility) {
  require(k >= 1 && t >= 1, errc::range_error, "k and t must be positive");
  const Int two_t = int_pow(Int(2), static_cast<unsigned>(t));
  const bool divisible = Int(k) % two_t == 0;
  require(divisible || !require_divisibility, errc::divisibility_error,
          "k is not divisible by 2^t");
  LowerBoundEll out;
  if (divisible) {
    const Int three = int_pow(Int(3), static_cast<unsigned>(t - 1));
    out.ell_exact = Rat(three, int_pow(Int(4), static_cast<unsigned>(t))) * Rat(Int(k) * k) +
                    Rat(three + 1, 2);
  } else {
    out.ell_exact = ell_plus_general(t, Int(k));
  }
  out.ell = rat_ceil(out.ell_exact);
  out.exponent = Rat(1) + Rat(1, two_t - 1);
  return out;
}

std::pair<Int, Int> quadratic_threshold(int k) {
  require(k >= 4, errc::range_error, "quadratic threshold needs k >= 4");
  if (k % 2 == 0) {
    const Int v = Int(k) * k / 4 + 1;
    return {v, v};
  }
  const Int v = Int(k + 1) * (k + 1) / 4;
  return {v - 3, v};
}

NcThresholdCoefficients nc_threshold_coefficients(const Rat& c) {
  require(Rat(1) < c && c <= Rat(2), errc::range_error, "c must lie in (1, 2]");
  NcThresholdCoefficients out;
  out.a1 = rat_pow((c - 1) / c, 2) / 2;
  const Rat y = c / (c - 1);  // 2^t <= y < 2^(t+1)
  int t = 0;
  Rat power = 1;
  while (power * 2 <= y) {
    power *= 2;
    ++t;
  }
  out.t = t;
  out.a2 = rat_pow(Rat(3, 4), static_cast<unsigned>(t + 1)) / 2;
  require(t >= 1 && power <= y && y < power * 2, errc::internal_invariant,
          "exponent bracket out of place");
  require(Rat(0) < out.a1 && out.a1 < out.a2 && out.a2 < Rat(1, 2), errc::internal_invariant,
          "coefficient ordering violated");
  return out;
}

std::pair<Rat, Rat> poly_bounds_exponents(const Rat& a) {
  require(Rat(0) < a && a < Rat(1, 4), errc::range_error, "a must lie in (0, 1/4)");
  int t = 1;
  while (a <= Rat(int_pow(Int(3), static_cast<unsigned>(t - 1)),
                  int_pow(Int(4), static_cast<unsigned>(t))))
    ++t;
  const Rat c1 = Rat(1) + Rat(1, int_pow(Int(2), static_cast<unsigned>(t)) - 1);

  // sqrt(a) rounded up to a dyadic rational with 16 fractional bits, bumped
  // when the root is exact so that a < q^2 strictly
  const Int u = rat_num(a), v = rat_den(a);
  const Int target = u << 32;  // want smallest Q with Q^2 v >= u 2^32
  Int q_int = int_root_floor(floor_div(target, v), 2);
  while (q_int * q_int * v < target) ++q_int;
  if (q_int * q_int * v == target) ++q_int;
  const Rat q(q_int, Int(1) << 16);
  const Rat c2 = Rat(1) / (Rat(1) - q);

  require(a < q * q, errc::internal_invariant, "rounded root is not strictly above sqrt(a)");
  require(Rat(1) < c1 && c1 < c2 && c2 <= Rat(2), errc::internal_invariant,
          "exponent ordering violated");
  return {c1, c2};
}

SkLadder sk_ladder(const Int& k) {
  require(k >= 2, errc::range_error, "k must be at least 2");
  SkLadder out;
  // r = largest j >= 1 with k >= 3 * 4^(10^j); 0 when none
  long long r = 0;
  Int t_pow = 10;
  while (true) {
    if (t_pow > Int(1'000'000)) break;
    if (Int(3) * int_pow(Int(4), static_cast<unsigned>(t_pow)) > k) break;
    ++r;
    t_pow *= 10;
  }
  out.r = r;
  Int t_i = 10;
  for (long long i = 1; i <= r; ++i, t_i *= 10) {
    SkLadderRow row;
    row.t = t_i;
    row.ell_plus = ell_plus_general(t_i, k);
    row.ell_minus = ell_minus(t_i, k);
    out.rows.push_back(std::move(row));
  }
  const Rat kk = Rat(k) * Rat(k);
  const Rat choose2 = kk / 2 - Rat(k) / 2;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    require(out.rows[i].ell_plus >= 0 && out.rows[i].ell_plus <= choose2,
            errc::internal_invariant, "ladder value out of range");
    if (i + 1 < out.rows.size()) {
      require(out.rows[i + 1].ell_plus <= Rat(ell_minus(out.rows[i].t + 1, k)),
              errc::internal_invariant, "ladder rows fail to interleave");
      require(out.rows[i + 1].ell_plus < out.rows[i].ell_plus, errc::internal_invariant,
              "ladder values must strictly decrease");
    }
  }
  out.distinct_exponent_lower_bound = std::max<Int>(Int(r), Int(1));
  return out;
}

bool claim_10t_inequality(int t, const Int& k) {
  require(t >= 1, errc::range_error, "t must be positive");
  return ell_plus_general(Int(10) * t, k) <= Rat(ell_minus(Int(t + 1), k));
}

std::vector<CurvePoint> figure_curve_data(int k) {
  require(k >= 4, errc::range_error, "k must be at least 4");
  std::vector<CurvePoint> out;
  for (int t = 1; t <= 10; ++t) {
    CurvePoint p;
    p.coeff = Rat(int_pow(Int(3), static_cast<unsigned>(t - 1)),
                  int_pow(Int(4), static_cast<unsigned>(t)));
    p.exponent = Rat(1) + Rat(1, int_pow(Int(2), static_cast<unsigned>(t)) - 1);
    p.direction = "lower";
    p.source = "staircase-t=" + std::to_string(t);
    out.push_back(std::move(p));
  }
  for (int j = 1; j <= 50; ++j) {
    const Rat c = Rat(1) + Rat(j, 50);
    CurvePoint p;
    p.coeff = rat_pow((c - 1) / c, 2);
    p.exponent = c;
    p.direction = "upper";
    p.source = "curve-c=" + rat_to_string(c);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ThresholdRow> threshold_report(int k) {
  require(k >= 4, errc::range_error, "threshold report needs k >= 4");
  const Int max_ell = binomial(Int(k), 2);
  std::vector<ThresholdRow> rows;
  auto add = [&](std::string source, Int ell, Rat exponent, std::string direction) {
    ThresholdRow row;
    row.in_range = ell >= 0 && ell <= max_ell;
    row.source = std::move(source);
    row.ell = std::move(ell);
    row.exponent = std::move(exponent);
    row.direction = std::move(direction);
    rows.push_back(std::move(row));
  };

  add("upper-bound", upper_bound_ell(k, Rat(2)), Rat(2), "upper");
  if (k % 2 == 1) add("odd-upper-bound", Int(k + 1) * (k + 1) / 4 - 4, Rat(2), "upper");
  const auto qt = quadratic_threshold(k);
  if (k % 2 == 0) {
    add("even-qt", qt.first, Rat(2), "lower");
  } else {
    add("odd-qt", qt.second, Rat(2), "lower");
  }
  for (int t = 1; int_pow(Int(2), static_cast<unsigned>(t)) <= Int(k); ++t) {
    const auto lb = lower_bound_ell(k, t, false);
    const bool divisible = Int(k) % int_pow(Int(2), static_cast<unsigned>(t)) == 0;
    add(divisible ? "lower-bound(t=" + std::to_string(t) + ")"
                  : "lower-for-nonmultiples(t=" + std::to_string(t) + ")",
        lb.ell, lb.exponent, "lower");
  }
  return rows;
}

}  // namespace diffset
