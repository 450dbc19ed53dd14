#ifndef KRASNER_ENUMERATE_HPP
#define KRASNER_ENUMERATE_HPP

// Exhaustive enumeration of Krasner hyperfields of a small order up to
// isomorphism.
//
// Distributivity makes the whole hyperaddition a function of the single row
// nu(z) = 1 (+) z:  x (+) y = x * nu(x^-1 y)  for x != 0.  The search fixes an
// abelian group on the nonzero elements and walks the one-row maps nu, with
// three prunings applied as rows are chosen:
//   - exactly one z has 0 in nu(z) (the opposite of 1);
//   - commutativity forces nu(z) = z * nu(z^-1), so only one row per
//     {z, z^-1} pair is free and self-inverse z need z * nu(z) = nu(z);
//   - reversibility of row 1 against the opposite of 1.
// Survivors are expanded and run through the full verifier. The choice of
// nu(1) splits the space into independent shards; shard results are merged
// in shard order and deduplicated once, so the output does not depend on the
// number of workers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "krasner/core.hpp"
#include "krasner/error.hpp"
#include "krasner/galois.hpp"
#include "krasner/iso.hpp"

namespace krasner {

/// Cayley table of a finite abelian group, identity at index 0.
struct GroupTable {
  int order = 1;
  std::vector<int> factors;  // invariant factors d1 | d2 | ... (cyclic parts)
  std::vector<int> table;    // order x order

  int op(int a, int b) const {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                 static_cast<std::size_t>(b)];
  }
  int inverse(int a) const {
    for (int b = 0; b < order; ++b) {
      if (op(a, b) == 0) return b;
    }
    return -1;
  }

  std::string name() const {
    if (factors.empty()) return "C1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out += (i ? "xC" : "C") + std::to_string(factors[i]);
    }
    return out;
  }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

inline constexpr int kMaxGroupOrder = 8;

namespace detail {

// Partitions of e into descending parts, starting with [e].
inline void partitions(int e, int max_part, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(e - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline GroupTable cyclic_product(std::vector<int> factors) {
  GroupTable g;
  g.factors = std::move(factors);
  g.order = 1;
  for (int d : g.factors) g.order *= d;
  const auto n = static_cast<std::size_t>(g.order);
  g.table.resize(n * n);
  // Mixed radix with the first factor most significant.
  auto digits = [&](int index) {
    std::vector<int> out(g.factors.size());
    for (std::size_t i = g.factors.size(); i-- > 0;) {
      out[i] = index % g.factors[i];
      index /= g.factors[i];
    }
    return out;
  };
  for (int a = 0; a < g.order; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < g.order; ++b) {
      const auto db = digits(b);
      int index = 0;
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        index = index * g.factors[i] + (da[i] + db[i]) % g.factors[i];
      }
      g.table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = index;
    }
  }
  return g;
}

}  // namespace detail

/// One table per isomorphism class of abelian groups of order m, cyclic first.
inline std::vector<GroupTable> abelian_groups(int m) {
  if (m < 1 || m > kMaxGroupOrder) {
    throw Error(ErrorKind::capacity, "group order must be in 1.." + std::to_string(kMaxGroupOrder));
  }
  if (m == 1) return {detail::cyclic_product({})};

  // Per prime, the partitions of its exponent; then combine all choices.
  const auto factorization = factor_integer(m);
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (const auto& pp : factorization) {
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    detail::partitions(pp.k, pp.k, prefix, parts);
    per_prime.push_back(std::move(parts));
  }

  std::vector<GroupTable> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      rank = std::max(rank, per_prime[i][choice[i]].size());
    }
    // Invariant factor i (largest first) multiplies the i-th part of each prime.
    std::vector<int> factors(rank, 1);
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& parts = per_prime[i][choice[i]];
      for (std::size_t j = 0; j < parts.size(); ++j) {
        for (int e = 0; e < parts[j]; ++e) factors[j] *= static_cast<int>(factorization[i].p);
      }
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(detail::cyclic_product(std::move(factors)));

    std::size_t i = per_prime.size();
    while (i > 0 && ++choice[i - 1] == per_prime[i - 1].size()) {
      choice[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

/// The row nu(z) = 1 (+) z indexed by carrier element; row[0] must be {1}.
struct OneRowMap {
  std::vector<ElementSet> row;

  friend bool operator==(const OneRowMap&, const OneRowMap&) = default;
};

/// Hyperfield multiplication table with the group on indices 1..m.
inline HyperfieldCandidate group_scaffold(const GroupTable& g) {
  const int n = g.order + 1;
  HyperfieldCandidate c(n);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) c.set_product(a, b, g.op(a - 1, b - 1) + 1);
  return c;
}

/// Rebuilds every hyperaddition cell from the single row nu.
inline HyperfieldCandidate expand_one_row(const GroupTable& g, const OneRowMap& nu) {
  const int n = g.order + 1;
  if (n > kMaxOrder || static_cast<int>(nu.row.size()) != n) {
    throw Error(ErrorKind::structural, "one-row map must have one entry per carrier element");
  }
  if (nu.row[0] != ElementSet::singleton(HyperfieldCandidate::one)) {
    throw Error(ErrorKind::structural, "one-row map must have 1 (+) 0 = {1}");
  }
  for (const auto& s : nu.row) {
    if (s.empty() || !s.subset_of(ElementSet::full(n))) {
      throw Error(ErrorKind::structural, "one-row entries must be nonempty subsets of the carrier");
    }
  }
  HyperfieldCandidate c = group_scaffold(g);
  for (int y = 0; y < n; ++y) {
    c.set_sum(0, y, ElementSet::singleton(y));
    if (y != 0) c.set_sum(y, 0, ElementSet::singleton(y));
  }
  for (int x = 1; x < n; ++x) {
    const int x_inv = g.inverse(x - 1) + 1;
    for (int y = 1; y < n; ++y) {
      c.set_sum(x, y, scale(c, x, nu.row[static_cast<std::size_t>(c.product(x_inv, y))]));
    }
  }
  return c;
}

struct SearchProgress {
  std::uint64_t scanned = 0;    // complete one-row maps examined
  std::uint64_t survivors = 0;  // maps that passed the full verifier
  std::size_t shards_done = 0;
  std::size_t shards_total = 0;
};

struct SearchOptions {
  int jobs = 1;
  std::chrono::milliseconds progress_interval{1000};
  std::function<void(const SearchProgress&)> on_progress;
  /// Wall-clock budget; the search stops early and reports incomplete.
  std::optional<std::chrono::steady_clock::duration> budget;
};

/// Order plus the multiplicative scaffolds to search over.
struct SearchSpec {
  int order = 0;
  std::vector<GroupTable> groups;
  SearchOptions options;
};

struct EnumerationResult {
  int order = 0;
  bool complete = true;
  std::vector<Hyperfield> classes;  // pairwise non-isomorphic, sorted
  SearchProgress progress;
};

inline constexpr int kMaxEnumerationOrder = 6;

inline SearchSpec make_search_spec(int n, SearchOptions options = {}) {
  if (n < 2 || n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::capacity,
                "enumeration order must be in 2.." + std::to_string(kMaxEnumerationOrder));
  }
  return SearchSpec{n, abelian_groups(n - 1), std::move(options)};
}

/// Strict total order on tables, used to break fingerprint ties.
inline bool table_less(const HyperfieldCandidate& a, const HyperfieldCandidate& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.sums() != b.sums()) return a.sums() < b.sums();
  return a.products() < b.products();
}

namespace detail {

class ShardSearch {
 public:
  ShardSearch(const GroupTable& group, std::atomic<bool>& stop,
              std::optional<std::chrono::steady_clock::time_point> deadline)
      : group_(group),
        n_(group.order + 1),
        scaffold_(group_scaffold(group)),
        stop_(stop),
        deadline_(deadline) {
    inverse_.resize(static_cast<std::size_t>(n_));
    for (int z = 1; z < n_; ++z) inverse_[static_cast<std::size_t>(z)] = group.inverse(z - 1) + 1;
    nu_.row.assign(static_cast<std::size_t>(n_), ElementSet{});
    nu_.row[0] = ElementSet::singleton(HyperfieldCandidate::one);
  }

  /// Runs the shard with nu(1) = first_row.
  void run(ElementSet first_row) {
    if (!admissible(1, first_row)) return;
    nu_.row[1] = first_row;
    zero_holders_ = first_row.contains(0) ? 1 : 0;
    descend(2);
  }

  std::vector<HyperfieldCandidate>& found() { return found_; }
  std::uint64_t scanned() const { return scanned_; }

 private:
  bool admissible(int z, ElementSet s) const {
    return inverse_[static_cast<std::size_t>(z)] != z || scale(scaffold_, z, s) == s;
  }

  void descend(int z) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (z == n_) {
      finish();
      return;
    }
    const int z_inv = inverse_[static_cast<std::size_t>(z)];
    if (z_inv < z) {
      const ElementSet forced = scale(scaffold_, z, nu_.row[static_cast<std::size_t>(z_inv)]);
      place(z, forced);
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << n_;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      const ElementSet s(bits);
      if (admissible(z, s)) place(z, s);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  void place(int z, ElementSet s) {
    const bool holds_zero = s.contains(0);
    if (holds_zero && zero_holders_ == 1) return;
    zero_holders_ += holds_zero ? 1 : 0;
    nu_.row[static_cast<std::size_t>(z)] = s;
    descend(z + 1);
    zero_holders_ -= holds_zero ? 1 : 0;
  }

  void finish() {
    ++scanned_;
    if ((scanned_ & 0xfff) == 0 && deadline_ &&
        std::chrono::steady_clock::now() > *deadline_) {
      stop_.store(true);
      return;
    }
    if (zero_holders_ != 1) return;
    int minus_one = 1;
    while (!nu_.row[static_cast<std::size_t>(minus_one)].contains(0)) ++minus_one;
    // Row-1 reversibility: z in 1 (+) y implies y in (-1) (+) z.
    for (int y = 1; y < n_; ++y) {
      bool ok = true;
      nu_.row[static_cast<std::size_t>(y)].for_each([&](int z) {
        if (!ok) return;
        const ElementSet back =
            z == 0 ? ElementSet::singleton(minus_one)
                   : scale(scaffold_, minus_one,
                           nu_.row[static_cast<std::size_t>(
                               scaffold_.product(inverse_[static_cast<std::size_t>(minus_one)], z))]);
        ok = back.contains(y);
      });
      if (!ok) return;
    }
    HyperfieldCandidate c = expand_one_row(group_, nu_);
    if (verify(c).passed()) found_.push_back(std::move(c));
  }

  const GroupTable& group_;
  int n_;
  HyperfieldCandidate scaffold_;
  std::atomic<bool>& stop_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<int> inverse_;
  OneRowMap nu_;
  int zero_holders_ = 0;
  std::uint64_t scanned_ = 0;
  std::vector<HyperfieldCandidate> found_;
};

}  // namespace detail

/// Runs the sharded search described by `spec`.
inline EnumerationResult search(const SearchSpec& spec) {
  const int n = spec.order;
  struct Shard {
    std::size_t group;
    ElementSet first_row;
  };
  std::vector<Shard> shards;
  for (std::size_t g = 0; g < spec.groups.size(); ++g) {
    if (spec.groups[g].order + 1 != n) throw Error(ErrorKind::domain, "group order does not match n - 1");
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      shards.push_back({g, ElementSet(bits)});
    }
  }

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (spec.options.budget) deadline = std::chrono::steady_clock::now() + *spec.options.budget;

  std::vector<std::vector<HyperfieldCandidate>> shard_results(shards.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<std::uint64_t> scanned{0};
  std::atomic<std::uint64_t> survivors{0};
  std::atomic<bool> stop{false};
  std::mutex progress_mutex;
  auto last_report = std::chrono::steady_clock::now();

  auto report = [&](bool force) {
    if (!spec.options.on_progress) return;
    std::lock_guard lock(progress_mutex);
    const auto now = std::chrono::steady_clock::now();
    if (!force && now - last_report < spec.options.progress_interval) return;
    last_report = now;
    spec.options.on_progress({scanned.load(), survivors.load(), done.load(), shards.size()});
  };

  auto worker = [&] {
    for (std::size_t i = next++; i < shards.size() && !stop.load(); i = next++) {
      detail::ShardSearch shard(spec.groups[shards[i].group], stop, deadline);
      shard.run(shards[i].first_row);
      scanned += shard.scanned();
      survivors += shard.found().size();
      shard_results[i] = std::move(shard.found());
      ++done;
      if (deadline && std::chrono::steady_clock::now() > *deadline) stop.store(true);
      report(false);
    }
  };

  const int jobs = std::max(1, spec.options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  report(true);

  EnumerationResult result;
  result.order = n;
  result.complete = !stop.load() && done.load() == shards.size();
  result.progress = {scanned.load(), survivors.load(), done.load(), shards.size()};

  // Deduplicate in shard order: fingerprint buckets, then pairwise isomorphism.
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  std::vector<std::pair<Fingerprint, Hyperfield>> reps;
  for (auto& bucket_results : shard_results) {
    for (auto& c : bucket_results) {
      Hyperfield h = Hyperfield::verified(std::move(c), "enumeration survivor");
      Fingerprint fp = fingerprint(h);
      auto& bucket = buckets[fp];
      const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t r) {
        return are_isomorphic(reps[r].second, h).has_value();
      });
      if (seen) continue;
      bucket.push_back(reps.size());
      reps.emplace_back(std::move(fp), std::move(h));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return table_less(a.second.table(), b.second.table());
  });
  for (auto& [fp, h] : reps) result.classes.push_back(std::move(h));
  return result;
}

/// All Krasner hyperfields of order n (2 <= n <= 6) up to isomorphism.
inline EnumerationResult enumerate_hyperfields(int n, SearchOptions options = {}) {
  return search(make_search_spec(n, std::move(options)));
}

}  // namespace krasner

#endif  // KRASNER_ENUMERATE_HPP
