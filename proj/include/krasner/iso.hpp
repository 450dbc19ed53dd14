#ifndef KRASNER_ISO_HPP
#define KRASNER_ISO_HPP

// Isomorphism of hyperfields and relabeling-invariant fingerprints.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krasner/core.hpp"
#include "krasner/error.hpp"

namespace krasner {

/// Invariants of a hyperfield under any relabeling fixing 0 and 1. Equal
/// fingerprints are necessary for isomorphism, not sufficient.
struct Fingerprint {
  int order = 0;
  std::vector<int> sum_sizes;        // |a (+) b| over all ordered pairs, sorted
  std::vector<int> element_orders;   // multiplicative orders of nonzero elements, sorted
  std::vector<int> one_row_profile;  // |1 (+) z| over the carrier, sorted
  std::vector<std::pair<bool, bool>> self_sum_flags;  // (a in a+a, 0 in a+a), sorted

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    };
    os << "n=" << order << ";sizes=";
    list(sum_sizes);
    os << ";orders=";
    list(element_orders);
    os << ";row1=";
    list(one_row_profile);
    os << ";flags=";
    for (const auto& [self, zero] : self_sum_flags) os << self << zero;
    return os.str();
  }

  /// 64-bit FNV-1a of to_string(), used for stable file names.
  std::uint64_t hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : to_string()) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Multiplicative order of a nonzero element of a hyperfield.
inline int element_order(const Hyperfield& h, int x) {
  int power = x;
  for (int k = 1; k <= h.order(); ++k) {
    if (power == HyperfieldCandidate::one) return k;
    power = h.product(power, x);
  }
  return 0;
}

inline Fingerprint fingerprint(const Hyperfield& h) {
  const int n = h.order();
  Fingerprint fp;
  fp.order = n;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) fp.sum_sizes.push_back(h.sum(a, b).size());
    if (a != 0) fp.element_orders.push_back(element_order(h, a));
    fp.one_row_profile.push_back(h.sum(HyperfieldCandidate::one, a).size());
    const ElementSet aa = h.sum(a, a);
    fp.self_sum_flags.emplace_back(aa.contains(a), aa.contains(HyperfieldCandidate::zero));
  }
  std::sort(fp.sum_sizes.begin(), fp.sum_sizes.end());
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  std::sort(fp.one_row_profile.begin(), fp.one_row_profile.end());
  std::sort(fp.self_sum_flags.begin(), fp.self_sum_flags.end());
  return fp;
}

/// A bijection f on carrier indices; mapping[a] = f(a).
struct IsoWitness {
  std::vector<int> mapping;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

inline ElementSet map_set(const std::vector<int>& mapping, ElementSet s) {
  ElementSet out;
  s.for_each([&](int a) { out.insert(mapping[static_cast<std::size_t>(a)]); });
  return out;
}

/// Exhaustive check that `mapping` is a bijection fixing 0 and 1 with
/// f(ab) = f(a)f(b) and f(a (+) b) = f(a) (+) f(b) for all pairs.
inline bool is_isomorphism(const HyperfieldCandidate& from, const HyperfieldCandidate& to,
                           const std::vector<int>& mapping) {
  const int n = from.order();
  if (to.order() != n || static_cast<int>(mapping.size()) != n) return false;
  if (mapping[0] != 0 || mapping[1] != 1) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int image : mapping) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)]) return false;
    seen[static_cast<std::size_t>(image)] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int fa = mapping[static_cast<std::size_t>(a)];
      const int fb = mapping[static_cast<std::size_t>(b)];
      if (mapping[static_cast<std::size_t>(from.product(a, b))] != to.product(fa, fb)) return false;
      if (map_set(mapping, from.sum(a, b)) != to.sum(fa, fb)) return false;
    }
  }
  return true;
}

/// The candidate whose element perm[a] plays the role of a in `c`.
inline HyperfieldCandidate relabel(const HyperfieldCandidate& c, const std::vector<int>& perm) {
  const int n = c.order();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::domain, "permutation size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int image : perm) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)]) {
      throw Error(ErrorKind::domain, "not a permutation");
    }
    seen[static_cast<std::size_t>(image)] = 1;
  }
  HyperfieldCandidate out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int fa = perm[static_cast<std::size_t>(a)];
      const int fb = perm[static_cast<std::size_t>(b)];
      out.set_sum(fa, fb, map_set(perm, c.sum(a, b)));
      out.set_product(fa, fb, perm[static_cast<std::size_t>(c.product(a, b))]);
    }
  }
  return out;
}

namespace detail {

// Backtracking over multiplicative-group isomorphisms. Free elements are
// assigned in index order with images tried in ascending order; products of
// assigned elements are propagated, so the free choices are generator images
// and the first complete solution is the lexicographically first bijection.
class IsoSearch {
 public:
  IsoSearch(const Hyperfield& from, const Hyperfield& to) : from_(from), to_(to), n_(from.order()) {
    for (int x = 0; x < n_; ++x) {
      from_orders_.push_back(x == 0 ? 0 : element_order(from, x));
      to_orders_.push_back(x == 0 ? 0 : element_order(to, x));
    }
  }

  std::optional<IsoWitness> run() {
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    map[0] = 0;
    map[1] = 1;
    used[0] = used[1] = 1;
    if (solve(map, used)) return IsoWitness{map};
    return std::nullopt;
  }

 private:
  bool propagate(std::vector<int>& map, std::vector<char>& used) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 1; a < n_; ++a) {
        const int fa = map[static_cast<std::size_t>(a)];
        if (fa < 0) continue;
        for (int b = 1; b < n_; ++b) {
          const int fb = map[static_cast<std::size_t>(b)];
          if (fb < 0) continue;
          const int c = from_.product(a, b);
          const int target = to_.product(fa, fb);
          int& fc = map[static_cast<std::size_t>(c)];
          if (fc >= 0) {
            if (fc != target) return false;
            continue;
          }
          if (used[static_cast<std::size_t>(target)] ||
              from_orders_[static_cast<std::size_t>(c)] != to_orders_[static_cast<std::size_t>(target)]) {
            return false;
          }
          fc = target;
          used[static_cast<std::size_t>(target)] = 1;
          changed = true;
        }
      }
    }
    return true;
  }

  // Sum cells between assigned elements must map consistently.
  bool sums_consistent(const std::vector<int>& map) const {
    for (int a = 0; a < n_; ++a) {
      const int fa = map[static_cast<std::size_t>(a)];
      if (fa < 0) continue;
      for (int b = a; b < n_; ++b) {
        const int fb = map[static_cast<std::size_t>(b)];
        if (fb < 0) continue;
        const ElementSet src = from_.sum(a, b);
        const ElementSet dst = to_.sum(fa, fb);
        if (src.size() != dst.size()) return false;
        bool ok = true;
        src.for_each([&](int m) {
          const int fm = map[static_cast<std::size_t>(m)];
          if (fm >= 0 && !dst.contains(fm)) ok = false;
        });
        if (!ok) return false;
      }
    }
    return true;
  }

  bool solve(std::vector<int>& map, std::vector<char>& used) const {
    if (!propagate(map, used) || !sums_consistent(map)) return false;
    const auto free_it = std::find(map.begin(), map.end(), -1);
    if (free_it == map.end()) return is_isomorphism(from_.table(), to_.table(), map);
    const int x = static_cast<int>(free_it - map.begin());
    for (int y = 2; y < n_; ++y) {
      if (used[static_cast<std::size_t>(y)] ||
          to_orders_[static_cast<std::size_t>(y)] != from_orders_[static_cast<std::size_t>(x)]) {
        continue;
      }
      auto next_map = map;
      auto next_used = used;
      next_map[static_cast<std::size_t>(x)] = y;
      next_used[static_cast<std::size_t>(y)] = 1;
      if (solve(next_map, next_used)) {
        map = std::move(next_map);
        used = std::move(next_used);
        return true;
      }
    }
    return false;
  }

  const Hyperfield& from_;
  const Hyperfield& to_;
  int n_;
  std::vector<int> from_orders_;
  std::vector<int> to_orders_;
};

}  // namespace detail

/// The lexicographically first isomorphism from `a` to `b`, if any.
inline std::optional<IsoWitness> are_isomorphic(const Hyperfield& a, const Hyperfield& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;
  return detail::IsoSearch(a, b).run();
}

}  // namespace krasner

#endif  // KRASNER_ISO_HPP
