#ifndef KRASNER_CONSTRUCT_HPP
#define KRASNER_CONSTRUCT_HPP

// Hyperfield constructions: Krasner's quotient F/G, the Massouros
// hyperfield {a, b, a+b}, the cartesian product, and a hyperfield of any
// order n >= 2.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krasner/core.hpp"
#include "krasner/element_set.hpp"
#include "krasner/error.hpp"
#include "krasner/galois.hpp"

namespace krasner {

/// A subgroup G of the multiplicative group of a field of order `field_order`.
struct SubgroupSpec {
  int field_order = 0;
  std::vector<int> generators;
  std::vector<int> elements;  // sorted ascending

  int size() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// Smallest multiplicatively closed subset of f containing 1 and `gens`.
inline SubgroupSpec subgroup_closure(const FieldTable& f, std::vector<int> gens) {
  for (int g : gens) {
    if (g == 0) throw Error(ErrorKind::domain, "generator 0 is not a unit");
    if (g < 0 || g >= f.order) throw Error(ErrorKind::domain, "generator out of range");
  }
  std::vector<char> member(static_cast<std::size_t>(f.order), 0);
  std::vector<int> frontier{1};
  member[1] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        const int y = f.mul(x, g);
        if (!member[static_cast<std::size_t>(y)]) {
          member[static_cast<std::size_t>(y)] = 1;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  SubgroupSpec out;
  out.field_order = f.order;
  out.generators = std::move(gens);
  for (int x = 1; x < f.order; ++x) {
    if (member[static_cast<std::size_t>(x)]) out.elements.push_back(x);
  }
  return out;
}

/// Krasner's quotient F/G as an unverified candidate.
///
/// Index 0 is the coset {0}, index 1 the coset G, and the remaining cosets
/// follow in order of their smallest field element.
inline HyperfieldCandidate quotient_candidate(const FieldTable& f, const SubgroupSpec& g) {
  if (g.field_order != f.order) {
    throw Error(ErrorKind::domain, "subgroup belongs to a different field");
  }
  if (g.elements.empty() || !g.contains(1) || g.contains(0)) {
    throw Error(ErrorKind::domain, "G is not a subgroup of the unit group");
  }
  for (int a : g.elements) {
    if (a <= 0 || a >= f.order) throw Error(ErrorKind::domain, "G is not a subgroup of the unit group");
    for (int b : g.elements) {
      if (!g.contains(f.mul(a, b))) {
        throw Error(ErrorKind::domain, "G is not closed under multiplication");
      }
    }
  }

  const int q = f.order;
  std::vector<int> coset(static_cast<std::size_t>(q), -1);
  coset[0] = 0;
  int count = 1;
  for (int x = 1; x < q; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    for (int h : g.elements) coset[static_cast<std::size_t>(f.mul(x, h))] = count;
    ++count;
  }
  if (count > kMaxOrder) throw Error(ErrorKind::capacity, "quotient has more than 64 cosets");

  HyperfieldCandidate c(count);
  for (int x = 0; x < q; ++x) {
    const int cx = coset[static_cast<std::size_t>(x)];
    for (int y = 0; y < q; ++y) {
      const int cy = coset[static_cast<std::size_t>(y)];
      ElementSet cell = c.sum(cx, cy);
      cell.insert(coset[static_cast<std::size_t>(f.add(x, y))]);
      c.set_sum(cx, cy, cell);
      c.set_product(cx, cy, coset[static_cast<std::size_t>(f.mul(x, y))]);
    }
  }
  return c;
}

inline Hyperfield quotient(const FieldTable& f, const SubgroupSpec& g) {
  return Hyperfield::verified(quotient_candidate(f, g), "quotient");
}

/// a (+) 0 = {a}; a (+) -a = F for a != 0; otherwise {a, b, a + b},
/// including a = b.
inline HyperfieldCandidate massouros_candidate(const FieldTable& f) {
  const int q = f.order;
  if (q < 2) throw Error(ErrorKind::domain, "field must have at least 2 elements");
  if (q > kMaxOrder) throw Error(ErrorKind::capacity, "field larger than 64 elements");
  HyperfieldCandidate c(q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      ElementSet cell;
      if (a == 0) {
        cell = ElementSet::singleton(b);
      } else if (b == 0) {
        cell = ElementSet::singleton(a);
      } else if (f.add(a, b) == 0) {
        cell = ElementSet::full(q);
      } else {
        cell = {a, b, f.add(a, b)};
      }
      c.set_sum(a, b, cell);
      c.set_product(a, b, f.mul(a, b));
    }
  }
  return c;
}

inline Hyperfield massouros(const FieldTable& f) {
  return Hyperfield::verified(massouros_candidate(f), "massouros");
}

/// Index of the pair (i, j) in the product carrier: (0,0) -> 0, (1,1) -> 1,
/// every other pair in row-major order after those two.
inline int product_index(int i, int j, int right_order) {
  if (i == 0 && j == 0) return 0;
  if (i == 1 && j == 1) return 1;
  int rank = i * right_order + j;  // row-major rank
  int index = rank + 2;
  if (rank > 0) --index;  // skipped (0,0)
  if (rank > right_order + 1) --index;  // skipped (1,1)
  return index;
}

/// Componentwise hyperaddition and multiplication on the cartesian product.
inline HyperfieldCandidate product_candidate(const HyperfieldCandidate& left,
                                             const HyperfieldCandidate& right) {
  const int n1 = left.order();
  const int n2 = right.order();
  if (n1 * n2 > kMaxOrder) throw Error(ErrorKind::capacity, "product larger than 64 elements");
  HyperfieldCandidate c(n1 * n2);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) {
          const int lhs = product_index(a, b, n2);
          const int rhs = product_index(x, y, n2);
          ElementSet cell;
          left.sum(a, x).for_each([&](int i) {
            right.sum(b, y).for_each([&](int j) { cell.insert(product_index(i, j, n2)); });
          });
          c.set_sum(lhs, rhs, cell);
          c.set_product(lhs, rhs,
                        product_index(left.product(a, x), right.product(b, y), n2));
        }
  return c;
}

inline HyperfieldCandidate product_candidate(const Hyperfield& left, const Hyperfield& right) {
  return product_candidate(left.table(), right.table());
}

/// The product as a verified hyperfield; throws VerificationError when the
/// product fails an axiom.
inline Hyperfield product(const Hyperfield& left, const Hyperfield& right) {
  return Hyperfield::verified(product_candidate(left, right), "product");
}

/// Same as product(Hyperfield, Hyperfield) for inputs not yet verified;
/// an input that fails verification is a precondition error.
inline Hyperfield product(const HyperfieldCandidate& left, const HyperfieldCandidate& right) {
  auto l = Hyperfield::verified(left, "product left factor", ErrorKind::precondition);
  auto r = Hyperfield::verified(right, "product right factor", ErrorKind::precondition);
  return product(l, r);
}

/// The factor-Massouros-product fold over the prime-power factorization of n
/// (ascending primes, left fold), unverified. For n that is not a prime
/// power the result has zero divisors and never passes HF2.
inline HyperfieldCandidate product_fold_candidate(int n) {
  if (n < 2 || n > kMaxOrder) {
    throw Error(ErrorKind::capacity, "order must be in 2.." + std::to_string(kMaxOrder));
  }
  std::optional<HyperfieldCandidate> acc;
  for (const auto& pp : factor_integer(n)) {
    auto factor = massouros(gf(static_cast<int>(pp.p), pp.k));
    acc = acc ? product_candidate(*acc, factor.table()) : factor.table();
  }
  return *acc;
}

inline constexpr int kMaxSynthesisOrder = 64;

/// Smallest prime p with p = 1 (mod m).
inline int smallest_prime_one_mod(int m) {
  for (std::int64_t p = m + 1;; p += m) {
    if (is_prime(p)) return static_cast<int>(p);
  }
}

/// A verified hyperfield with exactly n elements, 2 <= n <= 64.
///
/// Prime powers q give massouros(GF(q)). Any other n is obtained as the
/// quotient GF(p) / G where p is the smallest prime with p = 1 (mod n - 1)
/// and G is the subgroup of (n-1)-th powers, which has index n - 1.
inline Hyperfield hyperfield_of_order(int n) {
  if (n < 2 || n > kMaxSynthesisOrder) {
    throw Error(ErrorKind::capacity,
                "order must be in 2.." + std::to_string(kMaxSynthesisOrder));
  }
  const auto factors = factor_integer(n);
  if (factors.size() == 1) {
    return massouros(gf(static_cast<int>(factors[0].p), factors[0].k));
  }
  const int m = n - 1;
  const int p = smallest_prime_one_mod(m);
  if (p > kMaxFieldOrder) throw Error(ErrorKind::capacity, "required prime field too large");
  const FieldTable f = gf(p, 1);
  std::vector<int> powers;
  for (int y = 1; y < p; ++y) {
    int power = 1;
    for (int i = 0; i < m; ++i) power = f.mul(power, y);
    powers.push_back(power);
  }
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return quotient(f, subgroup_closure(f, std::move(powers)));
}

}  // namespace krasner

#endif  // KRASNER_CONSTRUCT_HPP
