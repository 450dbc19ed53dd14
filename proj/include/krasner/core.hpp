#ifndef KRASNER_CORE_HPP
#define KRASNER_CORE_HPP

// Hyperstructure data model and the exhaustive axiom verifier for canonical
// hypergroups, Krasner hyperrings and Krasner hyperfields.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "krasner/element_set.hpp"
#include "krasner/error.hpp"
#include "krasner/report.hpp"

namespace krasner {

/// Carrier of size n with a hyperaddition table and a multiplication table.
///
/// Zero is always index 0 and one is always index 1. Nothing about the
/// tables is presumed: the verifier decides whether this is a hyperfield.
class HyperfieldCandidate {
 public:
  static constexpr int zero = 0;
  static constexpr int one = 1;

  HyperfieldCandidate() = default;

  /// Every hyperaddition cell empty and every product 0.
  explicit HyperfieldCandidate(int n)
      : n_(n),
        sums_(cells(n)),
        products_(cells(n), 0) {}

  HyperfieldCandidate(int n, std::vector<ElementSet> sums, std::vector<int> products)
      : n_(n), sums_(std::move(sums)), products_(std::move(products)) {}

  int order() const noexcept { return n_; }

  ElementSet sum(int a, int b) const { return sums_[index(a, b)]; }
  int product(int a, int b) const { return products_[index(a, b)]; }

  void set_sum(int a, int b, ElementSet s) { sums_[index(a, b)] = s; }
  void set_product(int a, int b, int c) { products_[index(a, b)] = c; }

  const std::vector<ElementSet>& sums() const noexcept { return sums_; }
  const std::vector<int>& products() const noexcept { return products_; }

  friend bool operator==(const HyperfieldCandidate&,
                         const HyperfieldCandidate&) = default;

 private:
  static std::size_t cells(int n) {
    return n > 0 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n) : 0;
  }
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<ElementSet> sums_;
  std::vector<int> products_;
};

/// Throws a structural error unless the candidate is well formed: 2 <= n <= 64,
/// n x n tables, nonempty in-range hyperaddition cells, in-range products.
inline void check_structure(const HyperfieldCandidate& c) {
  const int n = c.order();
  if (n < 2 || n > kMaxOrder) {
    throw Error(ErrorKind::structural,
                "carrier size must be in 2.." + std::to_string(kMaxOrder));
  }
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (c.sums().size() != cells || c.products().size() != cells) {
    throw Error(ErrorKind::structural, "tables must be n x n");
  }
  const ElementSet universe = ElementSet::full(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const ElementSet s = c.sum(a, b);
      const std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (s.empty()) throw Error(ErrorKind::structural, "empty cell at " + at);
      if (!s.subset_of(universe)) {
        throw Error(ErrorKind::structural, "sum index out of range at " + at);
      }
      const int p = c.product(a, b);
      if (p < 0 || p >= n) {
        throw Error(ErrorKind::structural, "product index out of range at " + at);
      }
    }
  }
}

inline ElementSet hyper_sum(const HyperfieldCandidate& c, int a, int b) {
  if (a < 0 || b < 0 || a >= c.order() || b >= c.order()) {
    throw Error(ErrorKind::structural, "index out of range");
  }
  return c.sum(a, b);
}

/// Union of a (+) b over a in A and b in B.
inline ElementSet hyper_sum_sets(const HyperfieldCandidate& c, ElementSet lhs,
                                 ElementSet rhs) {
  if (lhs.empty() || rhs.empty()) {
    throw Error(ErrorKind::domain, "hyperaddition of an empty set");
  }
  const ElementSet universe = ElementSet::full(c.order());
  if (!lhs.subset_of(universe) || !rhs.subset_of(universe)) {
    throw Error(ErrorKind::structural, "index out of range");
  }
  ElementSet out;
  lhs.for_each([&](int a) { rhs.for_each([&](int b) { out |= c.sum(a, b); }); });
  return out;
}

/// x * S, multiplying every member of S by the scalar x.
inline ElementSet scale(const HyperfieldCandidate& c, int x, ElementSet s) {
  ElementSet out;
  s.for_each([&](int a) { out.insert(c.product(x, a)); });
  return out;
}

/// S * x.
inline ElementSet scale_right(const HyperfieldCandidate& c, ElementSet s, int x) {
  ElementSet out;
  s.for_each([&](int a) { out.insert(c.product(a, x)); });
  return out;
}

/// Thrown by opposite() when an element does not have exactly one opposite.
class OppositeError : public Error {
 public:
  OppositeError(int element, std::vector<int> candidates)
      : Error(ErrorKind::axiom_violation,
              "element " + std::to_string(element) + " has " +
                  std::to_string(candidates.size()) + " opposites"),
        element_(element),
        candidates_(std::move(candidates)) {}

  int element() const noexcept { return element_; }
  const std::vector<int>& candidates() const noexcept { return candidates_; }

 private:
  int element_;
  std::vector<int> candidates_;
};

namespace detail {

inline std::vector<int> opposites_of(const HyperfieldCandidate& c, int a) {
  std::vector<int> found;
  for (int y = 0; y < c.order(); ++y) {
    if (c.sum(a, y).contains(HyperfieldCandidate::zero)) found.push_back(y);
  }
  return found;
}

}  // namespace detail

/// The unique x' with 0 in a (+) x'.
inline int opposite(const HyperfieldCandidate& c, int a) {
  if (a < 0 || a >= c.order()) throw Error(ErrorKind::structural, "index out of range");
  auto found = detail::opposites_of(c, a);
  if (found.size() != 1) throw OppositeError(a, std::move(found));
  return found.front();
}

/// Identifiers of the ten axioms, in report order.
inline const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {
      "CH1", "CH2", "CH3", "CH4", "CH5", "KR1", "KR2", "KR3", "HF1", "HF2"};
  return names;
}

/// Exhaustively checks every Krasner hyperfield axiom.
///
/// CH1-CH5 are the canonical hypergroup axioms (associativity under the union
/// extension, commutativity, scalar identity, unique opposite,
/// reversibility). KR1-KR3 cover the multiplicative semigroup, the absorbing
/// zero and two-sided distributivity. HF1 is multiplicative commutativity
/// with unit and HF2 the group on the nonzero elements. Each failing axiom
/// records its lexicographically first violating tuple; all axioms run.
inline AxiomReport verify(const HyperfieldCandidate& c) {
  check_structure(c);
  const int n = c.order();
  constexpr int zero = HyperfieldCandidate::zero;
  constexpr int one = HyperfieldCandidate::one;
  AxiomReport report;

  // CH1
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          ElementSet lhs;
          c.sum(y, z).for_each([&](int w) { lhs |= c.sum(x, w); });
          ElementSet rhs;
          c.sum(x, y).for_each([&](int w) { rhs |= c.sum(w, z); });
          if (lhs != rhs) return report.fail("CH1", {x, y, z}, "x+(y+z)!=(x+y)+z");
        }
    report.pass("CH1");
  }();

  // CH2
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (c.sum(x, y) != c.sum(y, x)) return report.fail("CH2", {x, y}, "x+y!=y+x");
    report.pass("CH2");
  }();

  // CH3
  [&] {
    for (int x = 0; x < n; ++x)
      if (c.sum(zero, x) != ElementSet::singleton(x))
        return report.fail("CH3", {x}, "0+x!={x}");
    report.pass("CH3");
  }();

  // CH4
  std::vector<int> opp(static_cast<std::size_t>(n), -1);
  [&] {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      const auto found = detail::opposites_of(c, x);
      if (found.size() == 1) {
        opp[static_cast<std::size_t>(x)] = found.front();
      } else if (ok) {
        report.fail("CH4", {x}, found.empty() ? "no-opposite" : "multiple-opposites");
        ok = false;
      }
    }
    if (ok) report.pass("CH4");
  }();

  // CH5
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (!c.sum(x, y).contains(z)) continue;
          const int xo = opp[static_cast<std::size_t>(x)];
          const int yo = opp[static_cast<std::size_t>(y)];
          if (xo < 0 || yo < 0) return report.fail("CH5", {x, y, z}, "opposite-undefined");
          if (!c.sum(xo, z).contains(y)) return report.fail("CH5", {x, y, z}, "y-not-in-x'+z");
          if (!c.sum(z, yo).contains(x)) return report.fail("CH5", {x, y, z}, "x-not-in-z+y'");
        }
    report.pass("CH5");
  }();

  // KR1
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (c.product(c.product(x, y), z) != c.product(x, c.product(y, z)))
            return report.fail("KR1", {x, y, z}, "(xy)z!=x(yz)");
    report.pass("KR1");
  }();

  // KR2
  [&] {
    for (int x = 0; x < n; ++x)
      if (c.product(x, zero) != zero || c.product(zero, x) != zero)
        return report.fail("KR2", {x}, "x0!=0");
    report.pass("KR2");
  }();

  // KR3
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const ElementSet yz = c.sum(y, z);
          if (scale(c, x, yz) != c.sum(c.product(x, y), c.product(x, z)))
            return report.fail("KR3", {x, y, z}, "left");
          if (scale_right(c, yz, x) != c.sum(c.product(y, x), c.product(z, x)))
            return report.fail("KR3", {x, y, z}, "right");
        }
    report.pass("KR3");
  }();

  // HF1
  [&] {
    for (int x = 0; x < n; ++x) {
      if (c.product(one, x) != x || c.product(x, one) != x)
        return report.fail("HF1", {x}, "1x!=x");
      for (int y = 0; y < n; ++y)
        if (c.product(x, y) != c.product(y, x)) return report.fail("HF1", {x, y}, "xy!=yx");
    }
    report.pass("HF1");
  }();

  // HF2
  [&] {
    for (int x = 1; x < n; ++x) {
      bool has_inverse = false;
      for (int y = 1; y < n; ++y) {
        const int p = c.product(x, y);
        if (p == zero) return report.fail("HF2", {x, y}, "zero-divisor");
        if (p == one) has_inverse = true;
      }
      if (!has_inverse) return report.fail("HF2", {x}, "no-inverse");
    }
    report.pass("HF2");
  }();

  return report;
}

/// Thrown when a candidate that had to be a hyperfield is not one.
class VerificationError : public Error {
 public:
  VerificationError(ErrorKind kind, const std::string& context, AxiomReport report)
      : Error(kind, message(context, report)), report_(std::move(report)) {}

  const AxiomReport& report() const noexcept { return report_; }

 private:
  static std::string message(const std::string& context, const AxiomReport& report) {
    std::string out = context + ": verification failed (";
    const auto failed = report.failures();
    for (std::size_t i = 0; i < failed.size(); ++i) {
      if (i != 0) out += ", ";
      out += failed[i];
    }
    return out + ")";
  }

  AxiomReport report_;
};

/// A candidate that has passed verify(). Only obtainable through verified().
class Hyperfield {
 public:
  /// Verifies `c`; throws VerificationError carrying the report on failure.
  static Hyperfield verified(HyperfieldCandidate c,
                             const std::string& context = "candidate",
                             ErrorKind kind = ErrorKind::construction) {
    AxiomReport report = verify(c);
    if (!report.passed()) throw VerificationError(kind, context, std::move(report));
    return Hyperfield(std::move(c));
  }

  const HyperfieldCandidate& table() const noexcept { return table_; }
  int order() const noexcept { return table_.order(); }
  ElementSet sum(int a, int b) const { return table_.sum(a, b); }
  int product(int a, int b) const { return table_.product(a, b); }
  int opposite(int a) const { return opposites_[static_cast<std::size_t>(a)]; }
  /// Multiplicative inverse of a nonzero element.
  int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }

  friend bool operator==(const Hyperfield& a, const Hyperfield& b) {
    return a.table_ == b.table_;
  }

 private:
  explicit Hyperfield(HyperfieldCandidate c) : table_(std::move(c)) {
    const int n = table_.order();
    opposites_.resize(static_cast<std::size_t>(n));
    inverses_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      opposites_[static_cast<std::size_t>(a)] = krasner::opposite(table_, a);
      for (int b = 1; b < n && a != 0; ++b) {
        if (table_.product(a, b) == HyperfieldCandidate::one) {
          inverses_[static_cast<std::size_t>(a)] = b;
        }
      }
    }
  }

  HyperfieldCandidate table_;
  std::vector<int> opposites_;
  std::vector<int> inverses_;
};

}  // namespace krasner

#endif  // KRASNER_CORE_HPP
