#ifndef KRASNER_GALOIS_HPP
#define KRASNER_GALOIS_HPP

// Finite fields GF(p^k) as explicit Cayley tables, plus the integer
// factorization used to split an order into prime powers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "krasner/error.hpp"
#include "krasner/report.hpp"

namespace krasner {

/// Deterministic trial-division primality test.
constexpr bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

struct PrimePower {
  std::int64_t p = 2;
  int k = 1;

  std::int64_t value() const noexcept {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) v *= p;
    return v;
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime powers with strictly ascending primes.
using Factorization = std::vector<PrimePower>;

inline Factorization factor_integer(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::domain, "order must be at least 2");
  Factorization out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.k;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

/// True when n = p^k for a prime p and k >= 1.
inline bool is_prime_power(std::int64_t n) {
  return n >= 2 && factor_integer(n).size() == 1;
}

inline constexpr int kMaxFieldDegree = 8;
inline constexpr int kMaxFieldOrder = 6561;

/// Complete Cayley tables of GF(p^k).
///
/// Element i is the polynomial whose coefficient vector (c0, ..., c_{k-1})
/// satisfies i = sum c_j p^j, so 0 and 1 land on indices 0 and 1.
struct FieldTable {
  int order = 0;
  int characteristic = 0;
  int degree = 0;
  std::vector<std::uint16_t> add_table;  // row-major order x order
  std::vector<std::uint16_t> mul_table;
  std::vector<std::vector<int>> labels;  // coefficient vector per element
  std::vector<int> modulus;              // monic, low degree first; empty for k = 1

  int add(int a, int b) const {
    return add_table[static_cast<std::size_t>(a) * order + b];
  }
  int mul(int a, int b) const {
    return mul_table[static_cast<std::size_t>(a) * order + b];
  }
  int negate(int a) const {
    for (int b = 0; b < order; ++b) {
      if (add(a, b) == 0) return b;
    }
    throw Error(ErrorKind::structural, "element has no additive inverse");
  }
  int inverse(int a) const {
    for (int b = 1; b < order; ++b) {
      if (mul(a, b) == 1) return b;
    }
    throw Error(ErrorKind::domain, "element has no multiplicative inverse");
  }

  friend bool operator==(const FieldTable&, const FieldTable&) = default;
};

namespace detail {

using Poly = std::vector<int>;  // coefficients, low degree first

inline int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

inline int mod_inverse(int a, int p) {
  for (int b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  return 0;
}

// Remainder of f divided by d over GF(p); d must be nonzero.
inline Poly poly_mod(Poly f, const Poly& d, int p) {
  const int dd = poly_degree(d);
  const int lead_inv = mod_inverse(d[static_cast<std::size_t>(dd)], p);
  for (int i = poly_degree(f); i >= dd; i = poly_degree(f)) {
    const int factor = (f[static_cast<std::size_t>(i)] * lead_inv) % p;
    for (int j = 0; j <= dd; ++j) {
      auto& c = f[static_cast<std::size_t>(i - dd + j)];
      c = ((c - factor * d[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  return f;
}

// Coefficient vector of length `len` for index `value` (base-p digits,
// least significant first).
inline Poly digits(int value, int p, int len) {
  Poly out(static_cast<std::size_t>(len));
  for (auto& c : out) {
    c = value % p;
    value /= p;
  }
  return out;
}

inline bool is_irreducible(const Poly& f, int p) {
  const int k = poly_degree(f);
  for (int deg = 1; deg <= k / 2; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly d = digits(low, p, deg);
      d.push_back(1);
      if (poly_degree(poly_mod(f, d, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// GF(p), comparing c0 first, then c1, and so on. Returned low degree first,
/// including the leading 1.
inline std::vector<int> smallest_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int rank = 0; rank < count; ++rank) {
    // c0 is the most significant digit of the rank.
    detail::Poly f(static_cast<std::size_t>(k) + 1, 0);
    int rest = rank;
    for (int i = k - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (detail::is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::construction, "no irreducible polynomial found");
}

inline FieldTable gf(int p, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::domain, "p not prime");
  if (k < 1 || k > kMaxFieldDegree) {
    throw Error(ErrorKind::capacity,
                "field degree must be in 1.." + std::to_string(kMaxFieldDegree));
  }
  std::int64_t q64 = PrimePower{p, k}.value();
  if (q64 > kMaxFieldOrder) {
    throw Error(ErrorKind::capacity, "field order exceeds " +
                                         std::to_string(kMaxFieldOrder));
  }
  const int q = static_cast<int>(q64);

  FieldTable f;
  f.order = q;
  f.characteristic = p;
  f.degree = k;
  f.add_table.resize(static_cast<std::size_t>(q) * q);
  f.mul_table.resize(static_cast<std::size_t>(q) * q);
  f.labels.reserve(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) f.labels.push_back(detail::digits(a, p, k));

  auto index_of = [&](const detail::Poly& c) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + c[static_cast<std::size_t>(i)];
    return idx;
  };

  if (k > 1) f.modulus = smallest_irreducible(p, k);

  for (int a = 0; a < q; ++a) {
    const auto& ca = f.labels[static_cast<std::size_t>(a)];
    for (int b = 0; b < q; ++b) {
      const auto& cb = f.labels[static_cast<std::size_t>(b)];
      detail::Poly sum(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        sum[static_cast<std::size_t>(i)] =
            (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p;
      }
      detail::Poly prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          auto& c = prod[static_cast<std::size_t>(i + j)];
          c = (c + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p;
        }
      }
      if (k > 1) prod = detail::poly_mod(std::move(prod), f.modulus, p);
      prod.resize(static_cast<std::size_t>(k));
      const auto cell = static_cast<std::size_t>(a) * q + b;
      f.add_table[cell] = static_cast<std::uint16_t>(index_of(sum));
      f.mul_table[cell] = static_cast<std::uint16_t>(index_of(prod));
    }
  }
  return f;
}

/// Exhaustively checks every field axiom on the tables of `f`.
///
/// Throws a structural error when the tables are not order x order with
/// in-range entries; otherwise every axiom is reported with the first
/// violating tuple in lexicographic order.
inline AxiomReport verify_field(const FieldTable& f) {
  const int q = f.order;
  const auto cells = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  if (q < 2 || f.add_table.size() != cells || f.mul_table.size() != cells) {
    throw Error(ErrorKind::structural, "field tables must be order x order");
  }
  for (std::size_t i = 0; i < cells; ++i) {
    if (f.add_table[i] >= q || f.mul_table[i] >= q) {
      throw Error(ErrorKind::structural, "field table entry out of range");
    }
  }

  AxiomReport report;
  auto check_triples = [&](const std::string& name, auto&& holds) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          if (!holds(a, b, c)) {
            report.fail(name, {a, b, c}, "lhs!=rhs");
            return;
          }
    report.pass(name);
  };
  auto check_pairs = [&](const std::string& name, auto&& holds) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        if (!holds(a, b)) {
          report.fail(name, {a, b}, "lhs!=rhs");
          return;
        }
    report.pass(name);
  };
  auto check_each = [&](const std::string& name, int from, auto&& holds,
                        const std::string& reason) {
    for (int a = from; a < q; ++a)
      if (!holds(a)) {
        report.fail(name, {a}, reason);
        return;
      }
    report.pass(name);
  };

  check_triples("add-associativity", [&](int a, int b, int c) {
    return f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
  });
  check_pairs("add-commutativity",
              [&](int a, int b) { return f.add(a, b) == f.add(b, a); });
  check_each("additive-identity", 0,
             [&](int a) { return f.add(0, a) == a && f.add(a, 0) == a; },
             "0+x!=x");
  check_each("additive-inverse", 0, [&](int a) {
    for (int b = 0; b < q; ++b)
      if (f.add(a, b) == 0) return true;
    return false;
  }, "no inverse");
  check_triples("mul-associativity", [&](int a, int b, int c) {
    return f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
  });
  check_pairs("mul-commutativity",
              [&](int a, int b) { return f.mul(a, b) == f.mul(b, a); });
  check_each("multiplicative-identity", 0,
             [&](int a) { return f.mul(1, a) == a && f.mul(a, 1) == a; },
             "1*x!=x");
  check_each("multiplicative-inverse", 1, [&](int a) {
    for (int b = 1; b < q; ++b)
      if (f.mul(a, b) == 1) return true;
    return false;
  }, "no inverse");
  check_triples("distributivity", [&](int a, int b, int c) {
    return f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
  });
  check_each("zero-absorbing", 0,
             [&](int a) { return f.mul(0, a) == 0 && f.mul(a, 0) == 0; },
             "0*x!=0");
  return report;
}

}  // namespace krasner

#endif  // KRASNER_GALOIS_HPP
