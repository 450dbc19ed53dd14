#ifndef KRASNER_ELEMENT_SET_HPP
#define KRASNER_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace krasner {

/// Largest carrier a hyperstructure may have; one bit per element.
inline constexpr int kMaxOrder = 64;

/// A subset of carrier indices {0, ..., n-1} held as a membership mask.
///
/// The carrier size is not stored; callers that need the universe (for
/// complements or the full set) pass it explicitly. Hyperaddition values are
/// always nonempty, which the structural checks in core enforce.
class ElementSet {
 public:
  constexpr ElementSet() noexcept = default;
  constexpr explicit ElementSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> members) noexcept {
    for (int m : members) insert(m);
  }

  static constexpr ElementSet singleton(int a) noexcept {
    return ElementSet(std::uint64_t{1} << a);
  }
  static constexpr ElementSet full(int n) noexcept {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int a) const noexcept {
    return a >= 0 && a < 64 && ((bits_ >> a) & 1u) != 0;
  }
  /// Largest member plus one (0 for the empty set).
  constexpr int extent() const noexcept { return 64 - std::countl_zero(bits_); }
  constexpr bool subset_of(ElementSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr void insert(int a) noexcept { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(int a) noexcept { bits_ &= ~(std::uint64_t{1} << a); }

  constexpr ElementSet& operator|=(ElementSet other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) noexcept {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) noexcept {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) noexcept = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) noexcept = default;

  /// Calls f(index) for each member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(std::countr_zero(rest));
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int a) { out.push_back(a); });
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int a) {
      if (!first) out += ',';
      out += std::to_string(a);
      first = false;
    });
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace krasner

#endif  // KRASNER_ELEMENT_SET_HPP
