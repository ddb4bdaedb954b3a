#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace posetlogic {

/// Hard upper bound on the number of elements any structure in this library
/// can hold. Configurable caps (see Limits) sit well below it.
inline constexpr int kMaxElements = 64;

/// A set of element indices stored as a 64-bit word; bit i is element i.
///
/// Subsets are totally ordered by their word value, which is the canonical
/// enumeration order used for every list this library returns.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}
  SubsetMask(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= std::uint64_t{1} << e;
  }

  /// {0, ..., n-1}.
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask singleton(int x) { return SubsetMask(std::uint64_t{1} << x); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr SubsetMask with(int x) const { return SubsetMask(bits_ | (std::uint64_t{1} << x)); }
  constexpr SubsetMask without(int x) const { return SubsetMask(bits_ & ~(std::uint64_t{1} << x)); }
  /// Complement relative to {0, ..., n-1}.
  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full(n).bits_); }

  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  constexpr SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }
  constexpr SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
  constexpr SubsetMask& operator-=(SubsetMask o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Forward iteration over member indices in increasing order.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// "{0,2,3}"; with labels, "{a,c,d}".
std::string to_string(SubsetMask s, const std::vector<std::string>* labels = nullptr);

}  // namespace posetlogic
