#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "multibetti/errors.hpp"

namespace multibetti {

// Subset of a ground set {0, .., n-1} as a bitset. The mask does not carry n;
// operations that need it (complement, enumeration) take it explicitly.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask full(std::size_t n) {
    return SubsetMask(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  static SubsetMask of(std::initializer_list<std::size_t> indices) {
    SubsetMask m;
    for (std::size_t i : indices) m.bits_ |= (std::uint32_t{1} << i);
    return m;
  }

  std::uint32_t bits() const { return bits_; }
  bool test(std::size_t i) const { return (bits_ >> i) & 1u; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  SubsetMask with(std::size_t i) const { return SubsetMask(bits_ | (std::uint32_t{1} << i)); }
  SubsetMask without(std::size_t i) const { return SubsetMask(bits_ & ~(std::uint32_t{1} << i)); }
  SubsetMask complement_within(std::size_t n) const {
    return SubsetMask(full(n).bits_ & ~bits_);
  }

  bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }

  SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  bool operator==(const SubsetMask&) const = default;
  // Numeric order; fine as a map key but not the canonical listing order.
  bool operator<(SubsetMask o) const { return bits_ < o.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// Canonical listing order: cardinality first, then lexicographic on the
// ascending index arrays ({0,3} before {1,2}).
inline bool canonical_subset_less(SubsetMask a, SubsetMask b) {
  if (a.count() != b.count()) return a.count() < b.count();
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    const int ix = std::countr_zero(x), iy = std::countr_zero(y);
    if (ix != iy) return ix < iy;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

// Visits all k-subsets of {0, .., n-1} in increasing numeric mask order.
template <class Fn>
void for_each_subset_of_size(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(SubsetMask{});
    return;
  }
  std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  const std::uint32_t limit = SubsetMask::full(n).bits();
  while (mask <= limit) {
    fn(SubsetMask(mask));
    // Gosper's hack: next mask with the same popcount.
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    const std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
    if (next <= mask) break;
    mask = next;
  }
}

}  // namespace multibetti
