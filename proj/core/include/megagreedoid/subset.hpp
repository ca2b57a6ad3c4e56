#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace mg {

// A subset of an ordered ground set, bit i standing for element i.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  static constexpr Subset full(int n) { return Subset((std::uint32_t{1} << n) - 1); }
  static constexpr Subset singleton(int i) { return Subset(std::uint32_t{1} << i); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Subset with(int i) const { return Subset(mask_ | (std::uint32_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(mask_ & ~(std::uint32_t{1} << i)); }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }

  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

 private:
  std::uint32_t mask_ = 0;
};

// Calls fn(sub) for every sub with lo ⊆ sub ⊆ hi, in increasing mask order.
template <typename Fn>
void for_each_between(Subset lo, Subset hi, Fn&& fn) {
  const std::uint32_t free = hi.mask() & ~lo.mask();
  std::uint32_t t = 0;
  while (true) {
    fn(Subset(lo.mask() | t));
    if (t == free) break;
    t = (t - free) & free;
  }
}

// Packs the bits of x that lie in `within` into consecutive low bits.
constexpr Subset compress(Subset x, Subset within) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = within.mask(); m != 0; m &= m - 1, ++k) {
    if (x.contains(std::countr_zero(m))) out |= std::uint32_t{1} << k;
  }
  return Subset(out);
}

// Inverse of compress.
constexpr Subset expand(Subset packed, Subset within) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = within.mask(); m != 0; m &= m - 1, ++k) {
    if (packed.contains(k)) out |= std::uint32_t{1} << std::countr_zero(m);
  }
  return Subset(out);
}

}  // namespace mg
