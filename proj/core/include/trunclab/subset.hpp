#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace trunclab {

/// A subset of the points of a finite space, as a bitmask over point indices.
/// Spaces are limited to 64 points.
class Subset {
public:
  static constexpr std::size_t max_points = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(std::size_t i) { return Subset(std::uint64_t{1} << i); }
  static constexpr Subset first_n(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(Subset o) const { return (bits_ & o.bits_) == 0; }

  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(std::size_t i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace trunclab
