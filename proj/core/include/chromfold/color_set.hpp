#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chromfold {

/// A set of colors drawn from {0, ..., 31}, stored as a bitmask.
///
/// Colors double as vertex names of the standard simplex and as process
/// identifiers in the snapshot model. Ordering is lexicographic on the sorted
/// member lists, so {0} < {0,1} < {1}.
class ColorSet {
 public:
  static constexpr int kMaxColors = 32;

  constexpr ColorSet() = default;

  static constexpr ColorSet from_bits(std::uint32_t bits) { return ColorSet(bits); }
  static constexpr ColorSet singleton(int color) { return ColorSet(std::uint32_t{1} << color); }
  /// {0, ..., n}
  static constexpr ColorSet full(int n) {
    return ColorSet(n + 1 >= kMaxColors ? ~std::uint32_t{0} : ((std::uint32_t{1} << (n + 1)) - 1));
  }
  static ColorSet of(std::initializer_list<int> colors);
  static ColorSet of(const std::vector<int>& colors);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int color) const { return (bits_ >> color) & 1u; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest member; undefined on the empty set.
  constexpr int max() const { return 31 - std::countl_zero(bits_); }

  constexpr ColorSet with(int color) const { return ColorSet(bits_ | (std::uint32_t{1} << color)); }
  constexpr ColorSet without(int color) const { return ColorSet(bits_ & ~(std::uint32_t{1} << color)); }

  std::vector<int> members() const;

  /// Removes `dropped` and shifts every larger color down by one.
  ColorSet drop_and_renumber(int dropped) const;

  std::string to_string() const;

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;
  friend std::strong_ordering operator<=>(ColorSet a, ColorSet b);

 private:
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

}  // namespace chromfold
