#include "chromfold/color_set.hpp"

#include <algorithm>
#include <sstream>

#include "chromfold/error.hpp"

namespace chromfold {

namespace {

ColorSet build(auto begin, auto end) {
  ColorSet s;
  for (auto it = begin; it != end; ++it) {
    if (*it < 0 || *it >= ColorSet::kMaxColors) throw Error("color out of range: " + std::to_string(*it));
    s = s.with(*it);
  }
  return s;
}

}  // namespace

ColorSet ColorSet::of(std::initializer_list<int> colors) { return build(colors.begin(), colors.end()); }
ColorSet ColorSet::of(const std::vector<int>& colors) { return build(colors.begin(), colors.end()); }

std::vector<int> ColorSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

ColorSet ColorSet::drop_and_renumber(int dropped) const {
  const std::uint32_t low = bits_ & ((std::uint32_t{1} << dropped) - 1);
  const std::uint32_t high = dropped + 1 >= kMaxColors ? 0 : (bits_ >> (dropped + 1)) << dropped;
  return ColorSet(low | high);
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int c : members()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(ColorSet a, ColorSet b) {
  if (a.bits_ == b.bits_) return std::strong_ordering::equal;
  // Lexicographic on sorted member lists. Both share every color below c, the
  // lowest color where they differ; the set holding c is smaller unless the
  // other one has no members left (then the shorter prefix wins).
  const std::uint32_t diff = a.bits_ ^ b.bits_;
  const int c = std::countr_zero(diff);
  const std::uint32_t above = c + 1 >= ColorSet::kMaxColors ? 0 : ~((std::uint32_t{2} << c) - 1);
  if (a.contains(c)) return (b.bits_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return (a.bits_ & above) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace chromfold
