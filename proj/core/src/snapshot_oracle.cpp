#include "chromfold/snapshot_oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chromfold/subdivision.hpp"

namespace chromfold {

std::uint64_t fubini(int k) {
  if (k < 0) throw Error("fubini of a negative size");
  // a(m) = Σ_{j=1..m} C(m, j) a(m - j): choose the first block.
  std::vector<std::uint64_t> a(static_cast<std::size_t>(k) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= k; ++m) {
    std::uint64_t binom = 1;
    for (int j = 1; j <= m; ++j) {
      binom = binom * static_cast<std::uint64_t>(m - j + 1) / static_cast<std::uint64_t>(j);
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - j)];
    }
  }
  return a[static_cast<std::size_t>(k)];
}

namespace {

void extend(ColorSet remaining, std::vector<ColorSet>& prefix, std::vector<OrderedPartition>& out) {
  if (remaining.empty()) {
    out.push_back({prefix});
    return;
  }
  const std::uint32_t bits = remaining.bits();
  for (std::uint32_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
    prefix.push_back(ColorSet::from_bits(sub));
    extend(remaining - ColorSet::from_bits(sub), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> enumerate_executions(int n, std::size_t limit) {
  if (n < 0 || n + 1 >= ColorSet::kMaxColors) throw Error("number of processes out of range");
  if (n + 1 > 20 || fubini(n + 1) > limit)
    throw SizeLimitError("size limit: too many executions for n = " + std::to_string(n));
  std::vector<OrderedPartition> out;
  out.reserve(static_cast<std::size_t>(fubini(n + 1)));
  std::vector<ColorSet> prefix;
  extend(ColorSet::full(n), prefix, out);
  std::sort(out.begin(), out.end(),
            [](const OrderedPartition& a, const OrderedPartition& b) { return a.blocks < b.blocks; });
  return out;
}

std::vector<ChromaticVertex> top_cell_of(const OrderedPartition& execution) {
  std::vector<ChromaticVertex> cell;
  ColorSet seen;
  for (ColorSet block : execution.blocks) {
    seen = seen | block;
    for (int c : block.members()) cell.push_back({c, seen});
  }
  std::sort(cell.begin(), cell.end());
  return cell;
}

CrossValidationReport cross_validate(int n, std::size_t limit) {
  CrossValidationReport report;
  report.n = n;
  const auto executions = enumerate_executions(n, limit);
  report.executions = executions.size();
  std::set<std::vector<ChromaticVertex>> from_oracle;
  for (const auto& e : executions) {
    if (!from_oracle.insert(top_cell_of(e)).second) report.injective = false;
  }

  const auto level = chromatic_subdivide_simplex(n);
  const auto cells = label_cells(*level.subdivided);
  report.subdivision_cells = cells.size();
  const std::set<std::vector<ChromaticVertex>> from_subdivision(cells.begin(), cells.end());

  std::set_difference(from_oracle.begin(), from_oracle.end(), from_subdivision.begin(), from_subdivision.end(),
                      std::back_inserter(report.only_in_oracle));
  std::set_difference(from_subdivision.begin(), from_subdivision.end(), from_oracle.begin(), from_oracle.end(),
                      std::back_inserter(report.only_in_subdivision));
  return report;
}

}  // namespace chromfold
