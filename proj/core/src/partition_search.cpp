#include "charvar/partition_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charvar/errors.hpp"
#include "charvar/polynomial.hpp"

namespace charvar {
namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = i;
  if (d > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool all_concurrent(const Arrangement& arr, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::size_t> lines;
  for (const auto& b : blocks) lines.insert(lines.end(), b.begin(), b.end());
  if (lines.size() < 3) return true;
  const LinearForm p = intersection_point(arr.line(lines[0]).coefficients, arr.line(lines[1]).coefficients);
  return std::all_of(lines.begin(), lines.end(), [&](std::size_t l) { return on_line(arr.line(l).coefficients, p); });
}

}  // namespace

std::vector<Pencil> partition_search(const Arrangement& arr, const PartitionSearchOptions& options) {
  const std::size_t n = arr.size();
  const std::size_t cover = std::min(options.max_subset, n);
  std::vector<HomogeneousPoly> line_poly;
  for (const auto& l : arr.lines()) line_poly.push_back(HomogeneousPoly::linear(l.coefficients));

  std::uint64_t pairs_seen = 0;
  std::set<std::vector<std::vector<std::size_t>>> found;
  std::vector<std::vector<std::vector<std::size_t>>> ordered;
  for (std::size_t d = 1; 3 * d <= cover; ++d) {
    const auto subsets = subsets_of_size(n, d);
    std::vector<HomogeneousPoly> products;
    for (const auto& s : subsets) {
      HomogeneousPoly p = HomogeneousPoly::constant(1);
      for (auto l : s) p = p * line_poly[l];
      products.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = a + 1; b < subsets.size(); ++b) {
        const auto& s1 = subsets[a];
        const auto& s2 = subsets[b];
        std::vector<char> used(n, 0);
        bool disjoint = true;
        for (auto l : s1) used[l] = 1;
        for (auto l : s2) disjoint = disjoint && !used[l];
        if (!disjoint) continue;
        if (++pairs_seen > options.max_pairs) {
          throw BudgetExceeded("partition search exceeded " + std::to_string(options.max_pairs) + " block pairs");
        }
        // Only the lexicographically first pair of blocks generates a partition.
        for (auto l : s2) used[l] = 1;
        std::vector<std::vector<std::size_t>> blocks{s1, s2};
        const auto& f1 = products[a];
        const auto& f2 = products[b];
        bool first_pair = true;
        for (std::size_t l = 0; l < n && first_pair; ++l) {
          if (used[l]) continue;
          const auto [s, t] = points_on_line(arr.line(l).coefficients);
          Rational v1 = 0, v2 = 0;
          for (int k = 0; v1 == 0 || v2 == 0; ++k) {
            const LinearForm pt{s[0] + k * t[0], s[1] + k * t[1], s[2] + k * t[2]};
            v1 = f1.evaluate(pt);
            v2 = f2.evaluate(pt);
          }
          const HomogeneousPoly member = f1.scaled(v2) - f2.scaled(v1);
          std::vector<std::size_t> block;
          for (std::size_t m = 0; m < n; ++m)
            if (!used[m] && member.vanishes_on(arr.line(m).coefficients)) block.push_back(m);
          if (block.size() != d) continue;
          if (block.front() < s1.front()) first_pair = false;
          for (auto m : block) used[m] = 1;
          blocks.push_back(std::move(block));
        }
        if (!first_pair || blocks.size() < 3) continue;
        std::sort(blocks.begin(), blocks.end());
        if (blocks[0] != s1 || blocks[1] != s2) continue;
        if (blocks.size() > options.max_blocks || blocks.size() * d > cover) continue;
        if (d >= 2 && all_concurrent(arr, blocks)) continue;
        if (found.insert(blocks).second) ordered.push_back(blocks);
      }
  }

  std::vector<Pencil> out;
  for (const auto& blocks : ordered) {
    std::vector<Fiber> fibers;
    for (const auto& b : blocks) {
      Fiber f;
      for (auto l : b) f.components.push_back({l, arr.line(l).coefficients, 1});
      fibers.push_back(std::move(f));
    }
    try {
      out.push_back(validate_pencil(arr, std::move(fibers)));
    } catch (const InvalidInput&) {
      // A member contains an arrangement line without splitting into lines.
    }
  }
  return out;
}

}  // namespace charvar
