#include "palw/pal_width.hpp"

#include <algorithm>

#include "palw/errors.hpp"

namespace palw {

std::string to_string(Notion n) { return n == Notion::word ? "word" : "group"; }

Notion parse_notion(const std::string& text) {
  if (text == "word") return Notion::word;
  if (text == "group") return Notion::group;
  throw InputError("unknown palindrome notion '" + text + "' (expected word|group)");
}

std::size_t ReachablePairs::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

ReachablePairs reachable_pairs(const FiniteGroup& g, std::size_t state_cap) {
  const std::size_t n = g.order();
  if (n > state_cap / n)
    throw CapExceeded("pair-reachability state space exceeds cap", n * n, state_cap);
  std::vector<bool> bits(n * n, false);
  std::vector<std::pair<ElementId, ElementId>> frontier{{g.identity(), g.identity()}};
  bits[g.identity() * n + g.identity()] = true;
  while (!frontier.empty()) {
    std::vector<std::pair<ElementId, ElementId>> next;
    for (auto [x, y] : frontier) {
      for (const auto& gen : g.generators()) {
        ElementId nx = g.multiply(x, gen.element);
        ElementId ny = g.multiply(gen.element, y);
        std::size_t key = nx * n + ny;
        if (!bits[key]) {
          bits[key] = true;
          next.emplace_back(nx, ny);
        }
      }
    }
    frontier = std::move(next);
  }
  return ReachablePairs(n, std::move(bits));
}

std::vector<ElementId> palindrome_elements(const FiniteGroup& g, const ReachablePairs& pairs,
                                           Notion notion) {
  const std::size_t n = g.order();
  std::vector<bool> member(n, false);
  member[g.identity()] = true;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!pairs.contains(x, y)) continue;
      if (notion == Notion::group) {
        if (x == y) member[x] = true;
        continue;
      }
      // u reverse(u) and u a reverse(u)
      member[g.multiply(x, y)] = true;
      for (const auto& gen : g.generators())
        member[g.multiply(g.multiply(x, gen.element), y)] = true;
    }
  }
  std::vector<ElementId> out;
  for (ElementId x = 0; x < n; ++x)
    if (member[x]) out.push_back(x);
  return out;
}

WidthReport cover_by_palindromes(const FiniteGroup& g, const std::vector<ElementId>& palindromes,
                                 Notion notion) {
  const std::size_t n = g.order();
  WidthReport report;
  report.notion = notion;
  report.palindromes = palindromes;
  report.length.assign(n, -1);
  report.length[g.identity()] = 0;
  std::vector<ElementId> frontier{g.identity()};
  std::size_t reached = 1;
  report.layers.push_back(reached);
  for (int layer = 1; !frontier.empty(); ++layer) {
    std::vector<ElementId> next;
    for (ElementId x : frontier)
      for (ElementId p : palindromes) {
        ElementId y = g.multiply(x, p);
        if (report.length[y] < 0) {
          report.length[y] = layer;
          next.push_back(y);
        }
      }
    if (next.empty()) break;
    reached += next.size();
    report.layers.push_back(reached);
    report.width = layer;
    frontier = std::move(next);
  }
  if (reached != n)
    throw InvariantBreach("palindromes do not generate the group (" + std::to_string(reached) +
                          " of " + std::to_string(n) + " elements reached)");
  return report;
}

WidthReport palindromic_width(const FiniteGroup& g, Notion notion, std::size_t state_cap) {
  ReachablePairs pairs = reachable_pairs(g, state_cap);
  return cover_by_palindromes(g, palindrome_elements(g, pairs, notion), notion);
}

int palindromic_length(const FiniteGroup& g, Notion notion, ElementId element,
                       std::size_t state_cap) {
  if (element >= g.order()) throw InputError("element id out of range");
  return palindromic_width(g, notion, state_cap).length[element];
}

}  // namespace palw
