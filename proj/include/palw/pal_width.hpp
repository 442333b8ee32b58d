#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "palw/finite_groups.hpp"

namespace palw {

/// Word palindromes (u = reverse(u) in A*) or group palindromes (some
/// representative u with u and reverse(u) equal in G).
enum class Notion { word, group };

std::string to_string(Notion n);
Notion parse_notion(const std::string& text);

inline constexpr std::size_t kDefaultStateCap = 4'000'000;

/// All pairs (rho(u), rho(reverse(u))) over words u in the generators.
/// Stored as an order x order bitmap.
class ReachablePairs {
 public:
  ReachablePairs(std::size_t order, std::vector<bool> bits)
      : order_(order), bits_(std::move(bits)) {}

  std::size_t order() const { return order_; }
  bool contains(ElementId g, ElementId h) const { return bits_[g * order_ + h]; }
  std::size_t count() const;

 private:
  std::size_t order_;
  std::vector<bool> bits_;
};

/// Least set containing (1, 1) and closed under (g, h) -> (g a, a h) for
/// every generator a. Throws CapExceeded when order^2 > state_cap.
ReachablePairs reachable_pairs(const FiniteGroup& g, std::size_t state_cap = kDefaultStateCap);

/// Sorted ids of elements that are palindromes under `notion`. Always
/// contains the identity.
std::vector<ElementId> palindrome_elements(const FiniteGroup& g, const ReachablePairs& pairs,
                                           Notion notion);

struct WidthReport {
  Notion notion = Notion::word;
  std::vector<ElementId> palindromes;
  /// length[g] = palindromic length of g.
  std::vector<int> length;
  int width = 0;
  /// layers[k] = |S_k|, the number of elements of length <= k.
  std::vector<std::size_t> layers;
};

/// Lengths by product-set layering S_0 = {1}, S_{k+1} = S_k P.
WidthReport cover_by_palindromes(const FiniteGroup& g, const std::vector<ElementId>& palindromes,
                                 Notion notion);

WidthReport palindromic_width(const FiniteGroup& g, Notion notion,
                              std::size_t state_cap = kDefaultStateCap);
int palindromic_length(const FiniteGroup& g, Notion notion, ElementId element,
                       std::size_t state_cap = kDefaultStateCap);

}  // namespace palw
