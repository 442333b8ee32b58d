#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "palw/finite_groups.hpp"
#include "palw/free_words.hpp"

namespace palw {

/// An element (f_{k_1}, ..., f_{k_l}) k of F_n wr K. base[i] is the free
/// word at the coordinate indexed by WreathGroup::coordinate_element(i).
struct WreathElement {
  std::vector<FreeWord> base;
  ElementId top = 0;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Restricted wreath product F_n wr K for a finite group K.
///
/// Coordinates are the elements of K with coordinate 0 = identity, then the
/// remaining elements in id order. The product is
///
///   (f k) (f' k') = (f_x f'_{x k})_x  k k'
///
/// which makes K act on the base by (f^k)_x = f_{x k^-1}, a right action:
/// (f^k)^{k'} = f^{k k'}.
class WreathGroup {
 public:
  WreathGroup(int rank, FiniteGroup top);

  int rank() const { return rank_; }
  const FiniteGroup& top() const { return top_; }
  /// l = |K|
  std::size_t degree() const { return top_.order(); }
  ElementId coordinate_element(std::size_t i) const { return coord_elt_[i]; }
  std::size_t coordinate_of(ElementId k) const { return elt_coord_[k]; }

  WreathElement identity() const;
  /// x_index at coordinate 0 (the copy indexed by K's identity).
  WreathElement free_generator(int index, std::int64_t exponent = 1) const;
  WreathElement top_element(ElementId k) const;
  /// `w` placed at the given coordinate, trivial elsewhere and on top.
  WreathElement at_coordinate(std::size_t coord, const FreeWord& w) const;

  WreathElement multiply(const WreathElement& g, const WreathElement& h) const;
  WreathElement invert(const WreathElement& g) const;
  WreathElement commutator(const WreathElement& g, const WreathElement& h) const;
  /// Base tuple f acted on by k: (f^k)_x = f_{x k^-1}.
  std::vector<FreeWord> act(const std::vector<FreeWord>& base, ElementId k) const;

  /// Evaluates a word whose letters are free letters (x, y, x1, x2^-1, ...)
  /// placed at coordinate 0, or generator labels of K.
  WreathElement evaluate(const MonoidWord& w) const;

  /// "[w1; w2; ...; wl] k" with k the element name in K.
  std::string to_text(const WreathElement& g) const;
  WreathElement parse(std::string_view text) const;

  void check(const WreathElement& g) const;

 private:
  int rank_;
  FiniteGroup top_;
  std::vector<ElementId> coord_elt_;
  std::vector<std::size_t> elt_coord_;
};

/// Sum of ql over the base coordinates.
std::int64_t delta(const WreathElement& g);

/// q_j = (a_j, 1, ..., 1) with a_j = x2^{-3j} x1^{-3j} (x2 x1)^{3j}.
WreathElement q_sequence(const WreathGroup& group, std::int64_t j);

struct CommutatorCertificate {
  WreathElement element;
  std::int64_t delta = 0;
  /// Any expression of `element` as a product of commutators uses at least
  /// this many (given that element lies in the derived subgroup).
  std::int64_t lower_bound = 0;
};

/// Threshold for m commutators: |delta| <= 3 l (6m - 1).
std::int64_t commutator_delta_bound(std::size_t degree, std::int64_t m);

/// Least commutator count compatible with |delta(g)|; nullopt when the
/// bound gives nothing beyond m >= 1 (|delta| <= 15 l).
std::optional<CommutatorCertificate> certify_cw_lower_bound(const WreathGroup& group,
                                                            const WreathElement& g);

}  // namespace palw
