#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "palw/free_words.hpp"

namespace palw {

using ElementId = std::uint32_t;

struct Generator {
  std::string label;
  ElementId element;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct GroupLimits {
  /// Largest group order any constructor will build.
  std::size_t max_order = 4096;
  /// Full associativity check up to this order; random spot checks above.
  std::size_t verify_cap = 512;
};

/// A finite group given by its multiplication table over dense ids
/// 0..order-1, together with a labelled symmetric generating set.
///
/// Construction validates the group axioms (associativity exhaustively up to
/// GroupLimits::verify_cap), symmetry of the generating set, and that the
/// generators reach every element. Instances are immutable.
class FiniteGroup {
 public:
  /// `table` is row-major: table[a * order + b] = a * b.
  /// `names` optionally gives a printable word for every element; missing
  /// names default to a shortest generator word (BFS in generator order).
  FiniteGroup(std::size_t order, std::vector<ElementId> table,
              std::vector<Generator> generators,
              std::vector<std::string> names = {}, GroupLimits limits = {});

  std::size_t order() const { return order_; }
  ElementId identity() const { return identity_; }

  ElementId multiply(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId commutator(ElementId a, ElementId b) const;
  ElementId power(ElementId a, std::int64_t n) const;
  std::size_t element_order(ElementId a) const;
  bool is_abelian() const;

  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<ElementId> generator(std::string_view label) const;

  const std::string& name(ElementId a) const { return names_[a]; }
  const std::vector<ElementId>& table() const { return table_; }

 private:
  void validate(const GroupLimits& limits);
  void assign_default_names(std::vector<std::string> given);

  std::size_t order_;
  std::vector<ElementId> table_;
  ElementId identity_ = 0;
  std::vector<ElementId> inverse_;
  std::vector<Generator> generators_;
  std::vector<std::string> names_;
};

/// Z_m with generators "a" (and "a^-1" when m > 2); `letter` replaces "a".
FiniteGroup cyclic(std::size_t m, const std::string& letter = "a", GroupLimits limits = {});
/// Dihedral group of order 2m: rotation "r" (with "r^-1" when m > 2) and
/// reflection "s". Element r^i s^j has id i + m*j.
FiniteGroup dihedral(std::size_t m, GroupLimits limits = {});
/// S_3 with generating set {s1, s2, c, c^-1}, c = s1 s2. Element ids:
/// 0 = 1, 1 = s1, 2 = s2, 3 = c, 4 = c^-1, 5 = s1 s2 s1.
FiniteGroup sym3_fink();
/// Direct sum of cyclic groups, one generator per factor, letters
/// `letters[i]` (default a, b, c, ...). Element id is mixed radix with the
/// first factor least significant.
FiniteGroup abelian(std::span<const std::uint64_t> moduli,
                    std::span<const std::string> letters = {}, GroupLimits limits = {});
/// G x H with the union of the embedded generating sets. Labels of H that
/// clash with labels of G are renamed to fresh letters.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, GroupLimits limits = {});

/// The evaluation homomorphism from words over generator labels.
ElementId evaluate(const FiniteGroup& g, const MonoidWord& w);

/// Subgroup generated by `seeds`, sorted ascending.
std::vector<ElementId> generated_subgroup(const FiniteGroup& g, std::span<const ElementId> seeds);
/// Normal closure of `seeds`, sorted ascending.
std::vector<ElementId> normal_closure(const FiniteGroup& g, std::span<const ElementId> seeds);

std::vector<ElementId> commutator_subgroup(const FiniteGroup& g);
/// Largest commutator length over G'; 0 when G' is trivial.
int commutator_width(const FiniteGroup& g);

/// Extends a generator assignment (`images[i]` is the image of
/// generators()[i]) to a map on all of `from`. Returns nullopt unless the
/// result is a well-defined bijective homomorphism.
std::optional<std::vector<ElementId>> extend_to_isomorphism(const FiniteGroup& from,
                                                            const FiniteGroup& to,
                                                            std::span<const ElementId> images);

/// Exhaustive search over generator images.
std::optional<std::vector<ElementId>> find_isomorphism(const FiniteGroup& from,
                                                       const FiniteGroup& to);

}  // namespace palw
