#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palw/finite_groups.hpp"
#include "palw/pal_width.hpp"

namespace palw {

/// A finite abelian group as a direct sum of cyclic groups, one generator
/// per cyclic factor.
struct AbelianSpec {
  std::vector<std::uint64_t> moduli;

  std::uint64_t order() const;
  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;
};

/// Class-2 nilpotent product (2){A_1, ..., A_s} of finite abelian groups,
/// realised as the central extension
///
///   A_1 x ... x A_s x (sum over i<j of A_i (x) A_j)
///
/// with (a, t)(a', t') = (a + a', t + t' - sum_{i<j} a'_i (x) a_j).
/// With [g, h] = g^-1 h^-1 g h this gives [a_i, a_j] = a_i (x) a_j for i < j.
///
/// Elements are coordinate vectors: the cyclic components of every factor,
/// then one Z_gcd component per pair of cyclic components from distinct
/// factors. Element ids are mixed radix over these coordinates.
class NilpotentProduct {
 public:
  explicit NilpotentProduct(std::vector<AbelianSpec> factors, GroupLimits limits = {});

  using Coords = std::vector<std::uint64_t>;

  std::size_t factor_count() const { return factors_.size(); }
  const AbelianSpec& factor(std::size_t k) const { return factors_[k]; }
  std::size_t order() const { return group_->order(); }
  /// Labels: factor k uses letter 'a' + k, suffixed by the component index
  /// when the factor has more than one cyclic component.
  const FiniteGroup& group() const { return *group_; }
  const std::vector<std::string>& factor_letters(std::size_t k) const { return letters_[k]; }

  std::size_t coordinate_count() const { return moduli_.size(); }
  Coords decode(ElementId id) const;
  ElementId encode(const Coords& c) const;
  Coords multiply_coords(const Coords& x, const Coords& y) const;

  /// Element a of factor k embedded as (0, ..., a, ..., 0; 0).
  ElementId embed(std::size_t k, const std::vector<std::uint64_t>& a) const;
  /// All elements of the embedded factor k, in mixed-radix order of A_k.
  std::vector<ElementId> factor_elements(std::size_t k) const;
  /// Elements with all factor coordinates zero (the tensor component).
  std::vector<ElementId> tensor_elements() const;

  /// C_k: elements a of A_k with a (x) b = 0 for every b in every other factor,
  /// computed from the tensor moduli. Returned as embedded ids.
  std::vector<ElementId> centralizer(std::size_t k) const;
  /// Number of distinct nontrivial images of A_k's generators in A_k / C_k.
  int quotient_generator_count(std::size_t k) const;

 private:
  struct TensorPair {
    std::size_t left;   // coordinate index of a component of A_i
    std::size_t right;  // coordinate index of a component of A_j, i < j
  };

  std::vector<AbelianSpec> factors_;
  std::vector<std::size_t> factor_offset_;  // first coordinate of each factor
  std::vector<std::size_t> factor_of_coord_;
  std::vector<TensorPair> tensor_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::vector<std::string>> letters_;
  std::optional<FiniteGroup> group_;
};

NilpotentProduct nilprod2(const AbelianSpec& a, const AbelianSpec& b, GroupLimits limits = {});
FiniteGroup nilprod2_multi(const std::vector<AbelianSpec>& specs, GroupLimits limits = {});

/// A factor with the generator labels it has inside a product.
FiniteGroup factor_group(const NilpotentProduct& product, std::size_t k);

struct BoundReport {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  /// "i": sum of widths plus 3 * sum of m_i; "ii": some factor is central
  /// (m_k = 0) and splits off as a direct factor.
  std::string branch;
  std::vector<int> widths;
  std::vector<int> m;
};

/// Bound arithmetic for arbitrary numeric inputs.
BoundReport width_bounds(const std::vector<int>& component_widths, const std::vector<int>& m);

/// Factor widths and m_i from the constructed product, exact width from the
/// BFS oracle.
BoundReport sandwich_report(const NilpotentProduct& product, Notion notion = Notion::word,
                            std::size_t state_cap = kDefaultStateCap);
bool check_sandwich(const BoundReport& report);
bool check_sandwich(const NilpotentProduct& product, int oracle_width);

}  // namespace palw
