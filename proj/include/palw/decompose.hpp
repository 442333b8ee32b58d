#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "palw/free_words.hpp"
#include "palw/wreath.hpp"

namespace palw {

/// F_2 wr S_3 over the generating set {x, y, s1, s2, c} (plus inverses).
/// Coordinates follow sym3_fink() ids: 1, s1, s2, c, c^-1, s1 s2 s1.
WreathGroup fink_wreath();

/// Upper bound on factor counts guaranteed by the construction.
inline constexpr std::size_t kPalindromeBound = 20;

/// Words over {s1, s2} for each S_3 element (indexed by element id). Each
/// word evaluates to its key and its reverse evaluates to the key's inverse.
class ConjugatorTable {
 public:
  ConjugatorTable();
  const MonoidWord& operator[](ElementId k) const { return words_.at(k); }

 private:
  std::array<MonoidWord, 6> words_;
};

/// r = c s1 s2 s1 s2: trivial in S_3 while its reverse is not.
const MonoidWord& r_word();

struct AbelianSplit {
  /// exponents[i] = {alpha_i, beta_i}: exponent sums of x and y at coordinate i.
  std::array<std::array<std::int64_t, 2>, 6> exponents{};
  /// g_i = y^-beta_i x^-alpha_i f_i, which lies in F_2'.
  std::array<FreeWord, 6> derived;
  ElementId top = 0;
};

/// f_i = x^alpha_i y^beta_i g_i with g_i in the commutator subgroup.
AbelianSplit split_abelian_commutator(const WreathElement& g);

/// u letter^exponent reverse(u) with u chosen so the power lands at `coord`.
MonoidWord coordinate_power_palindrome(std::size_t coord, char letter, std::int64_t exponent);

/// The single palindrome W reverse(W) evaluating to g_i at `coord`, where W
/// evaluates to g_i there and reverse(W) evaluates to 1. The latter is
/// re-checked on every call; failure throws InvariantBreach with the witness.
/// Returns the empty word for trivial g_i.
MonoidWord derived_part_palindrome(std::size_t coord, const FreeWord& g_i);

/// At most one palindrome per S_3 element (c and c^-1 are letters).
std::vector<MonoidWord> top_palindromes(ElementId s);

struct DecompositionCertificate {
  WreathElement target;
  std::vector<MonoidWord> factors;
  std::size_t factor_count = 0;
  bool all_palindromic = false;
  bool product_matches = false;
  bool within_bound = false;
};

/// Factors: six x-power palindromes, six y-power palindromes, six
/// derived-part palindromes, then at most one top palindrome; trivial
/// entries are omitted. All certificate flags are verified before return.
DecompositionCertificate decompose(const WreathElement& g);

/// Recomputes every verification flag from scratch.
DecompositionCertificate verify_certificate(const WreathElement& target,
                                            std::vector<MonoidWord> factors);

}  // namespace palw
