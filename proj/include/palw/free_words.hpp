#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace palw {

using Letter = std::string;

/// A finite symmetric alphabet: every letter has a formal inverse in the
/// alphabet (possibly itself).
class Alphabet {
 public:
  Alphabet() = default;

  /// Each pair (a, b) declares b as the inverse of a (and a of b).
  /// A pair (a, a) declares a self-inverse letter.
  explicit Alphabet(std::span<const std::pair<Letter, Letter>> inverse_pairs);

  /// Letters x1..xn and x1^-1..xn^-1.
  static Alphabet free_group(int rank);

  bool contains(std::string_view letter) const;
  const Letter& inverse(std::string_view letter) const;
  const std::vector<Letter>& letters() const { return letters_; }

 private:
  std::vector<Letter> letters_;
  std::unordered_map<Letter, std::size_t> index_;
  std::vector<std::size_t> inverse_;
};

/// A word in the free monoid A*: a plain letter sequence, not reduced.
struct MonoidWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const MonoidWord&, const MonoidWord&) = default;
};

MonoidWord reversed(const MonoidWord& w);
MonoidWord concat(const MonoidWord& u, const MonoidWord& v);
/// Formal inverse: reverse the sequence and invert every letter.
MonoidWord formal_inverse(const MonoidWord& w, const Alphabet& alphabet);

/// True iff the letter sequence equals its reverse, letter by letter.
bool is_word_palindrome(const MonoidWord& w);

/// Letters separated by single spaces; the empty word prints as "1".
std::string to_string(const MonoidWord& w);
/// Whitespace-separated letters; "1" (alone) is the empty word.
MonoidWord parse_monoid_word(std::string_view text);

struct Syllable {
  int generator;  // 1-based
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced word in the free group F_n, stored as syllables x_i^e with
/// adjacent generators distinct and no zero exponent. Every constructor
/// reduces, so equality of FreeWords is equality of group elements.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  FreeWord(int rank, std::span<const Syllable> syllables);

  static FreeWord generator(int rank, int index, std::int64_t exponent = 1);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  /// Number of letters x_i^{+-1} in the reduced word.
  std::int64_t length() const;
  std::int64_t exponent_sum(int generator) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push(Syllable s);

  int rank_ = 1;
  std::vector<Syllable> syllables_;
};

/// Reads a free-group letter: x<i>, x<i>^-1, and the aliases x, y, z for
/// x1, x2, x3. Returns (generator, +1|-1); generator is 0 if not a letter.
std::pair<int, int> parse_free_letter(std::string_view letter);

FreeWord reduce(const MonoidWord& w, int rank);

FreeWord free_multiply(const FreeWord& u, const FreeWord& v);
FreeWord free_invert(const FreeWord& u);
/// [u, v] = u^-1 v^-1 u v
FreeWord free_commutator(const FreeWord& u, const FreeWord& v);
FreeWord free_power(const FreeWord& u, std::int64_t n);

/// Expands syllables into single letters named by `names` (names[i-1] is
/// generator i; its inverse gets the suffix "^-1").
MonoidWord to_monoid_word(const FreeWord& w, std::span<const std::string> names);

/// Canonical text: "x1^-3 x2 x1^2"; identity prints as "1".
std::string to_string(const FreeWord& w);

/// Parses the free-word text format. Accepts generator tokens with optional
/// integer exponents, parenthesised groups "(x2 x1)^3", commutator brackets
/// "[u,v]", and "1" for the identity.
FreeWord parse_free_word(std::string_view text, int rank);

/// -1, 0, 1 according to m mod 3 in {2, 0, 1}.
int tr(std::int64_t m);

/// Sum of tr over the exponents of the reduced word.
std::int64_t ql(const FreeWord& w);
std::int64_t ql(const MonoidWord& w, int rank);

}  // namespace palw
