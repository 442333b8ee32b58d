#include "palw/decompose.hpp"

#include <string>

#include "palw/errors.hpp"

namespace palw {

namespace {

const WreathGroup& wreath() {
  static const WreathGroup group = fink_wreath();
  return group;
}

const std::vector<std::string>& xy_names() {
  static const std::vector<std::string> names{"x", "y"};
  return names;
}

MonoidWord letter_power(const std::string& letter, std::int64_t exponent) {
  MonoidWord w;
  std::string l = exponent > 0 ? letter : letter + "^-1";
  for (std::int64_t i = 0, n = exponent > 0 ? exponent : -exponent; i < n; ++i)
    w.letters.push_back(l);
  return w;
}

// Formal inverse of r = c s1 s2 s1 s2.
const MonoidWord& r_inverse_word() {
  static const MonoidWord w{{"s2", "s1", "s2", "s1", "c^-1"}};
  return w;
}

// Conjugating by u moves coordinate 0 to coordinate rho(u)^-1, so the
// conjugator for a coordinate is the table word of its element's inverse.
const MonoidWord& conjugator_for(std::size_t coord) {
  static const ConjugatorTable table;
  const WreathGroup& g = wreath();
  return table[g.top().inverse(g.coordinate_element(coord))];
}

}  // namespace

WreathGroup fink_wreath() { return WreathGroup(2, sym3_fink()); }

ConjugatorTable::ConjugatorTable()
    : words_{MonoidWord{},
             MonoidWord{{"s1"}},
             MonoidWord{{"s2"}},
             MonoidWord{{"s1", "s2"}},
             MonoidWord{{"s2", "s1"}},
             MonoidWord{{"s1", "s2", "s1"}}} {
  const FiniteGroup s3 = sym3_fink();
  for (ElementId k = 0; k < 6; ++k) {
    if (evaluate(s3, words_[k]) != k || evaluate(s3, reversed(words_[k])) != s3.inverse(k))
      throw InvariantBreach("conjugator table entry for " + s3.name(k) + " is wrong");
  }
}

const MonoidWord& r_word() {
  static const MonoidWord r = [] {
    MonoidWord w{{"c", "s1", "s2", "s1", "s2"}};
    const FiniteGroup s3 = sym3_fink();
    if (evaluate(s3, w) != s3.identity() || evaluate(s3, reversed(w)) == s3.identity())
      throw InvariantBreach("r must be trivial in S_3 with nontrivial reverse");
    return w;
  }();
  return r;
}

AbelianSplit split_abelian_commutator(const WreathElement& g) {
  wreath().check(g);
  AbelianSplit split;
  split.top = g.top;
  for (std::size_t i = 0; i < 6; ++i) {
    const FreeWord& f = g.base[i];
    std::int64_t a = f.exponent_sum(1), b = f.exponent_sum(2);
    split.exponents[i] = {a, b};
    FreeWord xy = free_multiply(FreeWord::generator(2, 1, a), FreeWord::generator(2, 2, b));
    split.derived[i] = free_multiply(free_invert(xy), f);
  }
  return split;
}

MonoidWord coordinate_power_palindrome(std::size_t coord, char letter, std::int64_t exponent) {
  if (coord >= 6) throw InputError("coordinate out of range for F_2 wr S_3");
  if (letter != 'x' && letter != 'y') throw InputError("letter must be x or y");
  if (exponent == 0) throw InputError("coordinate power needs a nonzero exponent");
  const MonoidWord& u = conjugator_for(coord);
  return concat(concat(u, letter_power(std::string(1, letter), exponent)), reversed(u));
}

MonoidWord derived_part_palindrome(std::size_t coord, const FreeWord& g_i) {
  if (coord >= 6) throw InputError("coordinate out of range for F_2 wr S_3");
  if (g_i.rank() != 2) throw InputError("derived part must lie in F_2");
  if (g_i.exponent_sum(1) != 0 || g_i.exponent_sum(2) != 0)
    throw InputError("derived part must have zero exponent sums: " + to_string(g_i));
  if (g_i.is_identity()) return {};

  // g_i = x^a1 y^b1 ... x^al y^bl, rewritten as r x^a1 r^-1 y^b1 ... since
  // rho(r) = 1; zero x-exponents drop their r-block.
  MonoidWord w;
  for (const Syllable& s : g_i.syllables()) {
    if (s.generator == 1) {
      w = concat(w, r_word());
      w = concat(w, letter_power("x", s.exponent));
      w = concat(w, r_inverse_word());
    } else {
      w = concat(w, letter_power("y", s.exponent));
    }
  }
  const MonoidWord& u = conjugator_for(coord);
  const MonoidWord big_w = concat(concat(u, w), reversed(u));

  const WreathGroup& group = wreath();
  const WreathElement expected = group.at_coordinate(coord, g_i);
  if (group.evaluate(big_w) != expected)
    throw InvariantBreach("derived-part word does not evaluate to " + to_string(g_i) +
                          ": " + to_string(big_w));
  const MonoidWord big_w_rev = reversed(big_w);
  if (group.evaluate(big_w_rev) != group.identity())
    throw InvariantBreach(
        "cancellation argument failed: reverse of word does not evaluate to 1 for g = " +
        to_string(g_i) + "; witness word: " + to_string(big_w_rev));
  return concat(big_w, big_w_rev);
}

std::vector<MonoidWord> top_palindromes(ElementId s) {
  static const std::array<MonoidWord, 6> table{
      MonoidWord{},       MonoidWord{{"s1"}}, MonoidWord{{"s2"}},
      MonoidWord{{"c"}},  MonoidWord{{"c^-1"}}, MonoidWord{{"s1", "s2", "s1"}}};
  if (s >= 6) throw InputError("not an element of S_3");
  if (table[s].empty()) return {};
  return {table[s]};
}

DecompositionCertificate verify_certificate(const WreathElement& target,
                                            std::vector<MonoidWord> factors) {
  const WreathGroup& group = wreath();
  DecompositionCertificate cert;
  cert.target = target;
  cert.factor_count = factors.size();
  cert.all_palindromic = true;
  WreathElement product = group.identity();
  for (const auto& f : factors) {
    cert.all_palindromic = cert.all_palindromic && is_word_palindrome(f);
    product = group.multiply(product, group.evaluate(f));
  }
  cert.product_matches = product == target;
  cert.within_bound = cert.factor_count <= kPalindromeBound;
  cert.factors = std::move(factors);
  return cert;
}

DecompositionCertificate decompose(const WreathElement& g) {
  const AbelianSplit split = split_abelian_commutator(g);
  std::vector<MonoidWord> factors;
  for (int letter = 0; letter < 2; ++letter)
    for (std::size_t i = 0; i < 6; ++i)
      if (std::int64_t e = split.exponents[i][letter]; e != 0)
        factors.push_back(coordinate_power_palindrome(i, letter == 0 ? 'x' : 'y', e));
  for (std::size_t i = 0; i < 6; ++i)
    if (!split.derived[i].is_identity())
      factors.push_back(derived_part_palindrome(i, split.derived[i]));
  for (auto& p : top_palindromes(split.top)) factors.push_back(std::move(p));

  DecompositionCertificate cert = verify_certificate(g, std::move(factors));
  if (!cert.all_palindromic || !cert.product_matches || !cert.within_bound)
    throw InvariantBreach("decomposition certificate failed verification for " +
                          wreath().to_text(g));
  return cert;
}

}  // namespace palw
