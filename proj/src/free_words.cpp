#include "palw/free_words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "palw/errors.hpp"

namespace palw {

Alphabet::Alphabet(std::span<const std::pair<Letter, Letter>> inverse_pairs) {
  auto intern = [this](const Letter& l) {
    auto [it, inserted] = index_.try_emplace(l, letters_.size());
    if (inserted) {
      letters_.push_back(l);
      inverse_.push_back(static_cast<std::size_t>(-1));
    }
    return it->second;
  };
  for (const auto& [a, b] : inverse_pairs) {
    std::size_t ia = intern(a);
    std::size_t ib = intern(b);
    auto bind = [this](std::size_t from, std::size_t to) {
      if (inverse_[from] != static_cast<std::size_t>(-1) && inverse_[from] != to)
        throw InputError("alphabet: letter '" + letters_[from] +
                         "' given two different inverses");
      inverse_[from] = to;
    };
    bind(ia, ib);
    bind(ib, ia);
  }
}

Alphabet Alphabet::free_group(int rank) {
  std::vector<std::pair<Letter, Letter>> pairs;
  for (int i = 1; i <= rank; ++i) {
    std::string x = "x" + std::to_string(i);
    pairs.emplace_back(x, x + "^-1");
  }
  return Alphabet(pairs);
}

bool Alphabet::contains(std::string_view letter) const {
  return index_.contains(Letter(letter));
}

const Letter& Alphabet::inverse(std::string_view letter) const {
  auto it = index_.find(Letter(letter));
  if (it == index_.end())
    throw InputError("alphabet: unknown letter '" + std::string(letter) + "'");
  return letters_[inverse_[it->second]];
}

MonoidWord reversed(const MonoidWord& w) {
  return MonoidWord{{w.letters.rbegin(), w.letters.rend()}};
}

MonoidWord concat(const MonoidWord& u, const MonoidWord& v) {
  MonoidWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

MonoidWord formal_inverse(const MonoidWord& w, const Alphabet& alphabet) {
  MonoidWord out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(alphabet.inverse(*it));
  return out;
}

bool is_word_palindrome(const MonoidWord& w) {
  return std::equal(w.letters.begin(), w.letters.begin() + w.size() / 2,
                    w.letters.rbegin());
}

std::string to_string(const MonoidWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w.letters[i];
  }
  return out;
}

MonoidWord parse_monoid_word(std::string_view text) {
  MonoidWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) w.letters.emplace_back(text.substr(start, i - start));
  }
  if (w.letters.size() == 1 && w.letters[0] == "1") w.letters.clear();
  return w;
}

// ---------------------------------------------------------------- FreeWord

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw InputError("free group rank must be positive");
}

FreeWord::FreeWord(int rank, std::span<const Syllable> syllables) : FreeWord(rank) {
  for (const Syllable& s : syllables) push(s);
}

FreeWord FreeWord::generator(int rank, int index, std::int64_t exponent) {
  Syllable s{index, exponent};
  return FreeWord(rank, std::span<const Syllable>(&s, 1));
}

void FreeWord::push(Syllable s) {
  if (s.generator < 1 || s.generator > rank_)
    throw InputError("generator x" + std::to_string(s.generator) +
                     " outside free group of rank " + std::to_string(rank_));
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

std::int64_t FreeWord::exponent_sum(int generator) const {
  std::int64_t n = 0;
  for (const auto& s : syllables_)
    if (s.generator == generator) n += s.exponent;
  return n;
}

std::pair<int, int> parse_free_letter(std::string_view letter) {
  int sign = 1;
  if (letter.ends_with("^-1")) {
    sign = -1;
    letter.remove_suffix(3);
  }
  if (letter == "x") return {1, sign};
  if (letter == "y") return {2, sign};
  if (letter == "z") return {3, sign};
  if (letter.size() >= 2 && letter[0] == 'x') {
    int index = 0;
    auto [ptr, ec] = std::from_chars(letter.data() + 1, letter.data() + letter.size(), index);
    if (ec == std::errc() && ptr == letter.data() + letter.size() && index >= 1)
      return {index, sign};
  }
  return {0, 0};
}

FreeWord reduce(const MonoidWord& w, int rank) {
  std::vector<Syllable> syl;
  syl.reserve(w.size());
  for (const auto& l : w.letters) {
    auto [gen, sign] = parse_free_letter(l);
    if (gen == 0) throw InputError("not a free-group letter: '" + l + "'");
    syl.push_back({gen, sign});
  }
  return FreeWord(rank, syl);
}

static void require_same_rank(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    throw InputError("free words of different rank (" + std::to_string(u.rank()) +
                     " vs " + std::to_string(v.rank()) + ")");
}

FreeWord free_multiply(const FreeWord& u, const FreeWord& v) {
  require_same_rank(u, v);
  std::vector<Syllable> syl = u.syllables();
  syl.insert(syl.end(), v.syllables().begin(), v.syllables().end());
  return FreeWord(u.rank(), syl);
}

FreeWord free_invert(const FreeWord& u) {
  std::vector<Syllable> syl(u.syllables().rbegin(), u.syllables().rend());
  for (auto& s : syl) s.exponent = -s.exponent;
  return FreeWord(u.rank(), syl);
}

FreeWord free_commutator(const FreeWord& u, const FreeWord& v) {
  return free_multiply(free_multiply(free_invert(u), free_invert(v)), free_multiply(u, v));
}

FreeWord free_power(const FreeWord& u, std::int64_t n) {
  FreeWord base = n < 0 ? free_invert(u) : u;
  if (n < 0) n = -n;
  FreeWord out(u.rank());
  // Square-and-multiply keeps intermediate words short for large n.
  while (n > 0) {
    if (n & 1) out = free_multiply(out, base);
    n >>= 1;
    if (n > 0) base = free_multiply(base, base);
  }
  return out;
}

MonoidWord to_monoid_word(const FreeWord& w, std::span<const std::string> names) {
  MonoidWord out;
  for (const auto& s : w.syllables()) {
    if (static_cast<std::size_t>(s.generator) > names.size())
      throw InputError("no letter name for generator x" + std::to_string(s.generator));
    const std::string& name = names[s.generator - 1];
    std::string letter = s.exponent > 0 ? name : name + "^-1";
    std::int64_t n = s.exponent > 0 ? s.exponent : -s.exponent;
    for (std::int64_t i = 0; i < n; ++i) out.letters.push_back(letter);
  }
  return out;
}

std::string to_string(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

namespace {

class FreeWordParser {
 public:
  FreeWordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  FreeWord parse() {
    FreeWord w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("free word parse error at offset " + std::to_string(pos_) +
                     ": " + why + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '[' || c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  FreeWord word() {
    FreeWord w(rank_);
    bool any = false;
    while (at_factor_start()) {
      w = free_multiply(w, factor());
      any = true;
    }
    if (!any) fail("empty word (use 1 for the identity)");
    return w;
  }

  FreeWord factor() {
    FreeWord a = atom();
    if (peek('^')) {
      ++pos_;
      a = free_power(a, integer());
    }
    return a;
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) fail("expected integer exponent");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  FreeWord atom() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FreeWord w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      FreeWord u = word();
      expect(',');
      FreeWord v = word();
      expect(']');
      return free_commutator(u, v);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view token = text_.substr(start, pos_ - start);
    if (token == "1") return FreeWord(rank_);
    auto [gen, sign] = parse_free_letter(token);
    if (gen == 0) fail("unknown generator '" + std::string(token) + "'");
    if (gen > rank_)
      fail("generator '" + std::string(token) + "' exceeds rank " + std::to_string(rank_));
    return FreeWord::generator(rank_, gen, sign);
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord parse_free_word(std::string_view text, int rank) {
  return FreeWordParser(text, rank).parse();
}

int tr(std::int64_t m) {
  std::int64_t r = m % 3;
  if (r < 0) r += 3;
  return r == 2 ? -1 : static_cast<int>(r);
}

std::int64_t ql(const FreeWord& w) {
  std::int64_t sum = 0;
  for (const auto& s : w.syllables()) sum += tr(s.exponent);
  return sum;
}

std::int64_t ql(const MonoidWord& w, int rank) { return ql(reduce(w, rank)); }

}  // namespace palw
