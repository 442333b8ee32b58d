#include "palw/wreath.hpp"

#include <cctype>

#include "palw/errors.hpp"

namespace palw {

WreathGroup::WreathGroup(int rank, FiniteGroup top) : rank_(rank), top_(std::move(top)) {
  if (rank_ < 1) throw InputError("wreath product needs free rank >= 1");
  const std::size_t l = top_.order();
  coord_elt_.reserve(l);
  elt_coord_.assign(l, 0);
  coord_elt_.push_back(top_.identity());
  for (ElementId k = 0; k < l; ++k)
    if (k != top_.identity()) coord_elt_.push_back(k);
  for (std::size_t i = 0; i < l; ++i) elt_coord_[coord_elt_[i]] = i;
}

WreathElement WreathGroup::identity() const {
  return WreathElement{std::vector<FreeWord>(degree(), FreeWord(rank_)), top_.identity()};
}

WreathElement WreathGroup::free_generator(int index, std::int64_t exponent) const {
  return at_coordinate(0, FreeWord::generator(rank_, index, exponent));
}

WreathElement WreathGroup::top_element(ElementId k) const {
  if (k >= degree()) throw InputError("top element out of range");
  WreathElement g = identity();
  g.top = k;
  return g;
}

WreathElement WreathGroup::at_coordinate(std::size_t coord, const FreeWord& w) const {
  if (coord >= degree()) throw InputError("coordinate out of range");
  if (w.rank() != rank_) throw InputError("free word rank does not match wreath product");
  WreathElement g = identity();
  g.base[coord] = w;
  return g;
}

void WreathGroup::check(const WreathElement& g) const {
  if (g.base.size() != degree() || g.top >= degree())
    throw InputError("element does not belong to this wreath product (expected " +
                     std::to_string(degree()) + " coordinates)");
  for (const auto& f : g.base)
    if (f.rank() != rank_) throw InputError("coordinate word has the wrong free rank");
}

WreathElement WreathGroup::multiply(const WreathElement& g, const WreathElement& h) const {
  check(g);
  check(h);
  WreathElement out;
  out.base.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    std::size_t j = elt_coord_[top_.multiply(coord_elt_[i], g.top)];
    out.base.push_back(free_multiply(g.base[i], h.base[j]));
  }
  out.top = top_.multiply(g.top, h.top);
  return out;
}

WreathElement WreathGroup::invert(const WreathElement& g) const {
  check(g);
  const ElementId k_inv = top_.inverse(g.top);
  WreathElement out;
  out.base.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    std::size_t j = elt_coord_[top_.multiply(coord_elt_[i], k_inv)];
    out.base.push_back(free_invert(g.base[j]));
  }
  out.top = k_inv;
  return out;
}

WreathElement WreathGroup::commutator(const WreathElement& g, const WreathElement& h) const {
  return multiply(multiply(invert(g), invert(h)), multiply(g, h));
}

std::vector<FreeWord> WreathGroup::act(const std::vector<FreeWord>& base, ElementId k) const {
  if (base.size() != degree()) throw InputError("base tuple has the wrong length");
  const ElementId k_inv = top_.inverse(k);
  std::vector<FreeWord> out;
  out.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    out.push_back(base[elt_coord_[top_.multiply(coord_elt_[i], k_inv)]]);
  return out;
}

WreathElement WreathGroup::evaluate(const MonoidWord& w) const {
  WreathElement g = identity();
  for (const auto& letter : w.letters) {
    if (auto k = top_.generator(letter)) {
      g = multiply(g, top_element(*k));
      continue;
    }
    auto [gen, sign] = parse_free_letter(letter);
    if (gen == 0 || gen > rank_) throw InputError("unknown letter '" + letter + "'");
    g = multiply(g, free_generator(gen, sign));
  }
  return g;
}

std::string WreathGroup::to_text(const WreathElement& g) const {
  check(g);
  std::string out = "[";
  for (std::size_t i = 0; i < degree(); ++i) {
    if (i) out += "; ";
    out += to_string(g.base[i]);
  }
  out += "] ";
  out += top_.name(g.top);
  return out;
}

WreathElement WreathGroup::parse(std::string_view text) const {
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("wreath element parse error: " + why + " in '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != '[') throw fail("expected '['");
  ++pos;
  std::vector<std::string_view> parts;
  std::size_t start = pos;
  int depth = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '[' || c == '(') {
      ++depth;
    } else if (c == ')' || (c == ']' && depth > 0)) {
      --depth;
    } else if (c == ']') {
      break;
    } else if (c == ';' && depth == 0) {
      parts.push_back(text.substr(start, pos - start));
      start = pos + 1;
    }
  }
  if (pos >= text.size()) throw fail("missing closing ']'");
  parts.push_back(text.substr(start, pos - start));
  if (parts.size() != degree())
    throw fail("expected " + std::to_string(degree()) + " coordinates, got " +
               std::to_string(parts.size()));
  WreathElement g;
  for (auto part : parts) g.base.push_back(parse_free_word(part, rank_));
  MonoidWord top_word = parse_monoid_word(text.substr(pos + 1));
  g.top = palw::evaluate(top_, top_word);
  return g;
}

std::int64_t delta(const WreathElement& g) {
  std::int64_t sum = 0;
  for (const auto& f : g.base) sum += ql(f);
  return sum;
}

WreathElement q_sequence(const WreathGroup& group, std::int64_t j) {
  if (group.rank() < 2)
    throw InputError("q_j needs a free group of rank >= 2");
  if (j < 1) throw InputError("q_j is defined for j >= 1");
  std::vector<Syllable> syl{{2, -3 * j}, {1, -3 * j}};
  syl.reserve(2 + 6 * j);
  for (std::int64_t i = 0; i < 3 * j; ++i) {
    syl.push_back({2, 1});
    syl.push_back({1, 1});
  }
  return group.at_coordinate(0, FreeWord(group.rank(), syl));
}

std::int64_t commutator_delta_bound(std::size_t degree, std::int64_t m) {
  return 3 * static_cast<std::int64_t>(degree) * (6 * m - 1);
}

std::optional<CommutatorCertificate> certify_cw_lower_bound(const WreathGroup& group,
                                                            const WreathElement& g) {
  group.check(g);
  const std::int64_t d = delta(g);
  const std::int64_t abs_d = d < 0 ? -d : d;
  const auto l = static_cast<std::int64_t>(group.degree());
  // Largest m with 3l(6m - 1) < |delta|; then at least m + 1 commutators.
  const std::int64_t m = (abs_d + 3 * l - 1) / (18 * l);
  if (m < 1) return std::nullopt;
  if (!(abs_d > commutator_delta_bound(group.degree(), m) &&
        abs_d <= commutator_delta_bound(group.degree(), m + 1)))
    throw InvariantBreach("commutator threshold arithmetic inconsistent for delta " +
                          std::to_string(d));
  return CommutatorCertificate{g, d, m + 1};
}

}  // namespace palw
