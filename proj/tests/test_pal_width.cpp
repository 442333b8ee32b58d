#include <doctest.h>

#include <algorithm>
#include <set>

#include "palw/errors.hpp"
#include "palw/pal_width.hpp"
#include "support/brute_palindromes.hpp"

using namespace palw;

namespace {

std::set<ElementId> as_set(const std::vector<ElementId>& v) { return {v.begin(), v.end()}; }

std::vector<ElementId> pals(const FiniteGroup& g, Notion n) {
  return palindrome_elements(g, reachable_pairs(g), n);
}

}  // namespace

TEST_CASE("reachable pairs") {
  // Z_2 is abelian, so rho(u) = rho(reverse(u)): only (1,1) and (a,a).
  FiniteGroup z2 = cyclic(2);
  ReachablePairs p = reachable_pairs(z2);
  CHECK(p.count() == 2);
  CHECK(p.contains(0, 0));
  CHECK(p.contains(1, 1));
  CHECK_FALSE(p.contains(0, 1));

  // r = c (s1 s2)^2 gives (1, rho(reverse(r))) with the reverse nontrivial.
  FiniteGroup s3 = sym3_fink();
  ReachablePairs ps = reachable_pairs(s3);
  ElementId rbar = evaluate(s3, reversed(parse_monoid_word("c s1 s2 s1 s2")));
  CHECK(rbar == *s3.generator("c^-1"));
  CHECK(ps.contains(s3.identity(), rbar));

  for (const FiniteGroup& g : {s3, dihedral(4), direct_product(cyclic(3), cyclic(4))}) {
    ReachablePairs r = reachable_pairs(g);
    CHECK(r.contains(g.identity(), g.identity()));
    for (ElementId x = 0; x < g.order(); ++x)
      for (ElementId y = 0; y < g.order(); ++y)
        if (r.contains(x, y))
          for (const auto& a : g.generators())
            CHECK(r.contains(g.multiply(x, a.element), g.multiply(a.element, y)));
  }
}

TEST_CASE("state cap") {
  CHECK_THROWS_AS(reachable_pairs(cyclic(100), 9999), CapExceeded);
  CHECK_NOTHROW(reachable_pairs(cyclic(100), 10000));
}

TEST_CASE("palindrome sets") {
  for (const FiniteGroup& g : {cyclic(5), direct_product(cyclic(4), cyclic(6)), dihedral(2)})
    CHECK(pals(g, Notion::group).size() == g.order());

  FiniteGroup z3z3 = direct_product(cyclic(3), cyclic(3));
  CHECK(pals(z3z3, Notion::word).size() == 9);

  // (1,1) in Z4 x Z4: id 1 + 4*1 = 5. Word palindromes have exponent vector
  // 2v + (at most one unit), so both coordinates odd is impossible.
  FiniteGroup z4z4 = direct_product(cyclic(4), cyclic(4));
  auto word = as_set(pals(z4z4, Notion::word));
  CHECK_FALSE(word.contains(5));
  for (ElementId x = 0; x < 16; ++x) {
    bool both_odd = (x % 4) % 2 == 1 && (x / 4) % 2 == 1;
    CHECK(word.contains(x) == !both_odd);
  }
}

TEST_CASE("palindromic widths") {
  CHECK(palindromic_width(cyclic(2), Notion::word).width == 1);
  WidthReport r = palindromic_width(direct_product(cyclic(4), cyclic(4)), Notion::word);
  CHECK(r.width == 2);
  CHECK(r.length[5] == 2);
  CHECK(r.layers == std::vector<std::size_t>{1, 12, 16});
  CHECK(palindromic_width(direct_product(cyclic(4), cyclic(4)), Notion::group).width == 1);
  CHECK(palindromic_length(direct_product(cyclic(4), cyclic(4)), Notion::word, 5) == 2);
  CHECK(palindromic_width(cyclic(1), Notion::word).width == 0);
}

TEST_CASE("report invariants") {
  for (Notion n : {Notion::word, Notion::group}) {
    FiniteGroup g = dihedral(5);
    WidthReport r = palindromic_width(g, n);
    CHECK(r.length[g.identity()] == 0);
    CHECK(*std::max_element(r.length.begin(), r.length.end()) == r.width);
    for (ElementId x = 0; x < g.order(); ++x)
      CHECK(std::binary_search(r.palindromes.begin(), r.palindromes.end(), x) ==
            (r.length[x] <= 1));
    CHECK(r.layers.back() == g.order());
  }
}

TEST_CASE("word palindromes are group palindromes; widths ordered") {
  std::vector<FiniteGroup> groups{sym3_fink(), dihedral(4), dihedral(6),
                                  direct_product(cyclic(2), dihedral(3)), cyclic(7)};
  for (const auto& g : groups) {
    auto w = as_set(pals(g, Notion::word));
    auto gr = as_set(pals(g, Notion::group));
    CHECK(std::includes(gr.begin(), gr.end(), w.begin(), w.end()));
    CHECK(palindromic_width(g, Notion::group).width <= palindromic_width(g, Notion::word).width);
  }
}

TEST_CASE("direct product sandwich: max <= pw(AxB) <= sum") {
  std::vector<FiniteGroup> base;
  for (std::size_t m = 2; m <= 6; ++m) base.push_back(cyclic(m));
  for (std::size_t m = 3; m <= 5; ++m) base.push_back(dihedral(m));
  for (const auto& a : base)
    for (const auto& b : base) {
      int pa = palindromic_width(a, Notion::word).width;
      int pb = palindromic_width(b, Notion::word).width;
      int pab = palindromic_width(direct_product(a, b), Notion::word).width;
      CHECK(std::max(pa, pb) <= pab);
      CHECK(pab <= pa + pb);
    }
}

TEST_CASE("agrees with the brute-force word enumeration") {
  std::vector<FiniteGroup> groups;
  for (std::size_t m = 1; m <= 8; ++m) groups.push_back(cyclic(m));
  for (std::size_t m = 2; m <= 6; ++m) groups.push_back(dihedral(m));
  groups.push_back(sym3_fink());
  groups.push_back(direct_product(cyclic(4), cyclic(4)));
  groups.push_back(direct_product(cyclic(3), dihedral(4)));
  for (const auto& g : groups) {
    auto brute = testing::enumerate_words_palindromes(g);
    CHECK(as_set(pals(g, Notion::word)) == brute.word);
    CHECK(as_set(pals(g, Notion::group)) == brute.group);
    CHECK(palindromic_width(g, Notion::word).length == testing::relaxation_lengths(g, brute.word));
    CHECK(palindromic_width(g, Notion::group).length ==
          testing::relaxation_lengths(g, brute.group));
  }
}

TEST_CASE("agrees with literal word evaluation on tiny groups") {
  struct Case {
    FiniteGroup g;
    std::size_t max_length;
  };
  std::vector<Case> cases{{cyclic(2), 4}, {cyclic(3), 6}, {cyclic(4), 8},
                          {direct_product(cyclic(2), cyclic(2)), 6},
                          {sym3_fink(), 7}, {dihedral(3), 8}};
  for (const auto& [g, len] : cases) {
    auto lit = testing::literal_palindromes(g, len);
    CHECK(as_set(pals(g, Notion::word)) == lit.word);
    CHECK(as_set(pals(g, Notion::group)) == lit.group);
  }
}
