#include <doctest.h>

#include <numeric>
#include <set>

#include "palw/errors.hpp"
#include "palw/nilprod.hpp"

using namespace palw;

namespace {

AbelianSpec Z(std::uint64_t n) { return AbelianSpec{{n}}; }

std::set<ElementId> conjugates(const FiniteGroup& g, const std::vector<ElementId>& s) {
  std::set<ElementId> out;
  for (ElementId x : s)
    for (ElementId h = 0; h < g.order(); ++h)
      out.insert(g.multiply(g.multiply(g.inverse(h), x), h));
  return out;
}

std::vector<AbelianSpec> small_factors() {
  return {Z(2), Z(3), Z(4), AbelianSpec{{2, 2}}};
}

}  // namespace

TEST_CASE("Z2 (2) Z2 is dihedral of order 8") {
  NilpotentProduct p = nilprod2(Z(2), Z(2));
  CHECK(p.order() == 8);
  CHECK_FALSE(p.group().is_abelian());
  for (const auto& gen : p.group().generators()) CHECK(p.group().element_order(gen.element) == 2);
  CHECK(find_isomorphism(p.group(), dihedral(4)).has_value());
  CHECK_FALSE(find_isomorphism(p.group(), direct_product(cyclic(2), cyclic(4))).has_value());
}

TEST_CASE("coprime factors give the direct product") {
  NilpotentProduct p = nilprod2(Z(2), Z(3));
  CHECK(p.order() == 6);
  CHECK(p.group().is_abelian());
  CHECK(p.tensor_elements().size() == 1);
  CHECK(find_isomorphism(p.group(), cyclic(6)).has_value());
  CHECK(find_isomorphism(nilprod2_multi({Z(2), Z(3)}), cyclic(6)).has_value());
}

TEST_CASE("Z3 (2) Z3 is the Heisenberg group of order 27") {
  NilpotentProduct p = nilprod2(Z(3), Z(3));
  const FiniteGroup& g = p.group();
  CHECK(g.order() == 27);
  for (ElementId x = 0; x < 27; ++x) CHECK(g.power(x, 3) == g.identity());
  for (const auto& a : g.generators())
    for (const auto& b : g.generators())
      for (const auto& c : g.generators())
        CHECK(g.commutator(g.commutator(a.element, b.element), c.element) == g.identity());
}

TEST_CASE("multi-factor products") {
  CHECK(nilprod2_multi({Z(2), Z(2), Z(2)}).order() == 64);
  FiniteGroup single = nilprod2_multi({AbelianSpec{{2, 3}}});
  CHECK(single.order() == 6);
  CHECK(find_isomorphism(single, abelian(std::vector<std::uint64_t>{2, 3})).has_value());

  GroupLimits tiny{.max_order = 32, .verify_cap = 512};
  CHECK_THROWS_AS(nilprod2_multi({Z(2), Z(2), Z(2)}, tiny), CapExceeded);
  CHECK_THROWS_AS(nilprod2_multi({}), InputError);
}

TEST_CASE("commutator of embedded generators lands in the tensor with the right sign") {
  for (const auto& A : small_factors())
    for (const auto& B : small_factors()) {
      NilpotentProduct p = nilprod2(A, B);
      const FiniteGroup& g = p.group();
      for (ElementId a : p.factor_elements(0))
        for (ElementId b : p.factor_elements(1)) {
          auto ca = p.decode(a), cb = p.decode(b);
          auto comm = p.decode(g.commutator(a, b));
          std::size_t fa = A.moduli.size(), fb = B.moduli.size();
          for (std::size_t i = 0; i < fa + fb; ++i) CHECK(comm[i] == 0);
          // tensor coordinates ordered by (component of A, component of B)
          std::size_t t = fa + fb;
          for (std::size_t i = 0; i < fa; ++i)
            for (std::size_t j = 0; j < fb; ++j) {
              std::uint64_t m = std::gcd(A.moduli[i], B.moduli[j]);
              if (m == 1) continue;
              CHECK(comm[t] == (ca[i] * cb[fa + j]) % m);
              ++t;
            }
          CHECK(t == p.coordinate_count());
        }
    }
}

TEST_CASE("structural properties on all small pairs") {
  for (const auto& A : small_factors())
    for (const auto& B : small_factors()) {
      NilpotentProduct p = nilprod2(A, B);
      const FiniteGroup& g = p.group();
      CAPTURE(p.order());

      // normal form uniqueness: coordinates <-> ids is a bijection
      std::set<ElementId> seen;
      for (ElementId x = 0; x < g.order(); ++x) {
        CHECK(p.encode(p.decode(x)) == x);
        seen.insert(x);
      }
      CHECK(seen.size() == A.order() * B.order() * p.tensor_elements().size());

      // a b w: every element is a product of an A part, a B part and a tensor part
      auto fa = p.factor_elements(0), fb = p.factor_elements(1), tw = p.tensor_elements();
      std::set<ElementId> products;
      for (ElementId a : fa)
        for (ElementId b : fb)
          for (ElementId w : tw) products.insert(g.multiply(g.multiply(a, b), w));
      CHECK(products.size() == g.order());

      // A^G meets B trivially and vice versa
      auto ag = conjugates(g, fa), bg = conjugates(g, fb);
      for (ElementId b : fb)
        if (b != g.identity()) CHECK_FALSE(ag.contains(b));
      for (ElementId a : fa)
        if (a != g.identity()) CHECK_FALSE(bg.contains(a));

      // class 2: every triple commutator vanishes
      for (ElementId x = 0; x < g.order(); ++x)
        for (ElementId y = 0; y < g.order(); ++y) {
          ElementId c = g.commutator(x, y);
          for (const auto& z : g.generators())
            CHECK(g.commutator(c, z.element) == g.identity());
        }

      // C_A(B) C_B(A) meets [A,B] trivially; both are normal
      auto ca = p.centralizer(0), cb = p.centralizer(1);
      std::set<ElementId> tensor(tw.begin(), tw.end());
      for (ElementId a : ca)
        for (ElementId b : cb) {
          ElementId ab = g.multiply(a, b);
          if (ab != g.identity()) CHECK_FALSE(tensor.contains(ab));
        }
      std::set<ElementId> ca_set(ca.begin(), ca.end());
      CHECK(conjugates(g, ca) == ca_set);
    }
}

TEST_CASE("commutator bilinearity") {
  NilpotentProduct p = nilprod2(Z(4), AbelianSpec{{2, 4}});
  const FiniteGroup& g = p.group();
  for (ElementId a : p.factor_elements(0))
    for (ElementId a2 : p.factor_elements(0))
      for (ElementId b : p.factor_elements(1)) {
        CHECK(g.commutator(g.multiply(a, a2), b) ==
              g.multiply(g.commutator(a, b), g.commutator(a2, b)));
        CHECK(g.commutator(b, g.multiply(a, a2)) ==
              g.multiply(g.commutator(b, a), g.commutator(b, a2)));
      }
}

TEST_CASE("centralizers agree with the table") {
  auto table_centralizer = [](const NilpotentProduct& p, std::size_t k) {
    std::vector<ElementId> out;
    for (ElementId a : p.factor_elements(k)) {
      bool central = true;
      for (std::size_t j = 0; j < p.factor_count(); ++j)
        if (j != k)
          for (ElementId b : p.factor_elements(j))
            central = central && p.group().multiply(a, b) == p.group().multiply(b, a);
      if (central) out.push_back(a);
    }
    return out;
  };

  NilpotentProduct z4z2 = nilprod2(Z(4), Z(2));
  CHECK(z4z2.centralizer(0) == std::vector<ElementId>{z4z2.embed(0, {0}), z4z2.embed(0, {2})});
  CHECK(z4z2.quotient_generator_count(0) == 1);

  NilpotentProduct z2z2 = nilprod2(Z(2), Z(2));
  CHECK(z2z2.centralizer(0) == std::vector<ElementId>{z2z2.group().identity()});

  NilpotentProduct z2z3 = nilprod2(Z(2), Z(3));
  CHECK(z2z3.centralizer(0).size() == 2);
  CHECK(z2z3.centralizer(1).size() == 3);
  CHECK(z2z3.quotient_generator_count(0) == 0);

  for (const auto& A : small_factors())
    for (const auto& B : small_factors()) {
      NilpotentProduct p = nilprod2(A, B);
      for (std::size_t k = 0; k < 2; ++k) CHECK(p.centralizer(k) == table_centralizer(p, k));
    }
  NilpotentProduct three({Z(2), Z(4), Z(3)});
  for (std::size_t k = 0; k < 3; ++k) CHECK(three.centralizer(k) == table_centralizer(three, k));
}

TEST_CASE("bound arithmetic") {
  BoundReport ii = width_bounds({1, 1}, {0, 0});
  CHECK(ii.branch == "ii");
  CHECK(ii.lower == 1);
  CHECK(ii.upper == 2);

  BoundReport i = width_bounds({1, 1}, {1, 1});
  CHECK(i.branch == "i");
  CHECK(i.upper == 8);

  CHECK(width_bounds({1, 1, 1}, {1, 1, 1}).upper == 12);
  CHECK(width_bounds({2}, {3}).upper == 2);
  CHECK(width_bounds({2}, {3}).branch == "single");
  // one central factor splits off, the other two keep the free-nilpotent term
  CHECK(width_bounds({1, 2, 3}, {0, 1, 2}).upper == 1 + 2 + 3 + 9);
  CHECK_THROWS_AS(width_bounds({1}, {1, 2}), InputError);
  CHECK_THROWS_AS(width_bounds({}, {}), InputError);
}

TEST_CASE("sandwich with oracle-exact widths") {
  BoundReport z2z3 = sandwich_report(nilprod2(Z(2), Z(3)));
  CHECK(z2z3.branch == "ii");
  CHECK(z2z3.lower == 1);
  CHECK(z2z3.upper == 2);
  REQUIRE(z2z3.exact.has_value());
  CHECK(check_sandwich(z2z3));

  BoundReport z2z2 = sandwich_report(nilprod2(Z(2), Z(2)));
  CHECK(z2z2.branch == "i");
  CHECK(z2z2.m == std::vector<int>{1, 1});
  CHECK(z2z2.lower == 1);
  CHECK(z2z2.upper == 8);
  CHECK(check_sandwich(z2z2));

  for (const auto& A : small_factors())
    for (const auto& B : small_factors()) {
      NilpotentProduct p = nilprod2(A, B);
      BoundReport r = sandwich_report(p);
      CHECK(check_sandwich(r));
      CHECK(check_sandwich(p, *r.exact));
      CHECK_FALSE(check_sandwich(p, r.upper + 1));
    }

  BoundReport bad{.lower = 3, .upper = 2};
  CHECK_FALSE(check_sandwich(bad));
}

TEST_CASE("the product is commutative and associative up to isomorphism") {
  CHECK(find_isomorphism(nilprod2(Z(2), Z(4)).group(), nilprod2(Z(4), Z(2)).group()).has_value());
  CHECK(find_isomorphism(nilprod2(Z(3), AbelianSpec{{2, 2}}).group(),
                         nilprod2(AbelianSpec{{2, 2}}, Z(3)).group())
            .has_value());
  FiniteGroup abc = nilprod2_multi({Z(2), Z(2), Z(3)});
  FiniteGroup cab = nilprod2_multi({Z(3), Z(2), Z(2)});
  CHECK(abc.order() == cab.order());
  CHECK(find_isomorphism(abc, cab).has_value());
}
