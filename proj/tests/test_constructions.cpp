#include <stdexcept>
#include <algorithm>

#include "doctest.h"
#include "resalg/constructions.hpp"
#include "resalg/enumeration.hpp"
#include "resalg/morphisms.hpp"
#include "resalg/structure.hpp"
#include "resalg/varieties.hpp"

using namespace resalg;

TEST_CASE("product of two copies of 2 is the boolean square") {
  const FiniteAlgebra p = direct_product(catalog_get("2"), catalog_get("2"));
  CHECK(validate_axioms(p).valid());
  CHECK(is_isomorphic(p, boolean_cube(2)).isomorphic);
  CHECK_FALSE(is_linearly_ordered(p));
}

TEST_CASE("products of nontrivial chains are not chains") {
  const FiniteAlgebra p =
      direct_product(catalog_get("H3"), catalog_get("L3"));
  CHECK(validate_axioms(p).valid());
  CHECK_FALSE(is_linearly_ordered(p));
}

TEST_CASE("unities in a product are the componentwise unities") {
  const FiniteAlgebra h4 = catalog_get("H4");
  const FiniteAlgebra i4 = catalog_get("I4");
  const FiniteAlgebra p = direct_product(h4, i4);
  for (Elem x = 0; x < h4.size; ++x)
    for (Elem y = 0; y < i4.size; ++y)
      CHECK(is_unity(p, x * i4.size + y) ==
            (is_unity(h4, x) && is_unity(i4, y)));
}

TEST_CASE("products preserve the equations their factors satisfy") {
  const std::vector<FiniteAlgebra> pool = {
      catalog_get("H4"), catalog_get("I4"), catalog_get("L3"),
      boolean_cube(2)};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const FiniteAlgebra p = direct_product(a, b);
      for (EquationId eq : all_equations())
        if (holds_equation(a, eq).holds && holds_equation(b, eq).holds) {
          CAPTURE(a.name);
          CAPTURE(b.name);
          CHECK(holds_equation(p, eq).holds);
        }
    }
}

TEST_CASE("product rejects mismatched signatures") {
  CHECK_THROWS_AS(direct_product(catalog_get("2"),
                                 hoop_reduct(catalog_get("2"), true)),
                  std::invalid_argument);
}

TEST_CASE("generated subalgebras") {
  const FiniteAlgebra h4 = catalog_get("H4");
  const SubalgebraResult s = subalgebra_generated(h4, set_single(2));
  CHECK(s.elements == std::vector<Elem>{0, 2, 3});
  CHECK(is_isomorphic(s.algebra, catalog_get("H3")).isomorphic);
  CHECK(is_homomorphism(s.inclusion));
  CHECK(s.inclusion.is_mono());

  for (const char* name : {"H4", "I4", "L3", "I6"}) {
    const SubalgebraResult two = subalgebra_generated(catalog_get(name), 0);
    CAPTURE(name);
    CHECK(two.algebra.size == 2);
    CHECK(is_isomorphic(two.algebra, catalog_get("2")).isomorphic);
  }

  const SubalgebraResult i4 = subalgebra_generated(nm_chain(6), set_single(4));
  CHECK(i4.elements == std::vector<Elem>{0, 1, 4, 5});
  CHECK(is_isomorphic(i4.algebra, catalog_get("I4")).isomorphic);
}

TEST_CASE("generated subalgebras are minimal") {
  const std::vector<std::pair<const char*, ElemSet>> cases = {
      {"H4", set_single(2)}, {"I6", set_single(3)}, {"nm:6", set_single(4)}};
  for (const auto& [name, seed] : cases) {
    const FiniteAlgebra a = catalog_get(name);
    const SubalgebraResult s = subalgebra_generated(a, seed);
    ElemSet keep = set_from_vector(s.elements);
    for (Elem x : s.elements) {
      if (x == a.bot || x == a.top || set_contains(seed, x)) continue;
      const ElemSet without = keep & ~set_single(x);
      // dropping any other element must break closure
      bool closed = true;
      for (Elem p : set_to_vector(without))
        for (Elem q : set_to_vector(without)) {
          if (!set_contains(without, a.prod(p, q)) ||
              !set_contains(without, a.imp(p, q)) ||
              !set_contains(without, a.meet(p, q)) ||
              !set_contains(without, a.join(p, q)))
            closed = false;
        }
      CAPTURE(name);
      CHECK_FALSE(closed);
    }
  }
}

TEST_CASE("all subalgebras, canonically sorted") {
  const FiniteAlgebra l3 = catalog_get("L3");
  CHECK(all_subalgebras(l3) ==
        std::vector<ElemSet>{set_from_vector({0, 2}), set_from_vector({0, 1, 2})});

  CHECK(all_subalgebras(catalog_get("2")) ==
        std::vector<ElemSet>{set_from_vector({0, 1})});

  const FiniteAlgebra h4 = catalog_get("H4");
  CHECK(all_subalgebras(h4) ==
        std::vector<ElemSet>{set_from_vector({0, 3}), set_from_vector({0, 1, 3}),
                             set_from_vector({0, 2, 3}),
                             set_from_vector({0, 1, 2, 3})});
}

TEST_CASE("diamond of 2 is the three-element Lukasiewicz chain") {
  const DiamondResult d = diamond(catalog_get("2"));
  CHECK(d.algebra.size == 3);
  CHECK(validate_axioms(d.algebra).valid());
  CHECK(is_isomorphic(d.algebra, catalog_get("L3")).isomorphic);
  // (0,1) is the negation fixpoint
  int fix = -1;
  for (int i = 0; i < 3; ++i)
    if (d.pairs[i] == std::make_pair(0, 1)) fix = i;
  REQUIRE(fix >= 0);
  CHECK(d.algebra.neg(fix) == fix);
}

TEST_CASE("diamond carrier counts pairs below the diagonal") {
  CHECK(diamond(lukasiewicz_chain(4)).algebra.size == 10);
  CHECK(diamond(godel_chain(5)).algebra.size == 15);
  CHECK(diamond(boolean_cube(2)).algebra.size == 9);
}

TEST_CASE("diamond battery over the catalog") {
  for (const char* name : {"2", "H3", "H4", "I4", "L3", "bool:2", "nm:5",
                           "godel:5", "luk:5", "ordwnm:5"}) {
    const FiniteAlgebra a = catalog_get(name);
    const DiamondResult d = diamond(a);
    CAPTURE(name);
    CHECK(validate_axioms(d.algebra).valid());
    CHECK(is_homomorphism(d.diagonal));
    CHECK(d.diagonal.is_mono());
    for (int i = 0; i < d.algebra.size; ++i) {
      const auto [x, y] = d.pairs[i];
      CHECK(d.pairs[d.algebra.neg(i)] == std::make_pair(a.neg(y), a.neg(x)));
    }
    for (EquationId eq : {EquationId::INV, EquationId::DIST})
      CHECK(holds_equation(a, eq).holds ==
            holds_equation(d.algebra, eq).holds);
  }
  // Girard transfer in the positive and negative direction
  CHECK(holds_equation(diamond(catalog_get("L3")).algebra, EquationId::INV)
            .holds);
  CHECK_FALSE(
      holds_equation(diamond(catalog_get("H3")).algebra, EquationId::INV)
          .holds);
}

TEST_CASE("diamond requires a lattice signature") {
  CHECK_THROWS_AS(diamond(hoop_reduct(catalog_get("2"), true)),
                  std::invalid_argument);
}

TEST_CASE("catalog identities") {
  CHECK(is_isomorphic(lukasiewicz_chain(3), nm_chain(3)).isomorphic);
  CHECK(is_isomorphic(lukasiewicz_chain(3), ordinal_wnm(3)).isomorphic);
  CHECK(is_isomorphic(catalog_get("L3"), lukasiewicz_chain(3)).isomorphic);
  CHECK(is_isomorphic(godel_chain(3), catalog_get("H3")).isomorphic);
  CHECK(is_isomorphic(godel_chain(4), catalog_get("H4")).isomorphic);
  CHECK(is_isomorphic(nm_chain(4), catalog_get("I4")).isomorphic);
  CHECK(nm_chain(2).same_tables(godel_chain(2)));
  CHECK(nm_chain(2).same_tables(lukasiewicz_chain(2)));
  CHECK(is_isomorphic(nm_chain(2), catalog_get("2")).isomorphic);
}

TEST_CASE("ordinal chains are simple up to size eight") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(simplicity_report(ordinal_wnm(n)).simple);
  }
  CHECK(ordinal_wnm(3).same_tables(catalog_get("L3")));
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(catalog_get("nope"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("luk:1"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("godel:x"), std::invalid_argument);
  CHECK_THROWS_AS(boolean_cube(0), std::invalid_argument);
}

TEST_CASE("test_d witnesses") {
  const TestWitness h4 = is_test_d(catalog_get("H4"));
  CHECK(h4.found);
  CHECK(h4.eps == 2);
  CHECK(h4.t == 1);
  CHECK(h4.radical_dense);

  CHECK_FALSE(is_test_d(catalog_get("H3")).found);

  const TestWitness g5 = is_test_d(godel_chain(5));
  CHECK(g5.found);
  CHECK(g5.eps == 2);
  CHECK(g5.t == 1);

  const TestWitness i4 = is_test_d(catalog_get("I4"));
  CHECK_FALSE(i4.radical_dense);
}

TEST_CASE("test_I witnesses") {
  const TestWitness nm6 = is_test_I(nm_chain(6));
  CHECK(nm6.found);
  CHECK(nm6.eps == 4);
  CHECK(nm6.t == 3);

  CHECK_FALSE(is_test_I(catalog_get("I4")).found);
  CHECK_FALSE(is_test_I(catalog_get("L3")).found);
}

TEST_CASE("bounded hoops expand to MV-algebras when Wajsberg") {
  const FiniteAlgebra l4 = hoop_reduct(lukasiewicz_chain(4), true);
  const FiniteAlgebra mv = rl_from_bounded_hoop(l4);
  CHECK(validate_axioms(mv).valid());
  CHECK(classify(mv).has(Variety::MV));
  CHECK(is_isomorphic(mv, lukasiewicz_chain(4)).isomorphic);

  // non-Wajsberg input has no lattice join through double implication
  const FiniteAlgebra g4 = hoop_reduct(godel_chain(4), true);
  CHECK_FALSE(validate_axioms(rl_from_bounded_hoop(g4)).valid());
}
