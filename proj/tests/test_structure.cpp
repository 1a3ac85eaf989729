#include <algorithm>

#include "doctest.h"
#include "resalg/constructions.hpp"
#include "resalg/enumeration.hpp"
#include "resalg/morphisms.hpp"
#include "resalg/structure.hpp"
#include "resalg/varieties.hpp"

using namespace resalg;

namespace {

// Subset-scan oracle for the filter enumerator.
std::vector<ElemSet> brute_filters(const FiniteAlgebra& a) {
  std::vector<ElemSet> out;
  for (ElemSet s = 0; s < (ElemSet{1} << a.size); ++s)
    if (is_filter(a, s)) out.push_back(s);
  return out;
}

// The five-element Heyting algebra 0 < a,b < a|b < 1 (a, b incomparable),
// the standard non-prelinear example.
FiniteAlgebra pentagon_heyting() {
  OrderRelation r(5);
  for (Elem x = 0; x < 5; ++x) {
    r.set(0, x, true);
    r.set(x, 4, true);
  }
  r.set(1, 3, true);
  r.set(2, 3, true);
  REQUIRE(r.is_partial_order());
  FiniteAlgebra h;
  h.size = 5;
  h.signature = Signature::ResiduatedLattice;
  h.bot = 0;
  h.top = 4;
  h.name = "M5";
  h.meet = Table(5);
  h.join = Table(5);
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) {
      h.meet.at(x, y) = *r.meet_of(x, y);
      h.join.at(x, y) = *r.join_of(x, y);
    }
  h.prod = h.meet;
  const auto res = derive_residual(r, h.prod);
  REQUIRE(res.residuated);
  h.imp = res.imp;
  REQUIRE(validate_axioms(h).valid());
  return h;
}

}  // namespace

TEST_CASE("filter generation") {
  const FiniteAlgebra h4 = catalog_get("H4");
  CHECK(filter_generated(h4, set_single(2)).members == set_from_vector({2, 3}));

  const FiniteAlgebra l3 = catalog_get("L3");
  const Filter improper = filter_generated(l3, set_single(1));
  CHECK(improper.members == set_full(3));
  CHECK_FALSE(improper.proper());

  CHECK(filter_generated(h4, 0).members == set_single(3));
}

TEST_CASE("all_filters matches the subset-scan oracle on small algebras") {
  for (const char* name :
       {"2", "H3", "H4", "I4", "L3", "bool:2", "luk:5", "godel:5", "nm:5"}) {
    const FiniteAlgebra a = catalog_get(name);
    std::vector<ElemSet> got;
    for (const Filter& f : all_filters(a)) got.push_back(f.members);
    CAPTURE(name);
    CHECK(got == brute_filters(a));
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("filters of the named algebras") {
  const FiniteAlgebra h4 = catalog_get("H4");
  std::vector<ElemSet> got;
  for (const Filter& f : all_filters(h4)) got.push_back(f.members);
  CHECK(got == std::vector<ElemSet>{set_from_vector({3}), set_from_vector({2, 3}),
                                    set_from_vector({1, 2, 3}),
                                    set_from_vector({0, 1, 2, 3})});

  CHECK(all_filters(catalog_get("L3")).size() == 2);

  const auto maximal = all_filters(h4, /*maximal_only=*/true);
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0].members == set_from_vector({1, 2, 3}));
}

TEST_CASE("theta_F on H4") {
  const FiniteAlgebra h4 = catalog_get("H4");
  const CongruencePartition theta =
      congruence_of_filter(Filter{&h4, set_from_vector({1, 2, 3})});
  CHECK(theta.block_count == 2);
  CHECK(theta.block_of == std::vector<int>{0, 1, 1, 1});

  const CongruencePartition delta =
      congruence_of_filter(Filter{&h4, set_single(3)});
  CHECK(delta.block_count == 4);

  const CongruencePartition nabla =
      congruence_of_filter(Filter{&h4, set_full(4)});
  CHECK(nabla.block_count == 1);
}

TEST_CASE("filter and congruence enumerations agree with roundtrips") {
  for (const char* name : {"2", "H3", "H4", "I4", "I6", "L3", "bool:2"}) {
    const FiniteAlgebra a = catalog_get(name);
    const auto filters = all_filters(a);
    const auto congruences = all_congruences(a);
    CAPTURE(name);
    CHECK(filters.size() == congruences.size());
    for (const Filter& f : filters)
      CHECK(filter_of(congruence_of_filter(f)).members == f.members);
    for (const CongruencePartition& theta : congruences)
      CHECK(congruence_of_filter(filter_of(theta)).block_of == theta.block_of);
  }
}

TEST_CASE("quotients") {
  const FiniteAlgebra h4 = catalog_get("H4");
  const QuotientResult q =
      quotient(h4, Filter{&h4, set_from_vector({1, 2, 3})});
  CHECK(q.algebra.size == 2);
  CHECK(is_isomorphic(q.algebra, catalog_get("2")).isomorphic);

  const QuotientResult same = quotient(h4, Filter{&h4, set_single(3)});
  CHECK(same.algebra.same_tables(h4));

  const QuotientResult one = quotient(h4, Filter{&h4, set_full(4)});
  CHECK(one.algebra.size == 1);
}

TEST_CASE("radical reports on the named algebras") {
  const RadicalReport h4 = radical_report(catalog_get("H4"));
  CHECK(h4.radical.members == set_from_vector({1, 2, 3}));
  CHECK(h4.dense.members == set_from_vector({1, 2, 3}));
  CHECK(h4.principal_unity == 1);
  CHECK_FALSE(h4.semisimple);
  CHECK(h4.radical_dense);

  const RadicalReport l3 = radical_report(catalog_get("L3"));
  CHECK(l3.radical.members == set_single(2));
  CHECK(l3.semisimple);

  const RadicalReport i4 = radical_report(catalog_get("I4"));
  CHECK(i4.radical.members == set_from_vector({2, 3}));
  CHECK(i4.dense.members == set_single(3));
  CHECK_FALSE(i4.radical_dense);
  CHECK(i4.principal_unity == 2);
}

TEST_CASE("simplicity reports") {
  CHECK(simplicity_report(catalog_get("I6")).simple);
  CHECK_FALSE(simplicity_report(catalog_get("I4")).simple);
  const SimplicityReport l3 = simplicity_report(catalog_get("L3"));
  CHECK(l3.simple);
  CHECK(l3.hereditarily_simple);
  CHECK_FALSE(simplicity_report(trivial_algebra()).simple);
}

TEST_CASE("chain decomposition of the boolean square") {
  const FiniteAlgebra b2 = boolean_cube(2);
  const ChainDecomposition d = chain_decomposition(b2);
  REQUIRE(d.prelinear);
  REQUIRE(d.filters.size() == 2);
  for (const Filter& f : d.filters)
    CHECK(quotient(b2, f).algebra.size == 2);
  // intersection of the congruences is the diagonal
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = x + 1; y < 4; ++y) {
      bool separated = false;
      for (const Filter& f : d.filters)
        if (!congruence_of_filter(f).related(x, y)) separated = true;
      CHECK(separated);
    }
}

TEST_CASE("chains decompose trivially") {
  const FiniteAlgebra h3 = catalog_get("H3");
  const ChainDecomposition d = chain_decomposition(h3);
  REQUIRE(d.prelinear);
  REQUIRE(d.filters.size() == 1);
  CHECK(d.filters[0].members == set_single(2));
}

TEST_CASE("chain decomposition of a product of distinct chains") {
  const FiniteAlgebra p =
      direct_product(catalog_get("H3"), catalog_get("L3"));
  const ChainDecomposition d = chain_decomposition(p);
  REQUIRE(d.prelinear);
  CHECK(d.filters.size() >= 2);
  for (const Filter& f : d.filters)
    CHECK(OrderRelation::from_meet(quotient(p, f).algebra.meet).is_total());
  for (Elem x = 0; x < p.size; ++x)
    for (Elem y = x + 1; y < p.size; ++y) {
      bool separated = false;
      for (const Filter& f : d.filters)
        if (!congruence_of_filter(f).related(x, y)) separated = true;
      CHECK(separated);
    }
}

TEST_CASE("non-prelinear input yields the violating pair") {
  const ChainDecomposition d = chain_decomposition(pentagon_heyting());
  CHECK_FALSE(d.prelinear);
  CHECK(d.witness == std::make_pair(1, 2));
}

TEST_CASE("congruence extension property on the named algebras") {
  CHECK(cep_check(catalog_get("H4")).holds);
  CHECK(cep_check(catalog_get("I6")).holds);
  CHECK(cep_check(pentagon_heyting()).holds);
}

TEST_CASE("radical facts across small pools") {
  std::vector<FiniteAlgebra> pool = {catalog_get("2"),  catalog_get("H3"),
                                     catalog_get("H4"), catalog_get("I4"),
                                     catalog_get("I6"), catalog_get("L3"),
                                     boolean_cube(2),   nm_chain(5),
                                     godel_chain(5),    lukasiewicz_chain(5)};
  for (int n = 2; n <= 4; ++n)
    for (auto& a : enumerate_algebras(n)) pool.push_back(std::move(a));

  for (const auto& a : pool) {
    CAPTURE(a.name);
    const RadicalReport r = radical_report(a);
    // dense set sits inside the radical
    CHECK((r.dense.members & r.radical.members) == r.dense.members);
    REQUIRE(r.principal_unity.has_value());
    const Elem p = *r.principal_unity;

    // radical members all map x -> ~p back to ~p
    const Elem np = a.neg(p);
    for (Elem x : r.radical.member_list()) CHECK(a.imp(x, np) == np);

    const VarietyProfile prof = classify(a);
    if (prof.has(Variety::SRL)) {
      CHECK(r.radical_dense);
      // only bot is nilpotent
      for (Elem x = 0; x < a.size; ++x)
        if (x != a.bot) CHECK_FALSE(is_nilpotent(a, x));
    }
    if (prof.has(Variety::MTL))
      for (Elem e = 0; e < a.size; ++e)
        if (is_unity(a, e)) CHECK(a.lt(a.neg(e), e));
    if (prof.has(Variety::PiSMTL))
      for (Elem x = 0; x < a.size; ++x)
        if (x != a.top && is_idempotent(a, x)) CHECK_FALSE(is_dense(a, x));

    // non-semisimple radical-dense algebras embed the three-element chain
    // on {bot, principal unity, top}
    if (!r.semisimple && r.radical_dense) {
      const auto sub = subalgebra_generated(
          a, set_add(set_add(set_single(a.bot), p), a.top));
      CHECK(sub.algebra.size == 3);
      CHECK(is_isomorphic(sub.algebra, catalog_get("H3")).isomorphic);
    }
  }
}

TEST_CASE("simple WNM algebras match the coatom case analysis") {
  std::vector<FiniteAlgebra> pool;
  for (int n = 3; n <= 5; ++n)
    for (auto& a : enumerate_algebras(n)) pool.push_back(std::move(a));
  for (int n = 3; n <= 8; ++n) pool.push_back(ordinal_wnm(n));

  for (const auto& a : pool) {
    if (!classify(a).has(Variety::WNM) || !simplicity_report(a).simple)
      continue;
    CAPTURE(a.name);
    const auto cs = coatoms(a);
    REQUIRE(cs.size() == 1);
    const Elem u = cs[0];
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y) {
        if (x == a.top)
          CHECK(a.prod(x, y) == y);
        else if (y == a.top)
          CHECK(a.prod(x, y) == x);
        else
          CHECK(a.prod(x, y) == a.bot);
        if (a.leq(x, y))
          CHECK(a.imp(x, y) == a.top);
        else if (x == a.top)
          CHECK(a.imp(x, y) == y);
        else
          CHECK(a.imp(x, y) == u);
      }
  }
}

TEST_CASE("radical quotient preserves monomorphisms on catalog instances") {
  // Desk-scale reflector check: a mono A -> B induces an injection
  // A/Rad(A) -> B/Rad(B).
  const std::vector<FiniteAlgebra> pool = {
      catalog_get("2"), catalog_get("H3"), catalog_get("H4"),
      catalog_get("I4"), catalog_get("L3"), nm_chain(6)};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const QuotientResult qa = quotient(a, radical_report(a).radical);
      const QuotientResult qb = quotient(b, radical_report(b).radical);
      for (const Morphism& f : embeddings(a, b)) {
        std::vector<int> image(qa.algebra.size, -1);
        bool injective = true;
        for (Elem x = 0; x < a.size; ++x) {
          const int src = qa.projection[x];
          const int dst = qb.projection[f.map[x]];
          if (image[src] == -1)
            image[src] = dst;
          else if (image[src] != dst)
            injective = false;
        }
        for (int s1 = 0; s1 < qa.algebra.size; ++s1)
          for (int s2 = s1 + 1; s2 < qa.algebra.size; ++s2)
            if (image[s1] == image[s2]) injective = false;
        CAPTURE(a.name);
        CAPTURE(b.name);
        CHECK(injective);
      }
    }
}
