#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resalg/algebra.hpp"
#include "resalg/morphisms.hpp"

namespace resalg {

/// Componentwise product on the |a|*|b| carrier (row-major pairing, so bot
/// lands on 0 and top on the last index). Throws on signature mismatch.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct SubalgebraResult {
  FiniteAlgebra algebra;
  std::vector<Elem> elements;  // ambient indices, ascending
  Morphism inclusion;          // valid while the ambient algebra lives
};

/// Least subuniverse containing seed plus the constants, returned with the
/// inclusion map. Element order is ascending, which keeps bot/top canonical.
SubalgebraResult subalgebra_generated(const FiniteAlgebra& a, ElemSet seed);

/// Every operation-closed subset containing the constants, ascending by
/// bitmask.
std::vector<ElemSet> all_subalgebras(const FiniteAlgebra& a);

struct DiamondResult {
  FiniteAlgebra algebra;
  Morphism diagonal;                        // a -> (a,a)
  std::vector<std::pair<Elem, Elem>> pairs; // carrier index -> order pair
};

/// The order-pair extension on {(a,b) : a <= b}, pairs sorted by (second,
/// first) so the bottom pair is index 0 and the top pair is last. Requires a
/// residuated-lattice input.
DiamondResult diamond(const FiniteAlgebra& a);

/// Named algebras. Fixed names: "2", "H3", "H4", "I4", "I6", "L3";
/// parameterized families: "bool:k", "luk:n", "godel:n", "nm:n", "ordwnm:n".
/// Throws std::invalid_argument for unknown names or sizes below 2.
FiniteAlgebra catalog_get(const std::string& name);
std::vector<std::string> catalog_list();

FiniteAlgebra boolean_cube(int atoms);
FiniteAlgebra lukasiewicz_chain(int n);
FiniteAlgebra godel_chain(int n);
FiniteAlgebra nm_chain(int n);
FiniteAlgebra ordinal_wnm(int n);
FiniteAlgebra trivial_algebra();

/// Drops the lattice tables of a residuated lattice, leaving the (bounded)
/// hoop reduct with its derived meet.
FiniteAlgebra hoop_reduct(const FiniteAlgebra& a, bool keep_bot);

/// Expands a bounded hoop by its derived join (x->y)->y. The result only
/// validates when the hoop is a Wajsberg hoop (e.g. any simple bounded hoop).
FiniteAlgebra rl_from_bounded_hoop(const FiniteAlgebra& h);

struct TestWitness {
  bool found = false;
  Elem eps = -1;
  Elem t = -1;
  bool radical_dense = false;  // reported alongside, not required
};

/// Obstruction configuration for non-semisimple injectives: idempotent
/// eps < top and t < eps, both in the radical, with eps->t <= eps. Returns
/// the least witness pair in index order.
TestWitness is_test_d(const FiniteAlgebra& a);

/// Involutive variant: {0, ~eps, eps, 1} must be a subalgebra isomorphic to
/// the four-element involutive chain, with some radical t < eps.
TestWitness is_test_I(const FiniteAlgebra& a);

}  // namespace resalg
