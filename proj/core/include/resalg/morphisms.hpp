#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resalg/algebra.hpp"

namespace resalg {

/// A total map between carriers. Instances produced by the search functions
/// preserve all operations of the common signature and the constants (top,
/// plus bot when the signature has one).
struct Morphism {
  const FiniteAlgebra* source = nullptr;
  const FiniteAlgebra* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool is_mono() const;
  std::string to_string() const;
};

/// Full homomorphism check, used as the brute-force oracle and for spot
/// verification of search output.
bool is_homomorphism(const Morphism& f);

enum class SearchMode { All, Mono, Iso, Count, Exists };

struct SearchConstraint {
  std::vector<std::pair<Elem, Elem>> pins;  // source index -> target index
  SearchMode mode = SearchMode::All;
};

struct SearchResult {
  std::vector<Morphism> morphisms;  // lexicographic map order
  long long count = 0;
  bool exists = false;
};

/// Backtracking homomorphism search. The partial map is extended in carrier
/// index order; assigning f(a) propagates the images of a*b, a->b, b->a (and
/// meets/joins) against every already-mapped b before any further branching.
/// Root branches may run on worker threads; results merge by branch rank so
/// output order equals the sequential lexicographic order.
/// Throws std::invalid_argument on signature mismatch or inconsistent pins.
SearchResult homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           const SearchConstraint& constraint = {});

std::vector<Morphism> embeddings(const FiniteAlgebra& a,
                                 const FiniteAlgebra& b);

struct IsoResult {
  bool isomorphic = false;
  Morphism witness;
};

IsoResult is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct RetractResult {
  bool retract = false;
  Morphism embedding;   // g : B -> A
  Morphism retraction;  // f : A -> B with f(g(x)) = x
};

/// Whether b is a retract of a; returns the first witness pair in canonical
/// search order.
RetractResult is_retract_of(const FiniteAlgebra& b, const FiniteAlgebra& a);

struct AbsoluteRetractResult {
  bool holds = false;
  int failing_member = -1;    // index into the class
  Morphism failing_embedding; // embedding with no matching retraction
};

/// Relative absolute-retract test: for every member C of the class and every
/// embedding g : a -> C there must be f : C -> a with f(g(x)) = x. A positive
/// answer is only meaningful relative to the supplied class.
AbsoluteRetractResult is_absolute_retract_relative(
    const FiniteAlgebra& a, const std::vector<const FiniteAlgebra*>& cls);

struct InjectivityResult {
  bool holds = false;
  int b_index = -1;  // failing triple: mono b_index -> c_index, hom b -> a
  int c_index = -1;
  Morphism mono;
  Morphism hom;
};

/// Relative injectivity: every hom B -> a extends along every mono B -> C,
/// quantified over members B, C of the class.
InjectivityResult is_injective_relative(
    const FiniteAlgebra& a, const std::vector<const FiniteAlgebra*>& cls);

/// Every hom from a subalgebra of a into a extends to an endomorphism.
bool is_self_injective(const FiniteAlgebra& a);

/// The identity is the only automorphism.
bool is_rigid(const FiniteAlgebra& a);

/// Every subalgebra is simple.
bool is_hereditarily_simple(const FiniteAlgebra& a);

struct MaximumSimpleResult {
  bool found = false;
  int index = -1;  // member embedding all simple members
  // When absent: a pair of simple members with no common embedding target in
  // the class, if such a pair exists.
  std::optional<std::pair<int, int>> certificate;
};

/// Looks for a simple member of the class into which every simple member
/// embeds. Mutually-embeddable finite candidates are isomorphic, so the
/// answer is unique up to isomorphism when it exists.
MaximumSimpleResult maximum_simple(const std::vector<const FiniteAlgebra*>& cls);

}  // namespace resalg
