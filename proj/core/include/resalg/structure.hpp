#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resalg/algebra.hpp"

namespace resalg {

/// An implicative filter: contains top, upward closed, closed under prod.
struct Filter {
  const FiniteAlgebra* algebra = nullptr;
  ElemSet members = 0;

  bool contains(Elem x) const { return set_contains(members, x); }
  bool proper() const;
  std::vector<Elem> member_list() const { return set_to_vector(members); }
};

bool is_filter(const FiniteAlgebra& a, ElemSet candidate);

/// Least filter containing the seed: upward closure of the prod-closure of
/// seed + {top}. May be improper.
Filter filter_generated(const FiniteAlgebra& a, ElemSet seed);

/// All implicative filters (or only the maximal proper ones), sorted by
/// member-set bitmask. Grown from {top} by one-element extensions with
/// memoization rather than scanning all subsets.
std::vector<Filter> all_filters(const FiniteAlgebra& a,
                                bool maximal_only = false);

/// A partition of the carrier compatible with all operations. Blocks use the
/// canonical numbering: bot's block first, top's block last, the rest ordered
/// by least member.
struct CongruencePartition {
  const FiniteAlgebra* algebra = nullptr;
  std::vector<int> block_of;
  int block_count = 0;

  bool related(Elem x, Elem y) const { return block_of[x] == block_of[y]; }
};

/// theta_F: x ~ y iff x->y and y->x are both in F.
CongruencePartition congruence_of_filter(const Filter& f);

/// The block of top, inverse to congruence_of_filter.
Filter filter_of(const CongruencePartition& theta);

/// Independent congruence enumeration (all set partitions, compatibility
/// checked directly); the oracle side of the filter<->congruence bijection.
std::vector<CongruencePartition> all_congruences(const FiniteAlgebra& a);

struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<Elem> projection;  // element -> block index in the quotient
};

/// A/F with blocks relabeled canonically; the projection is verified to be a
/// homomorphism.
QuotientResult quotient(const FiniteAlgebra& a, const Filter& f);

struct RadicalReport {
  Filter radical;
  Filter dense;
  std::optional<Elem> principal_unity;
  bool semisimple = false;
  bool radical_dense = false;  // radical == dense set
};

/// Radical machinery. The radical is computed both as the intersection of the
/// maximal proper filters and as the set of unity elements; disagreement is
/// an internal bug and throws std::logic_error.
RadicalReport radical_report(const FiniteAlgebra& a);

struct SimplicityReport {
  bool simple = false;
  bool hereditarily_simple = false;
};

/// Simplicity decided two ways (exactly two filters / every non-top element
/// nilpotent) and cross-checked; mismatch throws std::logic_error.
SimplicityReport simplicity_report(const FiniteAlgebra& a);

struct ChainDecomposition {
  bool prelinear = false;
  std::vector<Filter> filters;        // each quotient linearly ordered
  std::pair<Elem, Elem> witness{-1, -1};  // prelinearity violation otherwise
};

/// Subdirect-representation witness: filters with linearly ordered quotients
/// whose congruences intersect to the diagonal, chosen greedily by pair
/// coverage (family size is small but not guaranteed minimal).
ChainDecomposition chain_decomposition(const FiniteAlgebra& a);

struct CepResult {
  bool holds = false;
  ElemSet subalgebra = 0;  // witness on failure
  ElemSet filter = 0;      // subalgebra filter with no extension
};

/// Congruence extension property: every filter of every subalgebra is the
/// trace of a filter of the whole algebra.
CepResult cep_check(const FiniteAlgebra& a);

}  // namespace resalg
