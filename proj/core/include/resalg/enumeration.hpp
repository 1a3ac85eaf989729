#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "resalg/algebra.hpp"
#include "resalg/varieties.hpp"

namespace resalg {

/// Byte string identifying an isomorphism class: the table encoding under
/// the minimizing relabeling that fixes the constants.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalForm {
  CanonicalKey key;
  FiniteAlgebra algebra;  // relabeled representative
};

/// Brute-force canonical labeling over all permutations fixing bot and top;
/// two algebras have equal keys iff they are isomorphic. Bounded to small
/// carriers (permutation count (n-2)! for lattices).
CanonicalForm canonical_form(const FiniteAlgebra& a);
CanonicalKey canonical_key(const FiniteAlgebra& a);

struct EnumerationFilter {
  std::set<Variety> require_memberships;
  bool require_chain = false;
};

/// One representative per isomorphism class of the given size and signature,
/// sorted by canonical key. Residuated lattices are generated lattice-first:
/// bounded lattice orders, then commutative order-monotone monoid tables with
/// top identity, gated by residual existence; hoops are generated from their
/// monoids via the divisibility order. Supported sizes: general lattices up
/// to 6, chains up to 8, hoops up to 5.
std::vector<FiniteAlgebra> enumerate_algebras(
    int n, Signature sig = Signature::ResiduatedLattice,
    const EnumerationFilter& filter = {});

struct CountCrossCheck {
  long long count_a = 0;  // lattice-first (order-first for hoops)
  long long count_b = 0;  // monoid-first
  bool agree = false;
};

/// Runs two independent enumeration strategies and compares the resulting
/// isomorphism-class counts.
CountCrossCheck count_crosscheck(int n,
                                 Signature sig = Signature::ResiduatedLattice);

/// Bounded lattice orders on labeled points (bot = 0, top = n-1); exposed for
/// the oracle tests.
std::vector<OrderRelation> enumerate_bounded_lattices(int n);

}  // namespace resalg
