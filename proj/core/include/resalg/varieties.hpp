#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "resalg/algebra.hpp"

namespace resalg {

enum class EquationId { PRELIN, S, W, PI, B, INV, GODEL, DIST, T };

enum class Variety {
  RL, DRL, GM, DGM, MTL, WNM, IMTL, NM, SMTL, PiSMTL, BL, MV, PROD, HL,
  SRL, HEYTING, BA, HOOP, WAJSBERG_HOOP, BOUNDED_HOOP,
};

std::string to_string(EquationId eq);
std::string to_string(Variety v);
std::optional<EquationId> equation_from_string(const std::string& text);
std::optional<Variety> variety_from_string(const std::string& text);
std::vector<EquationId> all_equations();

/// Whether the equation can even be stated in the given signature
/// (e.g. PRELIN needs a join, S needs a negation).
bool equation_applicable(Signature sig, EquationId eq);

struct EquationCheck {
  bool holds = false;
  std::vector<Elem> witness;  // lexicographically least violating tuple
};

/// Evaluates the named equation over all tuples of a valid algebra.
/// Throws std::invalid_argument when the equation does not apply to the
/// algebra's signature.
EquationCheck holds_equation(const FiniteAlgebra& a, EquationId eq);

struct VarietyProfile {
  std::map<EquationId, bool> equation_flags;  // applicable equations only
  std::set<Variety> memberships;
  bool linearly_ordered = false;

  bool has(Variety v) const { return memberships.count(v) != 0; }
  bool flag(EquationId eq) const;
};

/// Full equation scan plus the membership closure rules. Residuated-lattice
/// inputs get the lattice-side varieties, hoop inputs the hoop-side ones.
VarietyProfile classify(const FiniteAlgebra& a);

bool is_linearly_ordered(const FiniteAlgebra& a);

}  // namespace resalg
