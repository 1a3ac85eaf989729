#include "resalg/varieties.hpp"

#include <stdexcept>

namespace resalg {

std::string to_string(EquationId eq) {
  switch (eq) {
    case EquationId::PRELIN: return "PRELIN";
    case EquationId::S: return "S";
    case EquationId::W: return "W";
    case EquationId::PI: return "PI";
    case EquationId::B: return "B";
    case EquationId::INV: return "INV";
    case EquationId::GODEL: return "GODEL";
    case EquationId::DIST: return "DIST";
    case EquationId::T: return "T";
  }
  return "?";
}

std::string to_string(Variety v) {
  switch (v) {
    case Variety::RL: return "RL";
    case Variety::DRL: return "DRL";
    case Variety::GM: return "GM";
    case Variety::DGM: return "DGM";
    case Variety::MTL: return "MTL";
    case Variety::WNM: return "WNM";
    case Variety::IMTL: return "IMTL";
    case Variety::NM: return "NM";
    case Variety::SMTL: return "SMTL";
    case Variety::PiSMTL: return "PiSMTL";
    case Variety::BL: return "BL";
    case Variety::MV: return "MV";
    case Variety::PROD: return "PROD";
    case Variety::HL: return "HL";
    case Variety::SRL: return "SRL";
    case Variety::HEYTING: return "HEYTING";
    case Variety::BA: return "BA";
    case Variety::HOOP: return "HOOP";
    case Variety::WAJSBERG_HOOP: return "WAJSBERG_HOOP";
    case Variety::BOUNDED_HOOP: return "BOUNDED_HOOP";
  }
  return "?";
}

std::vector<EquationId> all_equations() {
  return {EquationId::PRELIN, EquationId::S,     EquationId::W,
          EquationId::PI,     EquationId::B,     EquationId::INV,
          EquationId::GODEL,  EquationId::DIST,  EquationId::T};
}

std::optional<EquationId> equation_from_string(const std::string& text) {
  for (EquationId eq : all_equations())
    if (to_string(eq) == text) return eq;
  return std::nullopt;
}

std::optional<Variety> variety_from_string(const std::string& text) {
  static const Variety all[] = {
      Variety::RL,   Variety::DRL,    Variety::GM,     Variety::DGM,
      Variety::MTL,  Variety::WNM,    Variety::IMTL,   Variety::NM,
      Variety::SMTL, Variety::PiSMTL, Variety::BL,     Variety::MV,
      Variety::PROD, Variety::HL,     Variety::SRL,    Variety::HEYTING,
      Variety::BA,   Variety::HOOP,   Variety::WAJSBERG_HOOP,
      Variety::BOUNDED_HOOP};
  for (Variety v : all)
    if (to_string(v) == text) return v;
  return std::nullopt;
}

bool equation_applicable(Signature sig, EquationId eq) {
  const bool has_join = signature_has_join(sig);
  const bool has_bot = signature_has_bot(sig);
  switch (eq) {
    case EquationId::PRELIN: return has_join;
    case EquationId::W: return has_join;
    case EquationId::DIST: return has_join;
    case EquationId::S: return has_bot;
    case EquationId::PI: return has_bot;
    case EquationId::INV: return has_bot;
    case EquationId::B: return true;
    case EquationId::GODEL: return true;
    case EquationId::T: return true;
  }
  return false;
}

namespace {

int equation_arity(EquationId eq) {
  switch (eq) {
    case EquationId::S:
    case EquationId::INV:
      return 1;
    case EquationId::PI:
    case EquationId::DIST:
      return 3;
    default:
      return 2;
  }
}

bool eval_equation(const FiniteAlgebra& a, EquationId eq, Elem x, Elem y,
                   Elem z) {
  switch (eq) {
    case EquationId::PRELIN:
      return a.join(a.imp(x, y), a.imp(y, x)) == a.top;
    case EquationId::S:
      return a.meet(x, a.neg(x)) == a.bot;
    case EquationId::W:
      return a.join(a.neg(a.prod(x, y)),
                    a.imp(a.meet(x, y), a.prod(x, y))) == a.top;
    case EquationId::PI: {
      const Elem lhs = a.prod(a.neg(a.neg(z)),
                              a.imp(a.prod(x, z), a.prod(y, z)));
      return a.imp(lhs, a.imp(x, y)) == a.top;
    }
    case EquationId::B:
      return a.prod(x, a.imp(x, y)) == a.meet(x, y);
    case EquationId::INV:
      return a.neg(a.neg(x)) == x;
    case EquationId::GODEL:
      return a.prod(x, y) == a.meet(x, y);
    case EquationId::DIST:
      return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z));
    case EquationId::T:
      return a.imp(a.imp(x, y), y) == a.imp(a.imp(y, x), x);
  }
  return false;
}

}  // namespace

EquationCheck holds_equation(const FiniteAlgebra& a, EquationId eq) {
  if (!equation_applicable(a.signature, eq))
    throw std::invalid_argument("equation " + to_string(eq) +
                                " not applicable to signature " +
                                to_string(a.signature));
  const int arity = equation_arity(eq);
  const int n = a.size;
  if (arity == 1) {
    for (Elem x = 0; x < n; ++x)
      if (!eval_equation(a, eq, x, 0, 0)) return {false, {x}};
  } else if (arity == 2) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!eval_equation(a, eq, x, y, 0)) return {false, {x, y}};
  } else {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (!eval_equation(a, eq, x, y, z)) return {false, {x, y, z}};
  }
  return {true, {}};
}

bool is_linearly_ordered(const FiniteAlgebra& a) {
  return OrderRelation::from_meet(a.meet).is_total();
}

bool VarietyProfile::flag(EquationId eq) const {
  auto it = equation_flags.find(eq);
  return it != equation_flags.end() && it->second;
}

VarietyProfile classify(const FiniteAlgebra& a) {
  VarietyProfile p;
  for (EquationId eq : all_equations())
    if (equation_applicable(a.signature, eq))
      p.equation_flags[eq] = holds_equation(a, eq).holds;
  p.linearly_ordered = is_linearly_ordered(a);

  auto& m = p.memberships;
  if (a.signature == Signature::ResiduatedLattice) {
    m.insert(Variety::RL);
    if (p.flag(EquationId::DIST)) m.insert(Variety::DRL);
    if (p.flag(EquationId::INV)) m.insert(Variety::GM);
    if (p.flag(EquationId::INV) && p.flag(EquationId::DIST))
      m.insert(Variety::DGM);
    if (p.flag(EquationId::PRELIN)) m.insert(Variety::MTL);
    if (p.flag(EquationId::S)) m.insert(Variety::SRL);
    if (p.flag(EquationId::GODEL)) m.insert(Variety::HEYTING);
    if (m.count(Variety::HEYTING) && p.flag(EquationId::INV))
      m.insert(Variety::BA);
    if (m.count(Variety::MTL)) {
      if (p.flag(EquationId::W)) m.insert(Variety::WNM);
      if (p.flag(EquationId::INV)) m.insert(Variety::IMTL);
      if (m.count(Variety::WNM) && p.flag(EquationId::INV))
        m.insert(Variety::NM);
      if (p.flag(EquationId::S)) m.insert(Variety::SMTL);
      if (m.count(Variety::SMTL) && p.flag(EquationId::PI))
        m.insert(Variety::PiSMTL);
      if (p.flag(EquationId::B)) m.insert(Variety::BL);
      if (m.count(Variety::BL) && p.flag(EquationId::INV))
        m.insert(Variety::MV);
      if (m.count(Variety::PiSMTL) && p.flag(EquationId::B))
        m.insert(Variety::PROD);
      if (m.count(Variety::BL) && p.flag(EquationId::GODEL))
        m.insert(Variety::HL);
    }
  } else {
    m.insert(Variety::HOOP);
    if (p.flag(EquationId::T)) m.insert(Variety::WAJSBERG_HOOP);
    if (a.signature == Signature::BoundedHoop) m.insert(Variety::BOUNDED_HOOP);
  }
  return p;
}

}  // namespace resalg
