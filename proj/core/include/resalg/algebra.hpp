#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resalg {

/// Carrier elements are indices 0..n-1.
using Elem = int;

/// Subsets of a carrier as bitmasks; carriers handled by the set-based
/// machinery (filters, subalgebras) are capped at 64 elements.
using ElemSet = std::uint64_t;

constexpr int kMaxSetSize = 64;

inline bool set_contains(ElemSet s, Elem x) { return (s >> x) & 1u; }
inline ElemSet set_add(ElemSet s, Elem x) { return s | (ElemSet{1} << x); }
inline ElemSet set_single(Elem x) { return ElemSet{1} << x; }
inline ElemSet set_full(int n) {
  return n >= 64 ? ~ElemSet{0} : (ElemSet{1} << n) - 1;
}
int set_size(ElemSet s);
std::vector<Elem> set_to_vector(ElemSet s);
ElemSet set_from_vector(const std::vector<Elem>& xs);
std::string set_to_string(ElemSet s);

enum class Signature { ResiduatedLattice, Hoop, BoundedHoop };

std::string to_string(Signature sig);
std::optional<Signature> signature_from_string(const std::string& text);
bool signature_has_bot(Signature sig);
bool signature_has_join(Signature sig);

/// Square operation table over carrier indices, row = left operand.
class Table {
 public:
  Table() = default;
  explicit Table(int n, Elem fill = 0) : n_(n), cells_(n * n, fill) {}
  static Table from_rows(const std::vector<std::vector<Elem>>& rows);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  Elem operator()(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  Elem& at(Elem x, Elem y) { return cells_[x * n_ + y]; }
  const std::vector<Elem>& cells() const { return cells_; }

  /// Entries all within 0..n-1.
  bool well_formed() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  int n_ = 0;
  std::vector<Elem> cells_;
};

/// Reflexive partial-order relation on 0..n-1.
class OrderRelation {
 public:
  OrderRelation() = default;
  explicit OrderRelation(int n) : n_(n), rel_(n * n, 0) {
    for (Elem x = 0; x < n; ++x) set(x, x, true);
  }
  static OrderRelation from_meet(const Table& meet);
  static OrderRelation chain(int n);

  int size() const { return n_; }
  bool leq(Elem x, Elem y) const { return rel_[x * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  void set(Elem x, Elem y, bool v) { rel_[x * n_ + y] = v ? 1 : 0; }

  bool is_partial_order() const;  // antisymmetric + transitive
  bool is_total() const;

  /// Greatest lower / least upper bound if it exists.
  std::optional<Elem> meet_of(Elem x, Elem y) const;
  std::optional<Elem> join_of(Elem x, Elem y) const;

 private:
  int n_ = 0;
  std::vector<char> rel_;
};

/// A finite algebra in one of the three supported signatures. The carrier is
/// 0..size-1; by convention constructors and the loader keep bot at 0 and top
/// at size-1. For hoop signatures the meet table is derived from prod/imp,
/// and join is not stored. Values are immutable after validation; every
/// operation in the library treats them as read-only.
struct FiniteAlgebra {
  int size = 0;
  Signature signature = Signature::ResiduatedLattice;
  Table meet;
  Table join;  // empty for hoop signatures
  Table prod;
  Table imp;
  Elem bot = 0;  // meaningless for Signature::Hoop
  Elem top = 0;
  std::string name;

  bool has_bot() const { return signature_has_bot(signature); }
  bool has_join() const { return signature_has_join(signature); }
  bool trivial() const { return size == 1; }

  bool leq(Elem x, Elem y) const { return meet(x, y) == x; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem neg(Elem x) const { return imp(x, bot); }
  Elem power(Elem x, int k) const;

  /// Structural equality of everything except the name.
  bool same_tables(const FiniteAlgebra& other) const;
};

/// Recomputes the derived meet x*(x->y) of a hoop-signature algebra.
void refresh_hoop_meet(FiniteAlgebra& a);

struct AxiomViolation {
  std::string axiom;           // e.g. "modus-ponens", "residuation"
  std::vector<Elem> witness;   // offending tuple, empty for global facts
  std::string detail;
};

struct ValidationReport {
  bool structural_ok = true;
  std::vector<std::string> structural_errors;
  std::vector<AxiomViolation> violations;

  bool valid() const { return structural_ok && violations.empty(); }
  bool has_axiom(const std::string& axiom) const;
  std::string summary() const;
};

/// Checks every axiom of the declared signature and reports all violations.
/// Malformed tables (wrong dimensions, out-of-range entries) are reported as
/// structural errors and no axiom checks run.
ValidationReport validate_axioms(const FiniteAlgebra& candidate);

/// First-failure variant used by mutation batteries.
bool passes_axioms(const FiniteAlgebra& candidate);

struct ResidualResult {
  bool residuated = false;
  Table imp;
  std::pair<Elem, Elem> failure{-1, -1};  // pair with no maximum divisor
};

/// Computes imp(x,y) = max { z : z*x <= y } for every pair, or reports the
/// first pair (in lex order) where the maximum does not exist.
ResidualResult derive_residual(const OrderRelation& order, const Table& prod);

struct ElementProfile {
  Elem element = 0;
  std::optional<Elem> negation;          // absent without bot
  Elem stable_power = 0;                 // x^m once powers stabilize
  std::optional<int> nilpotence_order;   // least k with x^k = bot, if any
  bool idempotent = false;
  std::optional<bool> dense;             // absent without bot
  std::optional<bool> unity;             // absent without bot
  bool coatom = false;
};

ElementProfile element_profile(const FiniteAlgebra& a, Elem x);

/// Elements strictly below top with nothing in between.
std::vector<Elem> coatoms(const FiniteAlgebra& a);

bool is_nilpotent(const FiniteAlgebra& a, Elem x);
bool is_unity(const FiniteAlgebra& a, Elem x);
bool is_dense(const FiniteAlgebra& a, Elem x);
bool is_idempotent(const FiniteAlgebra& a, Elem x);

}  // namespace resalg
