#include "resalg/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace resalg {

int set_size(ElemSet s) { return std::popcount(s); }

std::vector<Elem> set_to_vector(ElemSet s) {
  std::vector<Elem> out;
  for (Elem x = 0; s != 0; ++x, s >>= 1)
    if (s & 1u) out.push_back(x);
  return out;
}

ElemSet set_from_vector(const std::vector<Elem>& xs) {
  ElemSet s = 0;
  for (Elem x : xs) s = set_add(s, x);
  return s;
}

std::string set_to_string(ElemSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Elem x : set_to_vector(s)) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(Signature sig) {
  switch (sig) {
    case Signature::ResiduatedLattice: return "rl";
    case Signature::Hoop: return "hoop";
    case Signature::BoundedHoop: return "bounded_hoop";
  }
  return "?";
}

std::optional<Signature> signature_from_string(const std::string& text) {
  if (text == "rl") return Signature::ResiduatedLattice;
  if (text == "hoop") return Signature::Hoop;
  if (text == "bounded_hoop") return Signature::BoundedHoop;
  return std::nullopt;
}

bool signature_has_bot(Signature sig) { return sig != Signature::Hoop; }

bool signature_has_join(Signature sig) {
  return sig == Signature::ResiduatedLattice;
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  Table t(static_cast<int>(rows.size()));
  for (int i = 0; i < t.n_; ++i) {
    if (static_cast<int>(rows[i].size()) != t.n_)
      throw std::invalid_argument("table row has wrong length");
    for (int j = 0; j < t.n_; ++j) t.at(i, j) = rows[i][j];
  }
  return t;
}

bool Table::well_formed() const {
  for (Elem v : cells_)
    if (v < 0 || v >= n_) return false;
  return static_cast<int>(cells_.size()) == n_ * n_;
}

OrderRelation OrderRelation::from_meet(const Table& meet) {
  OrderRelation r(meet.size());
  for (Elem x = 0; x < meet.size(); ++x)
    for (Elem y = 0; y < meet.size(); ++y)
      r.set(x, y, meet(x, y) == x);
  return r;
}

OrderRelation OrderRelation::chain(int n) {
  OrderRelation r(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) r.set(x, y, true);
  return r;
}

bool OrderRelation::is_partial_order() const {
  for (Elem x = 0; x < n_; ++x) {
    if (!leq(x, x)) return false;
    for (Elem y = 0; y < n_; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) return false;
      for (Elem z = 0; z < n_; ++z)
        if (leq(x, y) && leq(y, z) && !leq(x, z)) return false;
    }
  }
  return true;
}

bool OrderRelation::is_total() const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

std::optional<Elem> OrderRelation::meet_of(Elem x, Elem y) const {
  std::optional<Elem> best;
  for (Elem z = 0; z < n_; ++z) {
    if (!leq(z, x) || !leq(z, y)) continue;
    if (!best || leq(*best, z)) {
      // candidate must dominate every lower bound seen so far; recheck below
      best = z;
    }
  }
  if (!best) return std::nullopt;
  for (Elem z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, *best)) return std::nullopt;
  return best;
}

std::optional<Elem> OrderRelation::join_of(Elem x, Elem y) const {
  std::optional<Elem> best;
  for (Elem z = 0; z < n_; ++z) {
    if (!leq(x, z) || !leq(y, z)) continue;
    if (!best || leq(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (Elem z = 0; z < n_; ++z)
    if (leq(x, z) && leq(y, z) && !leq(*best, z)) return std::nullopt;
  return best;
}

Elem FiniteAlgebra::power(Elem x, int k) const {
  Elem acc = top;  // x^0 = 1
  for (int i = 0; i < k; ++i) acc = prod(acc, x);
  return acc;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return size == other.size && signature == other.signature &&
         meet == other.meet && join == other.join && prod == other.prod &&
         imp == other.imp && (!has_bot() || bot == other.bot) &&
         top == other.top;
}

void refresh_hoop_meet(FiniteAlgebra& a) {
  a.meet = Table(a.size);
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < a.size; ++y) a.meet.at(x, y) = a.prod(x, a.imp(x, y));
}

bool ValidationReport::has_axiom(const std::string& axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (valid()) return "valid";
  for (const auto& e : structural_errors) os << "structural: " << e << '\n';
  for (const auto& v : violations) {
    os << "axiom " << v.axiom << " violated";
    if (!v.witness.empty()) {
      os << " at (";
      for (size_t i = 0; i < v.witness.size(); ++i)
        os << (i ? "," : "") << v.witness[i];
      os << ')';
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

// Shared axiom walker. With stop_early set it gives up after the first
// violation, which is what the mutation batteries want.
class Checker {
 public:
  Checker(const FiniteAlgebra& a, bool stop_early)
      : a_(a), stop_early_(stop_early) {}

  ValidationReport run() {
    if (!structural()) return std::move(report_);
    monoid();
    if (done()) return std::move(report_);
    if (a_.signature == Signature::ResiduatedLattice) {
      lattice();
      if (done()) return std::move(report_);
      rl_axioms();
      if (done()) return std::move(report_);
      residuation();
    } else {
      hoop_axioms();
      if (done()) return std::move(report_);
      derived_meet();
      if (a_.signature == Signature::BoundedHoop && !done()) bounded();
    }
    return std::move(report_);
  }

 private:
  bool done() const { return stop_early_ && !report_.violations.empty(); }

  void add(std::string axiom, std::vector<Elem> witness, std::string detail) {
    report_.violations.push_back(
        {std::move(axiom), std::move(witness), std::move(detail)});
  }

  bool structural() {
    const int n = a_.size;
    if (n <= 0) {
      report_.structural_ok = false;
      report_.structural_errors.push_back("size must be positive");
      return false;
    }
    auto check_table = [&](const Table& t, const char* name) {
      if (t.size() != n || !t.well_formed()) {
        report_.structural_ok = false;
        report_.structural_errors.push_back(
            std::string(name) + " table malformed (dimensions or range)");
      }
    };
    check_table(a_.meet, "meet");
    check_table(a_.prod, "prod");
    check_table(a_.imp, "imp");
    if (a_.has_join()) check_table(a_.join, "join");
    if (a_.top < 0 || a_.top >= n) {
      report_.structural_ok = false;
      report_.structural_errors.push_back("top out of range");
    }
    if (a_.has_bot() && (a_.bot < 0 || a_.bot >= n)) {
      report_.structural_ok = false;
      report_.structural_errors.push_back("bot out of range");
    }
    return report_.structural_ok;
  }

  void monoid() {
    const int n = a_.size;
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = x + 1; y < n; ++y)
        if (a_.prod(x, y) != a_.prod(y, x)) {
          add("monoid-commutative", {x, y}, "");
          if (done()) return;
        }
    for (Elem x = 0; x < n && !done(); ++x)
      if (a_.prod(a_.top, x) != x) {
        add("monoid-unit", {x}, "top*x != x");
        if (done()) return;
      }
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n && !done(); ++y)
        for (Elem z = 0; z < n; ++z)
          if (a_.prod(a_.prod(x, y), z) != a_.prod(x, a_.prod(y, z))) {
            add("monoid-associative", {x, y, z}, "");
            if (done()) return;
          }
  }

  void lattice() {
    const int n = a_.size;
    auto semilattice = [&](const Table& t, const char* prefix) {
      for (Elem x = 0; x < n && !done(); ++x) {
        if (t(x, x) != x) add(std::string(prefix) + "-idempotent", {x}, "");
        if (done()) return;
        for (Elem y = 0; y < n && !done(); ++y) {
          if (t(x, y) != t(y, x)) add(std::string(prefix) + "-commutative", {x, y}, "");
          if (done()) return;
          for (Elem z = 0; z < n; ++z)
            if (t(t(x, y), z) != t(x, t(y, z))) {
              add(std::string(prefix) + "-associative", {x, y, z}, "");
              if (done()) return;
            }
        }
      }
    };
    semilattice(a_.meet, "meet");
    if (done()) return;
    semilattice(a_.join, "join");
    if (done()) return;
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n; ++y) {
        if (a_.meet(x, a_.join(x, y)) != x) {
          add("absorption", {x, y}, "x&(x|y) != x");
          if (done()) return;
        }
        if (a_.join(x, a_.meet(x, y)) != x) {
          add("absorption", {x, y}, "x|(x&y) != x");
          if (done()) return;
        }
      }
    for (Elem x = 0; x < n && !done(); ++x) {
      if (a_.meet(a_.bot, x) != a_.bot) add("lattice-bounds", {x}, "bot not least");
      if (done()) return;
      if (a_.meet(x, a_.top) != x) add("lattice-bounds", {x}, "top not greatest");
    }
  }

  // Axioms 3-5 of the residuated-lattice definition, each entrywise.
  void rl_axioms() {
    const int n = a_.size;
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n && !done(); ++y)
        for (Elem z = 0; z < n; ++z)
          if (a_.imp(a_.prod(x, y), z) != a_.imp(x, a_.imp(y, z))) {
            add("exchange", {x, y, z}, "(x*y)->z != x->(y->z)");
            if (done()) return;
          }
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n; ++y) {
        const Elem mp = a_.prod(a_.imp(x, y), x);
        if (a_.meet(mp, y) != mp) {
          add("modus-ponens", {x, y}, "(x->y)*x not below y");
          if (done()) return;
        }
      }
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n; ++y)
        if (a_.imp(a_.meet(x, y), y) != a_.top) {
          add("implication-unit", {x, y}, "(x&y)->y != top");
          if (done()) return;
        }
  }

  void residuation() {
    const int n = a_.size;
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n && !done(); ++y)
        for (Elem z = 0; z < n; ++z) {
          const bool l = a_.leq(a_.prod(x, y), z);
          const bool r = a_.leq(x, a_.imp(y, z));
          if (l != r) {
            add("residuation", {x, y, z}, "x*y<=z iff x<=y->z fails");
            if (done()) return;
          }
        }
  }

  void hoop_axioms() {
    const int n = a_.size;
    for (Elem x = 0; x < n && !done(); ++x)
      if (a_.imp(x, x) != a_.top) {
        add("hoop-reflexive", {x}, "x->x != top");
        if (done()) return;
      }
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n; ++y)
        if (a_.prod(a_.imp(x, y), x) != a_.prod(a_.imp(y, x), y)) {
          add("hoop-divisibility", {x, y}, "(x->y)*x != (y->x)*y");
          if (done()) return;
        }
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n && !done(); ++y)
        for (Elem z = 0; z < n; ++z)
          if (a_.imp(x, a_.imp(y, z)) != a_.imp(a_.prod(x, y), z)) {
            add("hoop-exchange", {x, y, z}, "x->(y->z) != (x*y)->z");
            if (done()) return;
          }
  }

  // The derived meet x*(x->y) must be a semilattice operation and must match
  // the stored meet table.
  void derived_meet() {
    const int n = a_.size;
    for (Elem x = 0; x < n && !done(); ++x)
      for (Elem y = 0; y < n; ++y)
        if (a_.meet(x, y) != a_.prod(x, a_.imp(x, y))) {
          add("derived-meet", {x, y}, "stored meet differs from x*(x->y)");
          if (done()) return;
        }
    for (Elem x = 0; x < n && !done(); ++x) {
      if (a_.meet(x, x) != x) add("derived-meet-idempotent", {x}, "");
      if (done()) return;
      for (Elem y = 0; y < n && !done(); ++y) {
        if (a_.meet(x, y) != a_.meet(y, x)) {
          add("derived-meet-commutative", {x, y}, "");
          if (done()) return;
        }
        for (Elem z = 0; z < n; ++z)
          if (a_.meet(a_.meet(x, y), z) != a_.meet(x, a_.meet(y, z))) {
            add("derived-meet-associative", {x, y, z}, "");
            if (done()) return;
          }
      }
    }
  }

  void bounded() {
    for (Elem x = 0; x < a_.size; ++x)
      if (a_.imp(a_.bot, x) != a_.top) {
        add("hoop-bounded", {x}, "bot->x != top");
        if (done()) return;
      }
  }

  const FiniteAlgebra& a_;
  bool stop_early_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_axioms(const FiniteAlgebra& candidate) {
  return Checker(candidate, /*stop_early=*/false).run();
}

bool passes_axioms(const FiniteAlgebra& candidate) {
  return Checker(candidate, /*stop_early=*/true).run().valid();
}

ResidualResult derive_residual(const OrderRelation& order, const Table& prod) {
  const int n = order.size();
  ResidualResult out;
  out.imp = Table(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      std::optional<Elem> best;
      for (Elem z = 0; z < n; ++z) {
        if (!order.leq(prod(z, x), y)) continue;
        if (!best || order.leq(*best, z)) best = z;
      }
      bool ok = best.has_value();
      if (ok)
        for (Elem z = 0; z < n; ++z)
          if (order.leq(prod(z, x), y) && !order.leq(z, *best)) ok = false;
      if (!ok) {
        out.residuated = false;
        out.failure = {x, y};
        return out;
      }
      out.imp.at(x, y) = *best;
    }
  out.residuated = true;
  return out;
}

namespace {

// Least m >= 1 with x^(m+1) = x^m; powers are non-increasing so m < n.
Elem stable_power_of(const FiniteAlgebra& a, Elem x) {
  Elem p = x;
  for (int k = 1; k <= a.size; ++k) {
    Elem q = a.prod(p, x);
    if (q == p) return p;
    p = q;
  }
  return p;
}

}  // namespace

bool is_idempotent(const FiniteAlgebra& a, Elem x) {
  return a.prod(x, x) == x;
}

bool is_nilpotent(const FiniteAlgebra& a, Elem x) {
  return a.has_bot() && stable_power_of(a, x) == a.bot;
}

bool is_dense(const FiniteAlgebra& a, Elem x) {
  return a.has_bot() && a.neg(x) == a.bot;
}

// Powers of x stabilize at x^m; neg(x^k) grows with k, so the stabilized
// power is the binding case for the unity quantifier.
bool is_unity(const FiniteAlgebra& a, Elem x) {
  if (!a.has_bot()) return false;
  return is_nilpotent(a, a.neg(stable_power_of(a, x)));
}

ElementProfile element_profile(const FiniteAlgebra& a, Elem x) {
  if (x < 0 || x >= a.size)
    throw std::invalid_argument("element_profile: element out of range");
  ElementProfile p;
  p.element = x;
  p.stable_power = stable_power_of(a, x);
  p.idempotent = is_idempotent(a, x);
  if (a.has_bot()) {
    p.negation = a.neg(x);
    p.dense = is_dense(a, x);
    p.unity = is_unity(a, x);
    if (p.stable_power == a.bot) {
      Elem pw = a.top;
      for (int k = 1; k <= a.size; ++k) {
        pw = a.prod(pw, x);
        if (pw == a.bot) {
          p.nilpotence_order = k;
          break;
        }
      }
    }
  }
  const auto cs = coatoms(a);
  p.coatom = std::find(cs.begin(), cs.end(), x) != cs.end();
  return p;
}

std::vector<Elem> coatoms(const FiniteAlgebra& a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size; ++x) {
    if (x == a.top || !a.leq(x, a.top)) continue;
    bool covered = true;
    for (Elem y = 0; y < a.size; ++y)
      if (a.lt(x, y) && a.lt(y, a.top)) covered = false;
    if (covered) out.push_back(x);
  }
  return out;
}

}  // namespace resalg
