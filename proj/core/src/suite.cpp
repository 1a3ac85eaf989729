#include "resalg/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "resalg/algebra.hpp"
#include "resalg/constructions.hpp"
#include "resalg/enumeration.hpp"
#include "resalg/morphisms.hpp"
#include "resalg/structure.hpp"
#include "resalg/varieties.hpp"

namespace resalg {

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

// One stringstream per check collects failure witnesses; an empty stream
// means the check passed.
struct Outcome {
  std::ostringstream fail;
  std::ostringstream info;

  bool ok() const { return fail.str().empty(); }
};

std::vector<std::string> suite_catalog_names() {
  std::vector<std::string> names = {"2", "H3", "H4", "I4", "I6", "L3"};
  for (int k = 1; k <= 3; ++k) names.push_back("bool:" + std::to_string(k));
  for (int n = 2; n <= 6; ++n) names.push_back("luk:" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) names.push_back("godel:" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) names.push_back("nm:" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) names.push_back("ordwnm:" + std::to_string(n));
  return names;
}

class Context {
 public:
  const std::vector<FiniteAlgebra>& catalog() {
    if (catalog_.empty())
      for (const auto& name : suite_catalog_names())
        catalog_.push_back(catalog_get(name));
    return catalog_;
  }

  std::vector<const FiniteAlgebra*> catalog_upto(int max_size) {
    std::vector<const FiniteAlgebra*> out;
    for (const auto& a : catalog())
      if (a.size <= max_size) out.push_back(&a);
    return out;
  }

  const std::vector<FiniteAlgebra>& rl(int n) {
    auto it = rl_.find(n);
    if (it == rl_.end())
      it = rl_.emplace(n, enumerate_algebras(n, Signature::ResiduatedLattice))
               .first;
    return it->second;
  }

  std::vector<const FiniteAlgebra*> rl_upto(int max_size) {
    std::vector<const FiniteAlgebra*> out;
    for (int n = 2; n <= max_size; ++n)
      for (const auto& a : rl(n)) out.push_back(&a);
    return out;
  }

  std::vector<const FiniteAlgebra*> rl_upto_in(int max_size, Variety v) {
    std::vector<const FiniteAlgebra*> out;
    for (const FiniteAlgebra* a : rl_upto(max_size))
      if (classify(*a).has(v)) out.push_back(a);
    return out;
  }

  const std::vector<FiniteAlgebra>& imtl_chains(int n) {
    auto it = chains_.find(n);
    if (it == chains_.end()) {
      EnumerationFilter f;
      f.require_chain = true;
      f.require_memberships.insert(Variety::IMTL);
      it = chains_
               .emplace(n, enumerate_algebras(
                               n, Signature::ResiduatedLattice, f))
               .first;
    }
    return it->second;
  }

  const std::vector<FiniteAlgebra>& bounded_hoops(int n) {
    auto it = hoops_.find(n);
    if (it == hoops_.end())
      it = hoops_.emplace(n, enumerate_algebras(n, Signature::BoundedHoop))
               .first;
    return it->second;
  }

 private:
  std::vector<FiniteAlgebra> catalog_;
  std::map<int, std::vector<FiniteAlgebra>> rl_;
  std::map<int, std::vector<FiniteAlgebra>> chains_;
  std::map<int, std::vector<FiniteAlgebra>> hoops_;
};

void check_catalog_validity(Context& ctx, Outcome& o) {
  int mutations = 0;
  for (const FiniteAlgebra& a : ctx.catalog()) {
    if (!validate_axioms(a).valid()) {
      o.fail << a.name << " fails validation; ";
      continue;
    }
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y)
        for (Elem v = 0; v < a.size; ++v) {
          if (v == a.imp(x, y)) continue;
          FiniteAlgebra m = a;
          m.imp.at(x, y) = v;
          ++mutations;
          if (passes_axioms(m))
            o.fail << a.name << " imp mutation (" << x << "," << y << ")->"
                   << v << " passes validation; ";
        }
  }
  o.info << ctx.catalog().size() << " catalog algebras, " << mutations
         << " imp mutations rejected";
}

void check_filter_congruence(Context& ctx, Outcome& o) {
  auto algebras = ctx.catalog_upto(6);
  for (const FiniteAlgebra* a : ctx.rl_upto(4)) algebras.push_back(a);
  int filters_total = 0;
  for (const FiniteAlgebra* a : algebras) {
    const auto filters = all_filters(*a);
    const auto congruences = all_congruences(*a);
    filters_total += static_cast<int>(filters.size());
    if (filters.size() != congruences.size())
      o.fail << a->name << ": " << filters.size() << " filters vs "
             << congruences.size() << " congruences; ";
    for (const Filter& f : filters)
      if (filter_of(congruence_of_filter(f)).members != f.members)
        o.fail << a->name << ": filter roundtrip fails on "
               << set_to_string(f.members) << "; ";
    for (const CongruencePartition& theta : congruences)
      if (congruence_of_filter(filter_of(theta)).block_of != theta.block_of)
        o.fail << a->name << ": congruence roundtrip fails; ";
  }
  o.info << algebras.size() << " algebras, " << filters_total << " filters";
}

void check_radical_coherence(Context& ctx, Outcome& o) {
  auto algebras = ctx.catalog_upto(6);
  for (const FiniteAlgebra* a : ctx.rl_upto(4)) algebras.push_back(a);
  for (const FiniteAlgebra* a : algebras) {
    try {
      const RadicalReport r = radical_report(*a);
      if ((r.dense.members & r.radical.members) != r.dense.members)
        o.fail << a->name << ": dense set not inside radical; ";
    } catch (const std::logic_error& e) {
      o.fail << a->name << ": " << e.what() << "; ";
    }
  }
  for (const FiniteAlgebra* a : ctx.rl_upto_in(4, Variety::SRL))
    if (!radical_report(*a).radical_dense)
      o.fail << "SRL " << a->name << ": radical != dense set; ";
  for (const FiniteAlgebra* a : ctx.rl_upto_in(5, Variety::BL))
    if (!radical_report(*a).radical_dense)
      o.fail << "BL " << a->name << ": radical != dense set; ";
  o.info << algebras.size() << " algebras cross-checked";
}

void check_simplicity_coherence(Context& ctx, Outcome& o) {
  auto algebras = ctx.catalog_upto(6);
  for (const FiniteAlgebra* a : ctx.rl_upto(4)) algebras.push_back(a);
  for (const FiniteAlgebra* a : algebras) {
    try {
      simplicity_report(*a);
    } catch (const std::logic_error& e) {
      o.fail << a->name << ": " << e.what() << "; ";
    }
  }
  if (!simplicity_report(catalog_get("I6")).simple) o.fail << "I6 not simple; ";
  if (simplicity_report(catalog_get("I4")).simple) o.fail << "I4 simple; ";
  if (!simplicity_report(catalog_get("L3")).simple) o.fail << "L3 not simple; ";
  o.info << algebras.size() << " algebras cross-checked";
}

void check_diamond_battery(Context& ctx, Outcome& o) {
  int count = 0;
  for (const FiniteAlgebra* a : ctx.rl_upto(4)) {
    ++count;
    const DiamondResult d = diamond(*a);
    if (!validate_axioms(d.algebra).valid()) {
      o.fail << "diamond(" << a->name << ") invalid; ";
      continue;
    }
    if (!is_homomorphism(d.diagonal) || !d.diagonal.is_mono())
      o.fail << "diamond(" << a->name << "): diagonal not an embedding; ";
    for (int i = 0; i < d.algebra.size; ++i) {
      const auto [x, y] = d.pairs[i];
      const Elem neg = d.algebra.neg(i);
      if (d.pairs[neg] != std::make_pair(a->neg(y), a->neg(x)))
        o.fail << "diamond(" << a->name << "): negation pair rule fails; ";
    }
    for (EquationId eq : {EquationId::INV, EquationId::DIST})
      if (holds_equation(*a, eq).holds != holds_equation(d.algebra, eq).holds)
        o.fail << "diamond(" << a->name << "): " << to_string(eq)
               << " does not transfer; ";
  }
  const DiamondResult d2 = diamond(catalog_get("2"));
  if (!is_isomorphic(d2.algebra, catalog_get("L3")).isomorphic)
    o.fail << "diamond(2) not isomorphic to L3; ";
  o.info << count << " diamonds checked";
}

void check_no_retraction(Context& ctx, Outcome& o) {
  int count = 0;
  for (const FiniteAlgebra* a : ctx.rl_upto(4)) {
    ++count;
    const DiamondResult d = diamond(*a);
    SearchConstraint c;
    c.mode = SearchMode::Exists;
    for (Elem x = 0; x < a->size; ++x)
      c.pins.push_back({d.diagonal.map[x], x});
    if (homomorphisms(d.algebra, *a, c).exists)
      o.fail << "retraction of diamond(" << a->name
             << ") onto the diagonal exists; ";
  }
  // The forced values from the no-retraction argument, on diamond(2):
  // (0,1)->(a,a) = (a,1) and (a,1)*(a,1) = (a*a,a) <= (a,a).
  const FiniteAlgebra two = catalog_get("2");
  const DiamondResult d = diamond(two);
  auto index_of = [&](Elem x, Elem y) {
    for (int i = 0; i < d.algebra.size; ++i)
      if (d.pairs[i] == std::make_pair(x, y)) return i;
    return -1;
  };
  const int fix = index_of(two.bot, two.top);
  for (Elem x = 0; x < two.size; ++x) {
    const int diag = index_of(x, x);
    const int ray = index_of(x, two.top);
    if (d.algebra.imp(fix, diag) != ray)
      o.fail << "diamond(2): (0,1)->(a,a) != (a,1) at a=" << x << "; ";
    const int sq = index_of(two.prod(x, x), x);
    if (d.algebra.prod(ray, ray) != sq)
      o.fail << "diamond(2): (a,1)^2 != (a*a,a) at a=" << x << "; ";
    if (!d.algebra.leq(sq, diag))
      o.fail << "diamond(2): (a*a,a) not below (a,a) at a=" << x << "; ";
  }
  o.info << count << " diamonds, no diagonal retractions";
}

void check_simple_wnm(Context& ctx, Outcome& o) {
  for (int n = 2; n <= 5; ++n) {
    const FiniteAlgebra ord = ordinal_wnm(n);
    for (const FiniteAlgebra& a : ctx.rl(n)) {
      if (!classify(a).has(Variety::WNM)) continue;
      const bool simple = simplicity_report(a).simple;
      const bool is_ord = is_isomorphic(a, ord).isomorphic;
      if (simple != is_ord)
        o.fail << a.name << ": simple=" << simple << " but ordwnm-iso="
               << is_ord << "; ";
    }
  }
  for (int n = 2; n <= 8; ++n)
    if (!simplicity_report(ordinal_wnm(n)).simple)
      o.fail << "ordwnm:" << n << " not simple; ";
  o.info << "WNM sizes 2..5 against ordinal structure, ordwnm simple to 8";
}

void check_simple_nm(Context& ctx, Outcome& o) {
  const FiniteAlgebra two = catalog_get("2");
  const FiniteAlgebra l3 = catalog_get("L3");
  std::vector<const FiniteAlgebra*> simples;
  for (int n = 2; n <= 5; ++n)
    for (const FiniteAlgebra& a : ctx.rl(n)) {
      if (!classify(a).has(Variety::NM)) continue;
      if (!simplicity_report(a).simple) continue;
      simples.push_back(&a);
      if (!is_isomorphic(a, two).isomorphic && !is_isomorphic(a, l3).isomorphic)
        o.fail << a.name << ": simple NM not isomorphic to 2 or L3; ";
    }
  if (!is_self_injective(l3)) o.fail << "L3 not self-injective; ";
  if (!is_rigid(l3)) o.fail << "L3 not rigid; ";
  const MaximumSimpleResult ms = maximum_simple(simples);
  if (!ms.found || !is_isomorphic(*simples[ms.index], l3).isomorphic)
    o.fail << "maximum simple NM (size<=5) is not L3; ";
  o.info << simples.size() << " simple NM algebras";
}

void check_boolean_injectivity(Context& ctx, Outcome& o) {
  const auto cls = ctx.rl_upto_in(4, Variety::SRL);
  const FiniteAlgebra two = catalog_get("2");
  const InjectivityResult r = is_injective_relative(two, cls);
  if (!r.holds)
    o.fail << "2 not injective relative to enumerated SRL (B=" << r.b_index
           << ", C=" << r.c_index << "); ";
  o.info << "class of " << cls.size() << " SRL algebras";
}

void check_test_d(Context&, Outcome& o) {
  const FiniteAlgebra h4 = catalog_get("H4");
  const FiniteAlgebra h3 = catalog_get("H3");
  const TestWitness w = is_test_d(h4);
  if (!w.found || w.eps != 2 || w.t != 1)
    o.fail << "H4 test_d witness is not (a,b); ";
  SearchConstraint pin;
  pin.mode = SearchMode::Exists;
  pin.pins.push_back({2, 1});  // a -> eps
  if (homomorphisms(h4, h3, pin).exists)
    o.fail << "hom H4->H3 with a->eps exists; ";
  if (is_absolute_retract_relative(h3, {&h4}).holds)
    o.fail << "H3 an absolute retract relative to {H4}; ";
  if (!is_retract_of(h3, h4).retract)
    o.fail << "H3 not a retract of H4; ";
}

void check_test_I(Context&, Outcome& o) {
  const FiniteAlgebra nm6 = nm_chain(6);
  const FiniteAlgebra i4 = catalog_get("I4");
  const TestWitness w = is_test_I(nm6);
  if (!w.found || w.eps != 4 || w.t != 3)
    o.fail << "nm:6 test_I witness is not (0.8, 0.6); ";
  SearchConstraint pin;
  pin.mode = SearchMode::Exists;
  pin.pins.push_back({4, 2});  // eps -> a
  pin.pins.push_back({3, 2});  // t -> a
  if (homomorphisms(nm6, i4, pin).exists)
    o.fail << "hom nm:6->I4 pinning eps,t to a exists; ";
}

void check_imtl_maximum(Context& ctx, Outcome& o) {
  std::vector<const FiniteAlgebra*> simples;
  for (int n = 2; n <= 6; ++n)
    for (const FiniteAlgebra& a : ctx.imtl_chains(n))
      if (simplicity_report(a).simple) simples.push_back(&a);

  const FiniteAlgebra l4 = lukasiewicz_chain(4);
  const FiniteAlgebra i6 = catalog_get("I6");
  bool saw_l4 = false, saw_i6 = false;
  for (const FiniteAlgebra* a : simples) {
    if (is_isomorphic(*a, l4).isomorphic) saw_l4 = true;
    if (is_isomorphic(*a, i6).isomorphic) saw_i6 = true;
    if (!embeddings(l4, *a).empty() && !embeddings(i6, *a).empty())
      o.fail << a->name << " embeds both luk:4 and I6; ";
  }
  if (!saw_l4 || !saw_i6)
    o.fail << "enumeration missed luk:4 or I6 among simple IMTL chains; ";
  const MaximumSimpleResult ms = maximum_simple(simples);
  if (ms.found) o.fail << "a maximum simple IMTL chain was found; ";
  if (!ms.certificate) {
    o.fail << "no certificate pair produced; ";
  } else {
    const auto [i, j] = *ms.certificate;
    for (const FiniteAlgebra* m : simples)
      if (!embeddings(*simples[i], *m).empty() &&
          !embeddings(*simples[j], *m).empty())
        o.fail << "certificate pair has common target " << m->name << "; ";
  }
  o.info << simples.size() << " simple IMTL chains";
}

void check_pismtl(Context& ctx, Outcome& o) {
  const auto cls = ctx.rl_upto_in(4, Variety::PiSMTL);
  for (const FiniteAlgebra* a : cls)
    for (Elem x = 0; x < a->size; ++x)
      if (x != a->top && is_idempotent(*a, x) && is_dense(*a, x))
        o.fail << a->name << ": idempotent dense " << x << " below top; ";
  o.info << cls.size() << " PiSMTL algebras";
}

void check_cep(Context& ctx, Outcome& o) {
  auto algebras = ctx.rl_upto(4);
  for (const FiniteAlgebra* a : ctx.catalog_upto(6)) algebras.push_back(a);
  for (const FiniteAlgebra* a : algebras) {
    const CepResult r = cep_check(*a);
    if (!r.holds)
      o.fail << a->name << ": filter " << set_to_string(r.filter)
             << " of subalgebra " << set_to_string(r.subalgebra)
             << " does not extend; ";
  }
  o.info << algebras.size() << " algebras";
}

void check_mtl_facts(Context& ctx, Outcome& o) {
  const auto cls = ctx.rl_upto_in(4, Variety::MTL);
  for (const FiniteAlgebra* a : cls) {
    for (Elem e = 0; e < a->size; ++e)
      if (is_unity(*a, e) && !a->lt(a->neg(e), e))
        o.fail << a->name << ": unity " << e << " without neg(e) < e; ";
    const RadicalReport r = radical_report(*a);
    if (!r.principal_unity) {
      o.fail << a->name << ": radical has no minimum; ";
      continue;
    }
    const Elem na = a->neg(*r.principal_unity);
    for (Elem x : r.radical.member_list())
      if (a->imp(x, na) != na)
        o.fail << a->name << ": x->neg(a) != neg(a) for radical x=" << x
               << "; ";
  }
  o.info << cls.size() << " MTL algebras";
}

void check_hoop_theorems(Context& ctx, Outcome& o) {
  std::vector<const FiniteAlgebra*> simples;
  for (int n = 2; n <= 4; ++n)
    for (const FiniteAlgebra& h : ctx.bounded_hoops(n))
      if (all_filters(h).size() == 2) simples.push_back(&h);

  for (const FiniteAlgebra* h : simples) {
    if (!holds_equation(*h, EquationId::INV).holds)
      o.fail << h->name << ": simple bounded hoop without involution; ";
    const FiniteAlgebra mv = rl_from_bounded_hoop(*h);
    if (!validate_axioms(mv).valid())
      o.fail << h->name << ": derived join does not make a lattice; ";
    else if (!classify(mv).has(Variety::MV))
      o.fail << h->name << ": expansion not an MV-algebra; ";
  }

  // Hoop homs searched in the plain hoop signature, no bot pin. Everything
  // found must fix bot, except the degenerate constant-top map (which the
  // nilpotence argument cannot reach).
  int homs_checked = 0, constants = 0;
  for (const FiniteAlgebra* hi : simples)
    for (const FiniteAlgebra* hj : simples) {
      const FiniteAlgebra pi = hoop_reduct(*hi, /*keep_bot=*/false);
      const FiniteAlgebra pj = hoop_reduct(*hj, /*keep_bot=*/false);
      for (const Morphism& f : homomorphisms(pi, pj).morphisms) {
        ++homs_checked;
        if (f.map[hi->bot] == hj->bot) continue;
        const bool constant_top =
            std::all_of(f.map.begin(), f.map.end(),
                        [&](Elem v) { return v == pj.top; });
        if (constant_top)
          ++constants;
        else
          o.fail << "nonconstant hoop hom " << hi->name << "->" << hj->name
                 << " moves bot; ";
      }
    }
  o.info << simples.size() << " simple bounded hoops, " << homs_checked
         << " hoop homs (" << constants << " constant-top)";
}

void check_enumeration_oracle(Context& ctx, Outcome& o) {
  const CountCrossCheck c2 = count_crosscheck(2);
  if (c2.count_a != 1 || c2.count_b != 1 || !c2.agree)
    o.fail << "size 2: expected both strategies to count 1; ";
  const CountCrossCheck c3 = count_crosscheck(3);
  if (c3.count_a != 2 || c3.count_b != 2 || !c3.agree)
    o.fail << "size 3: expected both strategies to count 2; ";
  const CountCrossCheck c4 = count_crosscheck(4);
  if (!c4.agree)
    o.fail << "size 4: strategies disagree (" << c4.count_a << " vs "
           << c4.count_b << "); ";
  for (int n = 2; n <= 4; ++n) {
    const auto& algebras = ctx.rl(n);
    for (size_t i = 0; i < algebras.size(); ++i)
      for (size_t j = i + 1; j < algebras.size(); ++j)
        if (is_isomorphic(algebras[i], algebras[j]).isomorphic)
          o.fail << "duplicate isomorphism class at size " << n << "; ";
  }
  o.info << "counts: n=2:" << c2.count_a << " n=3:" << c3.count_a
         << " n=4:" << c4.count_a;
}

struct CheckDef {
  const char* name;
  const char* anchor;
  std::function<void(Context&, Outcome&)> run;
};

const std::vector<CheckDef>& check_definitions() {
  static const std::vector<CheckDef> defs = {
      {"catalog-validity", "Def 4.1 / tables", check_catalog_validity},
      {"filter-congruence-bijection", "Sec. 4 theta_F",
       check_filter_congruence},
      {"radical-coherence", "Prop 4.6, Cor 6.4, Prop 11.6",
       check_radical_coherence},
      {"simplicity-coherence", "Prop 4.6(1)", check_simplicity_coherence},
      {"diamond-battery", "Prop 5.1", check_diamond_battery},
      {"diamond-no-retraction", "Thm 5.3", check_no_retraction},
      {"simple-wnm-structure", "Thm 8.1", check_simple_wnm},
      {"simple-nm-classification", "Prop 13.2", check_simple_nm},
      {"boolean-injectivity", "Cor 6.6", check_boolean_injectivity},
      {"test-d-obstruction", "Thm 4.16", check_test_d},
      {"test-i-obstruction", "Thm 12.4", check_test_I},
      {"imtl-no-maximum-simple", "Prop 12.5", check_imtl_maximum},
      {"pismtl-idempotent-dense", "Prop 10.2", check_pismtl},
      {"cep", "Prop 4.4", check_cep},
      {"mtl-facts", "Prop 7.5, Thm 7.6, Lemma 4.8", check_mtl_facts},
      {"hoop-theorems", "Props 14.5-14.6", check_hoop_theorems},
      {"enumeration-oracle", "dual-strategy counts",
       check_enumeration_oracle},
  };
  return defs;
}

}  // namespace

std::vector<std::string> paper_suite_check_names() {
  std::vector<std::string> out;
  for (const auto& def : check_definitions()) out.push_back(def.name);
  return out;
}

SuiteReport run_paper_suite(const std::string& only) {
  SuiteReport report;
  Context ctx;
  for (const auto& def : check_definitions()) {
    SuiteCheck check;
    check.name = def.name;
    check.anchor = def.anchor;
    if (!only.empty() && std::string(def.name).find(only) == std::string::npos) {
      check.status = CheckStatus::Skip;
      report.checks.push_back(std::move(check));
      continue;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(ctx, o);
    } catch (const std::exception& e) {
      o.fail << "exception: " << e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    check.seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
            .count();
    check.status = o.ok() ? CheckStatus::Pass : CheckStatus::Fail;
    check.detail = o.ok() ? o.info.str() : o.fail.str();
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace resalg
