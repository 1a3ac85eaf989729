#include "resalg/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "resalg/structure.hpp"

namespace resalg {

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature != b.signature)
    throw std::invalid_argument("direct_product: signature mismatch");
  const int n = a.size * b.size;
  auto pair_index = [&](Elem x, Elem y) { return x * b.size + y; };

  FiniteAlgebra p;
  p.size = n;
  p.signature = a.signature;
  p.top = pair_index(a.top, b.top);
  if (a.has_bot()) p.bot = pair_index(a.bot, b.bot);
  p.name = a.name + "x" + b.name;
  auto build = [&](const Table& ta, const Table& tb) {
    Table t(n);
    for (Elem x1 = 0; x1 < a.size; ++x1)
      for (Elem y1 = 0; y1 < b.size; ++y1)
        for (Elem x2 = 0; x2 < a.size; ++x2)
          for (Elem y2 = 0; y2 < b.size; ++y2)
            t.at(pair_index(x1, y1), pair_index(x2, y2)) =
                pair_index(ta(x1, x2), tb(y1, y2));
    return t;
  };
  p.prod = build(a.prod, b.prod);
  p.imp = build(a.imp, b.imp);
  p.meet = build(a.meet, b.meet);
  if (a.has_join()) p.join = build(a.join, b.join);
  return p;
}

SubalgebraResult subalgebra_generated(const FiniteAlgebra& a, ElemSet seed) {
  if (a.size > kMaxSetSize)
    throw std::invalid_argument("carrier too large for subalgebra machinery");
  ElemSet s = set_add(seed, a.top);
  if (a.has_bot()) s = set_add(s, a.bot);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto elems = set_to_vector(s);
    for (Elem x : elems)
      for (Elem y : elems) {
        for (const Table* t : {&a.prod, &a.imp, &a.meet}) {
          const Elem r = (*t)(x, y);
          if (!set_contains(s, r)) {
            s = set_add(s, r);
            grew = true;
          }
        }
        if (a.has_join() && !set_contains(s, a.join(x, y))) {
          s = set_add(s, a.join(x, y));
          grew = true;
        }
      }
  }

  const auto elems = set_to_vector(s);  // ascending
  const int m = static_cast<int>(elems.size());
  std::vector<int> local(a.size, -1);
  for (int i = 0; i < m; ++i) local[elems[i]] = i;

  SubalgebraResult out;
  out.elements = elems;
  FiniteAlgebra& sub = out.algebra;
  sub.size = m;
  sub.signature = a.signature;
  sub.top = local[a.top];
  if (a.has_bot()) sub.bot = local[a.bot];
  sub.name = a.name.empty() ? "sub" : "sub(" + a.name + ")";
  auto build = [&](const Table& t) {
    Table st(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) st.at(i, j) = local[t(elems[i], elems[j])];
    return st;
  };
  sub.prod = build(a.prod);
  sub.imp = build(a.imp);
  sub.meet = build(a.meet);
  if (a.has_join()) sub.join = build(a.join);
  out.inclusion = Morphism{&out.algebra, &a, elems};
  return out;
}

std::vector<ElemSet> all_subalgebras(const FiniteAlgebra& a) {
  std::set<ElemSet> seen;
  std::vector<ElemSet> frontier{
      set_from_vector(subalgebra_generated(a, 0).elements)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (ElemSet s : frontier)
      for (Elem x = 0; x < a.size; ++x) {
        if (set_contains(s, x)) continue;
        const ElemSet g = set_from_vector(
            subalgebra_generated(a, set_add(s, x)).elements);
        if (seen.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

DiamondResult diamond(const FiniteAlgebra& a) {
  if (a.signature != Signature::ResiduatedLattice)
    throw std::invalid_argument("diamond needs a residuated lattice");

  DiamondResult out;
  auto& pairs = out.pairs;
  for (Elem b = 0; b < a.size; ++b)
    for (Elem x = 0; x < a.size; ++x)
      if (a.leq(x, b)) pairs.push_back({x, b});  // sorted by (second, first)
  const int n = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> index(a.size, std::vector<int>(a.size, -1));
  for (int i = 0; i < n; ++i) index[pairs[i].first][pairs[i].second] = i;

  FiniteAlgebra& d = out.algebra;
  d.size = n;
  d.signature = Signature::ResiduatedLattice;
  d.bot = index[a.bot][a.bot];
  d.top = index[a.top][a.top];
  d.name = "diamond(" + a.name + ")";
  d.meet = Table(n);
  d.join = Table(n);
  d.prod = Table(n);
  d.imp = Table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [a1, b1] = pairs[i];
      const auto [a2, b2] = pairs[j];
      d.meet.at(i, j) = index[a.meet(a1, a2)][a.meet(b1, b2)];
      d.join.at(i, j) = index[a.join(a1, a2)][a.join(b1, b2)];
      d.prod.at(i, j) =
          index[a.prod(a1, a2)][a.join(a.prod(a1, b2), a.prod(a2, b1))];
      d.imp.at(i, j) =
          index[a.meet(a.imp(a1, a2), a.imp(b1, b2))][a.imp(a1, b2)];
    }

  std::vector<Elem> diag(a.size);
  for (Elem x = 0; x < a.size; ++x) diag[x] = index[x][x];
  out.diagonal = Morphism{&a, &out.algebra, diag};
  return out;
}

namespace {

FiniteAlgebra make_chain(int n, const std::string& name) {
  FiniteAlgebra c;
  c.size = n;
  c.signature = Signature::ResiduatedLattice;
  c.bot = 0;
  c.top = n - 1;
  c.name = name;
  c.meet = Table(n);
  c.join = Table(n);
  c.prod = Table(n);
  c.imp = Table(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      c.meet.at(x, y) = std::min(x, y);
      c.join.at(x, y) = std::max(x, y);
    }
  return c;
}

void require_size(const std::string& name, int n) {
  if (n < 2)
    throw std::invalid_argument("catalog " + name + ": size must be >= 2");
}

}  // namespace

FiniteAlgebra boolean_cube(int atoms) {
  if (atoms < 1) throw std::invalid_argument("bool: needs k >= 1");
  if (atoms > 6) throw std::invalid_argument("bool: k too large");
  const int n = 1 << atoms;
  FiniteAlgebra b;
  b.size = n;
  b.signature = Signature::ResiduatedLattice;
  b.bot = 0;
  b.top = n - 1;
  b.name = "bool:" + std::to_string(atoms);
  b.meet = Table(n);
  b.join = Table(n);
  b.prod = Table(n);
  b.imp = Table(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      b.meet.at(x, y) = x & y;
      b.join.at(x, y) = x | y;
      b.prod.at(x, y) = x & y;
      b.imp.at(x, y) = (~x | y) & (n - 1);
    }
  return b;
}

// Grid formulas use the index arithmetic of k/(n-1) directly, so the chain
// families are exact; no floating point is involved.
FiniteAlgebra lukasiewicz_chain(int n) {
  require_size("luk", n);
  FiniteAlgebra c = make_chain(n, "luk:" + std::to_string(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      c.prod.at(x, y) = std::max(0, x + y - (n - 1));
      c.imp.at(x, y) = std::min(n - 1, n - 1 - x + y);
    }
  return c;
}

FiniteAlgebra godel_chain(int n) {
  require_size("godel", n);
  FiniteAlgebra c = make_chain(n, "godel:" + std::to_string(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      c.prod.at(x, y) = std::min(x, y);
      c.imp.at(x, y) = x <= y ? n - 1 : y;
    }
  return c;
}

FiniteAlgebra nm_chain(int n) {
  require_size("nm", n);
  FiniteAlgebra c = make_chain(n, "nm:" + std::to_string(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      c.prod.at(x, y) = x + y > n - 1 ? std::min(x, y) : 0;
      c.imp.at(x, y) = x <= y ? n - 1 : std::max(y, n - 1 - x);
    }
  return c;
}

FiniteAlgebra ordinal_wnm(int n) {
  require_size("ordwnm", n);
  FiniteAlgebra c = make_chain(n, "ordwnm:" + std::to_string(n));
  const Elem u = n - 2;  // coatom
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      c.prod.at(x, y) = (x < n - 1 && y < n - 1) ? 0 : std::min(x, y);
      c.imp.at(x, y) = x <= y ? n - 1 : (x == n - 1 ? y : u);
    }
  return c;
}

FiniteAlgebra trivial_algebra() {
  FiniteAlgebra t;
  t.size = 1;
  t.signature = Signature::ResiduatedLattice;
  t.bot = t.top = 0;
  t.name = "1";
  t.meet = Table(1);
  t.join = Table(1);
  t.prod = Table(1);
  t.imp = Table(1);
  return t;
}

namespace {

FiniteAlgebra catalog_i4() {
  // Four-element involutive chain 0 < b < a < 1 with a idempotent; indices
  // 0, b=1, a=2, 1=3.
  FiniteAlgebra c = make_chain(4, "I4");
  c.prod = Table::from_rows({{0, 0, 0, 0},
                             {0, 0, 0, 1},
                             {0, 0, 2, 2},
                             {0, 1, 2, 3}});
  c.imp = Table::from_rows({{3, 3, 3, 3},
                            {2, 3, 3, 3},
                            {1, 1, 3, 3},
                            {0, 1, 2, 3}});
  return c;
}

FiniteAlgebra catalog_i6() {
  // Six-element involutive chain 0 < a3 < a2 < t < a1 < 1; indices
  // 0, a3=1, a2=2, t=3, a1=4, 1=5.
  FiniteAlgebra c = make_chain(6, "I6");
  c.prod = Table::from_rows({{0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 1},
                             {0, 0, 0, 0, 1, 2},
                             {0, 0, 0, 1, 1, 3},
                             {0, 0, 1, 1, 2, 4},
                             {0, 1, 2, 3, 4, 5}});
  c.imp = Table::from_rows({{5, 5, 5, 5, 5, 5},
                            {4, 5, 5, 5, 5, 5},
                            {3, 4, 5, 5, 5, 5},
                            {2, 4, 4, 5, 5, 5},
                            {1, 3, 4, 4, 5, 5},
                            {0, 1, 2, 3, 4, 5}});
  return c;
}

}  // namespace

std::vector<std::string> catalog_list() {
  return {"2",      "H3",      "H4",    "I4",   "I6",   "L3",
          "bool:k", "luk:n",   "godel:n", "nm:n", "ordwnm:n"};
}

FiniteAlgebra catalog_get(const std::string& name) {
  if (name == "2") {
    FiniteAlgebra two = boolean_cube(1);
    two.name = "2";
    return two;
  }
  if (name == "H3") {
    FiniteAlgebra h = godel_chain(3);
    h.name = "H3";
    return h;
  }
  if (name == "H4") {
    FiniteAlgebra h = godel_chain(4);
    h.name = "H4";
    return h;
  }
  if (name == "I4") return catalog_i4();
  if (name == "I6") return catalog_i6();
  if (name == "L3") {
    FiniteAlgebra l = lukasiewicz_chain(3);
    l.name = "L3";
    return l;
  }
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string family = name.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("catalog: bad parameter in " + name);
    }
    if (family == "bool") return boolean_cube(n);
    if (family == "luk") return lukasiewicz_chain(n);
    if (family == "godel") return godel_chain(n);
    if (family == "nm") return nm_chain(n);
    if (family == "ordwnm") return ordinal_wnm(n);
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

FiniteAlgebra hoop_reduct(const FiniteAlgebra& a, bool keep_bot) {
  FiniteAlgebra h;
  h.size = a.size;
  h.signature = keep_bot ? Signature::BoundedHoop : Signature::Hoop;
  h.prod = a.prod;
  h.imp = a.imp;
  h.top = a.top;
  h.bot = keep_bot ? a.bot : -1;
  h.name = a.name.empty() ? "hoop" : a.name + "-hoop";
  refresh_hoop_meet(h);
  return h;
}

FiniteAlgebra rl_from_bounded_hoop(const FiniteAlgebra& h) {
  if (h.signature != Signature::BoundedHoop)
    throw std::invalid_argument("rl_from_bounded_hoop needs a bounded hoop");
  FiniteAlgebra a;
  a.size = h.size;
  a.signature = Signature::ResiduatedLattice;
  a.prod = h.prod;
  a.imp = h.imp;
  a.meet = h.meet;
  a.bot = h.bot;
  a.top = h.top;
  a.name = h.name + "-mv";
  a.join = Table(h.size);
  for (Elem x = 0; x < h.size; ++x)
    for (Elem y = 0; y < h.size; ++y)
      a.join.at(x, y) = h.imp(h.imp(x, y), y);
  return a;
}

TestWitness is_test_d(const FiniteAlgebra& a) {
  const RadicalReport rad = radical_report(a);
  TestWitness w;
  w.radical_dense = rad.radical_dense;
  for (Elem eps = 0; eps < a.size && !w.found; ++eps) {
    if (eps == a.top || !rad.radical.contains(eps)) continue;
    if (!is_idempotent(a, eps)) continue;
    for (Elem t = 0; t < a.size; ++t) {
      if (!rad.radical.contains(t) || !a.lt(t, eps)) continue;
      if (a.leq(a.imp(eps, t), eps)) {
        w.found = true;
        w.eps = eps;
        w.t = t;
        break;
      }
    }
  }
  return w;
}

TestWitness is_test_I(const FiniteAlgebra& a) {
  const RadicalReport rad = radical_report(a);
  const FiniteAlgebra i4 = catalog_i4();
  TestWitness w;
  w.radical_dense = rad.radical_dense;
  for (Elem eps = 0; eps < a.size && !w.found; ++eps) {
    const Elem neg = a.neg(eps);
    if (eps == a.top || eps == a.bot || neg == eps || neg == a.bot ||
        neg == a.top)
      continue;
    const ElemSet four =
        set_add(set_add(set_add(set_single(a.bot), neg), eps), a.top);
    const SubalgebraResult sub = subalgebra_generated(a, four);
    if (set_from_vector(sub.elements) != four) continue;
    if (!is_isomorphic(sub.algebra, i4).isomorphic) continue;
    for (Elem t = 0; t < a.size; ++t)
      if (rad.radical.contains(t) && a.lt(t, eps)) {
        w.found = true;
        w.eps = eps;
        w.t = t;
        break;
      }
  }
  return w;
}

}  // namespace resalg
