#include "resalg/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "resalg/parallel.hpp"

namespace resalg {

namespace {

void encode_table(const Table& t, std::vector<std::uint8_t>& out) {
  for (Elem v : t.cells()) out.push_back(static_cast<std::uint8_t>(v));
}

std::vector<std::uint8_t> encode(const FiniteAlgebra& a) {
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(a.signature));
  out.push_back(static_cast<std::uint8_t>(a.size));
  out.push_back(static_cast<std::uint8_t>(a.has_bot() ? a.bot + 1 : 0));
  out.push_back(static_cast<std::uint8_t>(a.top));
  encode_table(a.meet, out);
  if (a.has_join()) encode_table(a.join, out);
  encode_table(a.prod, out);
  encode_table(a.imp, out);
  return out;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<Elem>& perm) {
  FiniteAlgebra r;
  r.size = a.size;
  r.signature = a.signature;
  r.name = a.name;
  r.top = perm[a.top];
  if (a.has_bot()) r.bot = perm[a.bot];
  auto build = [&](const Table& t) {
    Table rt(a.size);
    std::vector<Elem> inv(a.size);
    for (Elem x = 0; x < a.size; ++x) inv[perm[x]] = x;
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y)
        rt.at(x, y) = perm[t(inv[x], inv[y])];
    return rt;
  };
  r.meet = build(a.meet);
  if (a.has_join()) r.join = build(a.join);
  r.prod = build(a.prod);
  r.imp = build(a.imp);
  return r;
}

}  // namespace

CanonicalForm canonical_form(const FiniteAlgebra& a) {
  const int n = a.size;
  if (n > 9)
    throw std::invalid_argument("canonical_form: carrier too large");

  // Normalize the constants first so the permutation scan can fix them.
  FiniteAlgebra normal = a;
  {
    std::vector<Elem> fix(n, -1);
    std::vector<char> taken(n, 0);
    fix[a.top] = n - 1;
    taken[n - 1] = 1;
    if (a.has_bot() && a.bot != a.top) {
      fix[a.bot] = 0;
      taken[0] = 1;
    }
    Elem next = 0;
    for (Elem x = 0; x < n; ++x) {
      if (fix[x] >= 0) continue;
      while (taken[next]) ++next;
      fix[x] = next;
      taken[next] = 1;
    }
    normal = relabel(a, fix);
  }

  // Middle elements are permuted exhaustively; constants stay put.
  std::vector<Elem> middle;
  for (Elem x = 0; x < n; ++x) {
    if (x == normal.top) continue;
    if (normal.has_bot() && x == normal.bot) continue;
    middle.push_back(x);
  }
  std::vector<Elem> arrangement = middle;
  CanonicalForm best;
  bool first = true;
  std::vector<Elem> perm(n);
  do {
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = 0; i < middle.size(); ++i) perm[middle[i]] = arrangement[i];
    FiniteAlgebra candidate = relabel(normal, perm);
    std::vector<std::uint8_t> bytes = encode(candidate);
    if (first || bytes < best.key.bytes) {
      best.key.bytes = std::move(bytes);
      best.algebra = std::move(candidate);
      first = false;
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  best.algebra.name = a.name;
  return best;
}

CanonicalKey canonical_key(const FiniteAlgebra& a) {
  return canonical_form(a).key;
}

std::vector<OrderRelation> enumerate_bounded_lattices(int n) {
  std::vector<OrderRelation> out;
  if (n == 1) {
    out.emplace_back(1);
    return out;
  }
  const int m = n - 2;
  std::vector<std::pair<Elem, Elem>> mid_pairs;
  for (Elem i = 1; i <= m; ++i)
    for (Elem j = i + 1; j <= m; ++j) mid_pairs.push_back({i, j});

  std::vector<int> state(mid_pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  auto emit = [&]() {
    OrderRelation r(n);
    for (Elem x = 0; x < n; ++x) {
      r.set(0, x, true);
      r.set(x, n - 1, true);
    }
    for (size_t k = 0; k < mid_pairs.size(); ++k) {
      if (state[k] == 1) r.set(mid_pairs[k].first, mid_pairs[k].second, true);
      if (state[k] == 2) r.set(mid_pairs[k].second, mid_pairs[k].first, true);
    }
    if (!r.is_partial_order()) return;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!r.meet_of(x, y) || !r.join_of(x, y)) return;
    out.push_back(std::move(r));
  };
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == mid_pairs.size()) {
      emit();
      return;
    }
    for (int s = 0; s <= 2; ++s) {
      state[k] = s;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

struct LatticeTables {
  OrderRelation order;
  Table meet;
  Table join;
};

LatticeTables lattice_tables(const OrderRelation& r) {
  const int n = r.size();
  LatticeTables t{r, Table(n), Table(n)};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      t.meet.at(x, y) = *r.meet_of(x, y);
      t.join.at(x, y) = *r.join_of(x, y);
    }
  return t;
}

// Completes prod tables over a fixed bounded lattice: commutative,
// associative, monotone, top identity, bot absorbing, prod below meet.
// Residual existence then gates each complete table.
class MonoidFiller {
 public:
  explicit MonoidFiller(const LatticeTables& lat)
      : lat_(lat), n_(lat.meet.size()), prod_(n_, -1) {}

  template <typename Emit>
  void run(Emit&& emit) {
    for (Elem x = 0; x < n_; ++x) {
      set(x, n_ - 1, x);
      set(x, 0, 0);
    }
    free_.clear();
    for (Elem i = 1; i <= n_ - 2; ++i)
      for (Elem j = i; j <= n_ - 2; ++j) free_.push_back({i, j});
    fill(0, emit);
  }

 private:
  Elem get(Elem x, Elem y) const { return prod_(x, y); }
  void set(Elem x, Elem y, Elem v) {
    prod_.at(x, y) = v;
    prod_.at(y, x) = v;
  }

  bool monotone_partial(Elem i, Elem j) const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        if (get(x, y) < 0) continue;
        if (lat_.order.leq(x, i) && lat_.order.leq(y, j) &&
            !lat_.order.leq(get(x, y), get(i, j)))
          return false;
        if (lat_.order.leq(i, x) && lat_.order.leq(j, y) &&
            !lat_.order.leq(get(i, j), get(x, y)))
          return false;
      }
    return true;
  }

  bool associative_full() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        for (Elem z = 0; z < n_; ++z)
          if (get(get(x, y), z) != get(x, get(y, z))) return false;
    return true;
  }

  template <typename Emit>
  void fill(size_t k, Emit&& emit) {
    if (k == free_.size()) {
      if (associative_full()) emit(prod_);
      return;
    }
    const auto [i, j] = free_[k];
    for (Elem v = 0; v < n_; ++v) {
      if (!lat_.order.leq(v, lat_.meet(i, j))) continue;
      set(i, j, v);
      if (monotone_partial(i, j)) fill(k + 1, emit);
    }
    set(i, j, -1);
  }

  const LatticeTables& lat_;
  int n_;
  Table prod_;
  std::vector<std::pair<Elem, Elem>> free_;
};

FiniteAlgebra assemble_rl(const LatticeTables& lat, const Table& prod,
                          const Table& imp) {
  FiniteAlgebra a;
  a.size = prod.size();
  a.signature = Signature::ResiduatedLattice;
  a.bot = 0;
  a.top = a.size - 1;
  a.meet = lat.meet;
  a.join = lat.join;
  a.prod = prod;
  a.imp = imp;
  return a;
}

bool passes_filter(const FiniteAlgebra& a, const EnumerationFilter& filter) {
  if (filter.require_chain && !is_linearly_ordered(a)) return false;
  if (!filter.require_memberships.empty()) {
    const VarietyProfile p = classify(a);
    for (Variety v : filter.require_memberships)
      if (!p.has(v)) return false;
  }
  return true;
}

using KeyedAlgebras = std::map<CanonicalKey, FiniteAlgebra>;

KeyedAlgebras enumerate_rl_lattice_first(int n, bool chains_only) {
  std::vector<OrderRelation> lattices;
  if (chains_only)
    lattices.push_back(OrderRelation::chain(n));
  else
    lattices = enumerate_bounded_lattices(n);

  auto locals = parallel_map<KeyedAlgebras>(
      static_cast<int>(lattices.size()), [&](int li) {
        KeyedAlgebras found;
        const LatticeTables lat = lattice_tables(lattices[li]);
        MonoidFiller filler(lat);
        filler.run([&](const Table& prod) {
          const auto res = derive_residual(lat.order, prod);
          if (!res.residuated) return;
          FiniteAlgebra a = assemble_rl(lat, prod, res.imp);
          if (!passes_axioms(a)) return;
          auto cf = canonical_form(a);
          found.emplace(std::move(cf.key), std::move(cf.algebra));
        });
        return found;
      });
  KeyedAlgebras all;
  for (auto& local : locals)
    for (auto& [k, v] : local) all.emplace(std::move(k), std::move(v));
  return all;
}

// Monoid-first oracle: commutative monoids with identity n-1 over the bare
// carrier, then every compatible bounded lattice order.
class BareMonoidFiller {
 public:
  explicit BareMonoidFiller(int n) : n_(n), prod_(n, -1) {}

  template <typename Emit>
  void run(Emit&& emit) {
    for (Elem x = 0; x < n_; ++x) set(x, n_ - 1, x);
    for (Elem i = 0; i <= n_ - 2; ++i)
      for (Elem j = i; j <= n_ - 2; ++j) free_.push_back({i, j});
    fill(0, emit);
  }

 private:
  void set(Elem x, Elem y, Elem v) {
    prod_.at(x, y) = v;
    prod_.at(y, x) = v;
  }

  // Associativity on triples whose subterms are all known.
  bool associative_partial() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        const Elem xy = prod_(x, y);
        if (xy < 0) continue;
        for (Elem z = 0; z < n_; ++z) {
          const Elem yz = prod_(y, z);
          if (yz < 0) continue;
          const Elem l = prod_(xy, z);
          const Elem r = prod_(x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  template <typename Emit>
  void fill(size_t k, Emit&& emit) {
    if (k == free_.size()) {
      emit(prod_);
      return;
    }
    const auto [i, j] = free_[k];
    for (Elem v = 0; v < n_; ++v) {
      set(i, j, v);
      if (associative_partial()) fill(k + 1, emit);
    }
    prod_.at(i, j) = -1;
    prod_.at(j, i) = -1;
  }

  int n_;
  Table prod_;
  std::vector<std::pair<Elem, Elem>> free_;
};

KeyedAlgebras enumerate_rl_monoid_first(int n) {
  const auto lattices = enumerate_bounded_lattices(n);
  std::vector<LatticeTables> lats;
  lats.reserve(lattices.size());
  for (const auto& order : lattices) lats.push_back(lattice_tables(order));

  KeyedAlgebras all;
  BareMonoidFiller filler(n);
  filler.run([&](const Table& prod) {
    for (const LatticeTables& lat : lats) {
      bool monotone = true;
      for (Elem x = 0; x < n && monotone; ++x)
        for (Elem y = 0; y < n && monotone; ++y)
          for (Elem z = 0; z < n && monotone; ++z)
            if (lat.order.leq(x, y) &&
                !lat.order.leq(prod(x, z), prod(y, z)))
              monotone = false;
      if (!monotone) continue;
      const auto res = derive_residual(lat.order, prod);
      if (!res.residuated) continue;
      FiniteAlgebra a = assemble_rl(lat, prod, res.imp);
      if (!passes_axioms(a)) continue;
      auto cf = canonical_form(a);
      all.emplace(std::move(cf.key), std::move(cf.algebra));
    }
  });
  return all;
}

FiniteAlgebra assemble_hoop(int n, Signature sig, const Table& prod,
                            const Table& imp) {
  FiniteAlgebra h;
  h.size = n;
  h.signature = sig;
  h.top = n - 1;
  h.bot = sig == Signature::BoundedHoop ? 0 : -1;
  h.prod = prod;
  h.imp = imp;
  refresh_hoop_meet(h);
  return h;
}

// Hoops from their monoids: the natural order of a hoop is the divisibility
// order x <= y iff x = z*y, so each commutative monoid determines at most one
// hoop (via the residual of that order).
KeyedAlgebras enumerate_hoops_monoid_first(int n, Signature sig) {
  KeyedAlgebras all;
  BareMonoidFiller filler(n);
  filler.run([&](const Table& prod) {
    OrderRelation div(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        bool below = false;
        for (Elem z = 0; z < n && !below; ++z)
          if (prod(z, y) == x) below = true;
        div.set(x, y, below);
      }
    if (!div.is_partial_order()) return;
    if (sig == Signature::BoundedHoop) {
      for (Elem x = 0; x < n; ++x)
        if (!div.leq(0, x)) return;  // canonical labeling keeps bot at 0
    }
    const auto res = derive_residual(div, prod);
    if (!res.residuated) return;
    FiniteAlgebra h = assemble_hoop(n, sig, prod, res.imp);
    if (!passes_axioms(h)) return;
    auto cf = canonical_form(h);
    all.emplace(std::move(cf.key), std::move(cf.algebra));
  });
  return all;
}

// Order-first oracle for hoops: meet-semilattice orders with top (and bot
// when bounded), monotone monoid tables below the meet, residual, axioms.
KeyedAlgebras enumerate_hoops_order_first(int n, Signature sig) {
  // Enumerate orders on labeled points with top = n-1, optional bot = 0,
  // where every pair has a meet.
  std::vector<OrderRelation> orders;
  const bool bounded = sig == Signature::BoundedHoop;
  const Elem lo = bounded ? 1 : 0;
  std::vector<std::pair<Elem, Elem>> mid_pairs;
  for (Elem i = lo; i <= n - 2; ++i)
    for (Elem j = i + 1; j <= n - 2; ++j) mid_pairs.push_back({i, j});
  std::vector<int> state(mid_pairs.size(), 0);
  auto emit_order = [&]() {
    OrderRelation r(n);
    for (Elem x = 0; x < n; ++x) {
      r.set(x, n - 1, true);
      if (bounded) r.set(0, x, true);
    }
    for (size_t k = 0; k < mid_pairs.size(); ++k) {
      if (state[k] == 1) r.set(mid_pairs[k].first, mid_pairs[k].second, true);
      if (state[k] == 2) r.set(mid_pairs[k].second, mid_pairs[k].first, true);
    }
    if (!r.is_partial_order()) return;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!r.meet_of(x, y)) return;
    orders.push_back(std::move(r));
  };
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == mid_pairs.size()) {
      emit_order();
      return;
    }
    for (int s = 0; s <= 2; ++s) {
      state[k] = s;
      self(self, k + 1);
    }
  };
  rec(rec, 0);

  KeyedAlgebras all;
  for (const OrderRelation& order : orders) {
    Table meet(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) meet.at(x, y) = *order.meet_of(x, y);
    LatticeTables lat{order, meet, Table(n)};
    MonoidFiller filler(lat);
    // MonoidFiller forces x*0 = 0, which is only sound with a bot; for
    // unbounded hoops fall back to the bare filler with a monotonicity gate.
    auto handle = [&](const Table& prod) {
      const auto res = derive_residual(order, prod);
      if (!res.residuated) return;
      FiniteAlgebra h = assemble_hoop(n, sig, prod, res.imp);
      if (!passes_axioms(h)) return;
      // the stored meet must agree with the enumerated order's meet
      if (!(h.meet == meet)) return;
      auto cf = canonical_form(h);
      all.emplace(std::move(cf.key), std::move(cf.algebra));
    };
    if (bounded) {
      filler.run(handle);
    } else {
      BareMonoidFiller bare(n);
      bare.run([&](const Table& prod) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
              if (order.leq(x, y) && !order.leq(prod(x, z), prod(y, z)))
                return;
        handle(prod);
      });
    }
  }
  return all;
}

void check_size_bounds(int n, Signature sig, bool chains_only) {
  if (n < 1) throw std::invalid_argument("enumeration size must be >= 1");
  if (sig == Signature::ResiduatedLattice) {
    if (chains_only ? n > 8 : n > 6)
      throw std::invalid_argument("enumeration size out of supported range");
  } else if (n > 5) {
    throw std::invalid_argument("hoop enumeration supports sizes up to 5");
  }
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_algebras(int n, Signature sig,
                                              const EnumerationFilter& filter) {
  check_size_bounds(n, sig, filter.require_chain);
  KeyedAlgebras keyed;
  if (n == 1) {
    FiniteAlgebra t;
    t.size = 1;
    t.signature = sig;
    t.bot = sig == Signature::Hoop ? -1 : 0;
    t.top = 0;
    t.meet = Table(1);
    t.prod = Table(1);
    t.imp = Table(1);
    if (signature_has_join(sig)) t.join = Table(1);
    keyed.emplace(canonical_key(t), std::move(t));
  } else if (sig == Signature::ResiduatedLattice) {
    keyed = enumerate_rl_lattice_first(n, filter.require_chain);
  } else {
    keyed = enumerate_hoops_monoid_first(n, sig);
  }

  std::vector<FiniteAlgebra> out;
  int index = 0;
  for (auto& [key, algebra] : keyed) {
    if (!passes_filter(algebra, filter)) continue;
    algebra.name = to_string(sig) + std::to_string(n) + "-" +
                   std::to_string(++index);
    out.push_back(std::move(algebra));
  }
  return out;
}

CountCrossCheck count_crosscheck(int n, Signature sig) {
  CountCrossCheck out;
  if (sig == Signature::ResiduatedLattice) {
    check_size_bounds(n, sig, false);
    if (n > 5)
      throw std::invalid_argument("count_crosscheck supports sizes up to 5");
    const auto a = enumerate_rl_lattice_first(n, false);
    const auto b = enumerate_rl_monoid_first(n);
    out.count_a = static_cast<long long>(a.size());
    out.count_b = static_cast<long long>(b.size());
    out.agree = out.count_a == out.count_b &&
                std::equal(a.begin(), a.end(), b.begin(),
                           [](const auto& x, const auto& y) {
                             return x.first == y.first;
                           });
  } else {
    check_size_bounds(n, sig, false);
    const auto a = enumerate_hoops_order_first(n, sig);
    const auto b = enumerate_hoops_monoid_first(n, sig);
    out.count_a = static_cast<long long>(a.size());
    out.count_b = static_cast<long long>(b.size());
    out.agree = out.count_a == out.count_b &&
                std::equal(a.begin(), a.end(), b.begin(),
                           [](const auto& x, const auto& y) {
                             return x.first == y.first;
                           });
  }
  return out;
}

}  // namespace resalg
