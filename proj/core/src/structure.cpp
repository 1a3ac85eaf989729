#include "resalg/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "resalg/constructions.hpp"

namespace resalg {

namespace {

void require_small(const FiniteAlgebra& a) {
  if (a.size > kMaxSetSize)
    throw std::invalid_argument("carrier too large for set-based machinery");
}

}  // namespace

bool Filter::proper() const {
  // with a bot, bot membership forces the whole carrier by upward closure
  return members != set_full(algebra->size);
}

bool is_filter(const FiniteAlgebra& a, ElemSet candidate) {
  if (!set_contains(candidate, a.top)) return false;
  for (Elem x : set_to_vector(candidate)) {
    for (Elem y = 0; y < a.size; ++y)
      if (a.leq(x, y) && !set_contains(candidate, y)) return false;
    for (Elem y : set_to_vector(candidate))
      if (!set_contains(candidate, a.prod(x, y))) return false;
  }
  return true;
}

Filter filter_generated(const FiniteAlgebra& a, ElemSet seed) {
  require_small(a);
  ElemSet f = set_add(seed, a.top);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = set_to_vector(f);
    for (Elem x : members) {
      for (Elem y : members) {
        const Elem p = a.prod(x, y);
        if (!set_contains(f, p)) {
          f = set_add(f, p);
          grew = true;
        }
      }
      for (Elem y = 0; y < a.size; ++y)
        if (a.leq(x, y) && !set_contains(f, y)) {
          f = set_add(f, y);
          grew = true;
        }
    }
  }
  return Filter{&a, f};
}

std::vector<Filter> all_filters(const FiniteAlgebra& a, bool maximal_only) {
  require_small(a);
  std::set<ElemSet> seen;
  std::vector<ElemSet> frontier{filter_generated(a, 0).members};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (ElemSet f : frontier)
      for (Elem x = 0; x < a.size; ++x) {
        if (set_contains(f, x)) continue;
        const ElemSet g = filter_generated(a, set_add(f, x)).members;
        if (seen.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  std::vector<ElemSet> masks(seen.begin(), seen.end());
  if (maximal_only) {
    const ElemSet full = set_full(a.size);
    std::vector<ElemSet> keep;
    for (ElemSet f : masks) {
      if (f == full) continue;
      bool maximal = true;
      for (ElemSet g : masks) {
        if (g == f || g == full) continue;
        if ((f & g) == f) maximal = false;
      }
      if (maximal) keep.push_back(f);
    }
    masks = std::move(keep);
  }
  std::vector<Filter> out;
  out.reserve(masks.size());
  for (ElemSet f : masks) out.push_back(Filter{&a, f});
  return out;
}

namespace {

// Canonical block numbering: top's block forced last, the rest by least
// member (bot's block ends up first since its least member is 0).
CongruencePartition canonical_partition(const FiniteAlgebra& a,
                                        const std::vector<int>& raw) {
  const int n = a.size;
  std::vector<Elem> least(n, -1);
  for (Elem x = 0; x < n; ++x)
    if (least[raw[x]] < 0) least[raw[x]] = x;
  std::vector<int> blocks;
  for (int b = 0; b < n; ++b)
    if (least[b] >= 0 && b != raw[a.top]) blocks.push_back(b);
  std::sort(blocks.begin(), blocks.end(),
            [&](int u, int v) { return least[u] < least[v]; });
  blocks.push_back(raw[a.top]);
  std::vector<int> rename(n, -1);
  for (size_t i = 0; i < blocks.size(); ++i) rename[blocks[i]] = static_cast<int>(i);
  CongruencePartition theta;
  theta.algebra = &a;
  theta.block_of.resize(n);
  for (Elem x = 0; x < n; ++x) theta.block_of[x] = rename[raw[x]];
  theta.block_count = static_cast<int>(blocks.size());
  return theta;
}

}  // namespace

CongruencePartition congruence_of_filter(const Filter& f) {
  const FiniteAlgebra& a = *f.algebra;
  std::vector<int> raw(a.size, -1);
  int next = 0;
  for (Elem x = 0; x < a.size; ++x) {
    if (raw[x] >= 0) continue;
    raw[x] = next;
    for (Elem y = x + 1; y < a.size; ++y)
      if (raw[y] < 0 && f.contains(a.imp(x, y)) && f.contains(a.imp(y, x)))
        raw[y] = next;
    ++next;
  }
  return canonical_partition(a, raw);
}

Filter filter_of(const CongruencePartition& theta) {
  const FiniteAlgebra& a = *theta.algebra;
  ElemSet members = 0;
  for (Elem x = 0; x < a.size; ++x)
    if (theta.related(x, a.top)) members = set_add(members, x);
  return Filter{&a, members};
}

std::vector<CongruencePartition> all_congruences(const FiniteAlgebra& a) {
  const int n = a.size;
  std::vector<CongruencePartition> out;
  std::vector<int> assign(n, 0);

  auto compatible = [&](const std::vector<int>& blocks) {
    auto ok_table = [&](const Table& t) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          for (Elem x2 = 0; x2 < n; ++x2) {
            if (blocks[x] != blocks[x2]) continue;
            for (Elem y2 = 0; y2 < n; ++y2)
              if (blocks[y] == blocks[y2] &&
                  blocks[t(x, y)] != blocks[t(x2, y2)])
                return false;
          }
      return true;
    };
    if (!ok_table(a.prod) || !ok_table(a.imp) || !ok_table(a.meet))
      return false;
    if (a.has_join() && !ok_table(a.join)) return false;
    return true;
  };

  // Restricted-growth enumeration of set partitions.
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      if (compatible(assign)) out.push_back(canonical_partition(a, assign));
      return;
    }
    for (int b = 0; b <= max_used + 1 && b < n; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

QuotientResult quotient(const FiniteAlgebra& a, const Filter& f) {
  const CongruencePartition theta = congruence_of_filter(f);
  const int m = theta.block_count;
  std::vector<Elem> rep(m, -1);
  for (Elem x = 0; x < a.size; ++x)
    if (rep[theta.block_of[x]] < 0) rep[theta.block_of[x]] = x;

  FiniteAlgebra q;
  q.size = m;
  q.signature = a.signature;
  q.top = theta.block_of[a.top];
  if (a.has_bot()) q.bot = theta.block_of[a.bot];
  q.name = a.name.empty() ? "quotient" : a.name + "/" + set_to_string(f.members);
  auto build = [&](const Table& t) {
    Table qt(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        qt.at(i, j) = theta.block_of[t(rep[i], rep[j])];
    return qt;
  };
  q.prod = build(a.prod);
  q.imp = build(a.imp);
  q.meet = build(a.meet);
  if (a.has_join()) q.join = build(a.join);

  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < a.size; ++y) {
      if (theta.block_of[a.prod(x, y)] != q.prod(theta.block_of[x], theta.block_of[y]) ||
          theta.block_of[a.imp(x, y)] != q.imp(theta.block_of[x], theta.block_of[y]) ||
          theta.block_of[a.meet(x, y)] != q.meet(theta.block_of[x], theta.block_of[y]))
        throw std::logic_error("quotient projection is not a homomorphism");
      if (a.has_join() &&
          theta.block_of[a.join(x, y)] != q.join(theta.block_of[x], theta.block_of[y]))
        throw std::logic_error("quotient projection is not a homomorphism");
    }
  return QuotientResult{std::move(q), theta.block_of};
}

RadicalReport radical_report(const FiniteAlgebra& a) {
  if (!a.has_bot())
    throw std::invalid_argument("radical_report needs a bounded signature");
  require_small(a);

  ElemSet from_filters = set_full(a.size);
  for (const Filter& f : all_filters(a, /*maximal_only=*/true))
    from_filters &= f.members;

  ElemSet from_unities = 0;
  for (Elem x = 0; x < a.size; ++x)
    if (is_unity(a, x)) from_unities = set_add(from_unities, x);

  if (from_filters != from_unities)
    throw std::logic_error(
        "radical mismatch: maximal-filter intersection vs unity set");

  RadicalReport r;
  r.radical = Filter{&a, from_filters};
  ElemSet dense = 0;
  for (Elem x = 0; x < a.size; ++x)
    if (is_dense(a, x)) dense = set_add(dense, x);
  r.dense = Filter{&a, dense};
  r.semisimple = from_filters == set_single(a.top);
  r.radical_dense = from_filters == dense;

  // Product of all radical members: the minimum of the radical, idempotent.
  Elem p = a.top;
  for (Elem x : set_to_vector(from_filters)) p = a.prod(p, x);
  ElemSet upset = 0;
  for (Elem y = 0; y < a.size; ++y)
    if (a.leq(p, y)) upset = set_add(upset, y);
  if (upset != from_filters || !is_idempotent(a, p))
    throw std::logic_error("radical is not the up-set of its product");
  r.principal_unity = p;
  return r;
}

SimplicityReport simplicity_report(const FiniteAlgebra& a) {
  SimplicityReport r;
  if (a.trivial()) return r;
  const bool by_filters = all_filters(a).size() == 2;
  if (a.has_bot()) {
    bool by_nilpotence = true;
    for (Elem x = 0; x < a.size; ++x)
      if (x != a.top && !is_nilpotent(a, x)) by_nilpotence = false;
    if (by_filters != by_nilpotence)
      throw std::logic_error(
          "simplicity mismatch: filter count vs nilpotence criterion");
  }
  r.simple = by_filters;
  if (r.simple) {
    r.hereditarily_simple = true;
    for (ElemSet s : all_subalgebras(a)) {
      const FiniteAlgebra sub = subalgebra_generated(a, s).algebra;
      if (!sub.trivial() && all_filters(sub).size() != 2)
        r.hereditarily_simple = false;
    }
  }
  return r;
}

ChainDecomposition chain_decomposition(const FiniteAlgebra& a) {
  ChainDecomposition out;
  if (a.has_join()) {
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y)
        if (a.join(a.imp(x, y), a.imp(y, x)) != a.top) {
          out.prelinear = false;
          out.witness = {x, y};
          return out;
        }
  }
  out.prelinear = true;

  std::vector<Filter> linear;
  std::vector<CongruencePartition> thetas;
  for (const Filter& f : all_filters(a)) {
    const QuotientResult q = quotient(a, f);
    if (OrderRelation::from_meet(q.algebra.meet).is_total()) {
      linear.push_back(f);
      thetas.push_back(congruence_of_filter(f));
    }
  }

  // Greedy cover: each unordered pair x != y must be separated by some
  // chosen congruence.
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = x + 1; y < a.size; ++y) pairs.push_back({x, y});
  std::vector<bool> covered(pairs.size(), false);
  size_t remaining = pairs.size();
  std::vector<size_t> chosen;
  while (remaining > 0) {
    size_t best = linear.size();
    int best_gain = -1;
    for (size_t i = 0; i < linear.size(); ++i) {
      int gain = 0;
      for (size_t p = 0; p < pairs.size(); ++p)
        if (!covered[p] && !thetas[i].related(pairs[p].first, pairs[p].second))
          ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == linear.size() || best_gain <= 0)
      throw std::logic_error(
          "prelinear algebra without a subdirect chain representation");
    chosen.push_back(best);
    for (size_t p = 0; p < pairs.size(); ++p)
      if (!covered[p] &&
          !thetas[best].related(pairs[p].first, pairs[p].second)) {
        covered[p] = true;
        --remaining;
      }
  }
  if (chosen.empty()) chosen.push_back(0);  // one-element algebra
  std::sort(chosen.begin(), chosen.end(), [&](size_t i, size_t j) {
    return linear[i].members < linear[j].members;
  });
  for (size_t i : chosen) out.filters.push_back(linear[i]);
  return out;
}

CepResult cep_check(const FiniteAlgebra& a) {
  CepResult out;
  const auto filters_a = all_filters(a);
  for (ElemSet s : all_subalgebras(a)) {
    const SubalgebraResult sub = subalgebra_generated(a, s);
    const auto elems = sub.elements;
    for (const Filter& fb : all_filters(sub.algebra)) {
      ElemSet fb_ambient = 0;
      for (Elem i : fb.member_list()) fb_ambient = set_add(fb_ambient, elems[i]);
      bool extended = false;
      for (const Filter& g : filters_a)
        if ((g.members & s) == fb_ambient) extended = true;
      if (!extended) {
        out.holds = false;
        out.subalgebra = s;
        out.filter = fb_ambient;
        return out;
      }
    }
  }
  out.holds = true;
  return out;
}

}  // namespace resalg
