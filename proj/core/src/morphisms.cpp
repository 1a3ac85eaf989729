#include "resalg/morphisms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "resalg/constructions.hpp"
#include "resalg/parallel.hpp"
#include "resalg/structure.hpp"

namespace resalg {

bool Morphism::is_mono() const {
  std::vector<bool> hit(target->size, false);
  for (Elem v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::string Morphism::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < map.size(); ++i)
    os << (i ? " " : "") << i << "->" << map[i];
  return os.str();
}

bool is_homomorphism(const Morphism& f) {
  const FiniteAlgebra& a = *f.source;
  const FiniteAlgebra& b = *f.target;
  if (a.signature != b.signature) return false;
  if (f.map[a.top] != b.top) return false;
  if (a.has_bot() && f.map[a.bot] != b.bot) return false;
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < a.size; ++y) {
      if (f.map[a.prod(x, y)] != b.prod(f.map[x], f.map[y])) return false;
      if (f.map[a.imp(x, y)] != b.imp(f.map[x], f.map[y])) return false;
      if (f.map[a.meet(x, y)] != b.meet(f.map[x], f.map[y])) return false;
      if (a.has_join() && f.map[a.join(x, y)] != b.join(f.map[x], f.map[y]))
        return false;
    }
  return true;
}

namespace {

// Backtracking state for the homomorphism search. Assignments propagate the
// closure of already-mapped pairs under every operation: once f(a) and f(b)
// are known, f(a*b), f(a->b), f(b->a), f(a&b), f(a|b) are forced. A trail
// records assignments for O(1) rollback.
class Searcher {
 public:
  Searcher(const FiniteAlgebra& a, const FiniteAlgebra& b,
           const SearchConstraint& c)
      : a_(a), b_(b), mode_(c.mode), map_(a.size, -1), used_(b.size, false) {
    mono_ = mode_ == SearchMode::Mono || mode_ == SearchMode::Iso;
    ok_root_ = assign(a_.top, b_.top);
    if (ok_root_ && a_.has_bot()) ok_root_ = assign(a_.bot, b_.bot);
    std::vector<Elem> pinned(a.size, -1);
    for (const auto& [s, t] : c.pins) {
      if (s < 0 || s >= a_.size || t < 0 || t >= b_.size)
        throw std::invalid_argument("pin out of range");
      if (pinned[s] != -1 && pinned[s] != t)
        throw std::invalid_argument("inconsistent pins");
      pinned[s] = t;
      if (!ok_root_ || map_[s] == t) continue;
      // a pin clashing with a constant or a propagated value just has no
      // solutions; only duplicate sources are caller errors
      if (map_[s] != -1)
        ok_root_ = false;
      else
        ok_root_ = assign(s, t);
    }
  }

  SearchResult run() {
    SearchResult out;
    if (!ok_root_) return out;
    if (mode_ == SearchMode::Iso && a_.size != b_.size) return out;

    const Elem root = first_unassigned();
    if (root < 0) {
      record(out);
      return out;
    }

    // Root branches can go to worker threads; merging by branch rank keeps
    // the output identical to the sequential scan.
    const long long space = search_space(root);
    if (mode_ != SearchMode::Exists && worker_count() > 1 && space > 100000) {
      auto branches = parallel_map<SearchResult>(b_.size, [&](int v) {
        Searcher clone(*this);
        SearchResult local;
        const size_t mark = clone.trail_.size();
        if (clone.assign(root, v))
          clone.search(local);
        clone.rollback(mark);
        return local;
      });
      for (auto& br : branches) {
        out.count += br.count;
        out.exists = out.exists || br.exists;
        for (auto& m : br.morphisms) out.morphisms.push_back(std::move(m));
      }
      return out;
    }
    search(out);
    return out;
  }

 private:
  long long search_space(Elem root) const {
    long long space = 1;
    for (Elem x = root; x < a_.size; ++x)
      if (map_[x] < 0) {
        space *= b_.size;
        if (space > 1000000) return space;
      }
    return space;
  }

  void record(SearchResult& out) {
    if (mode_ == SearchMode::Iso) {
      // mono + equal sizes makes the map bijective; the inverse of a
      // bijective homomorphism between same-signature finite algebras is
      // itself a homomorphism.
      if (!std::all_of(used_.begin(), used_.end(), [](bool u) { return u; }))
        return;
    }
    ++out.count;
    out.exists = true;
    if (mode_ != SearchMode::Count && mode_ != SearchMode::Exists)
      out.morphisms.push_back(Morphism{&a_, &b_, map_});
  }

  Elem first_unassigned() const {
    for (Elem x = 0; x < a_.size; ++x)
      if (map_[x] < 0) return x;
    return -1;
  }

  void search(SearchResult& out) {
    const Elem x = first_unassigned();
    if (x < 0) {
      record(out);
      return;
    }
    for (Elem v = 0; v < b_.size; ++v) {
      const size_t mark = trail_.size();
      if (assign(x, v)) {
        search(out);
        if (mode_ == SearchMode::Exists && out.exists) {
          rollback(mark);
          return;
        }
      }
      rollback(mark);
    }
  }

  bool assign(Elem x, Elem v) {
    queue_.clear();
    queue_.push_back({x, v});
    while (!queue_.empty()) {
      auto [c, u] = queue_.back();
      queue_.pop_back();
      if (map_[c] == u) continue;
      if (map_[c] != -1) return false;
      if (mono_) {
        if (used_[u]) return false;
        used_[u] = true;
      }
      map_[c] = u;
      trail_.push_back(c);
      for (Elem d = 0; d < a_.size; ++d) {
        if (map_[d] < 0) continue;
        const Elem w = map_[d];
        queue_.push_back({a_.prod(c, d), b_.prod(u, w)});
        queue_.push_back({a_.imp(c, d), b_.imp(u, w)});
        queue_.push_back({a_.imp(d, c), b_.imp(w, u)});
        queue_.push_back({a_.meet(c, d), b_.meet(u, w)});
        if (a_.has_join()) queue_.push_back({a_.join(c, d), b_.join(u, w)});
      }
    }
    return true;
  }

  void rollback(size_t mark) {
    while (trail_.size() > mark) {
      const Elem c = trail_.back();
      trail_.pop_back();
      if (mono_) used_[map_[c]] = false;
      map_[c] = -1;
    }
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  SearchMode mode_;
  bool mono_ = false;
  bool ok_root_ = false;
  std::vector<Elem> map_;
  std::vector<bool> used_;
  std::vector<Elem> trail_;
  std::vector<std::pair<Elem, Elem>> queue_;
};

}  // namespace

SearchResult homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           const SearchConstraint& constraint) {
  if (a.signature != b.signature)
    throw std::invalid_argument("homomorphisms: signature mismatch");
  return Searcher(a, b, constraint).run();
}

std::vector<Morphism> embeddings(const FiniteAlgebra& a,
                                 const FiniteAlgebra& b) {
  SearchConstraint c;
  c.mode = SearchMode::Mono;
  return homomorphisms(a, b, c).morphisms;
}

IsoResult is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size != b.size || a.signature != b.signature) return {};
  SearchConstraint c;
  c.mode = SearchMode::Iso;
  auto res = homomorphisms(a, b, c);
  if (res.morphisms.empty()) return {};
  return {true, res.morphisms.front()};
}

RetractResult is_retract_of(const FiniteAlgebra& b, const FiniteAlgebra& a) {
  for (const Morphism& g : embeddings(b, a)) {
    SearchConstraint c;
    c.mode = SearchMode::All;
    for (Elem x = 0; x < b.size; ++x) c.pins.push_back({g.map[x], x});
    auto res = homomorphisms(a, b, c);
    if (!res.morphisms.empty())
      return {true, g, res.morphisms.front()};
  }
  return {};
}

AbsoluteRetractResult is_absolute_retract_relative(
    const FiniteAlgebra& a, const std::vector<const FiniteAlgebra*>& cls) {
  for (size_t i = 0; i < cls.size(); ++i) {
    const FiniteAlgebra& c = *cls[i];
    if (c.signature != a.signature)
      throw std::invalid_argument("class member has mismatched signature");
    for (const Morphism& g : embeddings(a, c)) {
      SearchConstraint sc;
      sc.mode = SearchMode::Exists;
      for (Elem x = 0; x < a.size; ++x) sc.pins.push_back({g.map[x], x});
      if (!homomorphisms(c, a, sc).exists)
        return {false, static_cast<int>(i), g};
    }
  }
  AbsoluteRetractResult out;
  out.holds = true;
  return out;
}

InjectivityResult is_injective_relative(
    const FiniteAlgebra& a, const std::vector<const FiniteAlgebra*>& cls) {
  for (size_t bi = 0; bi < cls.size(); ++bi)
    for (size_t ci = 0; ci < cls.size(); ++ci) {
      const FiniteAlgebra& b = *cls[bi];
      const FiniteAlgebra& c = *cls[ci];
      for (const Morphism& f : embeddings(b, c))
        for (const Morphism& g : homomorphisms(b, a).morphisms) {
          SearchConstraint sc;
          sc.mode = SearchMode::Exists;
          for (Elem x = 0; x < b.size; ++x)
            sc.pins.push_back({f.map[x], g.map[x]});
          if (!homomorphisms(c, a, sc).exists)
            return {false, static_cast<int>(bi), static_cast<int>(ci), f, g};
        }
    }
  InjectivityResult out;
  out.holds = true;
  return out;
}

bool is_self_injective(const FiniteAlgebra& a) {
  for (ElemSet s : all_subalgebras(a)) {
    const SubalgebraResult sub = subalgebra_generated(a, s);
    for (const Morphism& g : homomorphisms(sub.algebra, a).morphisms) {
      SearchConstraint sc;
      sc.mode = SearchMode::Exists;
      for (Elem x = 0; x < sub.algebra.size; ++x)
        sc.pins.push_back({sub.elements[x], g.map[x]});
      if (!homomorphisms(a, a, sc).exists) return false;
    }
  }
  return true;
}

bool is_rigid(const FiniteAlgebra& a) {
  SearchConstraint c;
  c.mode = SearchMode::Iso;
  return homomorphisms(a, a, c).count == 1;
}

bool is_hereditarily_simple(const FiniteAlgebra& a) {
  return simplicity_report(a).hereditarily_simple;
}

MaximumSimpleResult maximum_simple(
    const std::vector<const FiniteAlgebra*>& cls) {
  std::vector<int> simple;
  for (size_t i = 0; i < cls.size(); ++i)
    if (!cls[i]->trivial() && simplicity_report(*cls[i]).simple)
      simple.push_back(static_cast<int>(i));

  auto embeds = [&](int from, int into) {
    return !embeddings(*cls[from], *cls[into]).empty();
  };

  MaximumSimpleResult out;
  for (int m : simple) {
    bool all_in = true;
    for (int i : simple)
      if (!embeds(i, m)) {
        all_in = false;
        break;
      }
    if (all_in) {
      out.found = true;
      out.index = m;
      return out;
    }
  }
  for (size_t i = 0; i < simple.size() && !out.certificate; ++i)
    for (size_t j = i; j < simple.size() && !out.certificate; ++j) {
      bool common = false;
      for (int m : simple)
        if (embeds(simple[i], m) && embeds(simple[j], m)) {
          common = true;
          break;
        }
      if (!common) out.certificate = {simple[i], simple[j]};
    }
  return out;
}

}  // namespace resalg
