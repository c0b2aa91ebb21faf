#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "repknit/ar_knit.hpp"
#include "repknit/checked.hpp"
#include "repknit/error.hpp"
#include "repknit/hom_engine.hpp"

namespace repknit {

/// Graded dimensions: V on stable slots, W on projective slots.
struct DominantPair {
  std::map<Slot, std::int64_t> V;
  std::map<Slot, std::int64_t> W;

  static std::int64_t get(const std::map<Slot, std::int64_t>& m, Slot s) {
    auto it = m.find(s);
    return it == m.end() ? 0 : it->second;
  }
  std::int64_t v(Slot s) const { return get(V, s); }
  std::int64_t w(Slot s) const { return get(W, s); }

  friend bool operator==(const DominantPair&, const DominantPair&) = default;
};

inline void set_entry(std::map<Slot, std::int64_t>& m, Slot s, std::int64_t x) {
  if (x == 0) m.erase(s);
  else m[s] = x;
}

/// W(i,n) - V(i,n+1) - V(i,n-1) + sum_{j ~ i} V(j,n) at a projective slot.
inline std::int64_t dominance_defect(const DynkinQuiver& q, const DominantPair& p, Slot s) {
  std::int64_t x = p.w(s);
  x = checked::sub(x, p.v({s.column, s.level + 1}));
  x = checked::sub(x, p.v({s.column, s.level - 1}));
  for (int j : q.neighbors(s.column)) x = checked::add(x, p.v({j, s.level}));
  return x;
}

/// Projective slots at which the defect can be nonzero.
inline std::set<Slot> defect_slots(const DynkinQuiver& q, const HeightFunction& xi, const DominantPair& p) {
  std::set<Slot> out;
  for (const auto& [s, w] : p.W) out.insert(s);
  for (const auto& [s, v] : p.V) {
    out.insert({s.column, s.level + 1});
    out.insert({s.column, s.level - 1});
    for (int j : q.neighbors(s.column)) out.insert({j, s.level});
  }
  for (auto it = out.begin(); it != out.end();) it = is_stable(xi, *it) ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<Slot, std::int64_t> dominance_defects(const DynkinQuiver& q, const HeightFunction& xi, const DominantPair& p) {
  std::map<Slot, std::int64_t> out;
  for (Slot s : defect_slots(q, xi, p)) set_entry(out, s, dominance_defect(q, p, s));
  return out;
}

inline void check_pair_slots(const HeightFunction& xi, const DominantPair& p) {
  for (const auto& [s, v] : p.V)
    if (!is_stable(xi, s) || v < 0) throw Error(ErrorCode::ConfigError, "orbits_strata", "V entry on a non-stable slot or negative");
  for (const auto& [s, w] : p.W)
    if (is_stable(xi, s) || w < 0) throw Error(ErrorCode::ConfigError, "orbits_strata", "W entry on a stable slot or negative");
}

inline bool check_dominance(const DynkinQuiver& q, const HeightFunction& xi, const DominantPair& p) {
  check_pair_slots(xi, p);
  for (Slot s : defect_slots(q, xi, p))
    if (dominance_defect(q, p, s) < 0) return false;
  return true;
}

/// Canonical order on classes: summand slots, sorted by (level, column)
/// descending, compared lexicographically.
inline std::vector<std::tuple<int, int, std::int64_t>> class_key(const ARWindow& w, const ModuleClass& c) {
  std::vector<std::tuple<int, int, std::int64_t>> key;
  for (const auto& [id, m] : c.summands) key.emplace_back(w.vertex(id).slot.level, w.vertex(id).slot.column, m);
  std::sort(key.rbegin(), key.rend());
  return key;
}

inline void sort_classes(const ARWindow& w, std::vector<ModuleClass>& classes) {
  std::sort(classes.begin(), classes.end(),
            [&](const ModuleClass& a, const ModuleClass& b) { return class_key(w, a) < class_key(w, b); });
}

/// Throws WindowTooSmall unless every indecomposable with support inside the
/// degrees of `d` lies in the window: such modules sit between the
/// projectives of degree max+0 and min-1.
inline void require_degree_coverage(const ARWindow& w, const DimVector& d, const char* module) {
  if (d.empty()) return;
  for (int m = d.min_degree() - 1; m <= d.max_degree(); ++m)
    for (int i = 0; i < w.quiver().size(); ++i)
      if (!w.find_projective({i, m}))
        throw Error(ErrorCode::WindowTooSmall, module,
                    "projective " + format_vertex(w.quiver(), {i, m}) + " needed to bound modules of " +
                        format_dim(w.quiver(), d) + " is outside the window");
}

/// All isomorphism classes of modules with dimension vector d.
inline std::vector<ModuleClass> enumerate_modules(const HomEngine& eng, const DimVector& d) {
  const ARWindow& w = eng.window();
  if (!d.nonnegative()) throw Error(ErrorCode::ConfigError, "orbits_strata", "negative dimension vector");
  require_degree_coverage(w, d, "orbits_strata");
  std::vector<int> parts;
  for (const ARVertex& v : w.vertices())
    if (v.dim.fits_in(d)) parts.push_back(v.id);
  std::vector<ModuleClass> out;
  ModuleClass cur;
  std::function<void(std::size_t, DimVector)> rec = [&](std::size_t k, DimVector rest) {
    if (rest.empty()) {
      out.push_back(cur);
      return;
    }
    if (k == parts.size()) return;
    const int id = parts[k];
    const DimVector& pd = w.vertex(id).dim;
    std::int64_t mult = 0;
    DimVector r = rest;
    rec(k + 1, r);
    while (true) {
      r -= pd;
      if (!r.nonnegative()) break;
      ++mult;
      cur.add(id, 1);
      rec(k + 1, r);
    }
    if (mult) cur.add(id, -mult);
  };
  rec(0, d);
  sort_classes(w, out);
  return out;
}

/// The dominant pair of N: V(psi M) = dim proj(M, N), W(psi P_x) = d_x.
/// V is read from the r-expansion, whose coefficient at r_{Omega^{-1} M} is
/// dim proj(M, N).
inline DominantPair module_to_pair(const HomEngine& eng, const ModuleClass& n) {
  const ARWindow& w = eng.window();
  DominantPair p;
  const DimVector d = n.dim(w);
  for (const auto& [x, c] : d.entries()) set_entry(p.W, w.psi_of_projective(x), c);
  for (const auto& [m, lambda] : eng.expand_in_r_basis(n)) set_entry(p.V, w.vertex(eng.omega(m)).slot, lambda);
  return p;
}

/// Projective summands P_x with sum c_x dim P_x == rest, solved in degree
/// order (sources of Q first within a degree).
inline ModuleClass projective_part(const ARWindow& w, DimVector rest) {
  const DynkinQuiver& q = w.quiver();
  std::vector<int> order;  // topological: i before j when a path i -> j exists
  for (int i = 0; i < q.size(); ++i) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w.height()[a] > w.height()[b]; });
  ModuleClass out;
  while (!rest.empty()) {
    if (!rest.nonnegative()) break;
    const int m = rest.min_degree();
    std::optional<RepVertex> pick;
    for (int i : order)
      if (rest[{i, m}] != 0) { pick = RepVertex{i, m}; break; }
    const std::int64_t c = rest[*pick];
    auto id = w.find_projective(*pick);
    if (!id) throw Error(ErrorCode::WindowTooSmall, "orbits_strata", "projective " + format_vertex(q, *pick) + " not in window");
    out.add(*id, c);
    rest -= c * w.vertex(*id).dim;
  }
  if (!rest.empty())
    throw Error(ErrorCode::InternalInconsistency, "orbits_strata", "dimension vector not matched by projective summands");
  return out;
}

inline DimVector w_dimension_vector(const ARWindow& w, const DominantPair& p) {
  DimVector d;
  for (const auto& [s, c] : p.W) {
    auto id = w.lookup(s, "W support");
    if (!id || !w.vertex(*id).is_projective())
      throw Error(ErrorCode::WSupportNotProjective, "orbits_strata", "W is nonzero at " + w.slot_label(s) + ", which holds no projective");
    d.add(*w.vertex(*id).projective, c);
  }
  return d;
}

/// Inverse of module_to_pair. Non-projective multiplicities are the
/// dominance defects: the summand Omega^{-1} tau psi^{-1}(i, n+1) occurs
/// with multiplicity equal to the defect at (i, n). Projective summands make
/// up the remaining dimension vector.
inline ModuleClass pair_to_module(const HomEngine& eng, const DominantPair& p) {
  const ARWindow& w = eng.window();
  const DynkinQuiver& q = w.quiver();
  check_pair_slots(w.height(), p);
  const DimVector d = w_dimension_vector(w, p);
  ModuleClass n;
  for (Slot s : defect_slots(q, w.height(), p)) {
    const std::int64_t b = dominance_defect(q, p, s);
    if (b < 0) throw Error(ErrorCode::NotDominant, "orbits_strata", "defect " + std::to_string(b) + " at " + w.slot_label(s));
    if (b == 0) continue;
    const int m = w.psi_inv({s.column, s.level + 1});
    n.add(eng.omega_inv(w.tau(m)), b);
  }
  const DimVector rest = d - n.dim(w);
  if (!rest.nonnegative())
    throw Error(ErrorCode::InternalInconsistency, "orbits_strata", "non-projective part exceeds " + format_dim(q, d));
  n = n + projective_part(w, rest);
  if (module_to_pair(eng, n) != p)
    throw Error(ErrorCode::InternalInconsistency, "orbits_strata", "pair_to_module does not invert module_to_pair on " + format_class(w, n));
  return n;
}

/// The same inverse read off the split Grothendieck group:
/// [N] = sum_x d_x [S_x] - sum_M V(psi Omega M) r_M.
inline ModuleClass pair_to_module_via_r_basis(const HomEngine& eng, const DominantPair& p) {
  const ARWindow& w = eng.window();
  check_pair_slots(w.height(), p);
  if (!check_dominance(w.quiver(), w.height(), p)) throw Error(ErrorCode::NotDominant, "orbits_strata", "pair is not dominant");
  RSplitElement x;
  for (const auto& [v, c] : w_dimension_vector(w, p).entries()) accumulate(x, eng.simple(v), c);
  for (const auto& [s, val] : p.V) {
    const int m = eng.omega_inv(w.psi_inv(s));
    for (const auto& [id, c] : eng.r_element(m)) accumulate(x, id, checked::mul(-val, c));
  }
  ModuleClass n;
  for (const auto& [id, c] : x) {
    if (c < 0) throw Error(ErrorCode::InternalInconsistency, "orbits_strata", "negative multiplicity at " + w.label(id));
    n.add(id, c);
  }
  return n;
}

struct DominantSearchOptions {
  std::int64_t entry_cap = -1;       // -1: total W times the largest projective dimension
  std::int64_t node_limit = 5'000'000;
};

/// Every V making (V, W) dominant. V vanishes outside the levels strictly
/// between the lowest and highest W slots; entries are chosen level by level
/// from the top, each bounded by the inequality at the projective slot just
/// above it.
inline std::vector<DominantPair> enumerate_dominant_pairs(const DynkinQuiver& q, const HeightFunction& xi,
                                                          const std::map<Slot, std::int64_t>& W,
                                                          DominantSearchOptions opt = {}) {
  DominantPair base;
  base.W = W;
  for (auto it = base.W.begin(); it != base.W.end();) it = it->second == 0 ? base.W.erase(it) : std::next(it);
  check_pair_slots(xi, base);
  std::vector<DominantPair> out;
  if (base.W.empty()) {
    out.push_back(base);
    return out;
  }
  if (opt.entry_cap < 0) {
    std::int64_t total = 0;
    for (const auto& [s, c] : base.W) total = checked::add(total, c);
    std::int64_t pmax = 0;
    for (int i = 0; i < q.size(); ++i) pmax = std::max(pmax, projective_dim_vector(q, {i, 0}).total());
    opt.entry_cap = checked::mul(total, pmax);
  }
  int top = base.W.begin()->first.level, bottom = top;
  for (const auto& [s, c] : base.W) {
    top = std::max(top, s.level);
    bottom = std::min(bottom, s.level);
  }
  std::vector<Slot> order;
  for (int n = top - 1; n > bottom; --n)
    for (int i = 0; i < q.size(); ++i)
      if (is_stable(xi, {i, n})) order.push_back({i, n});
  std::int64_t nodes = 0;
  DominantPair cur = base;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (++nodes > opt.node_limit)
      throw Error(ErrorCode::CapExceeded, "orbits_strata", "dominant pair search exceeded " + std::to_string(opt.node_limit) + " nodes");
    if (k == order.size()) {
      if (check_dominance(q, xi, cur)) out.push_back(cur);
      return;
    }
    const Slot s = order[k];
    // Inequality at (i, n+1): V(i,n) <= W(i,n+1) - V(i,n+2) + sum_j V(j,n+1).
    const std::int64_t bound = std::min(opt.entry_cap, dominance_defect(q, cur, {s.column, s.level + 1}));
    for (std::int64_t v = 0; v <= bound; ++v) {
      set_entry(cur.V, s, v);
      rec(k + 1);
    }
    set_entry(cur.V, s, 0);
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const DominantPair& a, const DominantPair& b) {
    std::int64_t sa = 0, sb = 0;
    for (const auto& [s, v] : a.V) sa += v;
    for (const auto& [s, v] : b.V) sb += v;
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.V.rbegin(), a.V.rend(), b.V.rbegin(), b.V.rend());
  });
  return out;
}

/// W^d: W(psi P_x) = d_x.
inline std::map<Slot, std::int64_t> w_of_dimension_vector(const ARWindow& w, const DimVector& d) {
  std::map<Slot, std::int64_t> W;
  for (const auto& [x, c] : d.entries()) set_entry(W, w.psi_of_projective(x), c);
  return W;
}

/// Orbit-closure order on classes of one dimension vector. leq(a, b) means
/// that b lies in the closure of the orbit of a; the semisimple class is the
/// maximum and the generic class the minimum.
struct StrataPoset {
  std::vector<ModuleClass> elements;
  std::vector<DominantPair> pairs;
  std::vector<std::vector<bool>> leq;

  std::vector<std::pair<int, int>> hasse() const {
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(elements.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !leq[a][b]) continue;
        bool cover = true;
        for (int c = 0; c < n && cover; ++c)
          if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
        if (cover) edges.push_back({a, b});
      }
    return edges;
  }

  std::vector<int> maxima() const {
    std::vector<int> out;
    const int n = static_cast<int>(elements.size());
    for (int a = 0; a < n; ++a) {
      bool top = true;
      for (int b = 0; b < n; ++b)
        if (b != a && leq[a][b]) top = false;
      if (top) out.push_back(a);
    }
    return out;
  }

  std::vector<int> minima() const {
    std::vector<int> out;
    const int n = static_cast<int>(elements.size());
    for (int a = 0; a < n; ++a) {
      bool bottom = true;
      for (int b = 0; b < n; ++b)
        if (b != a && leq[b][a]) bottom = false;
      if (bottom) out.push_back(a);
    }
    return out;
  }
};

/// Hom criterion: b in the closure of the orbit of a iff
/// hom(M, a) <= hom(M, b) for every indecomposable M.
inline bool hom_degenerates(const HomEngine& eng, const ModuleClass& a, const ModuleClass& b) {
  const ARWindow& w = eng.window();
  DimVector support = a.dim(w) + b.dim(w);
  for (const ARVertex& m : w.vertices()) {
    bool meets = false;
    for (const auto& [x, c] : m.dim.entries())
      if (support[x] != 0) { meets = true; break; }
    if (!meets) continue;
    const ModuleClass mc = ModuleClass::of(m.id);
    if (eng.hom_module(mc, a) > eng.hom_module(mc, b)) return false;
  }
  return true;
}

/// V criterion: V(a) >= V(b) componentwise.
inline bool v_dominates(const DominantPair& a, const DominantPair& b) {
  for (const auto& [s, v] : b.V)
    if (a.v(s) < v) return false;
  return true;
}

inline StrataPoset degeneration_order(const HomEngine& eng, std::vector<ModuleClass> classes) {
  const ARWindow& w = eng.window();
  if (!classes.empty()) {
    const DimVector d = classes.front().dim(w);
    for (const auto& c : classes)
      if (c.dim(w) != d) throw Error(ErrorCode::ConfigError, "orbits_strata", "degeneration_order needs one dimension vector");
  }
  StrataPoset p;
  p.elements = std::move(classes);
  const std::size_t n = p.elements.size();
  for (const auto& c : p.elements) p.pairs.push_back(module_to_pair(eng, c));
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool by_hom = hom_degenerates(eng, p.elements[a], p.elements[b]);
      const bool by_v = v_dominates(p.pairs[a], p.pairs[b]);
      if (by_hom != by_v)
        throw Error(ErrorCode::InternalInconsistency, "orbits_strata",
                    "Hom and V criteria disagree on " + format_class(w, p.elements[a]) + " vs " + format_class(w, p.elements[b]));
      p.leq[a][b] = by_hom;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && p.leq[a][b] && p.leq[b][a])
        throw Error(ErrorCode::InternalInconsistency, "orbits_strata", "degeneration order is not antisymmetric");
  return p;
}

struct BijectionReport {
  std::size_t classes = 0;
  std::size_t pairs = 0;
  bool roundtrip = true;
  std::vector<std::string> problems;
  bool ok() const { return classes == pairs && roundtrip && problems.empty(); }
};

/// Checks that module_to_pair is a bijection between the classes of
/// dimension vector d and the dominant pairs with W = W^d.
inline BijectionReport verify_bijection(const HomEngine& eng, const DimVector& d) {
  const ARWindow& w = eng.window();
  BijectionReport r;
  const auto classes = enumerate_modules(eng, d);
  const auto W = w_of_dimension_vector(w, d);
  const auto pairs = enumerate_dominant_pairs(w.quiver(), w.height(), W);
  r.classes = classes.size();
  r.pairs = pairs.size();
  std::set<std::map<Slot, std::int64_t>> images;
  for (const auto& c : classes) {
    const DominantPair p = module_to_pair(eng, c);
    if (!check_dominance(w.quiver(), w.height(), p)) r.problems.push_back("not dominant: " + format_class(w, c));
    if (p.W != W) r.problems.push_back("W mismatch: " + format_class(w, c));
    if (!images.insert(p.V).second) r.problems.push_back("two classes share V: " + format_class(w, c));
    if (pair_to_module(eng, p) != c) {
      r.roundtrip = false;
      r.problems.push_back("roundtrip failed: " + format_class(w, c));
    }
  }
  for (const auto& p : pairs)
    if (!images.count(p.V)) r.problems.push_back("dominant pair without a class");
  if (r.classes != r.pairs)
    r.problems.push_back(std::to_string(r.classes) + " classes vs " + std::to_string(r.pairs) + " dominant pairs");
  return r;
}

}  // namespace repknit
