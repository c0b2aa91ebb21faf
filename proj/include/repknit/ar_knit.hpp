#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repknit/error.hpp"
#include "repknit/quiver.hpp"

namespace repknit {

enum class VertexKind { Stable, Projective };

/// An indecomposable module of the repetitive algebra, placed at its slot.
struct ARVertex {
  int id = -1;
  Slot slot;
  VertexKind kind = VertexKind::Stable;
  DimVector dim;
  std::optional<RepVertex> projective;  // set iff kind == Projective

  bool is_projective() const { return kind == VertexKind::Projective; }
};

/// The almost split sequence ending at `end`: start -> middles (+ projective) -> end.
struct Mesh {
  int end = -1;
  int start = -1;
  std::vector<int> middles;  // stable middle terms
  int projective = -1;       // projective middle term, -1 if none
};

struct KnitOptions {
  LevelRange range;
  int margin = -1;        // -1: twice the Coxeter number
  int anchor_shift = 0;   // even; the seed section moves up by this many levels
};

inline int default_margin(const DynkinQuiver& q) { return 2 * q.coxeter_number(); }

/// Dimension vector of P_x / soc P_x.
inline DimVector projective_top_quotient(const DynkinQuiver& q, RepVertex x) {
  return projective_dim_vector(q, x) - DimVector::unit(projective_socle(x));
}

/// Dimension vector of rad P_x.
inline DimVector projective_radical(const DynkinQuiver& q, RepVertex x) {
  return projective_dim_vector(q, x) - DimVector::unit(x);
}

/// Finite window of the Auslander-Reiten quiver of the repetitive algebra of
/// a Dynkin quiver, placed inside the slot lattice. Arrows of the AR quiver
/// go from level n-1 to level n; tau lowers the level by two.
class ARWindow {
 public:
  const DynkinQuiver& quiver() const { return q_; }
  const HeightFunction& height() const { return xi_; }
  const LevelRange& range() const { return range_; }
  int margin() const { return margin_; }
  int anchor_shift() const { return anchor_; }
  int coxeter_number() const { return q_.coxeter_number(); }

  const std::vector<ARVertex>& vertices() const { return vertices_; }
  const ARVertex& vertex(int id) const { return vertices_.at(static_cast<std::size_t>(id)); }
  const std::vector<Mesh>& meshes() const { return meshes_; }

  std::optional<int> at(Slot s) const {
    auto it = by_slot_.find(s);
    if (it == by_slot_.end()) return std::nullopt;
    return it->second;
  }

  bool in_range(Slot s) const { return range_.contains(s.level) && s.column >= 0 && s.column < q_.size(); }

  /// Vertex at `s`, or WindowTooSmall if the slot lies outside the window.
  /// A projective slot inside the window may be empty (nullopt).
  std::optional<int> lookup(Slot s, const char* what) const {
    if (!in_range(s))
      throw Error(ErrorCode::WindowTooSmall, "ar_knit",
                  std::string(what) + ": slot (" + q_.name(s.column) + "," + std::to_string(s.level) +
                      ") outside levels [" + std::to_string(range_.lo) + "," + std::to_string(range_.hi) + ")");
    return at(s);
  }

  std::vector<int> stable_ids() const { return ids_of(VertexKind::Stable); }
  std::vector<int> projective_ids() const { return ids_of(VertexKind::Projective); }

  std::optional<int> find_projective(RepVertex x) const {
    auto it = projective_of_.find(x);
    if (it == projective_of_.end()) return std::nullopt;
    return it->second;
  }

  /// The indecomposable with the given dimension vector, if any.
  std::optional<int> find_by_dim(const DimVector& d) const {
    auto [lo, hi] = by_dim_.equal_range(d);
    if (lo == hi) return std::nullopt;
    if (std::next(lo) != hi)
      throw Error(ErrorCode::AmbiguousIdentification, "ar_knit", "dimension vector " + format_dim(q_, d) + " occurs twice");
    return lo->second;
  }

  std::optional<int> mesh_ending_at(int id) const {
    auto it = mesh_of_end_.find(id);
    if (it == mesh_of_end_.end()) return std::nullopt;
    return it->second;
  }

  /// AR translate; WindowTooSmall if the image leaves the window.
  int tau(int id) const {
    const ARVertex& v = stable_vertex(id, "tau");
    const Slot s{v.slot.column, v.slot.level - 2};
    return *lookup(s, "tau");
  }

  int tau_inv(int id) const {
    const ARVertex& v = stable_vertex(id, "tau_inv");
    const Slot s{v.slot.column, v.slot.level + 2};
    return *lookup(s, "tau_inv");
  }

  Slot psi_of_projective(RepVertex x) const {
    auto id = find_projective(x);
    if (!id)
      throw Error(ErrorCode::WindowTooSmall, "ar_knit", "projective " + format_vertex(q_, x) + " not in the knitted window");
    return vertex(*id).slot;
  }

  int psi_inv(Slot s) const {
    auto id = lookup(s, "psi_inv");
    if (!id)
      throw Error(ErrorCode::WindowTooSmall, "ar_knit",
                  "psi_inv: no module at (" + q_.name(s.column) + "," + std::to_string(s.level) + ")");
    return *id;
  }

  /// Levels within `margin` of either end of the window.
  bool in_margin(Slot s) const { return s.level < range_.lo + margin_ || s.level >= range_.hi - margin_; }

  std::string label(int id) const {
    const ARVertex& v = vertex(id);
    if (v.is_projective()) return "P" + format_vertex(q_, *v.projective);
    return format_dim(q_, v.dim);
  }

  std::string slot_label(Slot s) const { return "(" + q_.name(s.column) + "," + std::to_string(s.level) + ")"; }

 private:
  friend ARWindow knit(const DynkinQuiver&, const HeightFunction&, const KnitOptions&);

  ARWindow(DynkinQuiver q, HeightFunction xi) : q_(std::move(q)), xi_(std::move(xi)) {}

  const ARVertex& stable_vertex(int id, const char* what) const {
    const ARVertex& v = vertex(id);
    if (v.is_projective())
      throw Error(ErrorCode::InternalInconsistency, "ar_knit", std::string(what) + " of projective " + label(id));
    return v;
  }

  std::vector<int> ids_of(VertexKind k) const {
    std::vector<int> out;
    for (const auto& v : vertices_)
      if (v.kind == k) out.push_back(v.id);
    return out;
  }

  int add(Slot s, VertexKind kind, DimVector d, std::optional<RepVertex> proj) {
    if (d.empty() || !d.nonnegative())
      throw Error(ErrorCode::InternalInconsistency, "ar_knit",
                  "knitting produced dimension vector " + format_dim(q_, d) + " at " + slot_label(s));
    const int id = static_cast<int>(vertices_.size());
    vertices_.push_back({id, s, kind, d, proj});
    by_slot_[s] = id;
    by_dim_.insert({std::move(d), id});
    if (proj) {
      if (!projective_of_.emplace(*proj, id).second)
        throw Error(ErrorCode::AmbiguousProjectiveInsertion, "ar_knit",
                    "projective " + format_vertex(q_, *proj) + " inserted twice, again at " + slot_label(s));
    }
    return id;
  }

  DynkinQuiver q_;
  HeightFunction xi_;
  LevelRange range_;
  int margin_ = 0;
  int anchor_ = 0;
  std::vector<ARVertex> vertices_;
  std::vector<Mesh> meshes_;
  std::map<Slot, int> by_slot_;
  std::multimap<DimVector, int> by_dim_;
  std::map<RepVertex, int> projective_of_;
  std::map<int, int> mesh_of_end_;
};

/// Embedded kQ-projectives: P_i at slot (i, xi_i), supported in degree 0.
inline std::vector<std::pair<Slot, DimVector>> seed_section(const DynkinQuiver& q, const HeightFunction& xi) {
  validate_height_function(q, xi);
  std::vector<std::pair<Slot, DimVector>> out;
  for (int i = 0; i < q.size(); ++i) {
    DimVector d;
    for (int j = 0; j < q.size(); ++j)
      if (q.has_path(i, j)) d.add({j, 0}, 1);
    out.push_back({{i, xi[i]}, d});
  }
  return out;
}

namespace detail {

// The unique x with f(x) == d, searched over degrees near the support of d.
template <class F>
std::optional<RepVertex> match_projective(const DynkinQuiver& q, const DimVector& d, F&& f, const std::string& where) {
  std::optional<RepVertex> found;
  if (d.empty()) return found;
  for (int m = d.min_degree() - 1; m <= d.max_degree() + 1; ++m)
    for (int b = 0; b < q.size(); ++b) {
      const RepVertex x{b, m};
      if (f(x) != d) continue;
      if (found)
        throw Error(ErrorCode::AmbiguousProjectiveInsertion, "ar_knit",
                    where + ": both " + format_vertex(q, *found) + " and " + format_vertex(q, x) + " match");
      found = x;
    }
  return found;
}

}  // namespace detail

/// Knits the AR quiver over the requested levels, extended if necessary so
/// that it contains the seed section. Forward from the seeds,
/// dim M = sum dim E + dim P - dim tau M, with P inserted exactly when tau M
/// is its radical; backward, dim tau M = sum dim E + dim P - dim M, with P
/// inserted exactly when M is P / soc P.
inline ARWindow knit(const DynkinQuiver& q, const HeightFunction& xi, const KnitOptions& opt) {
  validate_height_function(q, xi);
  if (opt.anchor_shift % 2 != 0)
    throw Error(ErrorCode::ConfigError, "ar_knit", "anchor_shift must be even, got " + std::to_string(opt.anchor_shift));
  ARWindow w(q, xi);
  w.anchor_ = opt.anchor_shift;
  w.margin_ = opt.margin < 0 ? default_margin(q) : opt.margin;

  auto seeds = seed_section(q, xi);
  int seed_lo = seeds.front().first.level + opt.anchor_shift, seed_hi = seed_lo;
  for (auto& [s, d] : seeds) {
    s.level += opt.anchor_shift;
    seed_lo = std::min(seed_lo, s.level);
    seed_hi = std::max(seed_hi, s.level);
  }
  w.range_ = opt.range;
  if (w.range_.empty()) w.range_ = {seed_lo, seed_hi + 1};
  w.range_.lo = std::min(w.range_.lo, seed_lo);
  w.range_.hi = std::max(w.range_.hi, seed_hi + 1);

  for (const auto& [s, d] : seeds) w.add(s, VertexKind::Stable, d, std::nullopt);
  auto seed_level = [&](int i) { return xi[i] + opt.anchor_shift; };

  auto stable_sum = [&](Slot centre) {
    DimVector sum;
    for (int j : q.neighbors(centre.column)) sum += w.vertex(*w.at({j, centre.level})).dim;
    return sum;
  };

  // Forward: levels above the seed section.
  for (int n = seed_lo + 1; n < w.range_.hi; ++n)
    for (int i = 0; i < q.size(); ++i) {
      const Slot s{i, n};
      if (n <= seed_level(i)) continue;
      const Slot below{i, n - 1};
      if (!is_stable(xi, s)) {
        // Projective slot: decide from the stable module just below.
        const DimVector& r = w.vertex(*w.at(below)).dim;
        auto x = detail::match_projective(q, r, [&](RepVertex y) { return projective_radical(q, y); },
                                          "radical at " + w.slot_label(below));
        if (x) w.add(s, VertexKind::Projective, projective_dim_vector(q, *x), x);
        continue;
      }
      const int start = *w.at({i, n - 2});
      DimVector d = stable_sum({i, n - 1});
      auto p = w.at(below);
      if (p) d += w.vertex(*p).dim;
      d -= w.vertex(start).dim;
      w.add(s, VertexKind::Stable, d, std::nullopt);
    }

  // Backward: levels below the seed section.
  for (int n = seed_hi - 1; n >= w.range_.lo; --n)
    for (int i = 0; i < q.size(); ++i) {
      const Slot s{i, n};
      if (n >= seed_level(i)) continue;
      const Slot above{i, n + 1};
      if (!is_stable(xi, s)) {
        const DimVector& top = w.vertex(*w.at(above)).dim;
        auto x = detail::match_projective(q, top, [&](RepVertex y) { return projective_top_quotient(q, y); },
                                          "top quotient at " + w.slot_label(above));
        if (x) w.add(s, VertexKind::Projective, projective_dim_vector(q, *x), x);
        continue;
      }
      const int end = *w.at({i, n + 2});
      DimVector d = stable_sum({i, n + 1});
      auto p = w.at(above);
      if (p) d += w.vertex(*p).dim;
      d -= w.vertex(end).dim;
      w.add(s, VertexKind::Stable, d, std::nullopt);
    }

  // Meshes, and the two-sided check on every projective.
  for (const ARVertex& v : w.vertices_) {
    if (v.is_projective()) {
      const Slot below{v.slot.column, v.slot.level - 1}, above{v.slot.column, v.slot.level + 1};
      if (w.in_range(below) && w.vertex(*w.at(below)).dim != projective_radical(q, *v.projective))
        throw Error(ErrorCode::InternalInconsistency, "ar_knit", "radical mismatch below " + w.label(v.id));
      if (w.in_range(above) && w.vertex(*w.at(above)).dim != projective_top_quotient(q, *v.projective))
        throw Error(ErrorCode::InternalInconsistency, "ar_knit", "top quotient mismatch above " + w.label(v.id));
      continue;
    }
    const Slot start{v.slot.column, v.slot.level - 2};
    if (!w.in_range(start)) continue;
    Mesh m;
    m.end = v.id;
    m.start = *w.at(start);
    for (int j : q.neighbors(v.slot.column)) m.middles.push_back(*w.at({j, v.slot.level - 1}));
    if (auto p = w.at({v.slot.column, v.slot.level - 1})) m.projective = *p;
    w.mesh_of_end_[v.id] = static_cast<int>(w.meshes_.size());
    w.meshes_.push_back(std::move(m));
  }
  return w;
}

/// Levels of the projectives P_{i[0]} for the given seed anchoring.
inline std::vector<int> degree_zero_projective_levels(const DynkinQuiver& q, const HeightFunction& xi, int anchor_shift = 0) {
  const int h = q.coxeter_number();
  int lo = xi[0], hi = xi[0];
  for (int i = 0; i < q.size(); ++i) {
    lo = std::min(lo, xi[i]);
    hi = std::max(hi, xi[i]);
  }
  const ARWindow probe = knit(q, xi, KnitOptions{{lo + anchor_shift - 2 * h, hi + anchor_shift + 2 * h + 1}, 0, anchor_shift});
  std::vector<int> levels;
  for (int i = 0; i < q.size(); ++i) levels.push_back(probe.psi_of_projective({i, 0}).level);
  return levels;
}

/// Window containing every indecomposable whose support meets the degrees
/// [degrees.lo, degrees.hi), with `margin` extra levels on both sides. The
/// projective P_{i[m]} sits 2h-2 levels below P_{i[m-1]}.
inline ARWindow knit_for_degrees(const DynkinQuiver& q, const HeightFunction& xi, LevelRange degrees, int margin = -1,
                                 int anchor_shift = 0) {
  if (degrees.empty()) degrees = {0, 1};
  if (margin < 0) margin = default_margin(q);
  const int period = 2 * q.coxeter_number() - 2;
  const auto base = degree_zero_projective_levels(q, xi, anchor_shift);
  const int top_deg = degrees.lo - 2, bottom_deg = degrees.hi;
  int lo = base[0] - bottom_deg * period, hi = base[0] - top_deg * period;
  for (int l : base) {
    lo = std::min(lo, l - bottom_deg * period);
    hi = std::max(hi, l - top_deg * period);
  }
  return knit(q, xi, KnitOptions{{lo - margin, hi + margin + 1}, margin, anchor_shift});
}

}  // namespace repknit
