#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repknit/checked.hpp"
#include "repknit/error.hpp"

namespace repknit {

// ---------------------------------------------------------------------------
// Dynkin types and quivers
// ---------------------------------------------------------------------------

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  std::string name() const {
    const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
    return f + std::to_string(rank);
  }

  /// Accepts "A4", "D5", "E6", ... (case-insensitive family letter).
  static DynkinType parse(std::string_view text) {
    if (text.size() < 2) throw Error(ErrorCode::ConfigError, "quiver_core", "type: '" + std::string(text) + "'");
    DynkinType t;
    switch (text[0]) {
      case 'A': case 'a': t.family = DynkinFamily::A; break;
      case 'D': case 'd': t.family = DynkinFamily::D; break;
      case 'E': case 'e': t.family = DynkinFamily::E; break;
      default: throw Error(ErrorCode::ConfigError, "quiver_core", "type: unknown family in '" + std::string(text) + "'");
    }
    int r = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') throw Error(ErrorCode::ConfigError, "quiver_core", "type: '" + std::string(text) + "'");
      r = r * 10 + (c - '0');
    }
    t.rank = r;
    const bool ok = (t.family == DynkinFamily::A && r >= 1) || (t.family == DynkinFamily::D && r >= 4) ||
                    (t.family == DynkinFamily::E && r >= 6 && r <= 8);
    if (!ok) throw Error(ErrorCode::ConfigError, "quiver_core", "type: no Dynkin diagram " + std::string(text));
    return t;
  }

  int coxeter_number() const {
    switch (family) {
      case DynkinFamily::A: return rank + 1;
      case DynkinFamily::D: return 2 * rank - 2;
      case DynkinFamily::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    }
    return 0;
  }

  int positive_root_count() const { return rank * coxeter_number() / 2; }
};

struct QuiverArrow {
  int source = 0;
  int target = 0;
};

/// An orientation of a simply-laced Dynkin diagram. Vertex names are the
/// user's strings; internally vertices are dense indices 0..size()-1.
class DynkinQuiver {
 public:
  DynkinQuiver(DynkinType type, std::vector<std::string> names,
               const std::vector<std::pair<std::string, std::string>>& arrows)
      : type_(type), names_(std::move(names)) {
    const int n = static_cast<int>(names_.size());
    if (n != type_.rank)
      throw Error(ErrorCode::InvalidQuiver, "quiver_core",
                  "vertices: type " + type_.name() + " needs " + std::to_string(type_.rank) + " vertices, got " +
                      std::to_string(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (names_[i] == names_[j]) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "vertices: duplicate '" + names_[i] + "'");
    for (const auto& [s, t] : arrows) {
      auto si = index_of(s);
      auto ti = index_of(t);
      if (!si) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: unknown vertex '" + s + "'");
      if (!ti) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: unknown vertex '" + t + "'");
      if (*si == *ti) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: loop at '" + s + "'");
      arrows_.push_back({*si, *ti});
    }
    build_adjacency();
    check_shape();
    build_reachability();
  }

  const DynkinType& type() const { return type_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<QuiverArrow>& arrows() const { return arrows_; }
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(i); }
  const std::vector<int>& out_arrows(int i) const { return out_.at(i); }
  const std::vector<int>& in_arrows(int i) const { return in_.at(i); }
  int coxeter_number() const { return type_.coxeter_number(); }

  std::optional<int> index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  /// Whether a (possibly trivial) path from -> to exists. Paths are unique.
  bool has_path(int from, int to) const { return reach_[from][to]; }

  /// Vertex sequence of the unique path from -> to (empty if none).
  std::vector<int> path(int from, int to) const {
    if (!has_path(from, to)) return {};
    std::vector<int> seq{from};
    int cur = from;
    while (cur != to) {
      for (int a : out_[cur]) {
        if (reach_[arrows_[a].target][to]) {
          cur = arrows_[a].target;
          break;
        }
      }
      seq.push_back(cur);
    }
    return seq;
  }

  int path_length(int from, int to) const { return static_cast<int>(path(from, to).size()) - 1; }

  /// Arrow index i -> j, if any.
  std::optional<int> arrow_between(int i, int j) const {
    for (int a : out_[i])
      if (arrows_[a].target == j) return a;
    return std::nullopt;
  }

 private:
  void build_adjacency() {
    const int n = size();
    neighbors_.assign(n, {});
    out_.assign(n, {});
    in_.assign(n, {});
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
      const auto [s, t] = arrows_[a];
      if (std::find(neighbors_[s].begin(), neighbors_[s].end(), t) != neighbors_[s].end())
        throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: multiple edge between '" + names_[s] + "' and '" + names_[t] + "'");
      neighbors_[s].push_back(t);
      neighbors_[t].push_back(s);
      out_[s].push_back(a);
      in_[t].push_back(a);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  // Connected tree whose branch pattern matches the declared type.
  void check_shape() const {
    const int n = size();
    if (static_cast<int>(arrows_.size()) != n - 1)
      throw Error(ErrorCode::InvalidQuiver, "quiver_core",
                  "arrows: a Dynkin tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) + " edges");
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors_[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != n) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: underlying graph is disconnected");

    std::vector<int> branch;
    for (int v = 0; v < n; ++v) {
      const auto deg = neighbors_[v].size();
      if (deg > 3) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: vertex '" + names_[v] + "' has degree > 3");
      if (deg == 3) branch.push_back(v);
    }
    if (type_.family == DynkinFamily::A) {
      if (!branch.empty()) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: type A must be a path");
      return;
    }
    if (branch.size() != 1)
      throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: type " + type_.name() + " needs exactly one branch vertex");
    std::vector<int> arms;
    const int centre = branch.front();
    for (int start : neighbors_[centre]) {
      int len = 1, prev = centre, cur = start;
      while (neighbors_[cur].size() == 2) {
        int next = neighbors_[cur][0] == prev ? neighbors_[cur][1] : neighbors_[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    std::vector<int> want;
    if (type_.family == DynkinFamily::D) want = {1, 1, n - 3};
    else want = {1, 2, n - 4};
    std::sort(want.begin(), want.end());
    if (arms != want) throw Error(ErrorCode::InvalidQuiver, "quiver_core", "arrows: arm lengths do not match type " + type_.name());
  }

  void build_reachability() {
    const int n = size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
      std::vector<int> stack{s};
      reach_[s][s] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : out_[v]) {
          int w = arrows_[a].target;
          if (!reach_[s][w]) {
            reach_[s][w] = true;
            stack.push_back(w);
          }
        }
      }
    }
  }

  DynkinType type_;
  std::vector<std::string> names_;
  std::vector<QuiverArrow> arrows_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<bool>> reach_;
};

/// A path of Q identified by its endpoints (paths in a tree are unique).
struct QPath {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const QPath&, const QPath&) = default;
};

/// All paths that cannot be extended on either side: source-to-sink paths.
inline std::vector<QPath> maximal_paths(const DynkinQuiver& q) {
  std::vector<QPath> out;
  for (int i = 0; i < q.size(); ++i) {
    if (!q.in_arrows(i).empty()) continue;
    for (int j = 0; j < q.size(); ++j)
      if (q.out_arrows(j).empty() && q.has_path(i, j)) out.push_back({i, j});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Height functions and slots of the quiver with projective-parity slots
// ---------------------------------------------------------------------------

struct HeightFunction {
  std::vector<int> xi;
  int operator[](int i) const { return xi.at(i); }
};

inline void validate_height_function(const DynkinQuiver& q, const HeightFunction& h) {
  if (static_cast<int>(h.xi.size()) != q.size())
    throw Error(ErrorCode::HeightMismatch, "quiver_core",
                "height: defined on " + std::to_string(h.xi.size()) + " of " + std::to_string(q.size()) + " vertices");
  for (const auto& a : q.arrows())
    if (h[a.target] != h[a.source] - 1)
      throw Error(ErrorCode::HeightMismatch, "quiver_core", "arrow " + q.name(a.source) + "->" + q.name(a.target));
}

/// Some valid height function (the one with min value 0).
inline HeightFunction default_height(const DynkinQuiver& q) {
  std::vector<int> xi(q.size(), 0);
  std::vector<bool> seen(q.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : q.out_arrows(v)) {
      int w = q.arrows()[a].target;
      if (!seen[w]) { xi[w] = xi[v] - 1; seen[w] = true; stack.push_back(w); }
    }
    for (int a : q.in_arrows(v)) {
      int w = q.arrows()[a].source;
      if (!seen[w]) { xi[w] = xi[v] + 1; seen[w] = true; stack.push_back(w); }
    }
  }
  int lo = *std::min_element(xi.begin(), xi.end());
  for (auto& x : xi) x -= lo;
  return {xi};
}

struct Slot {
  int column = 0;
  int level = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class SlotKind { Stable, Projective };

inline SlotKind slot_kind(const HeightFunction& h, Slot s) {
  const int d = s.level - h[s.column];
  return (d % 2 == 0) ? SlotKind::Stable : SlotKind::Projective;
}

inline bool is_stable(const HeightFunction& h, Slot s) { return slot_kind(h, s) == SlotKind::Stable; }

/// Half-open integer interval [lo, hi).
struct LevelRange {
  int lo = 0;
  int hi = 0;
  bool contains(int n) const { return n >= lo && n < hi; }
  bool empty() const { return hi <= lo; }
  int size() const { return empty() ? 0 : hi - lo; }
};

enum class GammaArrowKind {
  Down,     // (c, n) : (i, n) -> (j, n-1) for c : i -> j
  DownBar,  // (c-bar, n) : (j, n) -> (i, n-1) for c : i -> j
  A,        // a_(i,n+1) : (i, n+1) -> (i, n)
  B,        // b_(i,n)   : (i, n)   -> (i, n-1)
};

struct GammaArrow {
  Slot source;
  Slot target;
  GammaArrowKind kind;
  int quiver_arrow = -1;  // for Down / DownBar
};

/// One preprojective-type relation at a stable slot `top`: a signed sum of
/// the length-two paths top -> middle -> bottom, bottom = (i, n-2).
struct GammaRelation {
  Slot top;
  Slot bottom;
  std::vector<std::pair<int, Slot>> terms;  // (sign, middle slot)
};

struct GammaHatWindow {
  LevelRange range;
  std::vector<Slot> slots;
  std::vector<GammaArrow> arrows;
  std::vector<GammaRelation> relations;
};

/// Relation at a stable slot (i, n): the path through the projective slot
/// (i, n-1) with sign +1, through (j, n-1) with +1 when c : i -> j and -1 when
/// c : j -> i.
inline GammaRelation gamma_relation_at(const DynkinQuiver& q, Slot top) {
  GammaRelation rel{top, {top.column, top.level - 2}, {}};
  rel.terms.push_back({+1, {top.column, top.level - 1}});
  for (int j : q.neighbors(top.column)) {
    const int sign = q.arrow_between(top.column, j) ? +1 : -1;
    rel.terms.push_back({sign, {j, top.level - 1}});
  }
  return rel;
}

/// Out-arrows of a slot in the infinite quiver.
inline std::vector<GammaArrow> gamma_out_arrows(const DynkinQuiver& q, const HeightFunction& h, Slot s) {
  std::vector<GammaArrow> out;
  if (is_stable(h, s)) {
    for (int j : q.neighbors(s.column)) {
      if (auto a = q.arrow_between(s.column, j))
        out.push_back({s, {j, s.level - 1}, GammaArrowKind::Down, *a});
      else
        out.push_back({s, {j, s.level - 1}, GammaArrowKind::DownBar, *q.arrow_between(j, s.column)});
    }
    out.push_back({s, {s.column, s.level - 1}, GammaArrowKind::B, -1});
  } else {
    out.push_back({s, {s.column, s.level - 1}, GammaArrowKind::A, -1});
  }
  return out;
}

inline GammaHatWindow build_gamma_hat(const DynkinQuiver& q, const HeightFunction& h, LevelRange range) {
  validate_height_function(q, h);
  GammaHatWindow w;
  w.range = range;
  if (range.empty()) return w;
  for (int n = range.hi - 1; n >= range.lo; --n)
    for (int i = 0; i < q.size(); ++i) w.slots.push_back({i, n});
  for (const Slot& s : w.slots) {
    for (auto& a : gamma_out_arrows(q, h, s))
      if (range.contains(a.target.level)) w.arrows.push_back(a);
    if (is_stable(h, s) && range.contains(s.level - 2)) w.relations.push_back(gamma_relation_at(q, s));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Vertices of the repetitive quiver and dimension vectors
// ---------------------------------------------------------------------------

/// The vertex i[m] of the repetitive quiver.
struct RepVertex {
  int base = 0;
  int degree = 0;
  friend auto operator<=>(const RepVertex&, const RepVertex&) = default;
};

/// Degree-major order, the base index breaks ties.
struct RepVertexDegreeLess {
  bool operator()(const RepVertex& a, const RepVertex& b) const {
    return std::pair(a.degree, a.base) < std::pair(b.degree, b.base);
  }
};

inline std::string format_vertex(const DynkinQuiver& q, RepVertex v) {
  return q.name(v.base) + "[" + std::to_string(v.degree) + "]";
}

inline RepVertex parse_vertex(const DynkinQuiver& q, std::string_view text) {
  const auto open = text.rfind('[');
  if (open == std::string_view::npos || text.back() != ']')
    throw Error(ErrorCode::ConfigError, "quiver_core", "vertex '" + std::string(text) + "' is not of the form name[degree]");
  const auto name = text.substr(0, open);
  const auto idx = q.index_of(name);
  if (!idx) throw Error(ErrorCode::ConfigError, "quiver_core", "vertex '" + std::string(text) + "': unknown name");
  const std::string deg(text.substr(open + 1, text.size() - open - 2));
  try {
    std::size_t used = 0;
    int d = std::stoi(deg, &used);
    if (used != deg.size()) throw std::invalid_argument(deg);
    return {*idx, d};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "quiver_core", "vertex '" + std::string(text) + "': bad degree");
  }
}

/// Finitely supported function RepVertex -> integer. Zero entries are never
/// stored, so equality is structural. Module dimension vectors are
/// nonnegative; intermediate differences may be negative.
class DimVector {
 public:
  using Map = std::map<RepVertex, std::int64_t, RepVertexDegreeLess>;

  DimVector() = default;
  DimVector(std::initializer_list<std::pair<const RepVertex, std::int64_t>> init) {
    for (const auto& [v, c] : init) add(v, c);
  }

  static DimVector unit(RepVertex v) {
    DimVector d;
    d.add(v, 1);
    return d;
  }

  std::int64_t operator[](RepVertex v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
  }

  void add(RepVertex v, std::int64_t c) {
    if (c == 0) return;
    auto& slot = entries_[v];
    slot = checked::add(slot, c);
    if (slot == 0) entries_.erase(v);
  }

  const Map& entries() const& { return entries_; }
  Map entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [v, c] : entries_) t = checked::add(t, c);
    return t;
  }

  bool nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second >= 0; });
  }

  /// Componentwise <=.
  bool fits_in(const DimVector& other) const {
    for (const auto& [v, c] : entries_)
      if (c > other[v]) return false;
    return true;
  }

  int min_degree() const { return entries_.empty() ? 0 : entries_.begin()->first.degree; }
  int max_degree() const { return entries_.empty() ? 0 : entries_.rbegin()->first.degree; }

  DimVector& operator+=(const DimVector& o) {
    for (const auto& [v, c] : o.entries_) add(v, c);
    return *this;
  }
  DimVector& operator-=(const DimVector& o) {
    for (const auto& [v, c] : o.entries_) add(v, checked::sub(0, c));
    return *this;
  }
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(std::int64_t k, const DimVector& d) {
    DimVector out;
    for (const auto& [v, c] : d.entries_) out.add(v, checked::mul(k, c));
    return out;
  }
  friend bool operator==(const DimVector& a, const DimVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const DimVector& a, const DimVector& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return RepVertexDegreeLess{}(x.first, y.first);
                                          return x.second < y.second;
                                        });
  }

 private:
  Map entries_;
};

inline std::string format_dim(const DynkinQuiver& q, const DimVector& d) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, c] : d.entries()) {
    if (!first) os << ",";
    first = false;
    os << format_vertex(q, v);
    if (c != 1) os << ":" << c;
  }
  os << "}";
  return os.str();
}

/// Dimension vector of the indecomposable projective at i[m]: one at j[m] for
/// every path i -> j, one at j[m+1] for every path j -> i.
inline DimVector projective_dim_vector(const DynkinQuiver& q, RepVertex x) {
  DimVector d;
  for (int j = 0; j < q.size(); ++j) {
    if (q.has_path(x.base, j)) d.add({j, x.degree}, 1);
    if (q.has_path(j, x.base)) d.add({j, x.degree + 1}, 1);
  }
  return d;
}

/// Socle vertex of the projective at i[m].
inline RepVertex projective_socle(RepVertex x) { return {x.base, x.degree + 1}; }

// ---------------------------------------------------------------------------
// Presentation of the repetitive algebra by quiver and relations
// ---------------------------------------------------------------------------

struct RepArrow {
  RepVertex source;
  RepVertex target;
  bool connecting = false;
  int quiver_arrow = -1;  // ordinary arrows
  QPath maximal{};        // connecting arrows: w* for the maximal path w
};

/// A path in the repetitive quiver as the sequence of arrow indices traversed.
using RepPath = std::vector<int>;

struct RepRelation {
  std::vector<std::pair<int, RepPath>> terms;  // (coefficient, path)
  bool commutation = false;
};

struct RepetitivePresentation {
  LevelRange degrees;
  std::vector<RepVertex> vertices;
  std::vector<RepArrow> arrows;
  std::vector<RepRelation> relations;

  std::optional<int> vertex_index(RepVertex v) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (vertices[i] == v) return i;
    return std::nullopt;
  }
};

namespace detail {

// One step of a path in the repetitive quiver, in degree-free form: an
// ordinary arrow carries the degree of its window copy, a connecting arrow
// raises the degree by one.
struct FullPathStep {
  bool connecting;
  int quiver_arrow;
  QPath maximal;
  friend bool operator==(const FullPathStep&, const FullPathStep&) = default;
};

// Full paths starting at k[0]: v, then w*, then u, for every maximal w = v u
// passing through k. Stored as step sequences.
inline std::vector<std::vector<FullPathStep>> full_paths(const DynkinQuiver& q) {
  std::vector<std::vector<FullPathStep>> out;
  for (const QPath& w : maximal_paths(q)) {
    const auto seq = q.path(w.from, w.to);
    for (std::size_t split = 0; split < seq.size(); ++split) {
      std::vector<FullPathStep> steps;
      for (std::size_t t = split; t + 1 < seq.size(); ++t)
        steps.push_back({false, *q.arrow_between(seq[t], seq[t + 1]), {}});
      steps.push_back({true, -1, w});
      for (std::size_t t = 0; t < split; ++t) steps.push_back({false, *q.arrow_between(seq[t], seq[t + 1]), {}});
      out.push_back(std::move(steps));
    }
  }
  return out;
}

inline bool is_subpath_of_full_path(const std::vector<FullPathStep>& path,
                                    const std::vector<std::vector<FullPathStep>>& fulls) {
  for (const auto& f : fulls) {
    if (path.size() > f.size()) continue;
    for (std::size_t off = 0; off + path.size() <= f.size(); ++off)
      if (std::equal(path.begin(), path.end(), f.begin() + static_cast<long>(off))) return true;
  }
  return false;
}

}  // namespace detail

/// Quiver and relations of the repetitive algebra over the degree window
/// [lo, hi). Connecting arrows run j[m] -> i[m+1] for every maximal path
/// w : i -> j. Zero relations are the minimal paths that are not subpaths of
/// a full path; each pair of maximal paths sharing a segment yields one
/// commutation relation with coefficients (+1, -1).
inline RepetitivePresentation build_repetitive_presentation(const DynkinQuiver& q, LevelRange degrees) {
  RepetitivePresentation p;
  p.degrees = degrees;
  for (int m = degrees.lo; m < degrees.hi; ++m)
    for (int i = 0; i < q.size(); ++i) p.vertices.push_back({i, m});
  const auto maxes = maximal_paths(q);
  std::map<std::pair<int, int>, int> ordinary_index;      // (arrow, degree)
  std::map<std::pair<QPath, int>, int> connecting_index;  // (w, degree)
  for (int m = degrees.lo; m < degrees.hi; ++m) {
    for (int a = 0; a < static_cast<int>(q.arrows().size()); ++a) {
      ordinary_index[{a, m}] = static_cast<int>(p.arrows.size());
      p.arrows.push_back({{q.arrows()[a].source, m}, {q.arrows()[a].target, m}, false, a, {}});
    }
    if (m + 1 < degrees.hi)
      for (const QPath& w : maxes) {
        connecting_index[{w, m}] = static_cast<int>(p.arrows.size());
        p.arrows.push_back({{w.to, m}, {w.from, m + 1}, true, -1, w});
      }
  }

  const auto fulls = detail::full_paths(q);
  auto step_of = [&](int arrow) {
    const RepArrow& a = p.arrows[arrow];
    return detail::FullPathStep{a.connecting, a.quiver_arrow, a.maximal};
  };

  // Minimal zero relations by depth-first extension.
  const int n_arrows = static_cast<int>(p.arrows.size());
  std::vector<std::vector<int>> out_of(p.vertices.size());
  auto vidx = [&](RepVertex v) { return (v.degree - degrees.lo) * q.size() + v.base; };
  for (int a = 0; a < n_arrows; ++a) out_of[vidx(p.arrows[a].source)].push_back(a);

  std::vector<int> path;
  std::vector<detail::FullPathStep> steps;
  auto dfs = [&](auto&& self) -> void {
    const RepVertex end = p.arrows[path.back()].target;
    for (int a : out_of[vidx(end)]) {
      path.push_back(a);
      steps.push_back(step_of(a));
      if (!detail::is_subpath_of_full_path(steps, fulls)) {
        std::vector<detail::FullPathStep> tail(steps.begin() + 1, steps.end());
        if (detail::is_subpath_of_full_path(tail, fulls)) p.relations.push_back({{{1, path}}, false});
      } else {
        self(self);
      }
      path.pop_back();
      steps.pop_back();
    }
  };
  for (int a = 0; a < n_arrows; ++a) {
    path = {a};
    steps = {step_of(a)};
    dfs(dfs);
  }

  // Commutation relations: for maximal paths w1 != w2 whose intersection is a
  // nonempty segment v (from vs to ve), u1 w1* x1 - u2 w2* x2 where w = x v u.
  for (std::size_t s = 0; s < maxes.size(); ++s)
    for (std::size_t t = s + 1; t < maxes.size(); ++t) {
      const auto seq1 = q.path(maxes[s].from, maxes[s].to);
      const auto seq2 = q.path(maxes[t].from, maxes[t].to);
      std::vector<int> common;
      for (int v : seq1)
        if (std::find(seq2.begin(), seq2.end(), v) != seq2.end()) common.push_back(v);
      if (common.empty()) continue;
      const int vs = common.front(), ve = common.back();
      for (int m = degrees.lo; m + 1 < degrees.hi; ++m) {
        RepRelation rel;
        rel.commutation = true;
        for (int which = 0; which < 2; ++which) {
          const QPath& w = which == 0 ? maxes[s] : maxes[t];
          const auto& seq = which == 0 ? seq1 : seq2;
          RepPath rp;
          // x : ve -> w.to at degree m
          auto pos_ve = std::find(seq.begin(), seq.end(), ve) - seq.begin();
          for (auto k = pos_ve; k + 1 < static_cast<long>(seq.size()); ++k)
            rp.push_back(ordinary_index.at({*q.arrow_between(seq[k], seq[k + 1]), m}));
          rp.push_back(connecting_index.at({w, m}));
          // u : w.from -> vs at degree m+1
          auto pos_vs = std::find(seq.begin(), seq.end(), vs) - seq.begin();
          for (long k = 0; k < pos_vs; ++k)
            rp.push_back(ordinary_index.at({*q.arrow_between(seq[k], seq[k + 1]), m + 1}));
          rel.terms.push_back({which == 0 ? +1 : -1, rp});
        }
        p.relations.push_back(std::move(rel));
      }
    }
  return p;
}

}  // namespace repknit
