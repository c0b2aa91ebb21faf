#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "repknit/ar_knit.hpp"
#include "repknit/bound_quiver.hpp"
#include "repknit/error.hpp"
#include "repknit/exact_linear.hpp"
#include "repknit/quiver.hpp"
#include "repknit/roots.hpp"

namespace repknit {

/// Slots sorted by level descending, then column.
inline std::vector<Slot> sort_sigma(std::vector<Slot> s) {
  std::sort(s.begin(), s.end(), [](Slot a, Slot b) { return a.level != b.level ? a.level > b.level : a.column < b.column; });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// The full subquiver of the slot quiver on all vertices lying on a path
/// between two elements of sigma, with the relations whose endpoints lie in
/// it. Vertex k of `quiver` is `slots[k]`.
struct GammaHull {
  std::vector<Slot> sigma;
  std::vector<Slot> slots;
  std::map<Slot, int> index;
  BoundQuiver quiver;
};

struct HullOptions {
  int path_length_cap = -1;  // -1: number of hull vertices
  int max_vertices = 20000;
  // When set, projective slots outside this set are dropped from the hull,
  // and so is the corresponding term of each relation.
  std::optional<std::set<Slot>> projective_slots;
};

inline GammaHull convex_hull(const DynkinQuiver& q, const HeightFunction& xi, std::vector<Slot> sigma, HullOptions opt = {}) {
  validate_height_function(q, xi);
  GammaHull h;
  h.sigma = sort_sigma(std::move(sigma));
  for (Slot s : h.sigma) {
    if (is_stable(xi, s))
      throw Error(ErrorCode::ConfigError, "projectivization", "sigma contains the stable slot (" + q.name(s.column) + "," + std::to_string(s.level) + ")");
  }
  if (h.sigma.empty()) return h;
  const int top = h.sigma.front().level, bottom = h.sigma.back().level;
  const LevelRange range{bottom, top + 1};
  auto allowed = [&](Slot s) { return is_stable(xi, s) || !opt.projective_slots || opt.projective_slots->count(s) > 0; };
  for (Slot s : h.sigma)
    if (!allowed(s))
      throw Error(ErrorCode::ConfigError, "projectivization", "sigma slot (" + q.name(s.column) + "," + std::to_string(s.level) + ") is not an allowed projective slot");
  std::set<Slot> down, up;
  // Forward closure from sigma (arrows lower the level).
  std::vector<Slot> stack(h.sigma.begin(), h.sigma.end());
  down.insert(h.sigma.begin(), h.sigma.end());
  while (!stack.empty()) {
    Slot s = stack.back();
    stack.pop_back();
    for (const auto& a : gamma_out_arrows(q, xi, s))
      if (range.contains(a.target.level) && allowed(a.target) && down.insert(a.target).second) {
        if (static_cast<int>(down.size()) > opt.max_vertices)
          throw Error(ErrorCode::CapExceeded, "projectivization", "hull exceeds " + std::to_string(opt.max_vertices) + " vertices");
        stack.push_back(a.target);
      }
  }
  // Backward closure: a slot is kept if some sigma element is reachable.
  std::set<Slot> sig(h.sigma.begin(), h.sigma.end());
  std::vector<Slot> by_level(down.begin(), down.end());
  std::sort(by_level.begin(), by_level.end(), [](Slot a, Slot b) { return a.level < b.level; });
  for (Slot s : by_level) {
    bool keep = sig.count(s) > 0;
    for (const auto& a : gamma_out_arrows(q, xi, s))
      if (up.count(a.target)) keep = true;
    if (keep) up.insert(s);
  }
  h.slots = sort_sigma(std::vector<Slot>(up.begin(), up.end()));
  const int cap = opt.path_length_cap < 0 ? static_cast<int>(h.slots.size()) : opt.path_length_cap;
  if (top - bottom > cap)
    throw Error(ErrorCode::CapExceeded, "projectivization",
                "paths of length " + std::to_string(top - bottom) + " exceed the cap " + std::to_string(cap));
  for (int k = 0; k < static_cast<int>(h.slots.size()); ++k) h.index[h.slots[k]] = k;
  auto& bq = h.quiver;
  bq.vertex_count = static_cast<int>(h.slots.size());
  for (Slot s : h.slots) bq.vertex_names.push_back("(" + q.name(s.column) + "," + std::to_string(s.level) + ")");
  std::map<std::pair<Slot, Slot>, int> arrow_of;
  for (Slot s : h.slots)
    for (const auto& a : gamma_out_arrows(q, xi, s)) {
      auto t = h.index.find(a.target);
      if (t == h.index.end()) continue;
      arrow_of[{s, a.target}] = static_cast<int>(bq.arrows.size());
      bq.arrows.push_back({h.index.at(s), t->second, bq.vertex_names[h.index.at(s)] + "->" + bq.vertex_names[t->second]});
    }
  for (Slot s : h.slots) {
    if (!is_stable(xi, s) || !h.index.count({s.column, s.level - 2})) continue;
    const GammaRelation rel = gamma_relation_at(q, s);
    BoundQuiver::Relation r;
    for (const auto& [sign, mid] : rel.terms)
      if (h.index.count(mid)) r.terms.push_back({Rational(sign), {arrow_of.at({s, mid}), arrow_of.at({mid, rel.bottom})}});
    bq.relations.push_back(std::move(r));
  }
  return h;
}

/// dim e_y Lambda e_x for x, y in sigma; all paths x -> y have length
/// level(x) - level(y).
struct GradedEntry {
  Slot from;
  Slot to;
  int length = 0;
  std::size_t dim = 0;
};

struct SigmaArrow {
  int from = 0;  // index into sigma
  int to = 0;
  std::vector<int> hull_path;  // representative path in the hull quiver
  std::string name;
};

struct SigmaAlgebra {
  GammaHull hull;
  std::vector<GradedEntry> table;  // every ordered pair with nonzero dim
  std::vector<SigmaArrow> arrows;
  std::vector<std::pair<int, int>> length_two;       // (first arrow, second arrow)
  std::vector<std::vector<Rational>> relations;      // kernel basis over length_two
  std::size_t length_two_rank = 0;
  std::size_t total_dim = 0;

  std::size_t dim(int x, int y) const {
    for (const auto& e : table)
      if (e.from == hull.sigma[x] && e.to == hull.sigma[y]) return e.dim;
    return 0;
  }
};

namespace detail {

inline std::vector<std::vector<Rational>> span_rows(std::vector<std::vector<Rational>> rows, std::size_t n) {
  if (rows.empty() || n == 0) return {};
  Matrix m = Matrix::from_rows(rows, n);
  const auto piv = row_reduce(m);
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::vector<Rational> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = m(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::string arrow_letter(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return s;
}

}  // namespace detail

/// Graded dimensions, quiver and length-two relations of e_Sigma Lambda e_Sigma.
/// Arrows x -> y span a complement of the compositions through other
/// elements of sigma; each is represented by a basis path of the hull.
inline SigmaAlgebra sigma_algebra(const DynkinQuiver& q, const HeightFunction& xi, std::vector<Slot> sigma, HullOptions opt = {}) {
  SigmaAlgebra out;
  out.hull = convex_hull(q, xi, std::move(sigma), opt);
  const auto& h = out.hull;
  const int n = static_cast<int>(h.sigma.size());
  std::vector<BoundProjective> proj;
  proj.reserve(n);
  for (int k = 0; k < n; ++k) proj.emplace_back(h.quiver, h.index.at(h.sigma[k]));
  auto vid = [&](int k) { return h.index.at(h.sigma[k]); };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t d = proj[x].dim(vid(y));
      if (d == 0) continue;
      out.table.push_back({h.sigma[x], h.sigma[y], h.sigma[x].level - h.sigma[y].level, d});
      out.total_dim += d;
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t d = proj[x].dim(vid(y));
      if (d == 0) continue;
      std::vector<std::vector<Rational>> through;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const std::size_t dz = proj[x].dim(vid(z));
        for (std::size_t b = 0; b < proj[z].dim(vid(y)); ++b) {
          const auto& p = proj[z].basis_path(vid(y), b);
          for (std::size_t u = 0; u < dz; ++u) {
            std::vector<Rational> e(dz);
            e[u] = 1;
            through.push_back(proj[x].apply_path(p, e));
          }
        }
      }
      auto span = detail::span_rows(through, d);
      for (std::size_t b = 0; b < d; ++b) {
        std::vector<Rational> e(d);
        e[b] = 1;
        auto trial = span;
        trial.push_back(e);
        if (rank(Matrix::from_rows(trial, d)) > span.size()) {
          span = detail::span_rows(trial, d);
          out.arrows.push_back({x, y, proj[x].basis_path(vid(y), b), ""});
        }
      }
    }
  for (std::size_t k = 0; k < out.arrows.size(); ++k) out.arrows[k].name = detail::arrow_letter(k);

  // Length-two paths and their images in the blocks e_y Lambda e_x.
  std::map<std::pair<int, int>, std::size_t> block_offset;
  std::size_t rows = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      block_offset[{x, y}] = rows;
      rows += proj[x].dim(vid(y));
    }
  std::vector<std::vector<Rational>> columns;
  for (std::size_t a = 0; a < out.arrows.size(); ++a)
    for (std::size_t b = 0; b < out.arrows.size(); ++b) {
      if (out.arrows[a].to != out.arrows[b].from) continue;
      out.length_two.push_back({static_cast<int>(a), static_cast<int>(b)});
      const int x = out.arrows[a].from, y = out.arrows[b].to;
      auto img = proj[x].path_class(out.arrows[a].hull_path);
      img = proj[x].apply_path(out.arrows[b].hull_path, img);
      std::vector<Rational> col(rows);
      for (std::size_t t = 0; t < img.size(); ++t) col[block_offset[{x, y}] + t] = img[t];
      columns.push_back(std::move(col));
    }
  if (!columns.empty()) {
    const Matrix m = Matrix::from_columns(columns, rows);
    out.length_two_rank = rank(m);
    out.relations = nullspace(m);
    for (auto& r : out.relations) {
      auto it = std::find_if(r.begin(), r.end(), [](const Rational& c) { return c != 0; });
      const Rational lead = *it;
      for (auto& c : r) c /= lead;
    }
  }
  return out;
}

/// Total dimension of e_Sigma Lambda e_Sigma by explicit path elimination,
/// pair by pair.
inline std::size_t sigma_total_dim_by_elimination(const SigmaAlgebra& a) {
  std::size_t t = 0;
  for (Slot x : a.hull.sigma)
    for (Slot y : a.hull.sigma) t += path_space_dim_by_elimination(a.hull.quiver, a.hull.index.at(x), a.hull.index.at(y));
  return t;
}

/// Renames arrows by their endpoints; with several arrows between the same
/// pair, the names are taken in order.
inline void rename_arrows(SigmaAlgebra& a, const std::vector<std::pair<std::pair<Slot, Slot>, std::string>>& names) {
  std::map<std::pair<Slot, Slot>, std::size_t> used;
  for (const auto& [ends, name] : names) {
    std::size_t seen = 0;
    bool done = false;
    for (auto& ar : a.arrows) {
      if (a.hull.sigma[ar.from] != ends.first || a.hull.sigma[ar.to] != ends.second) continue;
      if (seen++ == used[ends]) {
        ar.name = name;
        ++used[ends];
        done = true;
        break;
      }
    }
    if (!done) throw Error(ErrorCode::ConfigError, "projectivization", "no arrow left to name " + name);
  }
}

inline std::string format_length_two(const SigmaAlgebra& a, std::size_t k) {
  const auto [first, second] = a.length_two[k];
  return a.arrows[second].name + a.arrows[first].name;
}

/// "fa + de", "fa - 2 de".
inline std::string format_relation(const SigmaAlgebra& a, const std::vector<Rational>& r) {
  std::string out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    Rational c = r[k];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += c.str() + " ";
    out += format_length_two(a, k);
  }
  return out.empty() ? "0" : out;
}

/// Number of orbits of representations of dimension vector d when
/// e_Sigma Lambda e_Sigma is the path algebra of a Dynkin quiver: the number
/// of ways to write d as a sum of positive roots.
inline std::int64_t hereditary_orbit_count(const SigmaAlgebra& a, const std::vector<std::int64_t>& d) {
  const int n = static_cast<int>(a.hull.sigma.size());
  if (static_cast<int>(d.size()) != n) throw Error(ErrorCode::ConfigError, "projectivization", "dimension vector length");
  if (!a.relations.empty()) throw Error(ErrorCode::ConfigError, "projectivization", "algebra has relations");
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(std::to_string(k));
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& ar : a.arrows) arrows.push_back({names[ar.from], names[ar.to]});
  std::optional<DynkinQuiver> quiver;
  for (const char* fam : {"A", "D", "E"}) {
    try {
      quiver.emplace(DynkinType::parse(fam + std::to_string(n)), names, arrows);
      break;
    } catch (const Error&) {
    }
  }
  if (!quiver) throw Error(ErrorCode::ConfigError, "projectivization", "quiver of the algebra is not Dynkin");
  std::size_t paths = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (quiver->has_path(x, y)) ++paths;
  if (paths != a.total_dim) throw Error(ErrorCode::ConfigError, "projectivization", "algebra is not a path algebra");
  const auto roots = positive_roots(*quiver);
  std::function<std::int64_t(std::size_t, std::vector<std::int64_t>)> count = [&](std::size_t k, std::vector<std::int64_t> rest) {
    if (std::all_of(rest.begin(), rest.end(), [](std::int64_t v) { return v == 0; })) return std::int64_t{1};
    if (k == roots.size()) return std::int64_t{0};
    std::int64_t total = count(k + 1, rest);
    while (true) {
      for (int i = 0; i < n; ++i) rest[i] -= roots[k][i];
      if (std::any_of(rest.begin(), rest.end(), [](std::int64_t v) { return v < 0; })) break;
      total += count(k + 1, rest);
    }
    return total;
  };
  return count(0, d);
}

struct IsoReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// The projective slots that carry a projective module of the window.
inline std::set<Slot> occupied_projective_slots(const ARWindow& w) {
  std::set<Slot> out;
  for (int id : w.projective_ids()) out.insert(w.vertex(id).slot);
  return out;
}

/// For Sigma = psi(proj) over the degrees [lo, hi): compares
/// dim e_{psi P_b} Lambda e_{psi P_a} with dim Hom(P_b, P_a) = (dim P_a)_b.
/// With `ar_image_only` the hull keeps only the projective slots occupied by
/// the embedded AR quiver (the mesh category of mod A-hat); otherwise every
/// projective slot of the slot quiver is used.
inline IsoReport verify_repetitive_iso(const ARWindow& w, LevelRange degrees, bool ar_image_only = true, HullOptions opt = {}) {
  const DynkinQuiver& q = w.quiver();
  if (ar_image_only) opt.projective_slots = occupied_projective_slots(w);
  std::vector<RepVertex> xs;
  std::vector<Slot> sigma;
  for (int m = degrees.lo; m < degrees.hi; ++m)
    for (int i = 0; i < q.size(); ++i) {
      xs.push_back({i, m});
      sigma.push_back(w.psi_of_projective({i, m}));
    }
  const GammaHull hull = convex_hull(q, w.height(), sigma, opt);
  IsoReport r;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    const BoundProjective p(hull.quiver, hull.index.at(sigma[a]));
    const DimVector pa = projective_dim_vector(q, xs[a]);
    for (std::size_t b = 0; b < xs.size(); ++b) {
      ++r.pairs_checked;
      const auto got = static_cast<std::int64_t>(p.dim(hull.index.at(sigma[b])));
      if (got != pa[xs[b]])
        r.mismatches.push_back("e_" + format_vertex(q, xs[b]) + " Lambda e_" + format_vertex(q, xs[a]) + ": " +
                               std::to_string(got) + " vs " + std::to_string(pa[xs[b]]));
    }
  }
  return r;
}

}  // namespace repknit
