#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "repknit/ar_knit.hpp"
#include "repknit/checked.hpp"
#include "repknit/error.hpp"

namespace repknit {

/// Isomorphism class of a module: indecomposable window ids with positive
/// multiplicities.
struct ModuleClass {
  std::map<int, std::int64_t> summands;

  static ModuleClass of(int id, std::int64_t mult = 1) {
    ModuleClass c;
    c.add(id, mult);
    return c;
  }

  void add(int id, std::int64_t mult = 1) {
    if (mult == 0) return;
    auto& m = summands[id];
    m = checked::add(m, mult);
    if (m < 0) throw Error(ErrorCode::InternalInconsistency, "hom_engine", "negative multiplicity");
    if (m == 0) summands.erase(id);
  }

  bool empty() const { return summands.empty(); }

  std::int64_t summand_count() const {
    std::int64_t n = 0;
    for (const auto& [id, m] : summands) n = checked::add(n, m);
    return n;
  }

  DimVector dim(const ARWindow& w) const {
    DimVector d;
    for (const auto& [id, m] : summands) d += m * w.vertex(id).dim;
    return d;
  }

  friend ModuleClass operator+(ModuleClass a, const ModuleClass& b) {
    for (const auto& [id, m] : b.summands) a.add(id, m);
    return a;
  }
  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
  friend bool operator<(const ModuleClass& a, const ModuleClass& b) { return a.summands < b.summands; }
};

inline std::string format_class(const ARWindow& w, const ModuleClass& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [id, m] : c.summands) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += w.label(id);
  }
  return out;
}

/// Integer combination of indecomposable classes in the split Grothendieck
/// group.
using RSplitElement = std::map<int, std::int64_t>;

inline void accumulate(RSplitElement& x, int id, std::int64_t c) {
  if (c == 0) return;
  auto& v = x[id];
  v = checked::add(v, c);
  if (v == 0) x.erase(id);
}

inline RSplitElement to_element(const ModuleClass& c) {
  RSplitElement x;
  for (const auto& [id, m] : c.summands) accumulate(x, id, m);
  return x;
}

/// Hom dimensions between indecomposables of a knitted window, computed by
/// the mesh recursion and cached per source.
class HomEngine {
 public:
  explicit HomEngine(const ARWindow& w) : w_(w) {}
  explicit HomEngine(ARWindow&&) = delete;

  const ARWindow& window() const { return w_; }

  /// dim Hom(M, -) for every window vertex, indexed by id.
  const std::vector<std::int64_t>& table(int source) const {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(source);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(source, compute(source)).first->second;
  }

  std::int64_t hom(int m, int n) const { return table(m)[static_cast<std::size_t>(n)]; }

  std::int64_t hom_module(const ModuleClass& m, const ModuleClass& n) const {
    std::int64_t s = 0;
    for (const auto& [a, ma] : m.summands)
      for (const auto& [b, mb] : n.summands) s = checked::add(s, checked::mul(checked::mul(ma, mb), hom(a, b)));
    return s;
  }

  /// The bilinear form h on the split Grothendieck group.
  std::int64_t h(const RSplitElement& x, const RSplitElement& y) const {
    std::int64_t s = 0;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) s = checked::add(s, checked::mul(checked::mul(ca, cb), hom(a, b)));
    return s;
  }

  int simple(RepVertex x) const {
    auto id = w_.find_by_dim(DimVector::unit(x));
    if (!id) throw Error(ErrorCode::WindowTooSmall, "hom_engine", "simple " + format_vertex(w_.quiver(), x) + " not in window");
    return *id;
  }

  /// Top multiplicities: x -> dim Hom(M, S_x).
  DimVector top(int m) const {
    DimVector t;
    for (const auto& [x, c] : w_.vertex(m).dim.entries()) t.add(x, hom(m, simple(x)));
    return t;
  }

  /// Socle multiplicities: x -> dim Hom(S_x, M).
  DimVector socle(int m) const {
    DimVector s;
    for (const auto& [x, c] : w_.vertex(m).dim.entries()) s.add(x, hom(simple(x), m));
    return s;
  }

  /// Syzygy: kernel of the projective cover, located by dimension vector.
  int omega(int m) const {
    require_stable(m, "omega");
    DimVector d;
    for (const auto& [x, c] : top(m).entries()) d += c * projective_dim_vector(w_.quiver(), x);
    d -= w_.vertex(m).dim;
    return locate_stable(d, "omega of " + w_.label(m));
  }

  /// Cosyzygy: cokernel of the injective envelope; the envelope of S_x is
  /// the projective whose socle is x.
  int omega_inv(int m) const {
    require_stable(m, "omega_inv");
    DimVector d;
    for (const auto& [x, c] : socle(m).entries())
      d += c * projective_dim_vector(w_.quiver(), {x.base, x.degree - 1});
    d -= w_.vertex(m).dim;
    return locate_stable(d, "omega_inv of " + w_.label(m));
  }

  /// dim proj(M, N), the space of morphisms M -> N factoring through a projective.
  std::int64_t proj_dim(int m, const ModuleClass& n) const {
    if (w_.vertex(m).is_projective()) return hom_module(ModuleClass::of(m), n);
    const int x = omega_inv(m);
    const DimVector d = n.dim(w_);
    std::int64_t cover = 0;
    for (const auto& [v, c] : top(x).entries()) cover = checked::add(cover, checked::mul(c, d[v]));
    return checked::sub(cover, hom_module(ModuleClass::of(x), n));
  }

  /// r_M = [M] - [E_M] + [tau M] for stable M, [P] - [rad P] for projective P.
  RSplitElement r_element(int m) const {
    const ARVertex& v = w_.vertex(m);
    RSplitElement r;
    accumulate(r, m, 1);
    if (v.is_projective()) {
      auto rad = w_.lookup({v.slot.column, v.slot.level - 1}, "r_element");
      accumulate(r, *rad, -1);
      return r;
    }
    auto mesh = w_.mesh_ending_at(m);
    if (!mesh)
      throw Error(ErrorCode::WindowTooSmall, "hom_engine", "r_element: no mesh ends at " + w_.label(m) + " inside the window");
    const Mesh& me = w_.meshes()[static_cast<std::size_t>(*mesh)];
    for (int e : me.middles) accumulate(r, e, -1);
    if (me.projective >= 0) accumulate(r, me.projective, -1);
    accumulate(r, me.start, 1);
    return r;
  }

  /// Coefficients lambda_M with -[N] + sum_x d_x [S_x] = sum lambda_M r_M,
  /// lambda_M = dim proj(Omega M, N) = sum_x top(M)_x d_x - hom(M, N).
  /// The expansion is verified before returning.
  std::map<int, std::int64_t> expand_in_r_basis(const ModuleClass& n) const {
    const DimVector d = n.dim(w_);
    std::map<int, std::int64_t> lambda;
    for (int m : w_.stable_ids()) {
      bool meets = false;
      for (const auto& [x, c] : w_.vertex(m).dim.entries())
        if (d[x] != 0) { meets = true; break; }
      if (!meets) continue;
      std::int64_t cover = 0;
      for (const auto& [x, c] : top(m).entries()) cover = checked::add(cover, checked::mul(c, d[x]));
      const std::int64_t l = checked::sub(cover, hom_module(ModuleClass::of(m), n));
      if (l < 0) throw Error(ErrorCode::InternalInconsistency, "hom_engine", "negative r-coefficient at " + w_.label(m));
      if (l != 0) lambda[m] = l;
    }
    RSplitElement lhs = semisimple_minus(n), rhs;
    for (const auto& [m, l] : lambda)
      for (const auto& [id, c] : r_element(m)) accumulate(rhs, id, checked::mul(l, c));
    if (lhs != rhs)
      throw Error(ErrorCode::WindowTooSmall, "hom_engine", "r-expansion of " + format_class(w_, n) + " does not close inside the window");
    return lambda;
  }

  /// -[N] + sum_x d_x [S_x].
  RSplitElement semisimple_minus(const ModuleClass& n) const {
    RSplitElement x;
    for (const auto& [v, c] : n.dim(w_).entries()) accumulate(x, simple(v), c);
    for (const auto& [id, m] : n.summands) accumulate(x, id, -m);
    return x;
  }

 private:
  void require_stable(int m, const char* what) const {
    if (w_.vertex(m).is_projective())
      throw Error(ErrorCode::InternalInconsistency, "hom_engine", std::string(what) + " of projective " + w_.label(m));
  }

  int locate_stable(const DimVector& d, const std::string& what) const {
    if (d.empty() || !d.nonnegative())
      throw Error(ErrorCode::InternalInconsistency, "hom_engine", what + ": dimension vector " + format_dim(w_.quiver(), d));
    auto id = w_.find_by_dim(d);
    if (!id) throw Error(ErrorCode::WindowTooSmall, "hom_engine", what + ": " + format_dim(w_.quiver(), d) + " not in window");
    if (w_.vertex(*id).is_projective())
      throw Error(ErrorCode::AmbiguousIdentification, "hom_engine", what + ": dimension vector belongs to a projective");
    return *id;
  }

  std::vector<std::int64_t> compute(int source) const {
    const auto& verts = w_.vertices();
    std::vector<std::int64_t> f(verts.size(), 0);
    const LevelRange r = w_.range();
    const Slot s0 = w_.vertex(source).slot;
    const DynkinQuiver& q = w_.quiver();
    auto val = [&](Slot s) -> std::int64_t {
      if (s.level < s0.level) return 0;
      auto id = w_.at(s);
      return id ? f[static_cast<std::size_t>(*id)] : 0;
    };
    for (int n = s0.level; n < r.hi; ++n)
      for (int i = 0; i < q.size(); ++i) {
        auto id = w_.at({i, n});
        if (!id) continue;
        const ARVertex& v = w_.vertex(*id);
        std::int64_t x = (*id == source) ? 1 : 0;
        if (v.is_projective()) {
          x = checked::add(x, val({i, n - 1}));
        } else {
          for (int j : q.neighbors(i)) x = checked::add(x, val({j, n - 1}));
          x = checked::add(x, val({i, n - 1}));
          x = checked::sub(x, val({i, n - 2}));
        }
        if (x < 0)
          throw Error(ErrorCode::InternalInconsistency, "hom_engine",
                      "negative Hom value from " + w_.label(source) + " at " + w_.slot_label(v.slot));
        f[static_cast<std::size_t>(*id)] = x;
        if (x != 0 && n >= r.hi - 2)
          throw Error(ErrorCode::WindowTooSmall, "hom_engine",
                      "Hom(" + w_.label(source) + ", -) reaches the top of the window at " + w_.slot_label(v.slot));
      }
    return f;
  }

  const ARWindow& w_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<std::int64_t>> cache_;
};

}  // namespace repknit
