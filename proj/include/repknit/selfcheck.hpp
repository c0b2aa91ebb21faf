#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "repknit/ar_knit.hpp"
#include "repknit/hom_engine.hpp"
#include "repknit/oracle.hpp"
#include "repknit/projectivization.hpp"
#include "repknit/roots.hpp"

namespace repknit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfcheckReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

/// Vertices of the window away from the margin.
inline std::vector<int> core_ids(const ARWindow& w) {
  std::vector<int> out;
  for (const auto& v : w.vertices())
    if (!w.in_margin(v.slot)) out.push_back(v.id);
  return out;
}

/// Explicit representations of window vertices: the projectives, and every
/// module reached from the kQ indecomposables at `degree` by repeated
/// syzygies and cosyzygies, identified by dimension vector.
inline std::map<int, ExplicitRep> realize_window(Oracle& o, const ARWindow& w, int degree) {
  std::map<int, ExplicitRep> found;
  for (int id : w.projective_ids()) {
    try {
      found.emplace(id, o.explicit_projective(*w.vertex(id).projective));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WindowTooSmall) throw;
    }
  }
  std::deque<ExplicitRep> todo;
  for (const auto& x : o.kq_indecomposables()) todo.push_back(o.embed_kq_module(x, degree));
  while (!todo.empty()) {
    ExplicitRep r = std::move(todo.front());
    todo.pop_front();
    const auto id = w.find_by_dim(o.dim_vector(r));
    if (!id || found.count(*id)) continue;
    for (int step = 0; step < 2; ++step) {
      try {
        todo.push_back(step == 0 ? o.syzygy(r) : o.cosyzygy(r));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WindowTooSmall) throw;
      }
    }
    found.emplace(*id, std::move(r));
  }
  return found;
}

/// Stable vertices in each full period of h levels inside the core equal
/// the number of positive roots.
inline CheckResult check_period_counts(const ARWindow& w) {
  const int h = w.quiver().type().coxeter_number();
  const auto roots = positive_roots(w.quiver()).size();
  int lo = w.range().lo + w.margin(), periods = 0;
  std::ostringstream detail;
  bool ok = true;
  for (; lo + h <= w.range().hi - w.margin(); lo += h, ++periods) {
    std::size_t count = 0;
    for (int id : w.stable_ids())
      if (w.vertex(id).slot.level >= lo && w.vertex(id).slot.level < lo + h) ++count;
    if (count != roots) {
      ok = false;
      detail << "levels [" << lo << "," << lo + h << "): " << count << "; ";
    }
  }
  detail << periods << " periods, " << roots << " positive roots";
  return {"period counts", ok && periods > 0, detail.str()};
}

/// dim(start) + dim(end) = sum of the middle dims at every mesh.
inline CheckResult check_mesh_additivity(const ARWindow& w) {
  std::size_t bad = 0;
  for (const auto& m : w.meshes()) {
    DimVector lhs = w.vertex(m.start).dim + w.vertex(m.end).dim, rhs;
    for (int e : m.middles) rhs += w.vertex(e).dim;
    if (m.projective >= 0) rhs += w.vertex(m.projective).dim;
    if (!(lhs == rhs)) ++bad;
  }
  return {"mesh additivity", bad == 0 && !w.meshes().empty(), std::to_string(w.meshes().size()) + " meshes, " + std::to_string(bad) + " failures"};
}

inline CheckResult check_presentation(const Oracle& o) {
  const auto problems = o.presentation_problems();
  return {"repetitive presentation", problems.empty(), problems.empty() ? "projectives agree" : problems.front()};
}

inline CheckResult check_oracle_hom(const Oracle& o, const HomEngine& eng, const std::map<int, ExplicitRep>& found) {
  const ARWindow& w = eng.window();
  const auto core = core_ids(w);
  std::size_t missing = 0, pairs = 0, bad = 0;
  std::string first;
  for (int a : core)
    if (!found.count(a)) ++missing;
  for (int a : core)
    for (int b : core) {
      if (!found.count(a) || !found.count(b)) continue;
      ++pairs;
      const auto got = static_cast<std::int64_t>(o.hom_space(found.at(a), found.at(b)));
      if (got != eng.hom(a, b)) {
        if (first.empty()) first = "; first: Hom(" + w.label(a) + ", " + w.label(b) + ") " + std::to_string(got) + " vs " + std::to_string(eng.hom(a, b));
        ++bad;
      }
    }
  return {"oracle hom", bad == 0 && missing == 0 && pairs > 0,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches, " + std::to_string(missing) + " core vertices unrealized" + first};
}

inline CheckResult check_oracle_omega(Oracle& o, const HomEngine& eng, const std::map<int, ExplicitRep>& found) {
  const ARWindow& w = eng.window();
  std::size_t tested = 0, bad = 0;
  for (int id : core_ids(w)) {
    if (w.vertex(id).is_projective() || !found.count(id)) continue;
    const int om = eng.omega(id), oi = eng.omega_inv(id);
    if (!(o.dim_vector(o.syzygy(found.at(id))) == w.vertex(om).dim)) ++bad;
    if (!(o.dim_vector(o.cosyzygy(found.at(id))) == w.vertex(oi).dim)) ++bad;
    ++tested;
  }
  return {"oracle omega", bad == 0 && tested > 0, std::to_string(tested) + " vertices, " + std::to_string(bad) + " mismatches"};
}

/// h([L], r_M) = delta_{L,M} on core pairs.
inline CheckResult check_r_duality(const HomEngine& eng) {
  const auto core = core_ids(eng.window());
  std::size_t pairs = 0, bad = 0;
  for (int m : core) {
    const RSplitElement r = eng.r_element(m);
    for (int l : core) {
      ++pairs;
      if (eng.h(RSplitElement{{l, 1}}, r) != (l == m ? 1 : 0)) ++bad;
    }
  }
  return {"r-basis duality", bad == 0 && pairs > 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " failures"};
}

/// x = sum_M h(x, r_M) [M] for `samples` random combinations of core
/// vertices.
inline CheckResult check_reconstruction(const HomEngine& eng, std::uint64_t seed, int samples = 100) {
  const auto core = core_ids(eng.window());
  if (core.empty()) return {"reconstruction", false, "empty core"};
  std::map<int, RSplitElement> r;
  for (int m : core) r[m] = eng.r_element(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, core.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  int bad = 0;
  for (int s = 0; s < samples; ++s) {
    RSplitElement x;
    for (int k = 0; k < 4; ++k) accumulate(x, core[pick(rng)], coef(rng));
    RSplitElement y;
    for (int m : core) accumulate(y, m, eng.h(x, r[m]));
    if (x != y) ++bad;
  }
  return {"reconstruction", bad == 0, std::to_string(samples) + " samples, " + std::to_string(bad) + " failures (seed " + std::to_string(seed) + ")"};
}

inline CheckResult check_repetitive_iso(const ARWindow& w, LevelRange degrees) {
  const IsoReport r = verify_repetitive_iso(w, degrees);
  return {"projectivization of psi(proj)", r.ok() && r.pairs_checked > 0,
          std::to_string(r.pairs_checked) + " pairs" + (r.ok() ? "" : ", first mismatch " + r.mismatches.front())};
}

/// The full suite on one window. `degrees` is the degree range the window
/// was built for.
inline SelfcheckReport selfcheck(const ARWindow& w, LevelRange degrees, std::uint64_t seed) {
  SelfcheckReport rep;
  const HomEngine eng(w);
  rep.checks.push_back(check_period_counts(w));
  rep.checks.push_back(check_mesh_additivity(w));
  int lo = degrees.lo, hi = degrees.hi;
  for (const auto& v : w.vertices()) {
    lo = std::min(lo, v.dim.min_degree());
    hi = std::max(hi, v.dim.max_degree() + 1);
  }
  Oracle o(w.quiver(), {lo - 1, hi + 1}, seed);
  rep.checks.push_back(check_presentation(o));
  const auto found = realize_window(o, w, degrees.lo);
  rep.checks.push_back(check_oracle_hom(o, eng, found));
  rep.checks.push_back(check_oracle_omega(o, eng, found));
  rep.checks.push_back(check_r_duality(eng));
  rep.checks.push_back(check_reconstruction(eng, seed));
  rep.checks.push_back(check_repetitive_iso(w, degrees));
  return rep;
}

}  // namespace repknit
