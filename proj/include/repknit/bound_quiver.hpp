#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "repknit/error.hpp"
#include "repknit/exact_linear.hpp"

namespace repknit {

/// Finite acyclic quiver with relations. A path is the sequence of arrow
/// indices in the order they are traversed.
struct BoundQuiver {
  struct Arrow {
    int source = 0;
    int target = 0;
    std::string name;
  };
  struct Relation {
    std::vector<std::pair<Rational, std::vector<int>>> terms;
  };

  int vertex_count = 0;
  std::vector<std::string> vertex_names;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int path_source(const std::vector<int>& p) const { return arrows.at(p.front()).source; }
  int path_target(const std::vector<int>& p) const { return arrows.at(p.back()).target; }

  /// Vertices in an order where every arrow goes forward; throws if cyclic.
  std::vector<int> topological_order() const {
    std::vector<int> indeg(vertex_count, 0), order;
    for (const auto& a : arrows) ++indeg[a.target];
    std::vector<int> ready;
    for (int v = vertex_count - 1; v >= 0; --v)
      if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (const auto& a : arrows)
        if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
    if (static_cast<int>(order.size()) != vertex_count)
      throw Error(ErrorCode::InternalInconsistency, "bound_quiver", "quiver has an oriented cycle");
    return order;
  }

  /// Every path from `from` to `to` (explicit enumeration; exponential in
  /// general, used on small hulls only).
  std::vector<std::vector<int>> paths(int from, int to) const {
    std::vector<std::vector<int>> out;
    if (from == to) out.push_back({});
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int v) -> void {
      for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
        if (arrows[a].source != v) continue;
        cur.push_back(a);
        if (arrows[a].target == to) out.push_back(cur);
        self(self, arrows[a].target);
        cur.pop_back();
      }
    };
    dfs(dfs, from);
    return out;
  }
};

/// The indecomposable projective P_x = (paths from x) / relations, built
/// vertex by vertex in topological order. At each vertex z the ambient space
/// is the direct sum over arrows y -> z of P_x(y); the quotient basis is a
/// set of ambient coordinates, so every basis element is a concrete path.
class BoundProjective {
 public:
  BoundProjective(const BoundQuiver& bq, int x) : bq_(bq), x_(x) {
    const int n = bq.vertex_count;
    offsets_.assign(n, {});
    quotients_.resize(n);
    ambient_.assign(n, 0);
    basis_paths_.assign(n, {});
    arrow_matrix_.assign(bq.arrows.size(), Matrix());
    std::vector<std::vector<int>> into(n);
    for (int a = 0; a < static_cast<int>(bq.arrows.size()); ++a) into[bq.arrows[a].target].push_back(a);
    const auto order = bq.topological_order();
    for (int z : order) {
      if (z == x) {
        quotients_[z] = std::make_unique<Quotient>(1, std::vector<std::vector<Rational>>{});
        ambient_[z] = 1;
        basis_paths_[z] = {{}};
      } else {
        std::size_t amb = 0;
        for (int a : into[z]) {
          offsets_[z][a] = amb;
          amb += dim(bq.arrows[a].source);
        }
        ambient_[z] = amb;
        std::vector<std::vector<Rational>> rels;
        for (const auto& rel : bq.relations) {
          if (rel.terms.empty() || bq.path_target(rel.terms.front().second) != z) continue;
          const int s = bq.path_source(rel.terms.front().second);
          for (std::size_t u = 0; u < dim(s); ++u) {
            std::vector<Rational> e(dim(s));
            e[u] = 1;
            std::vector<Rational> v(amb);
            for (const auto& [c, p] : rel.terms) {
              auto img = e;
              for (std::size_t k = 0; k + 1 < p.size(); ++k) img = apply_arrow(p[k], img);
              const int last = p.back();
              const std::size_t off = offsets_[z][last];
              for (std::size_t t = 0; t < img.size(); ++t) v[off + t] += c * img[t];
            }
            rels.push_back(std::move(v));
          }
        }
        quotients_[z] = std::make_unique<Quotient>(amb, rels);
        for (std::size_t b = 0; b < quotients_[z]->dim(); ++b) {
          const std::size_t coord = quotients_[z]->basis_coordinate(b);
          for (int a : into[z]) {
            const std::size_t off = offsets_[z][a], d = dim(bq.arrows[a].source);
            if (coord >= off && coord < off + d) {
              auto p = basis_paths_[bq.arrows[a].source][coord - off];
              p.push_back(a);
              basis_paths_[z].push_back(std::move(p));
            }
          }
        }
      }
      for (int a : into[z]) {
        const int y = bq.arrows[a].source;
        Matrix m(dim(z), dim(y));
        for (std::size_t c = 0; c < dim(y); ++c) {
          std::vector<Rational> v(ambient_[z]);
          v[offsets_[z][a] + c] = 1;
          auto r = quotients_[z]->reduce(v);
          for (std::size_t t = 0; t < r.size(); ++t) m(t, c) = r[t];
        }
        arrow_matrix_[a] = std::move(m);
      }
    }
  }

  BoundProjective(const BoundProjective&) = delete;
  BoundProjective& operator=(const BoundProjective&) = delete;
  BoundProjective(BoundProjective&&) = default;

  int top() const { return x_; }
  std::size_t dim(int z) const { return quotients_[z] ? quotients_[z]->dim() : 0; }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (int z = 0; z < bq_.vertex_count; ++z) t += dim(z);
    return t;
  }

  const Matrix& arrow_matrix(int a) const { return arrow_matrix_[a]; }

  std::vector<Rational> apply_arrow(int a, const std::vector<Rational>& v) const { return arrow_matrix_[a].apply(v); }

  std::vector<Rational> apply_path(const std::vector<int>& p, std::vector<Rational> v) const {
    for (int a : p) v = apply_arrow(a, v);
    return v;
  }

  /// Path represented by basis vector b of P_x(z).
  const std::vector<int>& basis_path(int z, std::size_t b) const { return basis_paths_[z][b]; }

  /// Coordinates of the class of path p (starting at x) in P_x(target).
  std::vector<Rational> path_class(const std::vector<int>& p) const {
    std::vector<Rational> e(1, Rational(1));
    return apply_path(p, e);
  }

 private:
  const BoundQuiver& bq_;
  int x_;
  std::vector<std::map<int, std::size_t>> offsets_;
  std::vector<std::unique_ptr<Quotient>> quotients_;
  std::vector<std::size_t> ambient_;
  std::vector<std::vector<std::vector<int>>> basis_paths_;
  std::vector<Matrix> arrow_matrix_;
};

/// dim e_y (kQ/I) e_x by explicit elimination: all paths x -> y modulo the
/// span of u rho v over relations rho and paths u, v. Independent of
/// BoundProjective.
inline std::size_t path_space_dim_by_elimination(const BoundQuiver& bq, int x, int y) {
  const auto basis = bq.paths(x, y);
  if (basis.empty()) return 0;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& rel : bq.relations) {
    if (rel.terms.empty()) continue;
    const int s = bq.path_source(rel.terms.front().second), t = bq.path_target(rel.terms.front().second);
    for (const auto& u : bq.paths(x, s))
      for (const auto& v : bq.paths(t, y)) {
        std::vector<Rational> row(basis.size());
        for (const auto& [c, p] : rel.terms) {
          std::vector<int> full = u;
          full.insert(full.end(), p.begin(), p.end());
          full.insert(full.end(), v.begin(), v.end());
          row[index.at(full)] += c;
        }
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return basis.size();
  return basis.size() - rank(Matrix::from_rows(rows, basis.size()));
}

}  // namespace repknit
