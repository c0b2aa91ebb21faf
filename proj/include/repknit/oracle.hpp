#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "repknit/bound_quiver.hpp"
#include "repknit/error.hpp"
#include "repknit/exact_linear.hpp"
#include "repknit/quiver.hpp"
#include "repknit/roots.hpp"

namespace repknit {

/// A representation of the path algebra kQ: a dimension per vertex and a
/// matrix per arrow.
struct KQRep {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
};

/// A representation of the repetitive quiver over a finite degree range:
/// `dims[v]` per presentation vertex and `maps[a]` (target x source) per
/// presentation arrow.
struct ExplicitRep {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }
};

/// A module homomorphism given by one matrix per vertex.
using ExplicitHom = std::vector<Matrix>;

/// Brute-force layer over explicit matrices. Every random choice comes from
/// one seeded generator.
class Oracle {
 public:
  Oracle(const DynkinQuiver& q, LevelRange degrees, std::uint64_t seed = 1)
      : q_(q), pres_(build_repetitive_presentation(q, degrees)), seed_(seed), rng_(seed) {}

  const DynkinQuiver& quiver() const { return q_; }
  const RepetitivePresentation& presentation() const { return pres_; }
  std::uint64_t seed() const { return seed_; }

  int vertex_index(RepVertex v) const {
    if (v.degree < pres_.degrees.lo || v.degree >= pres_.degrees.hi)
      throw Error(ErrorCode::WindowTooSmall, "oracle", format_vertex(q_, v) + " is outside the degree range");
    return (v.degree - pres_.degrees.lo) * q_.size() + v.base;
  }

  ExplicitRep zero() const {
    ExplicitRep r;
    r.dims.assign(pres_.vertices.size(), 0);
    r.maps.assign(pres_.arrows.size(), Matrix());
    return r;
  }

  DimVector dim_vector(const ExplicitRep& r) const {
    DimVector d;
    for (std::size_t v = 0; v < r.dims.size(); ++v)
      if (r.dims[v]) d.add(pres_.vertices[v], static_cast<std::int64_t>(r.dims[v]));
    return d;
  }

  /// Every relation of the presentation acts by the zero matrix.
  bool relations_hold(const ExplicitRep& r) const {
    for (const auto& rel : pres_.relations) {
      const int s = vertex_index(pres_.arrows[rel.terms.front().second.front()].source);
      const int t = vertex_index(pres_.arrows[rel.terms.front().second.back()].target);
      Matrix sum(r.dims[t], r.dims[s]);
      for (const auto& [c, path] : rel.terms) {
        Matrix m = Matrix::identity(r.dims[s]);
        for (int a : path) m = r.maps[a] * m;
        sum = sum + m.scaled(Rational(c));
      }
      if (!sum.is_zero()) return false;
    }
    return true;
  }

  /// P_x = A-hat e_x with basis the paths i -> j at degree m and the dual
  /// paths j -> i at degree m + 1 (x = i[m]). Q is a tree, so every space is
  /// at most one-dimensional.
  ExplicitRep explicit_projective(RepVertex x) const {
    if (x.degree < pres_.degrees.lo || x.degree + 1 >= pres_.degrees.hi)
      throw Error(ErrorCode::WindowTooSmall, "oracle", "P_" + format_vertex(q_, x) + " leaves the degree range");
    const int i = x.base, m = x.degree;
    ExplicitRep r = zero();
    for (int j = 0; j < q_.size(); ++j) {
      if (q_.has_path(i, j)) r.dims[vertex_index({j, m})] = 1;
      if (q_.has_path(j, i)) r.dims[vertex_index({j, m + 1})] = 1;
    }
    for (std::size_t a = 0; a < pres_.arrows.size(); ++a) {
      const RepArrow& ar = pres_.arrows[a];
      Matrix mat(r.dims[vertex_index(ar.target)], r.dims[vertex_index(ar.source)]);
      if (mat.rows() && mat.cols()) {
        bool acts = false;
        if (ar.connecting)
          acts = q_.has_path(ar.maximal.from, i) && q_.has_path(i, ar.maximal.to);
        else if (ar.source.degree == m)
          acts = true;
        else
          acts = q_.has_path(ar.target.base, i);
        if (acts) mat(0, 0) = 1;
      }
      r.maps[a] = std::move(mat);
    }
    return r;
  }

  /// X placed at degree m, with every connecting arrow acting by zero.
  ExplicitRep embed_kq_module(const KQRep& x, int m) const {
    ExplicitRep r = zero();
    for (int i = 0; i < q_.size(); ++i)
      if (x.dims[i]) r.dims[vertex_index({i, m})] = x.dims[i];
    for (std::size_t a = 0; a < pres_.arrows.size(); ++a) {
      const RepArrow& ar = pres_.arrows[a];
      if (!ar.connecting && ar.source.degree == m)
        r.maps[a] = x.maps[ar.quiver_arrow];
      else
        r.maps[a] = Matrix(r.dims[vertex_index(ar.target)], r.dims[vertex_index(ar.source)]);
    }
    return r;
  }

  /// A random representation of kQ with the given dimension vector; for a
  /// positive root this is indecomposable with probability close to 1, and
  /// the result is certified by a one-dimensional endomorphism space.
  KQRep kq_indecomposable(const std::vector<int>& root, int attempts = 20) {
    for (int t = 0; t < attempts; ++t) {
      KQRep x;
      for (auto d : root) x.dims.push_back(static_cast<std::size_t>(d));
      for (const auto& a : q_.arrows()) x.maps.push_back(random_matrix(x.dims[a.target], x.dims[a.source]));
      const int m = pres_.degrees.lo;
      const ExplicitRep e = embed_kq_module(x, m);
      if (hom_space(e, e) == 1) return x;
    }
    throw Error(ErrorCode::CoverNotSurjective, "oracle", "no indecomposable found for a root after " + std::to_string(attempts) + " draws");
  }

  std::vector<KQRep> kq_indecomposables() {
    std::vector<KQRep> out;
    for (const auto& root : positive_roots(q_)) out.push_back(kq_indecomposable(root));
    return out;
  }

  /// Basis of Hom(a, b): the solutions of b(arrow) f_s = f_t a(arrow).
  std::vector<ExplicitHom> hom_basis(const ExplicitRep& a, const ExplicitRep& b) const {
    const std::size_t nv = pres_.vertices.size();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + b.dims[v] * a.dims[v];
    const std::size_t unknowns = offset[nv];
    if (unknowns == 0) return {};
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * a.dims[v] + c; };
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < pres_.arrows.size(); ++k) {
      const auto s = static_cast<std::size_t>(vertex_index(pres_.arrows[k].source));
      const auto t = static_cast<std::size_t>(vertex_index(pres_.arrows[k].target));
      const Matrix& ma = a.maps[k];
      const Matrix& mb = b.maps[k];
      for (std::size_t r = 0; r < b.dims[t]; ++r)
        for (std::size_t c = 0; c < a.dims[s]; ++c) {
          std::vector<Rational> row(unknowns);
          bool nonzero = false;
          for (std::size_t u = 0; u < b.dims[s]; ++u)
            if (mb(r, u) != 0) {
              row[var(s, u, c)] += mb(r, u);
              nonzero = true;
            }
          for (std::size_t u = 0; u < a.dims[t]; ++u)
            if (ma(u, c) != 0) {
              row[var(t, r, u)] -= ma(u, c);
              nonzero = true;
            }
          if (nonzero) rows.push_back(std::move(row));
        }
    }
    std::vector<std::vector<Rational>> sol;
    if (rows.empty()) {
      for (std::size_t k = 0; k < unknowns; ++k) {
        std::vector<Rational> e(unknowns);
        e[k] = 1;
        sol.push_back(std::move(e));
      }
    } else {
      sol = nullspace(Matrix::from_rows(rows, unknowns));
    }
    std::vector<ExplicitHom> out;
    for (const auto& s : sol) {
      ExplicitHom f;
      for (std::size_t v = 0; v < nv; ++v) {
        Matrix m(b.dims[v], a.dims[v]);
        for (std::size_t r = 0; r < b.dims[v]; ++r)
          for (std::size_t c = 0; c < a.dims[v]; ++c) m(r, c) = s[var(v, r, c)];
        f.push_back(std::move(m));
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  std::size_t hom_space(const ExplicitRep& a, const ExplicitRep& b) const { return hom_basis(a, b).size(); }

  /// Dimension of the top at each vertex: dim R(v) minus the rank of the
  /// images of all arrows ending at v.
  std::vector<std::size_t> top_dims(const ExplicitRep& r) const {
    std::vector<std::size_t> out(r.dims.size(), 0);
    for (std::size_t v = 0; v < r.dims.size(); ++v) {
      if (!r.dims[v]) continue;
      std::vector<std::vector<Rational>> cols;
      for (std::size_t k = 0; k < pres_.arrows.size(); ++k)
        if (static_cast<std::size_t>(vertex_index(pres_.arrows[k].target)) == v)
          for (std::size_t c = 0; c < r.maps[k].cols(); ++c) cols.push_back(r.maps[k].column(c));
      out[v] = r.dims[v] - (cols.empty() ? 0 : rank(Matrix::from_columns(cols, r.dims[v])));
    }
    return out;
  }

  /// Dimension of the socle at each vertex: the common kernel of all arrows
  /// leaving v.
  std::vector<std::size_t> socle_dims(const ExplicitRep& r) const {
    std::vector<std::size_t> out(r.dims.size(), 0);
    for (std::size_t v = 0; v < r.dims.size(); ++v) {
      if (!r.dims[v]) continue;
      std::vector<std::vector<Rational>> rows;
      for (std::size_t k = 0; k < pres_.arrows.size(); ++k)
        if (static_cast<std::size_t>(vertex_index(pres_.arrows[k].source)) == v)
          for (std::size_t t = 0; t < r.maps[k].rows(); ++t) {
            std::vector<Rational> row(r.dims[v]);
            for (std::size_t c = 0; c < r.dims[v]; ++c) row[c] = r.maps[k](t, c);
            rows.push_back(std::move(row));
          }
      out[v] = r.dims[v] - (rows.empty() ? 0 : rank(Matrix::from_rows(rows, r.dims[v])));
    }
    return out;
  }

  /// Kernel of a projective cover. The cover sends each copy of P_v to a
  /// random combination of a basis of Hom(P_v, R); a draw that is not
  /// surjective is repeated.
  ExplicitRep syzygy(const ExplicitRep& r, int attempts = 8) {
    const auto top = top_dims(r);
    std::vector<ExplicitRep> summands;
    std::vector<std::vector<ExplicitHom>> bases;
    for (std::size_t v = 0; v < top.size(); ++v)
      for (std::size_t c = 0; c < top[v]; ++c) {
        summands.push_back(explicit_projective(pres_.vertices[v]));
        bases.push_back(hom_basis(summands.back(), r));
      }
    const ExplicitRep cover = direct_sum(summands);
    for (int t = 0; t < attempts; ++t) {
      std::vector<ExplicitHom> parts;
      for (const auto& b : bases) parts.push_back(random_combination(b, summands[parts.size()], r));
      const ExplicitHom pi = hstack(parts, summands, r);
      bool onto = true;
      for (std::size_t v = 0; v < r.dims.size(); ++v)
        if (rank(pi[v]) != r.dims[v]) onto = false;
      if (onto) return kernel(cover, pi);
    }
    throw Error(ErrorCode::CoverNotSurjective, "oracle", "projective cover not surjective after " + std::to_string(attempts) + " draws (seed " + std::to_string(seed_) + ")");
  }

  /// Cokernel of an injective envelope; the injective hull of the simple at
  /// x is P_{x.base, x.degree - 1}.
  ExplicitRep cosyzygy(const ExplicitRep& r, int attempts = 8) {
    const auto soc = socle_dims(r);
    std::vector<ExplicitRep> summands;
    std::vector<std::vector<ExplicitHom>> bases;
    for (std::size_t v = 0; v < soc.size(); ++v)
      for (std::size_t c = 0; c < soc[v]; ++c) {
        const RepVertex x = pres_.vertices[v];
        summands.push_back(explicit_projective({x.base, x.degree - 1}));
        bases.push_back(hom_basis(r, summands.back()));
      }
    const ExplicitRep hull = direct_sum(summands);
    for (int t = 0; t < attempts; ++t) {
      std::vector<ExplicitHom> parts;
      for (const auto& b : bases) parts.push_back(random_combination(b, r, summands[parts.size()]));
      const ExplicitHom iota = vstack(parts, summands, r);
      bool mono = true;
      for (std::size_t v = 0; v < r.dims.size(); ++v)
        if (rank(iota[v]) != r.dims[v]) mono = false;
      if (mono) return cokernel(hull, iota);
    }
    throw Error(ErrorCode::CoverNotSurjective, "oracle", "injective envelope not injective after " + std::to_string(attempts) + " draws (seed " + std::to_string(seed_) + ")");
  }

  ExplicitRep direct_sum(const std::vector<ExplicitRep>& parts) const {
    ExplicitRep out = zero();
    for (const auto& p : parts)
      for (std::size_t v = 0; v < out.dims.size(); ++v) out.dims[v] += p.dims[v];
    for (std::size_t k = 0; k < pres_.arrows.size(); ++k) {
      const auto s = static_cast<std::size_t>(vertex_index(pres_.arrows[k].source));
      const auto t = static_cast<std::size_t>(vertex_index(pres_.arrows[k].target));
      Matrix m(out.dims[t], out.dims[s]);
      std::size_t ro = 0, co = 0;
      for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.dims[t]; ++r)
          for (std::size_t c = 0; c < p.dims[s]; ++c) m(ro + r, co + c) = p.maps[k](r, c);
        ro += p.dims[t];
        co += p.dims[s];
      }
      out.maps[k] = std::move(m);
    }
    return out;
  }

  /// Check that dims of the bound-quiver projectives of the presentation
  /// equal the path-count dimension vectors, and that every explicit
  /// projective satisfies the relations. Returns the offending vertices.
  std::vector<std::string> presentation_problems() const {
    BoundQuiver bq;
    bq.vertex_count = static_cast<int>(pres_.vertices.size());
    for (auto v : pres_.vertices) bq.vertex_names.push_back(format_vertex(q_, v));
    for (const auto& a : pres_.arrows) bq.arrows.push_back({vertex_index(a.source), vertex_index(a.target), ""});
    for (const auto& rel : pres_.relations) {
      BoundQuiver::Relation r;
      for (const auto& [c, p] : rel.terms) r.terms.push_back({Rational(c), p});
      bq.relations.push_back(std::move(r));
    }
    std::vector<std::string> out;
    for (int m = pres_.degrees.lo; m + 1 < pres_.degrees.hi; ++m)
      for (int i = 0; i < q_.size(); ++i) {
        const RepVertex x{i, m};
        const BoundProjective p(bq, vertex_index(x));
        const ExplicitRep e = explicit_projective(x);
        const DimVector expect = projective_dim_vector(q_, x);
        DimVector got;
        for (std::size_t v = 0; v < pres_.vertices.size(); ++v)
          if (auto d = p.dim(static_cast<int>(v))) got.add(pres_.vertices[v], static_cast<std::int64_t>(d));
        if (!(got == expect)) out.push_back("P_" + format_vertex(q_, x) + ": quotient " + format_dim(q_, got) + " vs " + format_dim(q_, expect));
        if (!(dim_vector(e) == expect)) out.push_back("P_" + format_vertex(q_, x) + ": explicit " + format_dim(q_, dim_vector(e)));
        if (!relations_hold(e)) out.push_back("P_" + format_vertex(q_, x) + ": relations fail");
      }
    return out;
  }

 private:
  Matrix random_matrix(std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> dist(-3, 3);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng_);
    return m;
  }

  ExplicitHom random_combination(const std::vector<ExplicitHom>& basis, const ExplicitRep& from, const ExplicitRep& to) {
    std::uniform_int_distribution<int> dist(-3, 3);
    ExplicitHom f;
    for (std::size_t v = 0; v < from.dims.size(); ++v) f.emplace_back(to.dims[v], from.dims[v]);
    for (const auto& b : basis) {
      const int c = dist(rng_);
      for (std::size_t v = 0; v < f.size(); ++v) f[v] = f[v] + b[v].scaled(Rational(c));
    }
    return f;
  }

  // [f_1 f_2 ...] : (+) parts -> target
  ExplicitHom hstack(const std::vector<ExplicitHom>& fs, const std::vector<ExplicitRep>& parts, const ExplicitRep& target) const {
    ExplicitHom out;
    for (std::size_t v = 0; v < target.dims.size(); ++v) {
      std::size_t width = 0;
      for (const auto& p : parts) width += p.dims[v];
      Matrix m(target.dims[v], width);
      std::size_t co = 0;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t r = 0; r < target.dims[v]; ++r)
          for (std::size_t c = 0; c < parts[k].dims[v]; ++c) m(r, co + c) = fs[k][v](r, c);
        co += parts[k].dims[v];
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  // (f_1; f_2; ...) : source -> (+) parts
  ExplicitHom vstack(const std::vector<ExplicitHom>& fs, const std::vector<ExplicitRep>& parts, const ExplicitRep& source) const {
    ExplicitHom out;
    for (std::size_t v = 0; v < source.dims.size(); ++v) {
      std::size_t height = 0;
      for (const auto& p : parts) height += p.dims[v];
      Matrix m(height, source.dims[v]);
      std::size_t ro = 0;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t r = 0; r < parts[k].dims[v]; ++r)
          for (std::size_t c = 0; c < source.dims[v]; ++c) m(ro + r, c) = fs[k][v](r, c);
        ro += parts[k].dims[v];
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  ExplicitRep kernel(const ExplicitRep& src, const ExplicitHom& f) const {
    ExplicitRep out = zero();
    std::vector<Matrix> basis(src.dims.size());
    for (std::size_t v = 0; v < src.dims.size(); ++v) {
      std::vector<std::vector<Rational>> ker;
      if (f[v].rows() == 0) {
        for (std::size_t c = 0; c < src.dims[v]; ++c) {
          std::vector<Rational> e(src.dims[v]);
          e[c] = 1;
          ker.push_back(std::move(e));
        }
      } else {
        ker = nullspace(f[v]);
      }
      out.dims[v] = ker.size();
      basis[v] = Matrix::from_columns(ker, src.dims[v]);
    }
    for (std::size_t k = 0; k < pres_.arrows.size(); ++k) {
      const auto s = static_cast<std::size_t>(vertex_index(pres_.arrows[k].source));
      const auto t = static_cast<std::size_t>(vertex_index(pres_.arrows[k].target));
      Matrix m(out.dims[t], out.dims[s]);
      for (std::size_t c = 0; c < out.dims[s]; ++c) {
        const auto img = src.maps[k].apply(basis[s].column(c));
        const auto coords = solve(basis[t], img);
        if (!coords) throw Error(ErrorCode::InternalInconsistency, "oracle", "kernel is not a submodule");
        for (std::size_t r = 0; r < out.dims[t]; ++r) m(r, c) = (*coords)[r];
      }
      out.maps[k] = std::move(m);
    }
    return out;
  }

  ExplicitRep cokernel(const ExplicitRep& dst, const ExplicitHom& f) const {
    ExplicitRep out = zero();
    std::vector<Quotient> quo;
    for (std::size_t v = 0; v < dst.dims.size(); ++v) {
      std::vector<std::vector<Rational>> image;
      for (std::size_t c = 0; c < f[v].cols(); ++c) image.push_back(f[v].column(c));
      quo.emplace_back(dst.dims[v], image);
      out.dims[v] = quo.back().dim();
    }
    for (std::size_t k = 0; k < pres_.arrows.size(); ++k) {
      const auto s = static_cast<std::size_t>(vertex_index(pres_.arrows[k].source));
      const auto t = static_cast<std::size_t>(vertex_index(pres_.arrows[k].target));
      Matrix m(out.dims[t], out.dims[s]);
      for (std::size_t c = 0; c < out.dims[s]; ++c) {
        std::vector<Rational> e(dst.dims[s]);
        e[quo[s].basis_coordinate(c)] = 1;
        const auto r = quo[t].reduce(dst.maps[k].apply(e));
        for (std::size_t row = 0; row < out.dims[t]; ++row) m(row, c) = r[row];
      }
      out.maps[k] = std::move(m);
    }
    return out;
  }

  DynkinQuiver q_;
  RepetitivePresentation pres_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace repknit
