#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace repknit {
namespace {

using namespace repknit::testing;

ExplicitRep simple_rep(const Oracle& o, RepVertex x) {
  ExplicitRep r = o.zero();
  r.dims[static_cast<std::size_t>(o.vertex_index(x))] = 1;
  for (std::size_t a = 0; a < r.maps.size(); ++a) {
    const auto& arrow = o.presentation().arrows[a];
    r.maps[a] = Matrix(r.dims[static_cast<std::size_t>(o.vertex_index(arrow.target))],
                       r.dims[static_cast<std::size_t>(o.vertex_index(arrow.source))]);
  }
  return r;
}

TEST(Oracle, ProjectivesSatisfyTheRelationsAndHaveTheRightDimension) {
  for (const auto& q : {a2(), a3(), a4(), d4()}) {
    const Oracle o(q, {-1, 3});
    EXPECT_TRUE(o.presentation_problems().empty()) << q.type().name();
    for (int i = 0; i < q.size(); ++i) {
      const ExplicitRep p = o.explicit_projective({i, 0});
      EXPECT_TRUE(o.relations_hold(p));
      EXPECT_EQ(o.dim_vector(p), projective_dim_vector(q, {i, 0}));
    }
  }
}

TEST(Oracle, HomFromProjectiveIsDimensionEntry) {
  const auto q = a4();
  Oracle o(q, {-1, 3}, 3);
  for (const auto& x : o.kq_indecomposables()) {
    const ExplicitRep r = o.embed_kq_module(x, 0);
    EXPECT_GE(o.hom_space(r, r), 1u);
    for (int i = 0; i < q.size(); ++i)
      for (int m = -1; m < 2; ++m) EXPECT_EQ(o.hom_space(o.explicit_projective({i, m}), r), static_cast<std::size_t>(o.dim_vector(r)[(RepVertex{i, m})]));
  }
}

TEST(Oracle, KQIndecomposablesHaveTrivialEndomorphisms) {
  for (const auto& q : {a3(), d4()}) {
    Oracle o(q, {0, 2}, 9);
    const auto reps = o.kq_indecomposables();
    EXPECT_EQ(reps.size(), positive_roots(q).size());
    for (const auto& x : reps) EXPECT_EQ(o.hom_space(o.embed_kq_module(x, 0), o.embed_kq_module(x, 0)), 1u);
  }
}

TEST(Oracle, SyzygyOfSimpleIsTheRadical) {
  const auto q = a4();
  Oracle o(q, {-1, 3}, 5);
  for (int i = 0; i < q.size(); ++i) {
    const RepVertex x{i, 0};
    const ExplicitRep s = simple_rep(o, x);
    ASSERT_TRUE(o.relations_hold(s));
    EXPECT_EQ(o.dim_vector(o.syzygy(s)), projective_dim_vector(q, x) - DimVector::unit(x));
  }
}

TEST(Oracle, SyzygyDimensionIsCoverMinusModule) {
  const auto q = d4();
  Oracle o(q, {-1, 3}, 2);
  for (const auto& x : o.kq_indecomposables()) {
    const ExplicitRep r = o.embed_kq_module(x, 0);
    DimVector cover;
    const auto top = o.top_dims(r);
    for (std::size_t v = 0; v < top.size(); ++v)
      cover += static_cast<std::int64_t>(top[v]) * projective_dim_vector(q, o.presentation().vertices[v]);
    EXPECT_EQ(o.dim_vector(o.syzygy(r)), cover - o.dim_vector(r));
  }
}

TEST(Oracle, CosyzygyUndoesSyzygyOnA2) {
  Oracle o(a2(), {-2, 3}, 4);
  for (const auto& x : o.kq_indecomposables()) {
    const ExplicitRep r = o.embed_kq_module(x, 0);
    EXPECT_EQ(o.dim_vector(o.cosyzygy(o.syzygy(r))), o.dim_vector(r));
    EXPECT_EQ(o.dim_vector(o.syzygy(o.cosyzygy(r))), o.dim_vector(r));
  }
}

TEST(Oracle, DirectSumAddsHomDimensions) {
  Oracle o(a3(), {-1, 3}, 6);
  const auto reps = o.kq_indecomposables();
  const ExplicitRep a = o.embed_kq_module(reps[0], 0), b = o.embed_kq_module(reps[1], 0);
  const ExplicitRep s = o.direct_sum({a, b});
  EXPECT_EQ(s.total_dim(), a.total_dim() + b.total_dim());
  for (const auto& x : reps) {
    const ExplicitRep t = o.embed_kq_module(x, 0);
    EXPECT_EQ(o.hom_space(s, t), o.hom_space(a, t) + o.hom_space(b, t));
  }
}

TEST(Oracle, MatchesHomEngineOnTheA2Window) {
  const ARWindow w = knit_for_degrees(a2(), a2_xi(), {0, 2});
  const auto rep = selfcheck(w, {0, 2}, 1);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Oracle, VertexOutsideDegreesIsAnError) {
  const Oracle o(a2(), {0, 2});
  try {
    o.vertex_index({0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WindowTooSmall);
  }
}

TEST(Oracle, SameSeedSameChoices) {
  Oracle a(a3(), {0, 2}, 42), b(a3(), {0, 2}, 42);
  const auto ra = a.kq_indecomposables(), rb = b.kq_indecomposables();
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    ASSERT_EQ(ra[k].maps.size(), rb[k].maps.size());
    for (std::size_t m = 0; m < ra[k].maps.size(); ++m) EXPECT_TRUE((ra[k].maps[m] - rb[k].maps[m]).is_zero());
  }
}

}  // namespace
}  // namespace repknit
