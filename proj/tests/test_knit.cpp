#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace repknit {
namespace {

using namespace repknit::testing;

struct Case {
  const char* name;
  DynkinQuiver q;
  HeightFunction xi;
};

std::vector<Case> cases() {
  return {{"A2", a2(), a2_xi()}, {"A3", a3(), a3_xi()}, {"A3 linear", a3_linear(), a3_linear_xi()}, {"A4", a4(), a4_xi()}, {"D4", d4(), d4_xi()}};
}

TEST(Knit, StableVerticesPerPeriodEqualPositiveRoots) {
  for (const auto& c : cases()) {
    const ARWindow w = knit_for_degrees(c.q, c.xi, {0, 2});
    const auto r = check_period_counts(w);
    EXPECT_TRUE(r.passed) << c.name << ": " << r.detail;
  }
}

TEST(Knit, PaperCountsForA2A4D4) {
  auto per_period = [](const ARWindow& w) {
    const int h = w.coxeter_number(), lo = w.range().lo + w.margin();
    std::size_t count = 0;
    for (int id : w.stable_ids())
      if (w.vertex(id).slot.level >= lo && w.vertex(id).slot.level < lo + h) ++count;
    return count;
  };
  EXPECT_EQ(per_period(knit_for_degrees(a2(), a2_xi(), {0, 2})), 3u);
  EXPECT_EQ(per_period(knit_for_degrees(a4(), a4_xi(), {0, 2})), 10u);
  EXPECT_EQ(per_period(knit_for_degrees(d4(), d4_xi(), {0, 2})), 12u);
}

TEST(Knit, MeshAdditivity) {
  for (const auto& c : cases()) {
    const auto r = check_mesh_additivity(knit_for_degrees(c.q, c.xi, {-1, 2}));
    EXPECT_TRUE(r.passed) << c.name << ": " << r.detail;
  }
}

TEST(Knit, VerticesSitAtTheRightParity) {
  for (const auto& c : cases()) {
    const ARWindow w = knit_for_degrees(c.q, c.xi, {0, 2});
    for (const auto& v : w.vertices()) {
      EXPECT_EQ(v.is_projective(), !is_stable(c.xi, v.slot)) << c.name << " " << w.slot_label(v.slot);
      EXPECT_TRUE(v.dim.nonnegative());
      EXPECT_GT(v.dim.total(), 0);
    }
  }
}

TEST(Knit, TauMovesTwoLevelsDown) {
  const ARWindow w = knit_for_degrees(a4(), a4_xi(), {0, 2});
  for (int id : w.stable_ids()) {
    if (w.in_margin(w.vertex(id).slot)) continue;
    const int t = w.tau(id);
    EXPECT_EQ(w.vertex(t).slot.column, w.vertex(id).slot.column);
    EXPECT_EQ(w.vertex(t).slot.level, w.vertex(id).slot.level - 2);
    EXPECT_EQ(w.tau_inv(t), id);
  }
}

TEST(Knit, ProjectivesAreRecognizedAndPsiInverts) {
  const auto q = a4();
  const ARWindow w = knit_for_degrees(q, a4_xi(), {0, 2});
  for (int m = 0; m < 2; ++m)
    for (int i = 0; i < q.size(); ++i) {
      const RepVertex x{i, m};
      const Slot s = w.psi_of_projective(x);
      const int id = w.psi_inv(s);
      EXPECT_TRUE(w.vertex(id).is_projective());
      EXPECT_EQ(w.vertex(id).dim, projective_dim_vector(q, x));
      EXPECT_EQ(w.label(id), "P" + format_vertex(q, x));
    }
}

TEST(Knit, ProjectivesOfConsecutiveDegreesAreOnePeriodApart) {
  const auto q = d4();
  const ARWindow w = knit_for_degrees(q, d4_xi(), {0, 3});
  const int period = 2 * q.coxeter_number() - 2;
  for (int i = 0; i < q.size(); ++i)
    EXPECT_EQ(w.psi_of_projective({i, 0}).level - w.psi_of_projective({i, 1}).level, period);
}

TEST(Knit, StableDimensionVectorsAreDistinct) {
  const ARWindow w = knit_for_degrees(d4(), d4_xi(), {0, 2});
  std::set<DimVector> seen;
  for (const auto& v : w.vertices()) EXPECT_TRUE(seen.insert(v.dim).second) << w.slot_label(v.slot);
  for (const auto& v : w.vertices()) EXPECT_EQ(*w.find_by_dim(v.dim), v.id);
}

TEST(Knit, SeedSectionIsTheKQIndecomposables) {
  // The slice at the seed holds the indecomposable projective kQ-modules.
  const auto q = a4();
  const ARWindow w = knit(q, a4_xi(), KnitOptions{{0, 4}, 0, 0});
  for (int i = 0; i < q.size(); ++i) {
    const auto id = w.at({i, a4_xi()[i]});
    ASSERT_TRUE(id);
    DimVector p;
    for (int j = 0; j < q.size(); ++j)
      if (q.has_path(i, j)) p.add({j, 0}, 1);
    EXPECT_EQ(w.vertex(*id).dim, p);
  }
}

TEST(Knit, AnchorShiftTranslatesTheWindow) {
  const ARWindow a = knit_for_degrees(a4(), a4_xi(), {0, 2}, -1, 0);
  const ARWindow b = knit_for_degrees(a4(), a4_xi(), {0, 2}, -1, 10);
  ASSERT_EQ(a.vertices().size(), b.vertices().size());
  for (const auto& v : a.vertices()) {
    const auto id = b.at({v.slot.column, v.slot.level + 10});
    ASSERT_TRUE(id);
    EXPECT_EQ(b.vertex(*id).dim, v.dim);
  }
}

TEST(Knit, Errors) {
  try {
    knit(a2(), a2_xi(), KnitOptions{{0, 4}, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
  }
  try {
    knit(a2(), HeightFunction{{0, 0}}, KnitOptions{{0, 4}, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HeightMismatch);
  }
  const ARWindow w = knit(a2(), a2_xi(), KnitOptions{{0, 4}, 0, 0});
  try {
    w.psi_of_projective({0, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WindowTooSmall);
  }
}

}  // namespace
}  // namespace repknit
