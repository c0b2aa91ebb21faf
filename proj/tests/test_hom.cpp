#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace repknit {
namespace {

using namespace repknit::testing;

/// Window vertices supported in degrees 0 and 1, well inside a window built
/// for degrees -1..2.
std::vector<int> inner_ids(const ARWindow& w) {
  std::vector<int> out;
  for (const auto& v : w.vertices())
    if (v.dim.min_degree() >= 0 && v.dim.max_degree() <= 1) out.push_back(v.id);
  return out;
}

class HomTest : public ::testing::TestWithParam<int> {
 protected:
  static ARWindow window(int k) {
    switch (k) {
      case 0: return knit_for_degrees(a2(), a2_xi(), {-1, 3});
      case 1: return knit_for_degrees(a3(), a3_xi(), {-1, 3});
      case 2: return knit_for_degrees(a4(), a4_xi(), {-1, 3});
      default: return knit_for_degrees(d4(), d4_xi(), {-1, 3});
    }
  }
};

TEST_P(HomTest, HomFromProjectiveIsDimensionEntry) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  for (int p : w.projective_ids()) {
    if (w.vertex(p).dim.min_degree() < 0 || w.vertex(p).dim.max_degree() > 1) continue;
    const RepVertex x = *w.vertex(p).projective;
    for (int n : inner_ids(w)) EXPECT_EQ(eng.hom(p, n), w.vertex(n).dim[x]) << w.label(p) << " -> " << w.label(n);
  }
}

TEST_P(HomTest, EndomorphismsOfIndecomposablesAreOneDimensional) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  for (int m : inner_ids(w)) EXPECT_EQ(eng.hom(m, m), 1) << w.label(m);
}

TEST_P(HomTest, TopAndSocleOfProjectivesAreSimple) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  for (int p : w.projective_ids()) {
    if (w.vertex(p).dim.min_degree() < 0 || w.vertex(p).dim.max_degree() > 1) continue;
    const RepVertex x = *w.vertex(p).projective;
    EXPECT_EQ(eng.top(p), DimVector::unit(x));
    EXPECT_EQ(eng.socle(p), DimVector::unit(projective_socle(x)));
  }
}

TEST_P(HomTest, SyzygyOfSimpleIsRadicalOfItsCover) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  const DynkinQuiver& q = w.quiver();
  for (int i = 0; i < q.size(); ++i) {
    const RepVertex x{i, 0};
    const int s = eng.simple(x);
    EXPECT_EQ(w.vertex(eng.omega(s)).dim, projective_dim_vector(q, x) - DimVector::unit(x));
  }
}

TEST_P(HomTest, OmegaAndOmegaInverseAreInverse) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  std::size_t tested = 0;
  for (int m : inner_ids(w)) {
    if (w.vertex(m).is_projective()) continue;
    const int om = eng.omega(m);
    EXPECT_EQ(eng.omega_inv(om), m) << w.label(m);
    ++tested;
  }
  EXPECT_GT(tested, 0u);
}

TEST(Hom, StableHomIsOmegaInvariant) {
  for (const auto& [q, xi] : {std::pair{a2(), a2_xi()}, {a3(), a3_xi()}, {a4(), a4_xi()}, {d4(), d4_xi()}}) {
    const ARWindow w = knit_for_degrees(q, xi, {-1, 3});
    const HomEngine eng(w);
    std::vector<int> inner;
    for (const auto& v : w.vertices())
      if (!v.is_projective() && v.dim.min_degree() >= 0 && v.dim.max_degree() <= 1) inner.push_back(v.id);
    ASSERT_FALSE(inner.empty());
    auto stable_hom = [&](int m, int n) { return eng.hom(m, n) - eng.proj_dim(m, ModuleClass::of(n)); };
    for (int m : inner)
      for (int n : inner) {
        const auto through_projectives = eng.proj_dim(m, ModuleClass::of(n));
        EXPECT_GE(through_projectives, 0);
        EXPECT_LE(through_projectives, eng.hom(m, n));
        EXPECT_EQ(stable_hom(m, n), stable_hom(eng.omega(m), eng.omega(n))) << w.label(m) << " " << w.label(n);
      }
  }
}

TEST_P(HomTest, EveryMapIntoAProjectiveFactorsThroughIt) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  for (int m : inner_ids(w)) {
    if (w.vertex(m).is_projective()) continue;
    for (int p : w.projective_ids()) {
      if (w.vertex(p).dim.min_degree() < 0 || w.vertex(p).dim.max_degree() > 1) continue;
      EXPECT_EQ(eng.proj_dim(m, ModuleClass::of(p)), eng.hom(m, p));
    }
  }
}

TEST_P(HomTest, RBasisDualityAndReconstruction) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  const auto duality = check_r_duality(eng);
  EXPECT_TRUE(duality.passed) << duality.detail;
  const auto recon = check_reconstruction(eng, 17, 50);
  EXPECT_TRUE(recon.passed) << recon.detail;
}

TEST_P(HomTest, RExpansionOfSemisimpleMinusModuleCloses) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  for (int m : inner_ids(w)) {
    const auto lambda = eng.expand_in_r_basis(ModuleClass::of(m));
    for (const auto& [id, l] : lambda) EXPECT_GT(l, 0);
  }
}

TEST_P(HomTest, HomIsAdditive) {
  const ARWindow w = window(GetParam());
  const HomEngine eng(w);
  const auto core = inner_ids(w);
  ASSERT_GE(core.size(), 3u);
  const ModuleClass sum = ModuleClass::of(core[0]) + ModuleClass::of(core[1], 2);
  for (int n : core) EXPECT_EQ(eng.hom_module(sum, ModuleClass::of(n)), eng.hom(core[0], n) + 2 * eng.hom(core[1], n));
}

INSTANTIATE_TEST_SUITE_P(Windows, HomTest, ::testing::Values(0, 1, 2, 3));

TEST(Hom, A2SmallValues) {
  const auto q = a2();
  const ARWindow w = knit_for_degrees(q, a2_xi(), {0, 2});
  const HomEngine eng(w);
  const int s1 = eng.simple({0, 0}), s2 = eng.simple({1, 0});
  const int p1 = *w.find_projective({0, 0});
  // 1 -> 2: P1 = {1[0], 2[0], 1[1]}; S2 = rad of the kQ-projective at 1.
  EXPECT_EQ(eng.hom(s2, s1), 0);
  EXPECT_EQ(eng.hom(p1, s1), 1);
  EXPECT_EQ(eng.hom(p1, s2), 0);
  EXPECT_EQ(eng.hom(s1, s1), 1);
  EXPECT_EQ(format_class(w, ModuleClass::of(p1)), "P1[0]");
  EXPECT_EQ(format_class(w, ModuleClass{}), "0");
}

TEST(Hom, OmegaOfProjectiveIsAnError) {
  const ARWindow w = knit_for_degrees(a2(), a2_xi(), {0, 2});
  const HomEngine eng(w);
  EXPECT_THROW(eng.omega(*w.find_projective({0, 0})), Error);
}

}  // namespace
}  // namespace repknit
