#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"

namespace repknit {
namespace {

using namespace repknit::testing;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalInconsistency;
}

DynkinQuiver e_type(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> arrows;
  for (int i = 1; i < rank - 1; ++i) arrows.push_back({std::to_string(i), std::to_string(i + 1)});
  arrows.push_back({"3", std::to_string(rank)});
  return DynkinQuiver(DynkinType::parse("E" + std::to_string(rank)), names, arrows);
}

TEST(DynkinType, ParseAndCoxeterNumbers) {
  EXPECT_EQ(DynkinType::parse("A4").coxeter_number(), 5);
  EXPECT_EQ(DynkinType::parse("d4").coxeter_number(), 6);
  EXPECT_EQ(DynkinType::parse("E6").coxeter_number(), 12);
  EXPECT_EQ(DynkinType::parse("E7").coxeter_number(), 18);
  EXPECT_EQ(DynkinType::parse("E8").coxeter_number(), 30);
  EXPECT_EQ(DynkinType::parse("D5").name(), "D5");
}

TEST(DynkinType, RejectsNonDynkinNames) {
  EXPECT_EQ(code_of([] { DynkinType::parse("E9"); }), ErrorCode::ConfigError);
  EXPECT_EQ(code_of([] { DynkinType::parse("D3"); }), ErrorCode::ConfigError);
  EXPECT_EQ(code_of([] { DynkinType::parse("B2"); }), ErrorCode::ConfigError);
  EXPECT_EQ(code_of([] { DynkinType::parse("A"); }), ErrorCode::ConfigError);
}

TEST(DynkinQuiver, RejectsWrongShapes) {
  const auto t = DynkinType::parse("A3");
  EXPECT_EQ(code_of([&] { DynkinQuiver(t, {"1", "2", "3"}, {{"1", "2"}}); }), ErrorCode::InvalidQuiver);
  EXPECT_EQ(code_of([&] { DynkinQuiver(t, {"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}); }), ErrorCode::InvalidQuiver);
  EXPECT_EQ(code_of([&] { DynkinQuiver(t, {"1", "2"}, {{"1", "2"}}); }), ErrorCode::InvalidQuiver);
  EXPECT_EQ(code_of([&] { DynkinQuiver(t, {"1", "2", "3"}, {{"1", "2"}, {"2", "2"}}); }), ErrorCode::InvalidQuiver);
  EXPECT_EQ(code_of([&] { DynkinQuiver(t, {"1", "2", "3"}, {{"1", "2"}, {"2", "x"}}); }), ErrorCode::InvalidQuiver);
  EXPECT_EQ(code_of([&] { DynkinQuiver(DynkinType::parse("D4"), {"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}}); }),
            ErrorCode::InvalidQuiver);
}

TEST(DynkinQuiver, PathsAndReachability) {
  const auto q = a4();
  EXPECT_TRUE(q.has_path(0, 2));
  EXPECT_FALSE(q.has_path(2, 0));
  EXPECT_FALSE(q.has_path(3, 1));
  EXPECT_EQ(q.path_length(0, 2), 2);
  const auto maxes = maximal_paths(q);
  ASSERT_EQ(maxes.size(), 2u);
  EXPECT_EQ(maxes[0], (QPath{0, 2}));
  EXPECT_EQ(maxes[1], (QPath{0, 3}));
}

TEST(HeightFunction, ValidationAndDefault) {
  const auto q = a4();
  EXPECT_NO_THROW(validate_height_function(q, a4_xi()));
  EXPECT_EQ(code_of([&] { validate_height_function(q, HeightFunction{{3, 2, 1, 1}}); }), ErrorCode::HeightMismatch);
  EXPECT_EQ(code_of([&] { validate_height_function(q, HeightFunction{{3, 2}}); }), ErrorCode::HeightMismatch);
  for (const auto& quiver : {a2(), a3(), a3_linear(), a4(), d4(), e_type(6), e_type(7), e_type(8)}) {
    const auto h = default_height(quiver);
    EXPECT_NO_THROW(validate_height_function(quiver, h));
    EXPECT_EQ(*std::min_element(h.xi.begin(), h.xi.end()), 0);
  }
}

TEST(PositiveRoots, CountsMatchRankTimesCoxeterOverTwo) {
  EXPECT_EQ(positive_roots(a2()).size(), 3u);
  EXPECT_EQ(positive_roots(a3()).size(), 6u);
  EXPECT_EQ(positive_roots(a4()).size(), 10u);
  EXPECT_EQ(positive_roots(d4()).size(), 12u);
  EXPECT_EQ(positive_roots(e_type(6)).size(), 36u);
  EXPECT_EQ(positive_roots(e_type(7)).size(), 63u);
  EXPECT_EQ(positive_roots(e_type(8)).size(), 120u);
}

TEST(PositiveRoots, EveryRootHasTitsFormOne) {
  for (const auto& q : {a4(), d4(), e_type(6)})
    for (const Root& r : positive_roots(q)) {
      EXPECT_EQ(cartan_pairing(q, r, r), 2);
      EXPECT_TRUE(std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }));
    }
}

TEST(DimVector, ArithmeticAndZeroEntries) {
  const auto q = a2();
  DimVector d{{parse_vertex(q, "1[0]"), 2}, {parse_vertex(q, "2[1]"), 1}};
  EXPECT_EQ(d.total(), 3);
  EXPECT_EQ(d.min_degree(), 0);
  EXPECT_EQ(d.max_degree(), 1);
  DimVector e = d - d;
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(format_dim(q, d), "{1[0]:2,2[1]}");
  EXPECT_TRUE((2 * d).fits_in(3 * d));
  EXPECT_FALSE((3 * d).fits_in(2 * d));
}

TEST(Vertices, ParseRejectsMalformedText) {
  const auto q = a2();
  EXPECT_EQ(parse_vertex(q, "2[-3]"), (RepVertex{1, -3}));
  EXPECT_EQ(code_of([&] { parse_vertex(q, "2"); }), ErrorCode::ConfigError);
  EXPECT_EQ(code_of([&] { parse_vertex(q, "7[0]"); }), ErrorCode::ConfigError);
  EXPECT_EQ(code_of([&] { parse_vertex(q, "1[x]"); }), ErrorCode::ConfigError);
}

TEST(GammaHat, A2WindowCounts) {
  // Levels -1..2 of A2 with xi = (1, 0).
  const auto w = build_gamma_hat(a2(), a2_xi(), {-1, 3});
  EXPECT_EQ(w.slots.size(), 8u);
  std::size_t stable = 0;
  for (Slot s : w.slots) stable += is_stable(a2_xi(), s) ? 1 : 0;
  EXPECT_EQ(stable, 4u);
  // Every arrow goes down one level and stays in the window.
  for (const auto& a : w.arrows) {
    EXPECT_EQ(a.target.level, a.source.level - 1);
    EXPECT_TRUE(w.range.contains(a.target.level));
  }
  EXPECT_EQ(w.relations.size(), 2u);
}

TEST(GammaHat, StableSlotsHaveOneRelationWithDegreePlusOneTerms) {
  const auto q = d4();
  const auto xi = d4_xi();
  const auto w = build_gamma_hat(q, xi, {-6, 6});
  for (const auto& r : w.relations) {
    EXPECT_TRUE(is_stable(xi, r.top));
    EXPECT_EQ(r.terms.size(), q.neighbors(r.top.column).size() + 1);
    EXPECT_EQ(r.terms.front(), (std::pair<int, Slot>{1, {r.top.column, r.top.level - 1}}));
    for (const auto& [sign, mid] : r.terms) {
      EXPECT_EQ(mid.level, r.top.level - 1);
      EXPECT_FALSE(is_stable(xi, mid) && mid.column == r.top.column);
    }
  }
}

TEST(GammaHat, RelationSignsFollowOrientation) {
  const auto q = a2();
  const auto r1 = gamma_relation_at(q, {0, 1});
  ASSERT_EQ(r1.terms.size(), 2u);
  EXPECT_EQ(r1.terms[1].first, +1);
  const auto r2 = gamma_relation_at(q, {1, 0});
  EXPECT_EQ(r2.terms[1].first, -1);
}

TEST(GammaHat, SlotParity) {
  const auto xi = a2_xi();
  EXPECT_EQ(slot_kind(xi, {0, 1}), SlotKind::Stable);
  EXPECT_EQ(slot_kind(xi, {0, 2}), SlotKind::Projective);
  EXPECT_EQ(slot_kind(xi, {1, -1}), SlotKind::Projective);
  EXPECT_EQ(slot_kind(xi, {1, -2}), SlotKind::Stable);
}

TEST(RepetitivePresentation, A2TwoDegrees) {
  const auto p = build_repetitive_presentation(a2(), {0, 2});
  EXPECT_EQ(p.vertices.size(), 4u);
  // Two copies of 1 -> 2 and one connecting arrow 2[0] -> 1[1].
  EXPECT_EQ(p.arrows.size(), 3u);
  std::size_t connecting = 0;
  for (const auto& a : p.arrows) connecting += a.connecting ? 1 : 0;
  EXPECT_EQ(connecting, 1u);
  for (const auto& r : p.relations) EXPECT_FALSE(r.commutation);
}

TEST(RepetitivePresentation, A4HasOneCommutationPerSharingPair) {
  const auto p = build_repetitive_presentation(a4(), {0, 3});
  std::size_t commutation = 0;
  for (const auto& r : p.relations) {
    if (!r.commutation) {
      EXPECT_EQ(r.terms.size(), 1u);
      continue;
    }
    ++commutation;
    ASSERT_EQ(r.terms.size(), 2u);
    EXPECT_EQ(r.terms[0].first + r.terms[1].first, 0);
  }
  EXPECT_EQ(commutation, 2u);
}

TEST(RepetitivePresentation, ProjectiveDimensionVectors) {
  const auto q = a4();
  // P_{1[0]}: paths from 1 inside degree 0, then the dual part in degree 1.
  const auto p1 = projective_dim_vector(q, {0, 0});
  EXPECT_EQ(p1.total(), 5);
  EXPECT_EQ(p1[(RepVertex{0, 1})], 1);
  const auto p3 = projective_dim_vector(q, {2, 0});
  EXPECT_EQ(p3[(RepVertex{2, 0})], 1);
  EXPECT_EQ(p3[(RepVertex{0, 1})], 1);
  EXPECT_EQ(p3[(RepVertex{1, 1})], 1);
  EXPECT_EQ(p3[(RepVertex{2, 1})], 1);
  EXPECT_EQ(p3.total(), 4);
}

}  // namespace
}  // namespace repknit
