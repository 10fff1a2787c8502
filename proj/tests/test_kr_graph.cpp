#include <gtest/gtest.h>

#include "morse/canonical.hpp"
#include "morse/error.hpp"
#include "morse/kr_graph.hpp"

namespace morse {
namespace {

KRGraph sphere_graph() {
  return {Target::Line, {{0, VertexKind::Min, Rational(0), ""}, {1, VertexKind::Max, Rational(1), ""}}, {{0, 0, 1, 0}}};
}

KRGraph theta_graph() {
  return {Target::Line,
          {{0, VertexKind::Min, Rational(0), ""},
           {1, VertexKind::Saddle3, Rational(1), ""},
           {2, VertexKind::Saddle3, Rational(2), ""},
           {3, VertexKind::Max, Rational(3), ""}},
          {{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 1, 2, 0}, {3, 2, 3, 0}}};
}

KRGraph fibration_loop() { return {Target::Circle, {}, {{0, std::nullopt, std::nullopt, 1}}}; }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::InvalidArgument;
}

TEST(CriticalTypeOf, Sphere) {
  const auto k = critical_type_of(sphere_graph(), Surface::orientable(0), {});
  EXPECT_EQ(k, (CriticalType{Target::Line, {}, 1, 0, 1, {}}));
}

TEST(CriticalTypeOf, TorusTheta) {
  const auto k = critical_type_of(theta_graph(), Surface::orientable(1), {0, 0});
  EXPECT_EQ(k.c0, 1);
  EXPECT_EQ(k.c1, 2);
  EXPECT_EQ(k.c2, 1);
  EXPECT_TRUE(validate_critical_type(Surface::orientable(1), k));
}

TEST(CriticalTypeOf, TorusFibrationHasNoCriticalPoints) {
  const auto k = critical_type_of(fibration_loop(), Surface::orientable(1), {1, 0});
  EXPECT_EQ(k, (CriticalType{Target::Circle, {1, 0}, 0, 0, 0, {}}));
}

TEST(CriticalTypeOf, RejectsBadQ) {
  EXPECT_EQ(code_of([] { critical_type_of(theta_graph(), Surface::orientable(1), {0}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { critical_type_of(theta_graph(), Surface::orientable(1), {0, 1}); }), Errc::InvalidArgument);
}

TEST(CriticalTypeOf, StarNeedsNonorientable) {
  KRGraph g{Target::Line,
            {{0, VertexKind::Min, Rational(0), ""}, {1, VertexKind::Star2, Rational(1), ""}, {2, VertexKind::Max, Rational(2), ""}},
            {{0, 0, 1, 0}, {1, 1, 2, 0}}};
  EXPECT_EQ(critical_type_of(g, Surface::nonorientable(1), {}).c1, 1);
  EXPECT_EQ(code_of([&] { critical_type_of(g, Surface::orientable(0), {}); }), Errc::InvalidArgument);
}

TEST(CriticalTypeOf, BoundaryLabelsMustMatch) {
  KRGraph g{Target::Line, {{0, VertexKind::BoundaryCircle, Rational(0), "V1"}, {1, VertexKind::Max, Rational(1), ""}}, {{0, 0, 1, 0}}};
  const auto k = critical_type_of(g, Surface::orientable(0, {"V1"}), {});
  EXPECT_EQ(k.eps.at("V1"), -1);
  EXPECT_EQ(code_of([&] { critical_type_of(g, Surface::orientable(0, {"W"}), {}); }), Errc::BoundaryMismatch);
}

TEST(Check, RejectsMalformedGraphs) {
  auto g = theta_graph();
  g.edges.pop_back();
  EXPECT_EQ(code_of([&] { check_kr_graph(g); }), Errc::InvalidArgument);
  auto down = sphere_graph();
  down.vertices[1].height = Rational(-1);
  EXPECT_EQ(code_of([&] { check_kr_graph(down); }), Errc::InvalidArgument);
  auto tie = theta_graph();
  tie.vertices[2].height = Rational(1);
  tie.vertices[3].height = Rational(2);
  EXPECT_EQ(code_of([&] { check_kr_graph(tie); }), Errc::InvalidArgument);
  auto flat = theta_graph();
  flat.vertices[0].height = Rational(-1);
  flat.vertices[3].height = Rational(5);
  flat.vertices[2].height = flat.vertices[1].height + 1;
  EXPECT_NO_THROW(check_kr_graph(flat));
}

TEST(Check, EqualCriticalHeightsAreNotGeneric) {
  KRGraph g{Target::Line,
            {{0, VertexKind::Min, Rational(0), ""},
             {1, VertexKind::Saddle3, Rational(1), ""},
             {2, VertexKind::Max, Rational(2), ""},
             {3, VertexKind::Max, Rational(2), ""}},
            {{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 1, 3, 0}}};
  EXPECT_EQ(code_of([&] { check_kr_graph(g); }), Errc::NotGeneric);
}

TEST(FiberComponents, SphereAndTheta) {
  EXPECT_EQ(regular_fiber_components(sphere_graph(), Rational(1, 2)), 1);
  EXPECT_EQ(regular_fiber_components(theta_graph(), Rational(3, 2)), 2);
  EXPECT_EQ(regular_fiber_components(theta_graph(), Rational(1, 2)), 1);
  EXPECT_EQ(regular_fiber_components(theta_graph(), Rational(7)), 0);
  EXPECT_EQ(code_of([] { regular_fiber_components(theta_graph(), Rational(2)); }), Errc::NotRegular);
}

TEST(FiberComponents, WindingLoopCountsItsTurns) {
  KRGraph g{Target::Circle, {}, {{0, std::nullopt, std::nullopt, 3}}};
  EXPECT_EQ(regular_fiber_components(g, Rational(1, 3)), 3);
  // an edge wrapping twice between two heights
  KRGraph h{Target::Circle,
            {{0, VertexKind::Saddle3, Rational(1, 4), ""}, {1, VertexKind::Saddle3, Rational(3, 4), ""}},
            {{0, 0, 1, 0}, {1, 0, 1, 0}, {2, 1, 0, 2}}};
  EXPECT_EQ(regular_fiber_components(h, Rational(1, 2)), 3);
  EXPECT_EQ(regular_fiber_components(h, Rational(0)), 2);
  EXPECT_EQ(regular_fiber_components(h, Rational(7, 8)), 2);
}

TEST(Cut, FibrationIsOneThroughPiece) {
  const auto cut = cut_at_level(fibration_loop(), Rational(1, 3));
  ASSERT_EQ(cut.pieces.size(), 1u);
  EXPECT_EQ(cut.pieces[0].cls, PieceClass::Q01);
  const auto& g = cut.pieces[0].graph;
  ASSERT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(g.vertices[0].label, "B0.1");
  EXPECT_EQ(g.vertices[1].label, "B1.1");
}

TEST(Cut, LobeAboveTheLevelIsUpperOnly) {
  // a circle fibration with a maximum hanging off through a saddle
  KRGraph g{Target::Circle,
            {{0, VertexKind::Saddle3, Rational(1, 4), ""}, {1, VertexKind::Max, Rational(1, 2), ""}},
            {{0, 0, 0, 1}, {1, 0, 1, 0}}};
  EXPECT_NO_THROW(check_kr_graph(g));
  const auto cut = cut_at_level(g, Rational(3, 4));
  ASSERT_EQ(cut.pieces.size(), 1u);
  EXPECT_EQ(cut.pieces[0].cls, PieceClass::Q01);

  // a maximum just above the level, reached by an edge through it
  KRGraph two{Target::Circle,
              {{0, VertexKind::Saddle3, Rational(1, 2), ""},
               {1, VertexKind::Saddle3, Rational(3, 4), ""},
               {2, VertexKind::Min, Rational(5, 8), ""},
               {3, VertexKind::Max, Rational(1, 8), ""}},
              {{0, 0, 1, 0}, {1, 0, 3, 1}, {2, 2, 1, 0}, {3, 1, 0, 1}}};
  ASSERT_NO_THROW(check_kr_graph(two));
  const auto pieces = cut_at_level(two, Rational(0)).pieces;
  ASSERT_EQ(pieces.size(), 2u);
  int b0 = 0, b1 = 0, q0 = 0;
  for (const auto& p : pieces) {
    b0 += p.b0;
    b1 += p.b1;
    if (p.cls == PieceClass::Q0) {
      ++q0;
      EXPECT_EQ(p.b1, 0);
    }
    if (p.b0 > 0 && p.b1 > 0) EXPECT_EQ(p.cls, PieceClass::Q01);
  }
  EXPECT_EQ(q0, 1);
  EXPECT_EQ(b0, 2);
  EXPECT_EQ(b1, 2);
}

TEST(Cut, SeparatesNullHomotopicLobe) {
  // level 0 meets only the wrapping edge; below it sits a lobe with a minimum
  KRGraph g{Target::Circle,
            {{0, VertexKind::Min, Rational(1, 8), ""},
             {1, VertexKind::Saddle3, Rational(1, 4), ""},
             {2, VertexKind::Saddle3, Rational(1, 2), ""},
             {3, VertexKind::Max, Rational(5, 8), ""}},
            {{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 2, 3, 0}, {3, 2, 1, 1}}};
  ASSERT_NO_THROW(check_kr_graph(g));
  const auto cut = cut_at_level(g, Rational(0));
  ASSERT_EQ(cut.pieces.size(), 1u);
  EXPECT_EQ(cut.pieces[0].cls, PieceClass::Q01);
  EXPECT_EQ(cut.pieces[0].graph.vertices.size(), 6u);
}

TEST(Cut, RequiresCircleAndRegularLevel) {
  EXPECT_EQ(code_of([] { cut_at_level(theta_graph(), Rational(1, 2)); }), Errc::InvalidArgument);
  KRGraph g{Target::Circle, {{0, VertexKind::Saddle3, Rational(1, 4), ""}, {1, VertexKind::Max, Rational(1, 2), ""}},
            {{0, 0, 0, 1}, {1, 0, 1, 0}}};
  EXPECT_EQ(code_of([&] { cut_at_level(g, Rational(1, 2)); }), Errc::NotRegular);
}

TEST(Cut, CanonicalCircleGraphCutsIntoLineForm) {
  const Surface s = Surface::orientable(2);
  const auto circle = canonical_kr_graph(s, {}, 0, 0, Target::Circle, {1, 0, 0, 0});
  const auto cut = cut_at_level(circle, Rational(0));
  ASSERT_EQ(cut.pieces.size(), 1u);
  EXPECT_EQ(cut.pieces[0].cls, PieceClass::Q01);
  const Surface cut_surface = Surface::orientable(1, {"B0.1", "B1.1"});
  const auto line = canonical_kr_graph(cut_surface, {{"B0.1", -1}, {"B1.1", 1}}, 0, 0, Target::Line, {0, 0});
  EXPECT_TRUE(same_shape(cut.pieces[0].graph, line));
}

TEST(Shape, IgnoresHeightsButNotStructure) {
  auto stretched = theta_graph();
  for (auto& v : stretched.vertices) v.height = v.height * v.height;
  EXPECT_TRUE(same_shape(theta_graph(), stretched));
  auto moved = theta_graph();
  moved.edges[2].tail = 0;
  moved.edges[0].head = 2;
  EXPECT_FALSE(same_shape(theta_graph(), moved));
}

TEST(Dot, ShapesAndHeights) {
  const std::string dot = to_dot(theta_graph());
  EXPECT_NE(dot.find("v0 [shape=point, kind=\"Min\", height=\"0/1\"]"), std::string::npos);
  EXPECT_NE(dot.find("shape=triangle"), std::string::npos);
  EXPECT_NE(dot.find("v1 -> v2;"), std::string::npos);
  KRGraph g{Target::Line, {{0, VertexKind::BoundaryCircle, Rational(0), "V1"}, {1, VertexKind::Star2, Rational(1), ""},
                           {2, VertexKind::Max, Rational(2), ""}},
            {{0, 0, 1, 0}, {1, 1, 2, 0}}};
  const std::string d2 = to_dot(g);
  EXPECT_NE(d2.find("shape=doublecircle"), std::string::npos);
  EXPECT_NE(d2.find("label=\"V1\""), std::string::npos);
  EXPECT_NE(d2.find("shape=star"), std::string::npos);
  EXPECT_NE(to_dot(fibration_loop()).find("loop0 -> loop0 [wrap=1]"), std::string::npos);
}

}  // namespace
}  // namespace morse
