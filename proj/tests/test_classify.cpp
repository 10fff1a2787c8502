#include <gtest/gtest.h>

#include "morse/classify.hpp"
#include "morse/error.hpp"

namespace morse {
namespace {

CriticalType line(std::vector<std::int64_t> q, std::int64_t c0, std::int64_t c1, std::int64_t c2, BoundarySigns eps = {}) {
  return {Target::Line, std::move(q), c0, c1, c2, std::move(eps)};
}

CriticalType circle(std::vector<std::int64_t> q, std::int64_t c0, std::int64_t c1, std::int64_t c2, BoundarySigns eps = {}) {
  return {Target::Circle, std::move(q), c0, c1, c2, std::move(eps)};
}

TEST(Equivalence, Reflexive) {
  const auto k = circle({1, 0, 0, 0}, 0, 2, 0);
  EXPECT_TRUE(sigma_homotopy_equivalent(k, k));
  EXPECT_EQ(compare_types(k, k).reason, "ok");
}

TEST(Equivalence, TorusTypesDifferInC0) {
  const auto v = compare_types(line({0, 0}, 1, 2, 1), line({0, 0}, 2, 3, 1));
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.reason, "c0");
}

TEST(Equivalence, ReportsFirstDifferingField) {
  const auto k = circle({1, 0, 0, 0}, 1, 3, 0, {});
  EXPECT_EQ(compare_types(k, line({1, 0, 0, 0}, 1, 3, 0)).reason, "target");
  EXPECT_EQ(compare_types(k, circle({0, 1, 0, 0}, 1, 3, 0)).reason, "q");
  EXPECT_EQ(compare_types(k, circle({1, 0, 0, 0}, 1, 4, 0)).reason, "c1");
  EXPECT_EQ(compare_types(k, circle({1, 0, 0, 0}, 1, 3, 1)).reason, "c2");
  const auto a = line({}, 1, 0, 0, {{"V1", 1}});
  EXPECT_EQ(compare_types(a, line({}, 1, 0, 0, {{"V1", -1}})).reason, "eps");
}

TEST(Equivalence, FlipIsOnlyUpToFlip) {
  const auto k = circle({1, 0, 0, 0}, 1, 3, 0);
  const auto f = flip_target_orientation(k);
  EXPECT_FALSE(sigma_homotopy_equivalent(k, f));
  EXPECT_TRUE(equivalent_up_to_flip(k, f));
}

TEST(Equivalence, DiskSignMismatchSurvivesFlip) {
  const auto a = line({}, 1, 0, 0, {{"V1", 1}});
  const auto b = line({}, 1, 0, 0, {{"V1", -1}});
  EXPECT_FALSE(sigma_homotopy_equivalent(a, b));
  EXPECT_FALSE(equivalent_up_to_flip(a, b));
}

TEST(Equivalence, OppositeWindingMatchesViaFlip) {
  const auto a = circle({1, 0, 0, 0}, 0, 2, 0);
  const auto b = circle({-1, 0, 0, 0}, 0, 2, 0);
  EXPECT_FALSE(sigma_homotopy_equivalent(a, b));
  EXPECT_TRUE(equivalent_up_to_flip(a, b));
}

TEST(Equivalence, DifferentSurfacesRaise) {
  try {
    compare_types(line({0, 0}, 1, 2, 1), line({0, 0, 0, 0}, 1, 4, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SurfaceMismatch);
  }
  EXPECT_THROW(sigma_homotopy_equivalent(line({}, 1, 0, 0, {{"V1", 1}}), line({}, 1, 0, 0, {{"W", 1}})), Error);
}

TEST(FiberCount, Gcd) {
  EXPECT_EQ(minimal_fiber_count(circle({0, 0, 0, 0}, 1, 4, 1)), 0);
  EXPECT_EQ(minimal_fiber_count(circle({1, 0}, 0, 0, 0)), 1);
  EXPECT_EQ(minimal_fiber_count(circle({6, 10, 15, 0}, 0, 2, 0)), 1);
  EXPECT_EQ(minimal_fiber_count(circle({6, 10, 0, 0}, 0, 2, 0)), 2);
  EXPECT_EQ(minimal_fiber_count(circle({-4, 0}, 0, 0, 0)), 4);
  EXPECT_THROW(minimal_fiber_count(line({}, 1, 0, 1)), Error);
}

TEST(Minimal, ClosedGenusTwoLine) { EXPECT_TRUE(is_minimal(Surface::orientable(2), line({0, 0, 0, 0}, 1, 4, 1))); }

TEST(Minimal, MinimumWithNegativeBoundaryIsWasteful) {
  const Surface s = Surface::orientable(0, {"V1", "V2"});
  EXPECT_FALSE(is_minimal(s, line({}, 1, 1, 0, {{"V1", -1}, {"V2", 1}})));
  EXPECT_TRUE(is_minimal(s, line({}, 0, 0, 0, {{"V1", -1}, {"V2", 1}})));
}

TEST(Minimal, CircleNeedsNoExtrema) {
  const Surface s = Surface::orientable(2);
  EXPECT_TRUE(is_minimal(s, circle({1, 0, 0, 0}, 0, 2, 0)));
  EXPECT_FALSE(is_minimal(s, circle({1, 0, 0, 0}, 1, 3, 0)));
  EXPECT_THROW(is_minimal(s, circle({0, 0, 0, 0}, 1, 4, 1)), Error);
}

CompositePiece annulus(const std::string& lo, const std::string& hi, Half half) {
  return {Surface::orientable(0, {lo, hi}), line({}, 0, 0, 0, {{lo, -1}, {hi, 1}}), half};
}

TEST(Composite, AnnulusThroughBothEnds) {
  const std::vector<CompositePiece> pieces{annulus("B0", "Z", Half::Lower), annulus("Z", "B1", Half::Upper)};
  EXPECT_TRUE(is_minimal_composite(pieces, {{"B0"}, {"B1"}, {"Z"}}));
}

TEST(Composite, ZComponentMeetingOnlyB0) {
  // the upper half is a cap with a maximum
  const std::vector<CompositePiece> pieces{
      annulus("B0", "Z", Half::Lower),
      {Surface::orientable(0, {"Z"}), line({}, 0, 0, 1, {{"Z", -1}}), Half::Upper},
      annulus("C0", "Y", Half::Lower),
      annulus("Y", "B1", Half::Upper)};
  EXPECT_FALSE(is_minimal_composite(pieces, {{"B0", "C0"}, {"B1"}, {"Z", "Y"}}));
}

TEST(Composite, EmptyZ) {
  const std::vector<CompositePiece> pieces{annulus("B0", "X", Half::Lower), annulus("Y", "B1", Half::Upper)};
  EXPECT_FALSE(is_minimal_composite(pieces, {{"B0"}, {"B1"}, {}}));
}

TEST(Composite, NonMinimalHalf) {
  const std::vector<CompositePiece> pieces{
      {Surface::orientable(0, {"B0", "Z"}), line({}, 1, 1, 0, {{"B0", -1}, {"Z", 1}}), Half::Lower},
      annulus("Z", "B1", Half::Upper)};
  EXPECT_FALSE(is_minimal_composite(pieces, {{"B0"}, {"B1"}, {"Z"}}));
}

TEST(Composite, MalformedGluing) {
  const std::vector<CompositePiece> pieces{annulus("B0", "Z", Half::Lower), annulus("Z", "B1", Half::Upper)};
  EXPECT_THROW(is_minimal_composite(pieces, {{"B0"}, {"B1"}, {"B1"}}), Error);
  EXPECT_THROW(is_minimal_composite(pieces, {{"Z"}, {"B1"}, {"B0"}}), Error);
  EXPECT_THROW(is_minimal_composite(pieces, {{"B0"}, {"B1"}, {"Q"}}), Error);
}

}  // namespace
}  // namespace morse
