#include <gtest/gtest.h>

#include "morse/error.hpp"
#include "morse/surface.hpp"

namespace morse {
namespace {

CriticalType line_type(std::vector<std::int64_t> q, std::int64_t c0, std::int64_t c1, std::int64_t c2,
                       BoundarySigns eps = {}) {
  return {Target::Line, std::move(q), c0, c1, c2, std::move(eps)};
}

TEST(Surface, EulerCharacteristic) {
  EXPECT_EQ(euler_characteristic(Surface::orientable(0)), 2);
  EXPECT_EQ(euler_characteristic(Surface::orientable(1)), 0);
  EXPECT_EQ(euler_characteristic(Surface::nonorientable(2, {"V1"})), -1);
  EXPECT_EQ(euler_characteristic(Surface::orientable(3, {"a", "b"})), -6);
}

TEST(Surface, HomologyRank) {
  EXPECT_EQ(homology_rank(Surface::orientable(2)), 4);
  EXPECT_EQ(homology_rank(Surface::nonorientable(1)), 0);
  EXPECT_EQ(homology_rank(Surface::nonorientable(3, {"x"})), 2);
}

TEST(Surface, RejectsBadDescriptors) {
  EXPECT_THROW(Surface::nonorientable(0), Error);
  EXPECT_THROW(Surface::orientable(-1), Error);
  EXPECT_THROW(Surface::orientable(1, {"a", "a"}), Error);
}

TEST(Validate, TorusNeedsFullLengthZeroQ) {
  const Surface torus = Surface::orientable(1);
  const auto short_q = validate_critical_type(torus, line_type({}, 1, 2, 1));
  ASSERT_FALSE(short_q.ok());
  EXPECT_NE(short_q.violations[0].find("length r=2"), std::string::npos);
  EXPECT_TRUE(validate_critical_type(torus, line_type({0, 0}, 1, 2, 1)));
  EXPECT_FALSE(validate_critical_type(torus, line_type({1, 0}, 1, 2, 1)));
}

TEST(Validate, SphereHeightFunction) { EXPECT_TRUE(validate_critical_type(Surface::orientable(0), line_type({}, 1, 0, 1))); }

TEST(Validate, GenusTwoCircleWithoutExtrema) {
  CriticalType k{Target::Circle, {1, 0, 0, 0}, 0, 2, 0, {}};
  EXPECT_TRUE(validate_critical_type(Surface::orientable(2), k));
}

TEST(Validate, MorseEqualityUsesAlternatingSum) {
  // 1 + 2 - 1 = 2 satisfies c0 + c1 - c2 but not the alternating sum
  const auto report = validate_critical_type(Surface::orientable(0), line_type({}, 1, 2, 1));
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.violations[0].find("Morse equality"), std::string::npos);
}

TEST(Validate, RejectsNegativeCountsAndBadSigns) {
  const Surface disk = Surface::orientable(0, {"V1"});
  EXPECT_FALSE(validate_critical_type(disk, line_type({}, -1, -2, 0, {{"V1", 1}})));
  EXPECT_FALSE(validate_critical_type(disk, line_type({}, 1, 0, 0, {{"V1", 2}})));
}

TEST(Validate, MismatchedLabelsIsADistinctError) {
  const Surface disk = Surface::orientable(0, {"V1"});
  try {
    validate_critical_type(disk, line_type({}, 1, 0, 0, {{"W", 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundaryMismatch);
  }
  EXPECT_THROW(validate_critical_type(disk, line_type({}, 1, 0, 0)), Error);
}

TEST(Flip, SwapsExtremaAndNegatesSigns) {
  CriticalType k{Target::Circle, {1}, 0, 3, 1, {{"V1", 1}}};
  CriticalType expected{Target::Circle, {-1}, 1, 3, 0, {{"V1", -1}}};
  EXPECT_EQ(flip_target_orientation(k), expected);
  EXPECT_EQ(flip_target_orientation(flip_target_orientation(k)), k);
}

TEST(Flip, SymmetricTypeIsFixed) {
  const auto k = line_type({0, 0}, 1, 2, 1);
  EXPECT_EQ(flip_target_orientation(k), k);
}

TEST(Json, RoundTripKeepsFieldOrder) {
  CriticalType k{Target::Circle, {1, -2}, 0, 3, 1, {{"V2", -1}, {"V1", 1}}};
  const std::string text = to_json(k);
  EXPECT_EQ(text, R"({"target":"Circle","q":[1,-2],"c0":0,"c1":3,"c2":1,"eps":{"V1":1,"V2":-1}})");
  EXPECT_EQ(critical_type_from_json(text), k);
}

TEST(Json, MalformedInputIsFormatError) {
  for (const char* bad : {"{", R"({"target":"Plane","q":[],"c0":0,"c1":0,"c2":0,"eps":{}})", R"({"q":[]})"}) {
    try {
      critical_type_from_json(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Format) << bad;
    }
  }
}

TEST(Descriptor, ParsesLabelsInOrder) {
  const auto [s, eps] = parse_surface_descriptor("nonorientable:3:top+,bottom-");
  EXPECT_FALSE(s.is_orientable());
  EXPECT_EQ(s.genus(), 3);
  EXPECT_EQ(s.boundary(), (std::vector<std::string>{"top", "bottom"}));
  EXPECT_EQ(eps.at("top"), 1);
  EXPECT_EQ(eps.at("bottom"), -1);
  EXPECT_EQ(parse_surface_descriptor("orientable:0").first, Surface::orientable(0));
  EXPECT_THROW(parse_surface_descriptor("klein:2"), Error);
  EXPECT_THROW(parse_surface_descriptor("orientable:1:a"), Error);
}

}  // namespace
}  // namespace morse
