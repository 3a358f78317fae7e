#include <doctest.h>

#include <vector>

#include "sl3web/annulus_webs.hpp"

using namespace sl3web;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Malformed;
}

}  // namespace

TEST_CASE("twist_coords: examples") {
  CHECK(twist_coords(AnnulusDescriptor{}) == TwistTuple{0, 0, 0, 0});
  CHECK(twist_coords(line_circle_descriptor(LineCircleSide::Left, 1, 2, 3)) ==
        TwistTuple{1, 0, 2, 3});
  const std::vector<Int> inc = {1, 0};
  const std::vector<Int> dec = {-1};
  const auto braid =
      braid_descriptor(inc, dec, BoundaryWord::parse("+-+"), BoundaryWord::parse("++-"));
  CHECK(twist_coords(braid) == TwistTuple{2, 1, 1, -1});
  CHECK(braid.kind() == AnnulusKind::StrictBraid);
}

TEST_CASE("line-circle pictures") {
  const auto left = line_circle_descriptor(LineCircleSide::Left, 1, 2, 3);
  CHECK(left.kind() == AnnulusKind::LineCircleLeft);
  CHECK(left.word0().str() == "+");
  const auto right = line_circle_descriptor(LineCircleSide::Right, 2, -1, 4);
  CHECK(twist_coords(right) == TwistTuple{0, 2, 4, -1});
  CHECK(right.kind() == AnnulusKind::LineCircleRight);
  CHECK(right.word1().str() == "--");
  // Without lines the twist slot holds a circle count and must be nonnegative.
  CHECK(kind_of([] { line_circle_descriptor(LineCircleSide::Left, 0, -1, 2); }) ==
        ErrorKind::ImageViolation);
}

TEST_CASE("validate: examples") {
  CHECK(kind_of([] { validate({0, 0, -1, 0}, {}, {}); }) == ErrorKind::ImageViolation);
  const auto d = validate({1, 0, 5, 0}, BoundaryWord::parse("+"), BoundaryWord::parse("+"));
  CHECK(d.tuple() == TwistTuple{1, 0, 5, 0});
  CHECK(d.kind() == AnnulusKind::StrictBraid);
  CHECK(kind_of([] {
          validate({1, 1, 0, 0}, BoundaryWord::parse("+-"), BoundaryWord::parse("++"));
        }) == ErrorKind::WordMismatch);
}

TEST_CASE("validate: other error paths") {
  CHECK(kind_of([] { validate({-1, 0, 0, 0}, {}, {}); }) == ErrorKind::ImageViolation);
  CHECK(kind_of([] { validate({0, 0, 0, -2}, {}, {}); }) == ErrorKind::ImageViolation);
  CHECK(kind_of([] { validate({2, 0, 0, 0}, BoundaryWord::parse("+"),
                              BoundaryWord::parse("++")); }) == ErrorKind::WordMismatch);
  CHECK(kind_of([] { BoundaryWord::parse("+x"); }) == ErrorKind::Malformed);
  // Any interleaving with the right counts is a valid signature.
  CHECK_NOTHROW(validate({2, 2, 0, 0}, BoundaryWord::parse("-+-+"), BoundaryWord::parse("+--+")));
}

TEST_CASE("canonical_descriptor: examples") {
  CHECK(canonical_descriptor({0, 0, 0, 0}) == AnnulusDescriptor{});
  const auto d = canonical_descriptor({2, 1, 0, 0});
  CHECK(d.word0().str() == "++-");
  CHECK(d.word1().str() == "++-");
  const auto circles = canonical_descriptor({0, 0, 3, 2});
  CHECK(circles.word0().size() == 0);
  CHECK(circles.word1().size() == 0);
  CHECK(circles.kind() == AnnulusKind::PureCircles);
  CHECK(kind_of([] { canonical_descriptor({0, 1, -1, 0}); }) == ErrorKind::ImageViolation);
}

TEST_CASE("image characterization over n in [0,3]^2, t in [-3,3]^2") {
  int accepted = 0;
  for (Int n1 = 0; n1 <= 3; ++n1) {
    for (Int n2 = 0; n2 <= 3; ++n2) {
      for (Int t1 = -3; t1 <= 3; ++t1) {
        for (Int t2 = -3; t2 <= 3; ++t2) {
          const TwistTuple t{n1, n2, t1, t2};
          const bool expected = (n1 > 0 || t1 >= 0) && (n2 > 0 || t2 >= 0);
          bool ok = true;
          try {
            validate(t, BoundaryWord::block(n1, n2), BoundaryWord::block(n1, n2));
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ImageViolation);
            ok = false;
          }
          CHECK(ok == expected);
          CHECK(twist_image_check(t) == expected);
          if (expected) {
            ++accepted;
            CHECK(twist_coords(canonical_descriptor(t)) == t);
          }
        }
      }
    }
  }
  CHECK(accepted == 625);
}

TEST_CASE("kind trichotomy and uniqueness") {
  for (Int n1 = 0; n1 <= 2; ++n1) {
    for (Int n2 = 0; n2 <= 2; ++n2) {
      for (Int t1 = -2; t1 <= 2; ++t1) {
        for (Int t2 = -2; t2 <= 2; ++t2) {
          const TwistTuple t{n1, n2, t1, t2};
          if (!twist_image_check(t)) continue;
          const auto d = canonical_descriptor(t);
          const AnnulusKind k = d.kind();
          const int matches = (n1 == 0 && n2 == 0) + (n1 > 0 && n2 == 0 && t2 > 0) +
                              (n2 > 0 && n1 == 0 && t1 > 0) +
                              (k == AnnulusKind::StrictBraid);
          CHECK(matches == 1);
          // Same coordinates and signatures give the same web.
          CHECK(validate(t, d.word0(), d.word1()) == d);
        }
      }
    }
  }
  const auto a = validate({1, 1, 0, 0}, BoundaryWord::parse("+-"), BoundaryWord::parse("-+"));
  const auto b = validate({1, 1, 0, 0}, BoundaryWord::parse("-+"), BoundaryWord::parse("-+"));
  CHECK(a != b);
}
