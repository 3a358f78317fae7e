#pragma once

// Coordinates on the pair of pants.
//
// A ShearVector holds the eight shear coordinates of a lamination on the
// thrice-punctured sphere, labelled 11,12,21,22,31,32 (edge points) and v, v'
// (the front and back triangle centres). A PantsTuple repackages them as six
// boundary intersection counts n_tj, a twist tP and a height hP. The two are
// related by an invertible linear map over Q; the image of the cone Lambda is
// cut out by nonnegativity of the n_tj plus four congruences.
//
// Swapping the roles of v and v' negates tP.

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <utility>

#include "sl3web/integer.hpp"

namespace sl3web {

struct ShearVector {
  Int x11 = 0;
  Int x12 = 0;
  Int x21 = 0;
  Int x22 = 0;
  Int x31 = 0;
  Int x32 = 0;
  Int xv = 0;
  Int xvp = 0;

  static constexpr std::array<std::string_view, 8> kNames = {
      "x11", "x12", "x21", "x22", "x31", "x32", "xv", "xvp"};

  std::array<Int, 8> values() const { return {x11, x12, x21, x22, x31, x32, xv, xvp}; }
  static ShearVector from_values(const std::array<Int, 8>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }

  friend bool operator==(const ShearVector&, const ShearVector&) = default;
  friend auto operator<=>(const ShearVector&, const ShearVector&) = default;
};

ShearVector operator+(const ShearVector& a, const ShearVector& b);

struct PantsTuple {
  Int n11 = 0;
  Int n12 = 0;
  Int n21 = 0;
  Int n22 = 0;
  Int n31 = 0;
  Int n32 = 0;
  Int tP = 0;
  Int hP = 0;

  static constexpr std::array<std::string_view, 8> kNames = {
      "n11", "n12", "n21", "n22", "n31", "n32", "tP", "hP"};

  std::array<Int, 8> values() const { return {n11, n12, n21, n22, n31, n32, tP, hP}; }
  static PantsTuple from_values(const std::array<Int, 8>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }

  // Intersection counts (n_t1, n_t2) on boundary t in 1..3.
  std::pair<Int, Int> boundary(int t) const;

  friend bool operator==(const PantsTuple&, const PantsTuple&) = default;
  friend auto operator<=>(const PantsTuple&, const PantsTuple&) = default;
};

PantsTuple operator+(const PantsTuple& a, const PantsTuple& b);

// The eight linear formulas, with signed n entries. Total on Z^8.
PantsTuple forward_unchecked(const ShearVector& x);

// As forward_unchecked, but throws ConstraintViolation (field = first negative
// n entry) when x lies outside Lambda.
PantsTuple forward(const ShearVector& x);

struct InverseResult {
  enum class Status { Ok, NonIntegral, NotInLambda };
  Status status = Status::Ok;
  int field = -1;  // x-index for NonIntegral, n-index for NotInLambda
  ShearVector value;

  explicit operator bool() const { return status == Status::Ok; }
};

// Non-throwing form of invert(); only Overflow can escape.
InverseResult try_invert(const PantsTuple& t);

// Exact inverse of the linear map. Throws NonIntegral (field = first
// coordinate whose numerator is not divisible by 6) or NotInLambda.
ShearVector invert(const PantsTuple& t);

// The six inequalities defining Lambda.
bool lambda_check(const ShearVector& x);

// Index 0..5 of the first violated Lambda inequality, in n11..n32 order.
std::optional<int> lambda_violation(const ShearVector& x);

enum class ImageCondition {
  Nonnegativity,  // some n_tj < 0
  RowBalance,     // n12+n22+n32 == n11+n21+n31 (mod 3)
  HeightParity,   // hP + n11+n21+n31 == 0 (mod 2)
  HeightResidue,  // hP == n11-n12-n21+n22 (mod 3)
  TwistResidue,   // 3tP == n12+n22+n32 - n11-n21-n31 (mod 6)
};

std::string_view to_string(ImageCondition c);

// The four congruences only (no sign conditions).
std::optional<ImageCondition> congruence_violation(const PantsTuple& t);

// First failed image condition, or nullopt when t lies in the image.
std::optional<ImageCondition> image_violation(const PantsTuple& t);

bool image_check(const PantsTuple& t);

// The height congruence hP == n11 - n12 - n21 + n22 (mod 3).
bool height_residue_signed(const PantsTuple& t);
// The same congruence written as hP == n11 + 2 n21 - n12 + n22 (mod 3).
bool height_residue_doubled(const PantsTuple& t);

// Cyclic relabelling n1j -> n2j -> n3j -> n1j of the boundaries.
PantsTuple rotate(const PantsTuple& t);

// (n_t1, n_t2) of forward(x) for boundary t in 1..3: the number of endpoints
// on C_t pointing towards and away from C_t. Throws NotInLambda.
std::pair<Int, Int> boundary_counts(const ShearVector& x, int boundary);

}  // namespace sl3web
