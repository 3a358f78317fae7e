#include "sl3web/pants_coords.hpp"

#include <stdexcept>
#include <string>

namespace sl3web {

using checked::linear;

ShearVector operator+(const ShearVector& a, const ShearVector& b) {
  auto av = a.values();
  auto bv = b.values();
  std::array<Int, 8> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(av[i], bv[i]);
  return ShearVector::from_values(out);
}

PantsTuple operator+(const PantsTuple& a, const PantsTuple& b) {
  auto av = a.values();
  auto bv = b.values();
  std::array<Int, 8> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(av[i], bv[i]);
  return PantsTuple::from_values(out);
}

std::pair<Int, Int> PantsTuple::boundary(int t) const {
  switch (t) {
    case 1: return {n11, n12};
    case 2: return {n21, n22};
    case 3: return {n31, n32};
  }
  throw Error(ErrorKind::Malformed, "boundary index must be 1, 2 or 3");
}

PantsTuple forward_unchecked(const ShearVector& x) {
  PantsTuple t;
  t.n11 = linear({{1, x.x11}, {1, x.x32}});
  t.n12 = linear({{1, x.x12}, {1, x.x31}, {1, x.xv}, {1, x.xvp}});
  t.n21 = linear({{1, x.x31}, {1, x.x22}});
  t.n22 = linear({{1, x.x32}, {1, x.x21}, {1, x.xv}, {1, x.xvp}});
  t.n31 = linear({{1, x.x21}, {1, x.x12}});
  t.n32 = linear({{1, x.x22}, {1, x.x11}, {1, x.xv}, {1, x.xvp}});
  t.tP = linear({{1, x.xv}, {-1, x.xvp}});
  t.hP = linear({{1, x.x11}, {-1, x.x12}, {1, x.x21}, {-1, x.x22}, {1, x.x31}, {-1, x.x32}});
  return t;
}

namespace {

std::optional<int> first_negative_n(const PantsTuple& t) {
  auto v = t.values();
  for (int i = 0; i < 6; ++i) {
    if (v[static_cast<std::size_t>(i)] < 0) return i;
  }
  return std::nullopt;
}

}  // namespace

PantsTuple forward(const ShearVector& x) {
  PantsTuple t = forward_unchecked(x);
  if (auto bad = first_negative_n(t)) {
    auto name = PantsTuple::kNames[static_cast<std::size_t>(*bad)];
    throw Error(ErrorKind::ConstraintViolation,
                "shear vector outside Lambda: " + std::string(name) + " < 0", std::string(name));
  }
  return t;
}

InverseResult try_invert(const PantsTuple& t) {
  const Int h = t.hP;
  const Int tw = t.tP;
  // Numerators of the inverse map; every coordinate is numerator / 6.
  const std::array<Int, 8> numerators = {
      linear({{1, h}, {3, t.n11}, {-1, t.n21}, {-2, t.n22}, {1, t.n31}, {2, t.n32}}),
      linear({{-1, h}, {1, t.n11}, {2, t.n12}, {-1, t.n21}, {-2, t.n22}, {3, t.n31}}),
      linear({{1, h}, {-1, t.n11}, {-2, t.n12}, {1, t.n21}, {2, t.n22}, {3, t.n31}}),
      linear({{-1, h}, {-1, t.n11}, {-2, t.n12}, {3, t.n21}, {1, t.n31}, {2, t.n32}}),
      linear({{1, h}, {1, t.n11}, {2, t.n12}, {3, t.n21}, {-1, t.n31}, {-2, t.n32}}),
      linear({{-1, h}, {3, t.n11}, {1, t.n21}, {2, t.n22}, {-1, t.n31}, {-2, t.n32}}),
      linear({{3, tw}, {-1, t.n11}, {1, t.n12}, {-1, t.n21}, {1, t.n22}, {-1, t.n31}, {1, t.n32}}),
      linear({{-3, tw}, {-1, t.n11}, {1, t.n12}, {-1, t.n21}, {1, t.n22}, {-1, t.n31}, {1, t.n32}}),
  };
  InverseResult result;
  std::array<Int, 8> x{};
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    if (numerators[i] % 6 != 0) {
      result.status = InverseResult::Status::NonIntegral;
      result.field = static_cast<int>(i);
      return result;
    }
    x[i] = numerators[i] / 6;
  }
  result.value = ShearVector::from_values(x);
  if (auto bad = lambda_violation(result.value)) {
    result.status = InverseResult::Status::NotInLambda;
    result.field = *bad;
  }
  return result;
}

ShearVector invert(const PantsTuple& t) {
  const InverseResult r = try_invert(t);
  const auto field = static_cast<std::size_t>(r.field);
  switch (r.status) {
    case InverseResult::Status::Ok:
      return r.value;
    case InverseResult::Status::NonIntegral: {
      auto name = std::string(ShearVector::kNames[field]);
      throw Error(ErrorKind::NonIntegral, "numerator of " + name + " is not divisible by 6", name);
    }
    case InverseResult::Status::NotInLambda: {
      auto name = std::string(PantsTuple::kNames[field]);
      throw Error(ErrorKind::NotInLambda, "inverse violates the Lambda inequality for " + name,
                  name);
    }
  }
  throw std::logic_error("unreachable inverse status");
}

std::optional<int> lambda_violation(const ShearVector& x) {
  return first_negative_n(forward_unchecked(x));
}

bool lambda_check(const ShearVector& x) { return !lambda_violation(x).has_value(); }

std::string_view to_string(ImageCondition c) {
  switch (c) {
    case ImageCondition::Nonnegativity: return "nonnegativity";
    case ImageCondition::RowBalance: return "row_balance_mod3";
    case ImageCondition::HeightParity: return "height_parity_mod2";
    case ImageCondition::HeightResidue: return "height_residue_mod3";
    case ImageCondition::TwistResidue: return "twist_residue_mod6";
  }
  return "unknown";
}

bool height_residue_signed(const PantsTuple& t) {
  return congruent(t.hP, linear({{1, t.n11}, {-1, t.n12}, {-1, t.n21}, {1, t.n22}}), 3);
}

bool height_residue_doubled(const PantsTuple& t) {
  return congruent(t.hP, linear({{1, t.n11}, {2, t.n21}, {-1, t.n12}, {1, t.n22}}), 3);
}

std::optional<ImageCondition> congruence_violation(const PantsTuple& t) {
  const Int first = linear({{1, t.n11}, {1, t.n21}, {1, t.n31}});
  const Int second = linear({{1, t.n12}, {1, t.n22}, {1, t.n32}});
  if (!congruent(second, first, 3)) return ImageCondition::RowBalance;
  if (mod(checked::add(t.hP, first), 2) != 0) return ImageCondition::HeightParity;
  if (!height_residue_signed(t)) return ImageCondition::HeightResidue;
  if (!congruent(checked::mul(3, t.tP), checked::sub(second, first), 6)) {
    return ImageCondition::TwistResidue;
  }
  return std::nullopt;
}

std::optional<ImageCondition> image_violation(const PantsTuple& t) {
  if (first_negative_n(t)) return ImageCondition::Nonnegativity;
  return congruence_violation(t);
}

bool image_check(const PantsTuple& t) { return !image_violation(t).has_value(); }

PantsTuple rotate(const PantsTuple& t) {
  PantsTuple r = t;
  r.n21 = t.n11;
  r.n22 = t.n12;
  r.n31 = t.n21;
  r.n32 = t.n22;
  r.n11 = t.n31;
  r.n12 = t.n32;
  return r;
}

std::pair<Int, Int> boundary_counts(const ShearVector& x, int boundary) {
  if (boundary < 1 || boundary > 3) {
    throw Error(ErrorKind::Malformed, "boundary index must be 1, 2 or 3");
  }
  PantsTuple t = forward_unchecked(x);
  if (auto bad = first_negative_n(t)) {
    auto name = std::string(PantsTuple::kNames[static_cast<std::size_t>(*bad)]);
    throw Error(ErrorKind::NotInLambda, "shear vector outside Lambda", name);
  }
  return t.boundary(boundary);
}

}  // namespace sl3web
