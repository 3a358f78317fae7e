#pragma once

// Exact integer helpers. All coordinates are int64 and every arithmetic step
// that could leave that range is checked; there is no floating point in the
// coordinate code.

#include <cstdint>
#include <initializer_list>
#include <string>

#include "sl3web/errors.hpp"

namespace sl3web {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  }
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return r;
}

struct Term {
  Int coeff;
  Int value;
};

// Sum of coeff * value over all terms.
inline Int linear(std::initializer_list<Term> terms) {
  Int acc = 0;
  for (const Term& t : terms) acc = add(acc, mul(t.coeff, t.value));
  return acc;
}

}  // namespace checked

// Least nonnegative residue of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

constexpr bool congruent(Int a, Int b, Int m) { return mod(a, m) == mod(b, m); }

}  // namespace sl3web
