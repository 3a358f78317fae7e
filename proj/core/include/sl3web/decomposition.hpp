#pragma once

// Oriented pants decompositions of a closed surface of genus >= 2.
//
// Curves are abstract ids. Each pants has three slots; a slot names a curve,
// the side of the curve's annulus it is glued to, and whether the curve's
// orientation agrees with the counterclockwise or clockwise boundary
// orientation of that pants. Slot k (0-based) is identified with boundary
// C_{k+1} of the labelled pair of pants.

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "sl3web/integer.hpp"

namespace sl3web {

enum class Orientation { Ccw, Cw };

std::string_view to_string(Orientation o);

struct Slot {
  Int curve = 0;
  int side = 0;
  Orientation flag = Orientation::Ccw;

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Pants {
  std::array<Slot, 3> slots;

  friend bool operator==(const Pants&, const Pants&) = default;
};

struct DecompositionGraph {
  Int genus = 2;
  std::vector<Int> curves;
  std::vector<Pants> pants;

  // Position of a curve id in `curves`; throws DanglingSide for unknown ids.
  std::size_t curve_index(Int id) const;

  friend bool operator==(const DecompositionGraph&, const DecompositionGraph&) = default;
};

// Throws CountMismatch, DanglingSide, Disconnected or BadGenus.
DecompositionGraph validate_graph(DecompositionGraph g);

// Deterministic decomposition: g-1 beads (two pants joined along two curves)
// arranged in a ring, consecutive beads joined by one curve. Side 0 of every
// curve sits on its lower-indexed pants with flag ccw, side 1 with flag cw.
// Throws BadGenus for genus < 2.
DecompositionGraph standard_graph(Int genus);

// 4r + 2 * #pants, the number of integers in a global coordinate.
std::size_t coordinate_dimension(const DecompositionGraph& g);

}  // namespace sl3web
