#include "sl3web/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sl3web/errors.hpp"

namespace sl3web {

std::string_view to_string(Orientation o) { return o == Orientation::Ccw ? "ccw" : "cw"; }

std::size_t DecompositionGraph::curve_index(Int id) const {
  auto it = std::find(curves.begin(), curves.end(), id);
  if (it == curves.end()) {
    throw Error(ErrorKind::DanglingSide, "slot references unknown curve " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - curves.begin());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DecompositionGraph validate_graph(DecompositionGraph g) {
  if (g.genus < 2) {
    throw Error(ErrorKind::BadGenus, "genus must be at least 2, got " + std::to_string(g.genus));
  }
  const auto r = static_cast<std::size_t>(3 * g.genus - 3);
  const auto p = static_cast<std::size_t>(2 * g.genus - 2);
  if (g.curves.size() != r) {
    throw Error(ErrorKind::CountMismatch, "genus " + std::to_string(g.genus) + " needs " +
                                              std::to_string(r) + " curves, got " +
                                              std::to_string(g.curves.size()));
  }
  if (g.pants.size() != p) {
    throw Error(ErrorKind::CountMismatch, "genus " + std::to_string(g.genus) + " needs " +
                                              std::to_string(p) + " pants, got " +
                                              std::to_string(g.pants.size()));
  }
  {
    std::vector<Int> sorted = g.curves;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::CountMismatch, "curve ids are not distinct");
    }
  }

  // owner[curve][side] = pants index holding that side, or none.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::array<std::size_t, 2>> owner(r, {kNone, kNone});
  for (std::size_t pi = 0; pi < g.pants.size(); ++pi) {
    for (const Slot& s : g.pants[pi].slots) {
      const std::size_t ci = g.curve_index(s.curve);
      if (s.side != 0 && s.side != 1) {
        throw Error(ErrorKind::DanglingSide, "slot side must be 0 or 1, got " +
                                                 std::to_string(s.side) + " for curve " +
                                                 std::to_string(s.curve));
      }
      auto& cell = owner[ci][static_cast<std::size_t>(s.side)];
      if (cell != kNone) {
        throw Error(ErrorKind::DanglingSide, "curve " + std::to_string(s.curve) + " side " +
                                                 std::to_string(s.side) +
                                                 " is used by more than one slot");
      }
      cell = pi;
    }
  }
  for (std::size_t ci = 0; ci < r; ++ci) {
    for (int side = 0; side < 2; ++side) {
      if (owner[ci][static_cast<std::size_t>(side)] == kNone) {
        throw Error(ErrorKind::DanglingSide, "curve " + std::to_string(g.curves[ci]) +
                                                 " side " + std::to_string(side) +
                                                 " is not used by any slot");
      }
    }
  }

  DisjointSets components(p);
  for (const auto& sides : owner) components.unite(sides[0], sides[1]);
  const std::size_t root = components.find(0);
  for (std::size_t pi = 1; pi < p; ++pi) {
    if (components.find(pi) != root) {
      throw Error(ErrorKind::Disconnected,
                  "pants " + std::to_string(pi) + " is not connected to pants 0");
    }
  }
  return g;
}

DecompositionGraph standard_graph(Int genus) {
  if (genus < 2) {
    throw Error(ErrorKind::BadGenus, "genus must be at least 2, got " + std::to_string(genus));
  }
  const Int beads = genus - 1;
  DecompositionGraph g;
  g.genus = genus;
  g.curves.resize(static_cast<std::size_t>(3 * genus - 3));
  std::iota(g.curves.begin(), g.curves.end(), Int{1});
  g.pants.resize(static_cast<std::size_t>(2 * genus - 2));

  auto slot_at = [](Int curve, bool lower) {
    return lower ? Slot{curve, 0, Orientation::Ccw} : Slot{curve, 1, Orientation::Cw};
  };

  for (Int i = 0; i < beads; ++i) {
    const Int left = 2 * i;
    const Int right = 2 * i + 1;
    const Int inner_a = 3 * i + 1;
    const Int inner_b = 3 * i + 2;
    const Int link = 3 * i + 3;  // joins `right` to the next bead's left pants
    const Int next_left = (i + 1 == beads) ? 0 : 2 * i + 2;

    auto& lp = g.pants[static_cast<std::size_t>(left)].slots;
    auto& rp = g.pants[static_cast<std::size_t>(right)].slots;
    lp[0] = slot_at(inner_a, true);
    lp[1] = slot_at(inner_b, true);
    rp[0] = slot_at(inner_a, false);
    rp[1] = slot_at(inner_b, false);
    rp[2] = slot_at(link, right < next_left);
    g.pants[static_cast<std::size_t>(next_left)].slots[2] = slot_at(link, next_left < right);
  }
  return validate_graph(std::move(g));
}

std::size_t coordinate_dimension(const DecompositionGraph& g) {
  return 4 * g.curves.size() + 2 * g.pants.size();
}

}  // namespace sl3web
