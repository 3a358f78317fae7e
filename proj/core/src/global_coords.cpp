#include "sl3web/global_coords.hpp"

#include <stdexcept>

namespace sl3web {

GlobalCoordinate GlobalCoordinate::zero(const DecompositionGraph& g) {
  const std::size_t r = g.curves.size();
  const std::size_t p = g.pants.size();
  return {std::vector<Int>(r), std::vector<Int>(r), std::vector<Int>(r),
          std::vector<Int>(r), std::vector<Int>(p), std::vector<Int>(p)};
}

namespace {

void check_lengths(const DecompositionGraph& g, const GlobalCoordinate& c) {
  const std::size_t r = g.curves.size();
  const std::size_t p = g.pants.size();
  auto expect = [](const std::vector<Int>& v, std::size_t n, const char* name) {
    if (v.size() != n) {
      throw Error(ErrorKind::LengthMismatch,
                  std::string(name) + " has length " + std::to_string(v.size()) + ", expected " +
                      std::to_string(n),
                  name);
    }
  };
  expect(c.n1, r, "n1");
  expect(c.n2, r, "n2");
  expect(c.t1, r, "t1");
  expect(c.t2, r, "t2");
  expect(c.tP, p, "tP");
  expect(c.hP, p, "hP");
}

std::pair<Int, Int> resolve(Orientation flag, Int first, Int second) {
  return flag == Orientation::Ccw ? std::pair{first, second} : std::pair{second, first};
}

}  // namespace

std::pair<Int, Int> slot_counts(const DecompositionGraph& g, const GlobalCoordinate& c,
                                std::size_t pants, std::size_t slot) {
  const Slot& s = g.pants.at(pants).slots.at(slot);
  const std::size_t j = g.curve_index(s.curve);
  return resolve(s.flag, c.n1.at(j), c.n2.at(j));
}

PantsTuple pants_tuple(const DecompositionGraph& g, const GlobalCoordinate& c,
                       std::size_t pants) {
  const auto [n11, n12] = slot_counts(g, c, pants, 0);
  const auto [n21, n22] = slot_counts(g, c, pants, 1);
  const auto [n31, n32] = slot_counts(g, c, pants, 2);
  return {n11, n12, n21, n22, n31, n32, c.tP.at(pants), c.hP.at(pants)};
}

void validate_descriptor(const SurfaceWebDescriptor& w) {
  try {
    validate_graph(w.graph);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidDescriptor, "graph: " + std::string(e.what()));
  }
  const std::size_t r = w.graph.curves.size();
  const std::size_t p = w.graph.pants.size();
  if (w.annuli.size() != r) {
    throw Error(ErrorKind::InvalidDescriptor,
                "expected " + std::to_string(r) + " annuli, got " + std::to_string(w.annuli.size()));
  }
  if (w.pants_shear.size() != p) {
    throw Error(ErrorKind::InvalidDescriptor,
                "expected " + std::to_string(p) + " shear vectors, got " +
                    std::to_string(w.pants_shear.size()));
  }
  for (std::size_t pi = 0; pi < p; ++pi) {
    if (auto bad = lambda_violation(w.pants_shear[pi])) {
      throw Error(ErrorKind::InvalidDescriptor,
                  "pants " + std::to_string(pi) + " shear vector outside Lambda (" +
                      std::string(PantsTuple::kNames[static_cast<std::size_t>(*bad)]) + " < 0)");
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const Slot& s = w.graph.pants[pi].slots[k];
      const TwistTuple& a = w.annuli[w.graph.curve_index(s.curve)].tuple();
      const auto expected = resolve(s.flag, a.n1, a.n2);
      const auto seen = boundary_counts(w.pants_shear[pi], static_cast<int>(k) + 1);
      if (seen != expected) {
        throw Error(ErrorKind::InvalidDescriptor,
                    "gluing mismatch at pants " + std::to_string(pi) + " boundary " +
                        std::to_string(k + 1) + " (curve " + std::to_string(s.curve) +
                        "): pants sees (" + std::to_string(seen.first) + "," +
                        std::to_string(seen.second) + "), annulus has (" +
                        std::to_string(expected.first) + "," + std::to_string(expected.second) +
                        ")");
      }
    }
  }
}

GlobalCoordinate kappa(const SurfaceWebDescriptor& w) {
  validate_descriptor(w);
  GlobalCoordinate c;
  for (const AnnulusDescriptor& a : w.annuli) {
    const TwistTuple t = twist_coords(a);
    c.n1.push_back(t.n1);
    c.n2.push_back(t.n2);
    c.t1.push_back(t.t1);
    c.t2.push_back(t.t2);
  }
  for (const ShearVector& x : w.pants_shear) {
    const PantsTuple t = forward(x);
    c.tP.push_back(t.tP);
    c.hP.push_back(t.hP);
  }
  return c;
}

std::optional<std::string> theta_violation(const DecompositionGraph& g,
                                           const GlobalCoordinate& c) {
  check_lengths(g, c);
  for (std::size_t j = 0; j < g.curves.size(); ++j) {
    const std::string at = "[" + std::to_string(j) + "]";
    if (c.n1[j] < 0) return "n1" + at + " < 0";
    if (c.n2[j] < 0) return "n2" + at + " < 0";
    if (c.n1[j] == 0 && c.t1[j] < 0) return "t1" + at + " < 0 with n1" + at + " = 0";
    if (c.n2[j] == 0 && c.t2[j] < 0) return "t2" + at + " < 0 with n2" + at + " = 0";
  }
  for (std::size_t pi = 0; pi < g.pants.size(); ++pi) {
    const PantsTuple t = pants_tuple(g, c, pi);
    const Int first = checked::linear({{1, t.n11}, {1, t.n21}, {1, t.n31}});
    const Int second = checked::linear({{1, t.n12}, {1, t.n22}, {1, t.n32}});
    std::optional<std::string> bad;
    if (!congruent(second, first, 3)) {
      bad = "row balance mod 3";
    } else if (mod(checked::add(t.hP, first), 2) != 0) {
      bad = "height parity mod 2";
    } else if (!congruent(t.hP,
                          checked::linear({{1, t.n11}, {2, t.n21}, {-1, t.n12}, {1, t.n22}}),
                          3)) {
      bad = "height residue mod 3";
    } else if (!congruent(checked::mul(3, t.tP), checked::sub(second, first), 6)) {
      bad = "twist residue mod 6";
    }
    // The pants-level image test states the height residue with -n21; the two
    // forms agree mod 3.
    if (bad.has_value() != congruence_violation(t).has_value()) {
      throw std::logic_error("Theta congruences disagree with the pants image test at pants " +
                             std::to_string(pi));
    }
    if (bad) return "pants " + std::to_string(pi) + ": " + *bad;
  }
  return std::nullopt;
}

bool theta_check(const DecompositionGraph& g, const GlobalCoordinate& c) {
  return !theta_violation(g, c).has_value();
}

SurfaceWebDescriptor reconstruct(const DecompositionGraph& g, const GlobalCoordinate& c) {
  if (auto bad = theta_violation(g, c)) {
    throw Error(ErrorKind::NotInTheta, *bad);
  }
  SurfaceWebDescriptor w;
  w.graph = g;
  w.annuli.reserve(g.curves.size());
  for (std::size_t j = 0; j < g.curves.size(); ++j) {
    w.annuli.push_back(canonical_descriptor({c.n1[j], c.n2[j], c.t1[j], c.t2[j]}));
  }
  w.pants_shear.reserve(g.pants.size());
  for (std::size_t pi = 0; pi < g.pants.size(); ++pi) {
    try {
      w.pants_shear.push_back(invert(pants_tuple(g, c, pi)));
    } catch (const Error& e) {
      // Theta membership implies the pants tuple is in the image.
      throw std::logic_error("pants " + std::to_string(pi) +
                             " tuple passed Theta but failed to invert: " + e.what());
    }
  }
  return w;
}

TorusCoordinate torus_kappa(Int n1, Int n2, Int t1, Int t2) {
  require_twist_image({n1, n2, t1, t2});
  return {n1, n2, t1, t2};
}

TorusCoordinate torus_kappa(const AnnulusDescriptor& cut_open) {
  const TwistTuple t = twist_coords(cut_open);
  return torus_kappa(t.n1, t.n2, t.t1, t.t2);
}

AnnulusDescriptor torus_reconstruct(const TorusCoordinate& c) {
  AnnulusDescriptor d = canonical_descriptor({c.n1, c.n2, c.t1, c.t2});
  if (d.word0() != d.word1()) {
    throw std::logic_error("torus reconstruction produced unequal boundary words");
  }
  return d;
}

}  // namespace sl3web
