#pragma once

// The global coordinate map on a closed surface.
//
// For genus >= 2 a web is described, relative to an oriented pants
// decomposition, by one annulus descriptor per curve and one shear vector per
// pants. kappa reads off intersection and twist numbers from the annuli and
// (tP, hP) from the pants; its image is the monoid Theta, and reconstruct is
// its inverse on Theta.
//
// Reconstruction always uses block-form boundary signatures. kappa never
// reads signatures, so kappa(reconstruct(g, c)) == c is exact, but the
// signature of a reconstructed annulus is the canonical one, not necessarily
// the one forced by gluing to the pants webs.
//
// For the torus the coordinate is the twist tuple of the annulus obtained by
// cutting along a nonseparating curve.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sl3web/annulus_webs.hpp"
#include "sl3web/decomposition.hpp"
#include "sl3web/pants_coords.hpp"

namespace sl3web {

struct GlobalCoordinate {
  std::vector<Int> n1;
  std::vector<Int> n2;
  std::vector<Int> t1;
  std::vector<Int> t2;
  std::vector<Int> tP;
  std::vector<Int> hP;

  // All-zero coordinate shaped for g.
  static GlobalCoordinate zero(const DecompositionGraph& g);

  std::size_t dimension() const {
    return n1.size() + n2.size() + t1.size() + t2.size() + tP.size() + hP.size();
  }

  friend bool operator==(const GlobalCoordinate&, const GlobalCoordinate&) = default;
};

struct SurfaceWebDescriptor {
  DecompositionGraph graph;
  std::vector<AnnulusDescriptor> annuli;  // indexed like graph.curves
  std::vector<ShearVector> pants_shear;   // indexed like graph.pants

  friend bool operator==(const SurfaceWebDescriptor&, const SurfaceWebDescriptor&) = default;
};

// The intersection counts (n^P_t1, n^P_t2) that boundary slot `slot` (0..2) of
// pants `pants` sees: (n_j1, n_j2) of its curve j when the flag is ccw, the
// swapped pair when cw.
std::pair<Int, Int> slot_counts(const DecompositionGraph& g, const GlobalCoordinate& c,
                                std::size_t pants, std::size_t slot);

// The pants tuple (n^P_11, ..., n^P_32, tP, hP) of one pants.
PantsTuple pants_tuple(const DecompositionGraph& g, const GlobalCoordinate& c,
                       std::size_t pants);

// Throws InvalidDescriptor naming the first violated invariant.
void validate_descriptor(const SurfaceWebDescriptor& w);

// Throws InvalidDescriptor.
GlobalCoordinate kappa(const SurfaceWebDescriptor& w);

// Description of the first violated Theta condition, or nullopt for members.
// Throws LengthMismatch when the vectors do not fit g.
std::optional<std::string> theta_violation(const DecompositionGraph& g,
                                           const GlobalCoordinate& c);

bool theta_check(const DecompositionGraph& g, const GlobalCoordinate& c);

// Throws NotInTheta (or LengthMismatch).
SurfaceWebDescriptor reconstruct(const DecompositionGraph& g, const GlobalCoordinate& c);

struct TorusCoordinate {
  Int n1 = 0;
  Int n2 = 0;
  Int t1 = 0;
  Int t2 = 0;

  friend bool operator==(const TorusCoordinate&, const TorusCoordinate&) = default;
};

// Throws ImageViolation unless t_i >= 0 whenever n_i = 0 (and n_i >= 0).
TorusCoordinate torus_kappa(Int n1, Int n2, Int t1, Int t2);
TorusCoordinate torus_kappa(const AnnulusDescriptor& cut_open);

// Canonical annulus web; its two boundary words agree, so it closes up.
AnnulusDescriptor torus_reconstruct(const TorusCoordinate& c);

}  // namespace sl3web
