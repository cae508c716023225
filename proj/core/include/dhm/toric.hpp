#pragma once

// Toric ground truth: fixed-point data read off a simple lattice polytope, and
// densities of the push-forward of Lebesgue measure on the polytope.

#include <vector>

#include "dhm/cone_measure.hpp"
#include "dhm/polytope.hpp"
#include "dhm/torus.hpp"

namespace dhm {

struct DelzantData {
  HPolytope polytope;
  std::vector<FixedPointDatum> vertex_data;  // same order as vertices(polytope)
  bool unimodular = true;  // every vertex cone has |det(edge directions)| == 1
};

/// For each vertex: moment value = the vertex, weights = primitive directions
/// of the edges leaving it. Throws Error("non-simple polytope") when some
/// vertex lies on more than dim distinct facet hyperplanes.
DelzantData vertex_data(const HPolytope& p);

/// 1 inside, 0 outside, irregular on the boundary.
DensityValue oracle_density_full(const HPolytope& p, const RationalVector& b);

/// Density of the push-forward of Lebesgue measure on p along iotaᵀ (iota is
/// dim x k): slice volume in kernel-lattice units divided by the index of
/// iotaᵀ(Z^dim) in Z^k. Irregular where a nonempty slice is lower-dimensional.
DensityValue oracle_density_subtorus(const HPolytope& p, const IntegerMatrix& iota, const RationalVector& y);

}  // namespace dhm
