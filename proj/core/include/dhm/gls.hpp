#pragma once

// Fixed-point decomposition of a Duistermaat-Heckman measure into signed cone
// measures, one per fixed point, polarized by a common vector η.

#include <cstddef>
#include <span>
#include <vector>

#include "dhm/cone_measure.hpp"
#include "dhm/torus.hpp"

namespace dhm {

/// Finite signed sum of cone measures on the dual of a d-dimensional torus Lie algebra.
struct DHMeasure {
  std::vector<ConeMeasure> summands;
  std::size_t torus_dim = 0;

  /// Copy where only the listed summands are kept (used for grouped measures).
  DHMeasure subset(std::span<const std::size_t> indices) const;
  /// Copy with summand k's sign reversed. Debug aid for falsifiability checks.
  DHMeasure with_flipped_sign(std::size_t k) const;
};

/// Summands sharing one value of <Φ(p), η'> for a non-generic η'.
struct ComponentGroup {
  Rational label;
  std::vector<std::size_t> members;

  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

struct SupportEntry {
  std::size_t summand = 0;
  bool in_support = false;
  bool pairing_ok = false;  // <base, η> < <b, η>
  bool wall = false;
};

/// One cone measure per datum, in order. Errors carry the datum index.
DHMeasure assemble(std::span<const FixedPointDatum> data, const PolarizingVector& eta);

/// Σ summand densities; irregular if any summand sees b on a wall.
DensityValue eval_density(const DHMeasure& m, const RationalVector& b);

/// Partition of summand indices by equal pairing <Φ(p), eta_nongeneric>, in
/// increasing label order; members keep their original order. Equal pairing
/// stands in for "same connected component of the η'-fixed set", which is
/// exact for toric data.
std::vector<ComponentGroup> group_by_eta(const DHMeasure& m, std::span<const FixedPointDatum> data,
                                         const PolarizingVector& eta_nongeneric);

/// Per-summand support diagnostics at b, using each summand's own η.
std::vector<SupportEntry> support_report(const DHMeasure& m, const RationalVector& b);

}  // namespace dhm
