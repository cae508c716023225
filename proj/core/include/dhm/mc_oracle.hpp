#pragma once

// Independent oracles for cone-measure densities.
//
// estimate_density samples the orthant directly (floating point, seeded
// std::mt19937_64); truncated_power_1d_recurrence integrates one column at a
// time in exact arithmetic. Neither goes through fiber polytopes.

#include <cstdint>
#include <vector>

#include "dhm/cone_measure.hpp"
#include "dhm/linalg.hpp"

namespace dhm {

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::vector<double> window_lo;
  std::vector<double> window_hi;

  friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

/// Estimates |density| of c averaged over the box b ± halfwidth.
///
/// Samples x uniformly in Π[0, B_i] with B_i = H / <column_i, η>, where H bounds
/// <y - base, η> over the window, so every orthant point mapping into the
/// window is covered. Throws Error("window not regular") if a wall hyperplane
/// meets the closed window. Bit-reproducible for a fixed seed.
MCEstimate estimate_density(const ConeMeasure& c, const RationalVector& b, double halfwidth,
                            std::uint64_t samples, std::uint64_t seed);

/// Exact push-forward density of Lebesgue measure on R^m_+ through `columns`
/// (d x m, d <= 2, m <= 4), at a point b that is regular for every column
/// subsystem. Evaluated by integrating out one column at a time, piecewise
/// polynomial in the integration variable, down to the simplicial base case
/// 1/index on the open cone.
Rational truncated_power_1d_recurrence(const IntegerMatrix& columns, const RationalVector& b);

}  // namespace dhm
