#pragma once

// Torus representation bookkeeping: weights, polarizing vectors, polarization,
// and fixed-point data.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dhm/linalg.hpp"

namespace dhm {

/// An integral weight in the dual lattice of the torus. Stored as one
/// representative of a real weight ±α.
using Weight = IntegerVector;

/// Element of the Lie algebra used to pick signs of real weights. Never zero.
class PolarizingVector {
 public:
  explicit PolarizingVector(IntegerVector entries);
  PolarizingVector(std::initializer_list<long> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const IntegerVector& entries() const noexcept { return entries_; }

  friend bool operator==(const PolarizingVector&, const PolarizingVector&) = default;

 private:
  IntegerVector entries_;
};

/// Moment value and isotropy weights at an isolated fixed point.
struct FixedPointDatum {
  RationalVector moment_value;
  std::vector<Weight> weights;

  std::size_t dim() const noexcept { return moment_value.size(); }
  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

/// Weights with signs chosen so that every column pairs positively with η.
struct PolarizedWeights {
  IntegerMatrix columns;  // d x m
  std::size_t flip_count = 0;
  int sign = 1;  // (-1)^flip_count
};

/// Throws NonGenericPolarization naming the first weight with <α, η> == 0.
PolarizedWeights polarize(std::span<const Weight> weights, const PolarizingVector& eta);

/// a + Σ squared_norms[i] * column_i: the linear model moment map evaluated at
/// a vector whose i-th isotypic component has the given squared norm.
RationalVector linear_moment_value(const RationalVector& a, const PolarizedWeights& polarized,
                                   std::span<const Rational> squared_norms);

/// Restriction of a fixed-point datum to the subtorus whose Lie algebra is
/// spanned by the columns of `inclusion` (d x k): moment value and weights are
/// mapped by inclusionᵀ. Returns nullopt when some weight restricts to zero,
/// i.e. the point is no longer an isolated fixed point of the subtorus.
std::optional<FixedPointDatum> restrict_to_subtorus(const FixedPointDatum& datum,
                                                    const IntegerMatrix& inclusion);

}  // namespace dhm
