#pragma once

// Signed cone measures: push-forward of Lebesgue measure on the positive
// orthant R^m_+ through an integer d x m matrix, translated to a base point.

#include <cstddef>
#include <vector>

#include "dhm/linalg.hpp"
#include "dhm/torus.hpp"

namespace dhm {

/// Pointwise density; `value` is only meaningful when `regular` is true.
struct DensityValue {
  Rational value;
  bool regular = true;

  static DensityValue wall() { return {0, false}; }
  friend bool operator==(const DensityValue&, const DensityValue&) = default;
};

/// One summand of a fixed-point decomposition.
///
/// Immutable. The kernel lattice basis of the columns and the normals of all
/// wall hyperplanes are computed once at construction, so density queries only
/// solve small systems.
class ConeMeasure {
 public:
  /// `eta` must pair strictly positively with every column; columns must have
  /// full row rank. Throws Error("improper moment map model") otherwise.
  ConeMeasure(RationalVector base, IntegerMatrix columns, int sign, IntegerVector eta);

  /// Same, with a positive functional found by search over small integer vectors.
  static ConeMeasure from_columns(RationalVector base, IntegerMatrix columns, int sign = 1);

  const RationalVector& base() const noexcept { return base_; }
  const IntegerMatrix& columns() const noexcept { return columns_; }
  int sign() const noexcept { return sign_; }
  const Integer& norm_index() const noexcept { return norm_index_; }
  /// A vector pairing positively with every column (the producing η when built from data).
  const IntegerVector& eta() const noexcept { return eta_; }
  /// Normals of the hyperplanes spanned by rank-(d-1) column subsets, up to scale, deduplicated.
  const std::vector<IntegerVector>& wall_normals() const noexcept { return wall_normals_; }

  std::size_t dim() const noexcept { return columns_.rows(); }
  std::size_t num_columns() const noexcept { return columns_.cols(); }

  /// b - base lies on a wall hyperplane. Conservative: a superset of the true
  /// chamber walls.
  bool is_wall(const RationalVector& b) const;

  /// b - base lies in the closed cone spanned by the columns.
  bool in_support(const RationalVector& b) const;

  /// sign * fiber volume / norm_index, or a wall marker.
  DensityValue density(const RationalVector& b) const;

  /// Copy with the opposite sign.
  ConeMeasure negated() const;

 private:
  RationalVector base_;
  IntegerMatrix columns_;
  int sign_;
  IntegerVector eta_;
  Integer norm_index_;
  IntegerMatrix kernel_;
  std::vector<IntegerVector> wall_normals_;
};

/// Summand for one isolated fixed point: columns and sign from polarize().
ConeMeasure make_cone_measure(const FixedPointDatum& datum, const PolarizingVector& eta);

/// Some integer vector pairing strictly positively with every column, or an
/// Error when the columns do not lie in an open half-space.
IntegerVector find_positive_functional(const IntegerMatrix& columns);

}  // namespace dhm
