#pragma once

// Exact convex polytopes: H-representation, brute-force vertex enumeration,
// triangulation volume, and lattice-normalized affine slices.

#include <cstddef>
#include <optional>
#include <vector>

#include "dhm/linalg.hpp"

namespace dhm {

/// {x : normals.row(j) · x >= -offsets[j] for every j}. Redundant rows are allowed.
struct HPolytope {
  IntegerMatrix normals;  // n x dim, inward normals
  RationalVector offsets;  // n

  HPolytope() = default;
  HPolytope(IntegerMatrix n, RationalVector o);

  std::size_t ambient_dim() const noexcept { return normals.cols(); }
  std::size_t num_constraints() const noexcept { return normals.rows(); }

  /// normals.row(j) · x + offsets[j]; nonnegative inside.
  Rational slack(std::size_t j, const RationalVector& x) const;

  static HPolytope box(const RationalVector& lo, const RationalVector& hi);
  static HPolytope unit_cube(std::size_t dim);
  /// {x >= 0, Σ x_i <= 1}
  static HPolytope standard_simplex(std::size_t dim);

  friend bool operator==(const HPolytope&, const HPolytope&) = default;
};

struct VPolytope {
  std::vector<RationalVector> vertices;
  std::size_t ambient_dim = 0;
};

enum class Location { inside, boundary, outside };

Location contains(const HPolytope& p, const RationalVector& x);

/// True iff the recession cone {y : normals · y >= 0} is {0}.
bool is_bounded(const HPolytope& p);

/// Exact vertex set, lexicographically sorted. Throws Error("unbounded polytope").
VPolytope vertices(const HPolytope& p);

/// Dimension of the affine hull (-1 for the empty set).
long affine_dimension(const std::vector<RationalVector>& points);

/// Lebesgue volume in the ambient integer lattice; 0 when not full-dimensional.
Rational volume(const HPolytope& p);

/// The fiber {x in p : proj · x = value} written in coordinates u of a
/// kernel lattice basis K of proj: x = x0 + K u. nullopt when the affine
/// fiber is empty over the reals (cannot happen when proj has full row rank).
struct Fiber {
  HPolytope polytope;  // in u-coordinates, dimension dim - rank(proj)
  RationalVector base;  // x0
  IntegerMatrix kernel;  // K
};
std::optional<Fiber> fiber(const HPolytope& p, const IntegerMatrix& proj, const RationalVector& value);

/// Volume of {x in p : proj · x = value} measured so that ker(proj) ∩ Z^dim has
/// covolume 1. Throws unless proj has full row rank.
Rational slice_fiber_volume(const HPolytope& p, const IntegerMatrix& proj, const RationalVector& value);

}  // namespace dhm
