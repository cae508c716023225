#include "dhm/cone_measure.hpp"

#include <algorithm>

#include "dhm/polytope.hpp"

namespace dhm {

namespace {

// Primitive normals of hyperplanes spanned by (d-1)-subsets of columns,
// first nonzero entry positive, deduplicated.
std::vector<IntegerVector> hyperplane_normals(const IntegerMatrix& columns) {
  const std::size_t d = columns.rows();
  std::vector<IntegerVector> normals;
  if (d == 0) return normals;
  const IntegerMatrix rows = columns.transpose();  // m x d, one column per row
  for_each_subset(columns.cols(), d - 1, [&](std::span<const std::size_t> idx) {
    std::vector<IntegerVector> sel;
    for (std::size_t i : idx) sel.push_back(rows.row(i));
    const IntegerMatrix k = kernel_lattice_basis(IntegerMatrix::from_rows(d, sel));
    if (k.cols() != 1) return true;
    IntegerVector n = primitive(k.column(0));
    const auto lead = std::find_if(n.begin(), n.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) n = -n;
    if (std::find(normals.begin(), normals.end(), n) == normals.end()) normals.push_back(std::move(n));
    return true;
  });
  return normals;
}

bool strictly_positive(const IntegerMatrix& columns, const IntegerVector& eta) {
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    if (dot(columns.column(j), eta) <= 0) return false;
  }
  return true;
}

}  // namespace

IntegerVector find_positive_functional(const IntegerMatrix& columns) {
  const std::size_t d = columns.rows();
  if (d == 0 || rank(columns) != d) throw Error("improper moment map model: columns do not span");
  // Sum of the extreme rays of the dual cone; interior exactly when the cone is pointed.
  IntegerVector eta(d);
  for (const IntegerVector& n : hyperplane_normals(columns)) {
    bool nonneg = true, nonpos = true;
    for (std::size_t j = 0; j < columns.cols(); ++j) {
      const Integer p = dot(columns.column(j), n);
      nonneg = nonneg && p >= 0;
      nonpos = nonpos && p <= 0;
    }
    if (nonneg) eta = eta + n;
    else if (nonpos) eta = eta - n;
  }
  if (eta.is_zero() || !strictly_positive(columns, eta)) {
    throw Error("improper moment map model: columns not contained in an open half-space");
  }
  return primitive(eta);
}

ConeMeasure::ConeMeasure(RationalVector base, IntegerMatrix columns, int sign, IntegerVector eta)
    : base_(std::move(base)), columns_(std::move(columns)), sign_(sign), eta_(std::move(eta)) {
  const std::size_t d = columns_.rows();
  if (base_.size() != d || eta_.size() != d) throw Error("cone measure dimensions disagree");
  if (sign_ != 1 && sign_ != -1) throw Error("cone measure sign must be +1 or -1");
  if (d == 0 || rank(columns_) != d) throw Error("improper moment map model: polarized weights have rank < dim");
  if (!strictly_positive(columns_, eta_)) throw Error("improper moment map model: eta does not polarize the columns");
  norm_index_ = image_lattice_index(columns_);
  kernel_ = kernel_lattice_basis(columns_);
  wall_normals_ = hyperplane_normals(columns_);
}

ConeMeasure ConeMeasure::from_columns(RationalVector base, IntegerMatrix columns, int sign) {
  IntegerVector eta = find_positive_functional(columns);
  return ConeMeasure(std::move(base), std::move(columns), sign, std::move(eta));
}

bool ConeMeasure::is_wall(const RationalVector& b) const {
  const RationalVector y = b - base_;
  return std::any_of(wall_normals_.begin(), wall_normals_.end(),
                     [&](const IntegerVector& n) { return dot(n, y) == 0; });
}

bool ConeMeasure::in_support(const RationalVector& b) const {
  const RationalVector y = b - base_;
  if (y.is_zero()) return true;
  bool found = false;
  for_each_subset(num_columns(), dim(), [&](std::span<const std::size_t> idx) {
    const IntegerMatrix sub = columns_.select_columns(idx);
    if (determinant(sub) == 0) return true;
    const auto x = solve_particular(sub, y);
    found = std::all_of(x->begin(), x->end(), [](const Rational& t) { return t >= 0; });
    return !found;
  });
  return found;
}

DensityValue ConeMeasure::density(const RationalVector& b) const {
  if (b.size() != dim()) throw Error("query point has wrong dimension");
  if (is_wall(b)) return DensityValue::wall();
  const RationalVector y = b - base_;
  const auto x0 = solve_particular(columns_, y);
  Rational fiber_volume;
  if (num_columns() == dim()) {
    fiber_volume = std::all_of(x0->begin(), x0->end(), [](const Rational& t) { return t > 0; }) ? 1 : 0;
  } else {
    // {u : K u >= -x0} is the fiber over b inside the orthant, in kernel-lattice coordinates.
    fiber_volume = volume(HPolytope(kernel_, *x0));
  }
  return {sign_ * fiber_volume / norm_index_, true};
}

ConeMeasure ConeMeasure::negated() const {
  ConeMeasure c = *this;
  c.sign_ = -sign_;
  return c;
}

ConeMeasure make_cone_measure(const FixedPointDatum& datum, const PolarizingVector& eta) {
  if (datum.dim() != eta.dim()) throw Error("fixed point and polarizing vector differ in dimension");
  PolarizedWeights pw = polarize(datum.weights, eta);
  if (rank(pw.columns) != datum.dim()) {
    throw Error("improper moment map model: polarized weights have rank < dim");
  }
  return ConeMeasure(datum.moment_value, std::move(pw.columns), pw.sign, eta.entries());
}

}  // namespace dhm
