#include "dhm/toric.hpp"

#include <algorithm>

namespace dhm {

namespace {

// Primitive normal, sign-normalized, so rows describing the same hyperplane
// through a common point compare equal.
IntegerVector hyperplane_key(const IntegerVector& normal) {
  IntegerVector n = primitive(normal);
  const auto lead = std::find_if(n.begin(), n.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) n = -n;
  return n;
}

}  // namespace

DelzantData vertex_data(const HPolytope& p) {
  const std::size_t d = p.ambient_dim();
  const VPolytope vp = vertices(p);
  if (affine_dimension(vp.vertices) != static_cast<long>(d)) throw Error("polytope is not full-dimensional");

  DelzantData out{p, {}, true};
  for (const RationalVector& v : vp.vertices) {
    std::vector<std::size_t> tight;
    std::vector<IntegerVector> keys;
    for (std::size_t j = 0; j < p.num_constraints(); ++j) {
      if (p.slack(j, v) != 0 || p.normals.row(j).is_zero()) continue;
      IntegerVector key = hyperplane_key(p.normals.row(j));
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(std::move(key));
      tight.push_back(j);
    }
    if (tight.size() != d) throw Error("non-simple polytope: vertex " + to_string(v) + " lies on " +
                                       std::to_string(tight.size()) + " facets");

    FixedPointDatum datum{v, {}};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<IntegerVector> others;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) others.push_back(p.normals.row(tight[j]));
      const IntegerMatrix k = kernel_lattice_basis(IntegerMatrix::from_rows(d, others));
      IntegerVector edge = primitive(k.column(0));
      if (dot(p.normals.row(tight[i]), edge) < 0) edge = -edge;
      datum.weights.push_back(std::move(edge));
    }
    if (abs(determinant(IntegerMatrix::from_columns(d, datum.weights))) != 1) out.unimodular = false;
    out.vertex_data.push_back(std::move(datum));
  }
  return out;
}

DensityValue oracle_density_full(const HPolytope& p, const RationalVector& b) {
  switch (contains(p, b)) {
    case Location::inside:
      return {1, true};
    case Location::outside:
      return {0, true};
    case Location::boundary:
      break;
  }
  return DensityValue::wall();
}

DensityValue oracle_density_subtorus(const HPolytope& p, const IntegerMatrix& iota, const RationalVector& y) {
  if (iota.rows() != p.ambient_dim()) throw Error("subtorus inclusion has wrong row count");
  if (rank(iota) != iota.cols()) throw Error("rank-deficient subtorus inclusion");
  const IntegerMatrix proj = iota.transpose();
  const auto f = fiber(p, proj, y);
  if (!f) return {0, true};
  const VPolytope fv = vertices(f->polytope);
  if (fv.vertices.empty()) return {0, true};
  if (affine_dimension(fv.vertices) < static_cast<long>(f->polytope.ambient_dim())) return DensityValue::wall();
  return {volume(f->polytope) / image_lattice_index(proj), true};
}

}  // namespace dhm
