#include "dhm/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dhm {

HPolytope::HPolytope(IntegerMatrix n, RationalVector o) : normals(std::move(n)), offsets(std::move(o)) {
  if (normals.rows() != offsets.size()) throw Error("one offset per inequality required");
}

Rational HPolytope::slack(std::size_t j, const RationalVector& x) const {
  Rational s = offsets[j];
  for (std::size_t i = 0; i < normals.cols(); ++i) s += normals(j, i) * x[i];
  return s;
}

HPolytope HPolytope::box(const RationalVector& lo, const RationalVector& hi) {
  if (lo.size() != hi.size()) throw Error("box corners differ in dimension");
  const std::size_t d = lo.size();
  IntegerMatrix n(2 * d, d);
  RationalVector o(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    n(2 * i, i) = 1;  // x_i >= lo_i
    o[2 * i] = -lo[i];
    n(2 * i + 1, i) = -1;  // -x_i >= -hi_i
    o[2 * i + 1] = hi[i];
  }
  return {std::move(n), std::move(o)};
}

HPolytope HPolytope::unit_cube(std::size_t dim) { return box(RationalVector(dim), RationalVector(std::vector<Rational>(dim, 1))); }

HPolytope HPolytope::standard_simplex(std::size_t dim) {
  IntegerMatrix n(dim + 1, dim);
  RationalVector o(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    n(i, i) = 1;
    n(dim, i) = -1;
  }
  o[dim] = 1;
  return {std::move(n), std::move(o)};
}

Location contains(const HPolytope& p, const RationalVector& x) {
  if (x.size() != p.ambient_dim()) throw Error("point dimension does not match polytope");
  bool on_boundary = false;
  for (std::size_t j = 0; j < p.num_constraints(); ++j) {
    const int s = sgn(p.slack(j, x));
    if (s < 0) return Location::outside;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Location::boundary : Location::inside;
}

bool is_bounded(const HPolytope& p) {
  const std::size_t d = p.ambient_dim();
  if (d == 0) return true;
  if (rank(p.normals) < d) return false;
  // The recession cone is pointed; it is {0} iff it has no extreme ray, and
  // every extreme ray is cut out by d-1 independent constraints.
  bool bounded = true;
  for_each_subset(p.num_constraints(), d - 1, [&](std::span<const std::size_t> rows) {
    std::vector<IntegerVector> sel;
    for (std::size_t r : rows) sel.push_back(p.normals.row(r));
    const IntegerMatrix sub = IntegerMatrix::from_rows(d, sel);
    const IntegerMatrix k = kernel_lattice_basis(sub);
    if (k.cols() != 1) return true;
    const IntegerVector ray = k.column(0);
    const IntegerVector image = p.normals * ray;
    const bool forward = std::all_of(image.begin(), image.end(), [](const Integer& x) { return x >= 0; });
    const bool backward = std::all_of(image.begin(), image.end(), [](const Integer& x) { return x <= 0; });
    if (forward || backward) bounded = false;
    return bounded;
  });
  return bounded;
}

namespace {

struct VertexTable {
  std::vector<RationalVector> points;
  std::vector<std::vector<bool>> tight;  // tight[v][j]
};

VertexTable enumerate_vertices(const HPolytope& p) {
  if (!is_bounded(p)) throw Error("unbounded polytope");
  const std::size_t d = p.ambient_dim();
  std::vector<RationalVector> found;
  if (d == 0) {
    const bool feasible = std::all_of(p.offsets.begin(), p.offsets.end(), [](const Rational& o) { return o >= 0; });
    if (feasible) found.emplace_back();
  } else {
    for_each_subset(p.num_constraints(), d, [&](std::span<const std::size_t> rows) {
      std::vector<IntegerVector> sel;
      RationalVector rhs(d);
      for (std::size_t i = 0; i < d; ++i) {
        sel.push_back(p.normals.row(rows[i]));
        rhs[i] = -p.offsets[rows[i]];
      }
      const IntegerMatrix sub = IntegerMatrix::from_rows(d, sel);
      if (determinant(sub) == 0) return true;
      auto x = solve_particular(sub, rhs);
      for (std::size_t j = 0; j < p.num_constraints(); ++j) {
        if (p.slack(j, *x) < 0) return true;
      }
      found.push_back(std::move(*x));
      return true;
    });
  }
  std::sort(found.begin(), found.end(),
            [](const RationalVector& a, const RationalVector& b) { return a.entries() < b.entries(); });
  found.erase(std::unique(found.begin(), found.end()), found.end());

  VertexTable t;
  t.points = std::move(found);
  for (const auto& v : t.points) {
    std::vector<bool> row(p.num_constraints());
    for (std::size_t j = 0; j < p.num_constraints(); ++j) row[j] = p.slack(j, v) == 0;
    t.tight.push_back(std::move(row));
  }
  return t;
}

Rational abs_det(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> a = rows;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    std::swap(a[p], a[c]);
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return abs(det);
}

}  // namespace

VPolytope vertices(const HPolytope& p) {
  return {enumerate_vertices(p).points, p.ambient_dim()};
}

long affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<long>(rank(diffs));
}

Rational volume(const HPolytope& p) {
  const std::size_t d = p.ambient_dim();
  const VertexTable t = enumerate_vertices(p);
  if (d == 0) return t.points.empty() ? 0 : 1;
  if (affine_dimension(t.points) < static_cast<long>(d)) return 0;

  // Pulling triangulation: cone from the first vertex of each face over the
  // triangulated facets not containing it.
  auto face_points = [&](const std::vector<std::size_t>& face) {
    std::vector<RationalVector> pts;
    for (std::size_t v : face) pts.push_back(t.points[v]);
    return pts;
  };

  Rational total = 0;
  std::vector<std::size_t> apexes;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> walk =
      [&](const std::vector<std::size_t>& face, std::size_t k) {
        const std::size_t v0 = face.front();
        if (k == 0) {
          std::vector<RationalVector> edges;
          const RationalVector& origin = t.points[apexes.front()];
          for (std::size_t i = 1; i < apexes.size(); ++i) edges.push_back(t.points[apexes[i]] - origin);
          edges.push_back(t.points[v0] - origin);
          total += abs_det(edges);
          return;
        }
        apexes.push_back(v0);
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t j = 0; j < p.num_constraints(); ++j) {
          if (t.tight[v0][j]) continue;
          std::vector<std::size_t> facet;
          for (std::size_t v : face)
            if (t.tight[v][j]) facet.push_back(v);
          if (facet.size() < k || seen.contains(facet)) continue;
          if (affine_dimension(face_points(facet)) != static_cast<long>(k) - 1) continue;
          seen.insert(facet);
          walk(facet, k - 1);
        }
        apexes.pop_back();
      };

  std::vector<std::size_t> all(t.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  walk(all, d);

  Integer factorial = 1;
  for (std::size_t i = 2; i <= d; ++i) factorial *= static_cast<unsigned long>(i);
  return total / factorial;
}

std::optional<Fiber> fiber(const HPolytope& p, const IntegerMatrix& proj, const RationalVector& value) {
  if (proj.cols() != p.ambient_dim()) throw Error("projection does not match polytope dimension");
  auto x0 = solve_particular(proj, value);
  if (!x0) return std::nullopt;
  IntegerMatrix k = kernel_lattice_basis(proj);
  IntegerMatrix normals = p.normals * k;
  RationalVector offsets = p.offsets + p.normals * *x0;
  return Fiber{HPolytope(std::move(normals), std::move(offsets)), std::move(*x0), std::move(k)};
}

Rational slice_fiber_volume(const HPolytope& p, const IntegerMatrix& proj, const RationalVector& value) {
  if (rank(proj) != proj.rows()) throw Error("rank-deficient projection");
  const auto f = fiber(p, proj, value);
  if (!f) return 0;
  return volume(f->polytope);
}

}  // namespace dhm
