#include "dhm/torus.hpp"

namespace dhm {

PolarizingVector::PolarizingVector(IntegerVector entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.is_zero()) throw Error("polarizing vector must be nonzero");
}

PolarizingVector::PolarizingVector(std::initializer_list<long> entries)
    : PolarizingVector([&] {
        IntegerVector v(entries.size());
        std::size_t i = 0;
        for (long x : entries) v[i++] = x;
        return v;
      }()) {}

PolarizedWeights polarize(std::span<const Weight> weights, const PolarizingVector& eta) {
  const std::size_t d = eta.dim();
  PolarizedWeights out{IntegerMatrix(d, weights.size()), 0, 1};
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const Weight& w = weights[j];
    if (w.size() != d) throw Error("weight " + to_string(w) + " has wrong dimension");
    const Integer pairing = dot(w, eta.entries());
    if (pairing == 0) {
      throw NonGenericPolarization(to_string(w), "non-generic polarizing vector: weight " + to_string(w) +
                                                     " pairs to zero with " + to_string(eta.entries()));
    }
    const bool flip = pairing < 0;
    for (std::size_t i = 0; i < d; ++i) out.columns(i, j) = flip ? Integer(-w[i]) : w[i];
    if (flip) {
      ++out.flip_count;
      out.sign = -out.sign;
    }
  }
  return out;
}

RationalVector linear_moment_value(const RationalVector& a, const PolarizedWeights& polarized,
                                   std::span<const Rational> squared_norms) {
  const IntegerMatrix& cols = polarized.columns;
  if (squared_norms.size() != cols.cols()) throw Error("one squared norm per weight required");
  if (a.size() != cols.rows()) throw Error("base point has wrong dimension");
  RationalVector value = a;
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    if (squared_norms[j] < 0) throw Error("squared norm must be nonnegative");
    for (std::size_t i = 0; i < cols.rows(); ++i) value[i] += squared_norms[j] * cols(i, j);
  }
  return value;
}

std::optional<FixedPointDatum> restrict_to_subtorus(const FixedPointDatum& datum,
                                                    const IntegerMatrix& inclusion) {
  if (inclusion.rows() != datum.dim()) throw Error("subtorus inclusion has wrong row count");
  if (rank(inclusion) != inclusion.cols()) throw Error("subtorus inclusion must have full column rank");
  const IntegerMatrix restriction = inclusion.transpose();
  FixedPointDatum out{restriction * datum.moment_value, {}};
  out.weights.reserve(datum.weights.size());
  for (const Weight& w : datum.weights) {
    Weight r = restriction * w;
    if (r.is_zero()) return std::nullopt;
    out.weights.push_back(std::move(r));
  }
  return out;
}

}  // namespace dhm
