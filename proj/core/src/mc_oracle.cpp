#include "dhm/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dhm {

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

MCEstimate estimate_density(const ConeMeasure& c, const RationalVector& b, double halfwidth,
                            std::uint64_t samples, std::uint64_t seed) {
  const std::size_t d = c.dim();
  const std::size_t m = c.num_columns();
  if (b.size() != d) throw Error("query point has wrong dimension");
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth)) throw Error("window halfwidth must be positive");
  if (samples == 0) throw Error("at least one sample required");

  const Rational h(halfwidth);
  const RationalVector offset = b - c.base();
  for (const IntegerVector& n : c.wall_normals()) {
    Integer reach = 0;
    for (const auto& x : n) reach += abs(x);
    if (abs(dot(n, offset)) <= h * reach) throw Error("window not regular");
  }

  MCEstimate est;
  est.samples = samples;
  for (std::size_t i = 0; i < d; ++i) {
    est.window_lo.push_back(b[i].get_d() - halfwidth);
    est.window_hi.push_back(b[i].get_d() + halfwidth);
  }

  Integer eta_reach = 0;
  for (const auto& x : c.eta()) eta_reach += abs(x);
  const Rational top = dot(c.eta(), offset) + h * eta_reach;
  if (top <= 0) return est;  // the window lies below the base in the η direction

  std::vector<double> extent(m);
  double box_volume = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Rational bj = top / dot(c.columns().column(j), c.eta());
    extent[j] = bj.get_d();
    box_volume *= extent[j];
  }
  std::vector<double> a(d * m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i * m + j] = c.columns()(i, j).get_d();
  std::vector<double> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = est.window_lo[i] - c.base()[i].get_d();
    hi[i] = est.window_hi[i] - c.base()[i].get_d();
  }

  std::mt19937_64 rng(seed);
  std::vector<double> x(m);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < m; ++j) x[j] = extent[j] * unit_uniform(rng);
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      double y = 0.0;
      for (std::size_t j = 0; j < m; ++j) y += a[i * m + j] * x[j];
      inside = y >= lo[i] && y < hi[i];
    }
    hits += inside ? 1 : 0;
  }

  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double scale = box_volume / std::pow(2.0 * halfwidth, static_cast<double>(d));
  est.mean = p * scale;
  est.std_error = scale * std::sqrt(p * (1.0 - p) / n);
  return est;
}

namespace {

// Normals of the lines/points through 0 spanned by (d-1)-subsets, d <= 2.
std::vector<RationalVector> walls_of(const IntegerMatrix& a) {
  std::vector<RationalVector> out;
  if (a.rows() == 1) {
    out.push_back(RationalVector{1});
    return out;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    out.push_back(RationalVector{Rational(-a(1, j)), Rational(a(0, j))});
  }
  return out;
}

// Weights of the open Newton-Cotes rule with nodes (j+1)/(q+2), j = 0..q, on [0,1].
std::vector<Rational> open_rule_weights(std::size_t q) {
  const std::size_t n = q + 1;
  IntegerMatrix vander(n, n);
  RationalVector rhs(n);
  Integer scale = 1;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer v;
      mpz_ui_pow_ui(v.get_mpz_t(), j + 1, p);
      vander(p, j) = v;
    }
    rhs[p] = make_rational(scale, static_cast<long>(p + 1));
    scale *= static_cast<long>(q + 2);
  }
  const auto w = solve_particular(vander, rhs);
  return w->entries();
}

Rational recurrence(const IntegerMatrix& a, const RationalVector& b) {
  const std::size_t d = a.rows();
  const std::size_t m = a.cols();
  if (m == d) {
    const auto x = solve_particular(a, b);
    for (const auto& t : *x) {
      if (t == 0) throw Error("truncated power evaluated at a wall point");
      if (t < 0) return 0;
    }
    return make_rational(1, abs(determinant(a)));
  }

  // Integrate out a column whose removal keeps full rank.
  std::size_t drop = m;
  for (std::size_t j = m; j-- > 0;) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) keep.push_back(k);
    if (rank(a.select_columns(keep)) == d) {
      drop = j;
      break;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < m; ++k)
    if (k != drop) keep.push_back(k);
  const IntegerMatrix rest = a.select_columns(keep);
  const RationalVector alpha = to_rational(a.column(drop));

  std::vector<Rational> breaks{Rational(0)};
  for (const RationalVector& n : walls_of(rest)) {
    const Rational na = dot(n, alpha);
    if (na == 0) continue;
    const Rational t = dot(n, b) / na;
    if (t > 0) breaks.push_back(t);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto integrand = [&](const Rational& t) { return recurrence(rest, b - t * alpha); };
  if (integrand(breaks.back() + 1) != 0) throw Error("truncated power integrand does not vanish at infinity");

  const std::vector<Rational> w = open_rule_weights(m - 1 - d);
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const Rational len = breaks[k + 1] - breaks[k];
    Rational piece = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Rational node = breaks[k] + len * make_rational(static_cast<long>(j + 1), static_cast<long>(w.size() + 1));
      piece += w[j] * integrand(node);
    }
    total += len * piece;
  }
  return total;
}

}  // namespace

Rational truncated_power_1d_recurrence(const IntegerMatrix& columns, const RationalVector& b) {
  const std::size_t d = columns.rows();
  const std::size_t m = columns.cols();
  if (d == 0 || d > 2 || m > 4) throw Error("truncated power recurrence supports d <= 2 and m <= 4");
  if (b.size() != d) throw Error("query point has wrong dimension");
  if (m < d || rank(columns) != d) throw Error("degenerate weight system");
  return recurrence(columns, b);
}

}  // namespace dhm
