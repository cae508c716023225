#pragma once

// Exact rational and integer linear algebra.
//
// Everything here is arbitrary precision (GMP). Matrices are small and dense;
// algorithms favour clarity over asymptotics.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dhm/error.hpp"

namespace dhm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "p/q" or "-p/q" into lowest terms.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Dense vector over Integer or Rational.
template <class T>
class Vec {
 public:
  using value_type = T;

  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  Vec(std::initializer_list<T> init) : entries_(init) {}
  explicit Vec(std::vector<T> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  T& operator[](std::size_t i) { return entries_[i]; }
  const T& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() noexcept { return entries_.begin(); }
  auto end() noexcept { return entries_.end(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::span<const T> span() const noexcept { return entries_; }
  const std::vector<T>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.entries_ == b.entries_; }

  friend Vec operator-(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
  }

 private:
  std::vector<T> entries_;
};

using IntegerVector = Vec<Integer>;
using RationalVector = Vec<Rational>;

RationalVector to_rational(const IntegerVector& v);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
IntegerVector operator*(const Integer& s, const IntegerVector& v);
IntegerVector operator+(const IntegerVector& a, const IntegerVector& b);
IntegerVector operator-(const IntegerVector& a, const IntegerVector& b);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntegerVector& a, const RationalVector& b);
Integer dot(const IntegerVector& a, const IntegerVector& b);

/// Smallest integer vector on the ray through v (v nonzero), gcd of entries 1.
IntegerVector primitive(const RationalVector& v);
IntegerVector primitive(const IntegerVector& v);

std::string to_string(const IntegerVector& v);
std::string to_string(const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const IntegerVector& v);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Row-major dense integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major);

  static IntegerMatrix identity(std::size_t n);
  /// Builds a rows x columns.size() matrix; every column must have `rows` entries.
  static IntegerMatrix from_columns(std::size_t rows, std::span<const IntegerVector> columns);
  static IntegerMatrix from_rows(std::size_t cols, std::span<const IntegerVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntegerVector row(std::size_t r) const;
  IntegerVector column(std::size_t c) const;
  std::vector<IntegerVector> columns() const;

  IntegerMatrix transpose() const;
  /// Sub-matrix made of the listed columns, in order.
  IntegerMatrix select_columns(std::span<const std::size_t> idx) const;

  bool is_zero() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& x);
RationalVector operator*(const IntegerMatrix& a, const RationalVector& x);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntegerMatrix& m);

/// Rank of a list of rational vectors (all of the same length).
std::size_t rank(std::span<const RationalVector> vectors);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntegerMatrix& m);

/// Some x with A*x == b, or nullopt when b is outside the column span.
std::optional<RationalVector> solve_particular(const IntegerMatrix& a, const RationalVector& b);

/// U * A * V == D with U, V unimodular and D diagonal with d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Column-style Hermite form: A * V == H with V unimodular, H lower
/// echelon with positive pivots and reduced entries left of each pivot.
struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix v;
  std::size_t rank = 0;
};

HermiteForm column_hermite_form(const IntegerMatrix& a);

/// Columns form a lattice basis of ker(A) ∩ Z^m.
IntegerMatrix kernel_lattice_basis(const IntegerMatrix& a);

/// [Z^d : A(Z^m)]. Throws Error("degenerate weight system") unless rank(A) == d.
Integer image_lattice_index(const IntegerMatrix& a);

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when fn returns false.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace dhm
