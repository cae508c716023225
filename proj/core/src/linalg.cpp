#include "dhm/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace dhm {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return make_rational(negative ? Integer(-n) : n, d);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in vector sum");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in vector difference");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

IntegerVector operator*(const Integer& s, const IntegerVector& v) {
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in vector sum");
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntegerVector operator-(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in vector difference");
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntegerVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in pairing");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntegerVector primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * l;
    out[i] = scaled.get_num();
  }
  return primitive(out);
}

IntegerVector primitive(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error("primitive vector of zero");
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

template <class V>
std::string vec_str(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

std::string to_string(const IntegerVector& v) { return vec_str(v); }
std::string to_string(const RationalVector& v) { return vec_str(v); }
std::ostream& operator<<(std::ostream& os, const IntegerVector& v) { return os << vec_str(v); }
std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << vec_str(v); }

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major)
    : rows_(rows), cols_(cols) {
  if (row_major.size() != rows * cols) throw Error("matrix initializer has wrong length");
  entries_.reserve(rows * cols);
  for (long x : row_major) entries_.emplace_back(x);
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, std::span<const IntegerVector> columns) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::size_t cols, std::span<const IntegerVector> rows) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t r) const {
  IntegerVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
  return v;
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
  IntegerVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IntegerVector> IntegerMatrix::columns() const {
  std::vector<IntegerVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> idx) const {
  IntegerMatrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension mismatch in matrix product");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& x) {
  if (a.cols() != x.size()) throw Error("dimension mismatch in matrix-vector product");
  IntegerVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

RationalVector operator*(const IntegerMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw Error("dimension mismatch in matrix-vector product");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Elimination over Q

namespace {

struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rational& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntegerMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return rref(q, q.cols).size();
}

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix q(vectors.size(), vectors[0].size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != q.cols) throw Error("dimension mismatch in rank");
    for (std::size_t j = 0; j < q.cols; ++j) q(i, j) = vectors[i][j];
  }
  return rref(q, q.cols).size();
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RationalVector> solve_particular(const IntegerMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw Error("dimension mismatch in solve");
  RationalMatrix q(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = a(i, j);
    q(i, a.cols()) = b[i];
  }
  const auto pivots = rref(q, a.cols());
  for (std::size_t i = pivots.size(); i < q.rows; ++i) {
    if (q(i, a.cols()) != 0) return std::nullopt;
  }
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = q(r, a.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Integer normal forms

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += f * row_src
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

// col_dst += f * col_src
void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  SmithForm s{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols()), 0};
  IntegerMatrix& d = s.d;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&](bool whole_block) {
      std::size_t bi = a.rows(), bj = a.cols();
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (d(i, j) == 0) continue;
          if (bi == a.rows() || abs(d(i, j)) < abs(d(bi, bj))) bi = i, bj = j;
        }
      if (bi == a.rows()) return false;
      swap_rows(d, t, bi);
      swap_rows(s.u, t, bi);
      swap_cols(d, t, bj);
      swap_cols(s.v, t, bj);
      return true;
    };
    if (!move_min_to_pivot(true)) break;

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(s.u, t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < a.rows(); ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  s.rank = t;
  return s;
}

HermiteForm column_hermite_form(const IntegerMatrix& a) {
  HermiteForm hf{a, IntegerMatrix::identity(a.cols()), 0};
  IntegerMatrix& h = hf.h;
  IntegerMatrix& v = hf.v;
  const std::size_t m = a.cols();
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.rows() && k < m; ++i) {
    for (std::size_t j = k + 1; j < m; ++j) {
      if (h(i, j) == 0) continue;
      const Integer x = h(i, k);
      const Integer y = h(i, j);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      const Integer xg = x / g;
      const Integer yg = y / g;
      // [col_k col_j] <- [col_k col_j] * [[s, -y/g], [t, x/g]]  (determinant 1)
      for (IntegerMatrix* mat : {&h, &v}) {
        for (std::size_t r = 0; r < mat->rows(); ++r) {
          const Integer ck = (*mat)(r, k);
          const Integer cj = (*mat)(r, j);
          (*mat)(r, k) = s * ck + t * cj;
          (*mat)(r, j) = -yg * ck + xg * cj;
        }
      }
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, k) = -h(r, k);
      for (std::size_t r = 0; r < v.rows(); ++r) v(r, k) = -v(r, k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
      if (q == 0) continue;
      add_col(h, j, k, -q);
      add_col(v, j, k, -q);
    }
    ++k;
  }
  hf.rank = k;
  return hf;
}

IntegerMatrix kernel_lattice_basis(const IntegerMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const std::size_t m = a.cols();
  IntegerMatrix k(m, m - s.rank);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = s.rank; j < m; ++j) k(i, j - s.rank) = s.v(i, j);
  return k;
}

Integer image_lattice_index(const IntegerMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  if (s.rank != a.rows()) throw Error("degenerate weight system");
  Integer idx = 1;
  for (std::size_t i = 0; i < s.rank; ++i) idx *= s.d(i, i);
  return idx;
}

}  // namespace dhm
