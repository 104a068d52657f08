#include "core/linalg.hpp"

#include <utility>

#include "core/error.hpp"

namespace macver {

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

IntVector to_int(const RationalVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

namespace {

void require_same_size(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size())
    throw UsageError("vector dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
}

}  // namespace

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_size(a, b);
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_size(a, b);
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<RationalVector>& cols) {
  return from_rows(cols).transpose();
}

RationalVector Matrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RationalVector Matrix::column(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

RationalVector operator*(const Matrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw UsageError("matrix-vector dimension mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return row_reduce(a).size();
}

std::vector<RationalVector> nullspace(const Matrix& m) {
  Matrix a = m;
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b) {
  if (m.rows() != m.cols() || b.size() != m.rows())
    throw UsageError("solve expects a square system");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  return aug.column(n);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw DomainError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

GramForm::GramForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw UsageError("Gram matrix must be square and symmetric");
}

Rational GramForm::operator()(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw UsageError("bilinear form of dimension " + std::to_string(dim()) +
                     " applied to vectors of dimension " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()));
  Rational acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j] != 0 && gram_(i, j) != 0) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

RationalVector GramForm::lower(const RationalVector& y) const { return gram_ * y; }

GramForm GramForm::scaled(const Rational& s) const { return GramForm(s * gram_); }

Rational bilinear(const GramForm& form, const RationalVector& x, const RationalVector& y) {
  return form(x, y);
}

Definiteness definiteness(const GramForm& form) {
  Definiteness out;
  const std::size_t n = form.dim();
  Matrix a = form.gram();
  std::vector<bool> done(n, false);
  std::size_t pivots = 0;
  bool indefinite = false;
  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && !indefinite; ++i) {
      if (done[i]) continue;
      if (a(i, i) < 0) indefinite = true;
      else if (a(i, i) > 0 && p == n) p = i;
    }
    if (indefinite) break;
    if (p == n) {
      // All remaining diagonal entries vanish; PSD forces the block to be zero.
      for (std::size_t i = 0; i < n && !indefinite; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) {
            indefinite = true;
            break;
          }
      break;
    }
    done[p] = true;
    ++pivots;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p) == 0) continue;
      Rational f = a(i, p) / a(p, p);
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
  }
  out.radical_basis = nullspace(form.gram());
  out.radical_dim = out.radical_basis.size();
  if (indefinite) out.kind = FormKind::Indefinite;
  else if (pivots == n) out.kind = FormKind::PositiveDefinite;
  else out.kind = FormKind::PositiveSemidefinite;
  return out;
}

}  // namespace macver
