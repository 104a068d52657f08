#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace macver {

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long>;

RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
RationalVector to_rational(const IntVector& v);
// Throws InvariantError if some coordinate is not an integer.
IntVector to_int(const RationalVector& v);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& s, const RationalVector& v);
bool is_zero(const RationalVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_symmetric() const;
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);
RationalVector operator*(const Matrix& m, const RationalVector& v);

Rational determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, in reduced echelon normal form.
std::vector<RationalVector> nullspace(const Matrix& m);
// Unique solution of m x = b for square invertible m; nullopt when singular.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b);
// Throws DomainError when singular.
Matrix inverse(const Matrix& m);

enum class FormKind { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct Definiteness {
  FormKind kind = FormKind::Indefinite;
  std::size_t radical_dim = 0;
  std::vector<RationalVector> radical_basis;
};

// A symmetric bilinear form given by its Gram matrix in some fixed basis.
class GramForm {
 public:
  GramForm() = default;
  // Throws UsageError if gram is not square and symmetric.
  explicit GramForm(Matrix gram);

  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }

  // x^T G y. Throws UsageError on a dimension mismatch.
  Rational operator()(const RationalVector& x, const RationalVector& y) const;
  Rational norm2(const RationalVector& x) const { return (*this)(x, x); }
  // G y, i.e. the covector x -> I(x, y).
  RationalVector lower(const RationalVector& y) const;

  GramForm scaled(const Rational& s) const;

  friend bool operator==(const GramForm& a, const GramForm& b) = default;

 private:
  Matrix gram_;
};

Rational bilinear(const GramForm& form, const RationalVector& x, const RationalVector& y);

// Sign classification by fraction-free symmetric elimination; the radical is
// the kernel of the Gram matrix.
Definiteness definiteness(const GramForm& form);

}  // namespace macver
