#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dualcox {

using Rational = mpq_class;

/// Exact element a + b*sqrt(5) of Q(sqrt 5). The crystallographic types only
/// ever produce b == 0, so this doubles as plain rational arithmetic.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational a, Rational b = 0);

  /// (1 + sqrt5) / 2
  static Scalar golden();
  static Scalar sqrt5();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// -1, 0 or 1 according to the real value.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on zero

  Scalar inverse() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Ordering by real value.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// "p/q" or "p/q+r/s*sqrt5"; integers print without a denominator.
  std::string to_string() const;
  /// Inverse of to_string(). Throws UsageError on malformed text.
  static Scalar parse(std::string_view text);

  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar with fixed dimensions.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vector> columns,
                             std::size_t n_rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  /// Exact inverse; throws std::domain_error when singular or non-square.
  Matrix inverse() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Scalar& k, Matrix m);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Reduces m in place to reduced row echelon form and returns the pivot
/// columns. Pivots are the first nonzero entry in column order.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(const Matrix& m);

/// n - rank(m - I). Throws std::invalid_argument if m is not square.
std::size_t fixed_space_dim(const Matrix& m);

/// Basis of ker(m). Pass (m - I) to obtain the fixed space of m.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Basis of the column space of m, taken from the pivot columns.
std::vector<Vector> column_space_basis(const Matrix& m);

/// True iff v lies in the span of basis. Throws std::invalid_argument on a
/// dimension mismatch.
bool in_span(const Vector& v, std::span<const Vector> basis);

/// A linear subspace held in reduced echelon form for repeated membership
/// queries.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, std::span<const Vector> spanning);

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  bool contains(const Vector& v) const;
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Scalar dot(const Vector& x, const Vector& y);
std::string to_string(const Vector& v);

}  // namespace dualcox
