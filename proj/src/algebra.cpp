#include "dualcox/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dualcox/errors.hpp"

namespace dualcox {

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] {
    throw UsageError("malformed scalar '" + std::string(whole) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) fail();
  }
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) fail();
  if (sgn(r.get_den()) == 0) fail();
  r.canonicalize();
  return r;
}

}  // namespace

Scalar::Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Scalar Scalar::golden() { return Scalar(Rational(1, 2), Rational(1, 2)); }
Scalar Scalar::sqrt5() { return Scalar(Rational(0), Rational(1)); }

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  Rational lhs = a_ * a_;
  Rational rhs = 5 * b_ * b_;
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(b_) == 0) return Scalar(1 / a_);
  // (a - b sqrt5) / (a^2 - 5 b^2); the norm is nonzero since sqrt5 is irrational.
  Rational norm = a_ * a_ - 5 * b_ * b_;
  return Scalar(a_ / norm, -b_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero scalar");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    if (sgn(b_) > 0) out += '+';
  }
  out += b_.get_str();
  out += "*sqrt5";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  constexpr std::string_view kSuffix = "*sqrt5";
  if (text.empty()) throw UsageError("empty scalar");
  if (text.size() < kSuffix.size() ||
      text.substr(text.size() - kSuffix.size()) != kSuffix) {
    return Scalar(parse_rational(text, text));
  }
  std::string_view body = text.substr(0, text.size() - kSuffix.size());
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return Scalar(Rational(0), parse_rational(body, text));
  }
  return Scalar(parse_rational(body.substr(0, split), text),
                parse_rational(body.substr(split), text));
}

double Scalar::to_double() const {
  return a_.get_d() + b_.get_d() * 2.2360679774997896964;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.to_string();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns,
                            std::size_t n_rows) {
  Matrix m(n_rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n_rows) {
      throw std::invalid_argument("column length mismatch");
    }
    for (std::size_t r = 0; r < n_rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw std::domain_error("singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) p(i, j) += xik * y(k, j);
      }
    }
  return p;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
  Vector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  Matrix d = x;
  for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= y.data_[i];
  return d;
}

Matrix operator*(const Scalar& k, Matrix m) {
  for (auto& e : m.data_) e *= k;
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << "]\n";
  }
  return os;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    Scalar inv = m(pivot_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return row_reduce(work).size();
}

std::size_t fixed_space_dim(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("fixed_space_dim needs a square matrix");
  return m.rows() - rank(m - Matrix::identity(m.rows()));
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix work = m;
  auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
  Matrix work = m;
  auto pivots = row_reduce(work);
  std::vector<Vector> basis;
  basis.reserve(pivots.size());
  for (auto p : pivots) basis.push_back(m.column(p));
  return basis;
}

Subspace::Subspace(std::size_t ambient_dim, std::span<const Vector> spanning)
    : ambient_dim_(ambient_dim) {
  Matrix m(spanning.size(), ambient_dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != ambient_dim) {
      throw std::invalid_argument("subspace spanning vector has wrong dimension");
    }
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = spanning[r][c];
  }
  pivots_ = row_reduce(m);
  for (std::size_t r = 0; r < pivots_.size(); ++r) rows_.push_back(m.row(r));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) {
    throw std::invalid_argument("membership test with wrong dimension");
  }
  Vector rest = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar coeff = rest[pivots_[i]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c) {
      if (!rows_[i][c].is_zero()) rest[c] -= coeff * rows_[i][c];
    }
  }
  return std::all_of(rest.begin(), rest.end(),
                     [](const Scalar& x) { return x.is_zero(); });
}

bool in_span(const Vector& v, std::span<const Vector> basis) {
  return Subspace(v.size(), basis).contains(v);
}

Scalar dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace dualcox
