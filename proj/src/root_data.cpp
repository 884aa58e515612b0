#include "root_data.hpp"

#include <stdexcept>

namespace dualcox::detail {

namespace {

Vector unit(std::size_t dim, std::size_t i, long value = 1) {
  Vector v(dim);
  v[i] = value;
  return v;
}

Vector difference(std::size_t dim, std::size_t i, std::size_t j) {
  Vector v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

Matrix gram_of(const std::vector<Vector>& simple) {
  Matrix g(simple.size(), simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      g(i, j) = dot(simple[i], simple[j]);
  return g;
}

Scalar half_phi() { return Scalar(Rational(1, 4), Rational(1, 4)); }
Scalar half_phi_inverse() { return Scalar(Rational(-1, 4), Rational(1, 4)); }

std::vector<Vector> type_a(unsigned n) {
  std::vector<Vector> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(difference(n + 1, i, i + 1));
  return s;
}

std::vector<Vector> type_b(unsigned n) {
  std::vector<Vector> s;
  for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(difference(n, i, i + 1));
  s.push_back(unit(n, n - 1));
  return s;
}

// Fork first: alpha_0 = e_{n-1}+e_n and alpha_1 = e_{n-1}-e_n both attach to
// alpha_2 = e_{n-2}-e_{n-1}; the tail runs down to alpha_{n-1} = e_1-e_2.
std::vector<Vector> type_d(unsigned n) {
  std::vector<Vector> s;
  Vector plus(n);
  plus[n - 2] = 1;
  plus[n - 1] = 1;
  s.push_back(plus);
  s.push_back(difference(n, n - 2, n - 1));
  for (std::size_t k = 2; k < n; ++k) s.push_back(difference(n, n - k - 1, n - k));
  return s;
}

std::vector<Vector> type_e(unsigned n) {
  std::vector<Vector> s;
  Vector first(8, Scalar(Rational(-1, 2)));
  first[0] = Scalar(Rational(1, 2));
  first[7] = Scalar(Rational(1, 2));
  s.push_back(first);
  Vector second(8);
  second[0] = 1;
  second[1] = 1;
  s.push_back(second);
  for (std::size_t k = 2; k < n; ++k) s.push_back(difference(8, k - 1, k - 2));
  return s;
}

std::vector<Vector> type_f4() {
  Vector last(4, Scalar(Rational(-1, 2)));
  last[0] = Scalar(Rational(1, 2));
  return {difference(4, 1, 2), difference(4, 2, 3), unit(4, 3), last};
}

std::vector<Vector> type_g2() {
  return {Vector{1, -1, 0}, Vector{-2, 1, 1}};
}

// Path 5-3: alpha_0 and alpha_1 at angle 4pi/5.
std::vector<Vector> type_h3() {
  return {Vector{0, 1, 0},
          Vector{half_phi_inverse(), -half_phi(), Scalar(Rational(-1, 2))},
          Vector{0, 0, 1}};
}

// Path 5-3-3.
std::vector<Vector> type_h4() {
  return {Vector{0, 0, 0, 1},
          Vector{0, half_phi_inverse(), Scalar(Rational(-1, 2)), -half_phi()},
          Vector{0, 0, 1, 0},
          Vector{half_phi_inverse(), -half_phi(), Scalar(Rational(-1, 2)), 0}};
}

}  // namespace

ComponentRoots component_roots(const Component& c) {
  ComponentRoots out;
  switch (c.family) {
    case Family::A: out.simple = type_a(c.rank); break;
    case Family::B: out.simple = type_b(c.rank); break;
    case Family::D: out.simple = type_d(c.rank); break;
    case Family::E: out.simple = type_e(c.rank); break;
    case Family::F: out.simple = type_f4(); break;
    case Family::G: out.simple = type_g2(); break;
    case Family::H: out.simple = c.rank == 3 ? type_h3() : type_h4(); break;
    case Family::I: {
      if (c.param != 5) throw std::logic_error("no linear model for this I2(m)");
      // Root-basis coordinates with (alpha_0, alpha_1) = -cos(pi/5).
      out.simple = {Vector{1, 0}, Vector{0, 1}};
      out.ambient_dim = 2;
      out.gram = Matrix{{1, -half_phi()}, {-half_phi(), 1}};
      out.euclidean = false;
      return out;
    }
  }
  out.ambient_dim = out.simple.front().size();
  out.gram = gram_of(out.simple);
  return out;
}

}  // namespace dualcox::detail
