#include "dualcox/permmodel.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>

#include "dualcox/errors.hpp"

namespace dualcox {

namespace {

Family single_family(const CoxeterSystem& g, std::initializer_list<Family> accepted,
                     const char* model) {
  const auto& comps = g.descriptor().components();
  if (comps.size() == 1 &&
      std::find(accepted.begin(), accepted.end(), comps.front().family) != accepted.end()) {
    return comps.front().family;
  }
  throw DomainError(std::string(model) + " model needs an irreducible group of type " +
                    (accepted.size() == 1 ? "A" : "B or D") + ", got " + g.type_name());
}

Vector signed_root_vector(const CoxeterSystem& g, SignedRoot r) {
  Vector v = g.ambient_root(r.index);
  if (r.negative)
    for (auto& c : v) c = -c;
  return v;
}

// Reads x e_i = sign * e_j off a monomial matrix; images are 1-based and signed.
std::vector<int> monomial_images(const Matrix& m, bool allow_signs) {
  std::vector<int> images(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Scalar& e = m(r, c);
      if (e.is_zero()) continue;
      const int target = static_cast<int>(r) + 1;
      if (images[c] != 0) throw InvariantViolation("ambient matrix is not monomial");
      if (e == Scalar(1)) {
        images[c] = target;
      } else if (allow_signs && e == Scalar(-1)) {
        images[c] = -target;
      } else {
        throw InvariantViolation("ambient matrix is not a signed permutation matrix");
      }
    }
    if (images[c] == 0) throw InvariantViolation("ambient matrix is singular");
  }
  return images;
}

Element element_from_monomial(const GroupPtr& g, const std::vector<int>& images) {
  const std::size_t d = g->ambient_dim();
  Matrix m(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const int img = images[c];
    m(static_cast<std::size_t>(std::abs(img)) - 1, c) = Scalar(img < 0 ? -1 : 1);
  }
  RootPerm perm(g->reflection_count());
  for (ReflIndex t = 0; t < g->reflection_count(); ++t) {
    auto r = g->find_ambient_root(m * g->ambient_root(t));
    if (!r) throw DomainError("permutation does not preserve the root system of " + g->type_name());
    perm[t] = *r;
  }
  return Element(g, std::move(perm));
}

void check_bijection(const std::vector<int>& images, bool allow_signs) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    const int a = std::abs(v);
    if (a < 1 || static_cast<std::size_t>(a) > images.size() || seen[a - 1] ||
        (!allow_signs && v < 0)) {
      throw DomainError("not a bijection of the points");
    }
    seen[a - 1] = true;
  }
}

struct CycleParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("cycle form, position " + std::to_string(pos) + ": " + msg);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  int number() {
    skip();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      fail("expected an integer");
    }
    if (pos - digits > 6) {
      pos = start;
      fail("integer out of range");
    }
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  std::vector<std::vector<int>> cycles() {
    std::vector<std::vector<int>> out;
    skip();
    while (pos < text.size()) {
      if (text[pos] != '(') fail("expected '('");
      ++pos;
      skip();
      std::vector<int> cycle;
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        skip();
        continue;
      }
      while (true) {
        cycle.push_back(number());
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')'");
      }
      out.push_back(std::move(cycle));
      skip();
    }
    return out;
  }
};

// Assigns a -> b for each cycle step; with signs also -a -> -b. Conflicting
// assignments mean the cycles are not disjoint.
std::vector<int> images_from_cycles(std::string_view text, std::size_t n, bool allow_signs) {
  CycleParser parser{text};
  auto cycles = parser.cycles();
  std::vector<int> images(n, 0);
  std::vector<int> negative_images(n, 0);
  auto assign = [&](int from, int to) {
    const std::size_t a = static_cast<std::size_t>(std::abs(from));
    int& slot = from > 0 ? images[a - 1] : negative_images[a - 1];
    if (slot != 0 && slot != to) {
      throw UsageError("cycle form: point " + std::to_string(from) + " appears twice");
    }
    slot = to;
  };
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v == 0 || static_cast<std::size_t>(std::abs(v)) > n) {
        throw UsageError("cycle form: point " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
      }
      if (!allow_signs && v < 0) throw UsageError("cycle form: negative point in a permutation");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      assign(from, to);
      if (allow_signs) assign(-from, -to);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i] == 0) images[i] = static_cast<int>(i) + 1;
  }
  check_bijection(images, allow_signs);
  return images;
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  for (std::size_t i = 1; i <= n; ++i) p.images.push_back(static_cast<int>(i));
  return p;
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation p;
  for (std::size_t i = 1; i <= n; ++i) p.images.push_back(static_cast<int>(i));
  return p;
}

int SignedPermutation::operator()(int i) const {
  const int v = images.at(static_cast<std::size_t>(std::abs(i) - 1));
  return i < 0 ? -v : v;
}

std::size_t SignedPermutation::negations() const {
  return static_cast<std::size_t>(std::count_if(images.begin(), images.end(), [](int v) { return v < 0; }));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("permutations of different degree");
  Permutation r;
  for (int v : q.images) r.images.push_back(p(v));
  return r;
}

SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.degree() != q.degree()) throw DomainError("signed permutations of different degree");
  SignedPermutation r;
  for (int v : q.images) r.images.push_back(p(v));
  return r;
}

Matrix ambient_matrix(const Element& x) {
  const CoxeterSystem& g = x.system();
  if (!g.has_linear_model()) throw NoLinearModel("no ambient matrix for " + g.type_name());
  const std::size_t d = g.ambient_dim();
  const std::size_t n = g.rank();
  std::vector<Vector> simple;
  std::vector<Vector> images;
  for (ReflIndex s = 0; s < n; ++s) {
    simple.push_back(g.ambient_root(s));
    images.push_back(signed_root_vector(g, x.image(s)));
  }
  Matrix rows = Matrix::from_columns(simple, d).transpose();
  for (auto& v : kernel_basis(rows)) {
    simple.push_back(v);
    images.push_back(v);
  }
  return Matrix::from_columns(images, d) * Matrix::from_columns(simple, d).inverse();
}

Permutation to_permutation(const Element& x) {
  single_family(x.system(), {Family::A}, "permutation");
  return Permutation{monomial_images(ambient_matrix(x), false)};
}

SignedPermutation to_signed(const Element& x) {
  single_family(x.system(), {Family::B, Family::D}, "signed permutation");
  return SignedPermutation{monomial_images(ambient_matrix(x), true)};
}

Element element_from_permutation(const GroupPtr& g, const Permutation& p) {
  single_family(*g, {Family::A}, "permutation");
  if (p.degree() != g->ambient_dim()) {
    throw DomainError("permutation degree " + std::to_string(p.degree()) + " does not match " +
                      g->type_name());
  }
  check_bijection(p.images, false);
  return element_from_monomial(g, p.images);
}

Element element_from_signed(const GroupPtr& g, const SignedPermutation& p) {
  const Family f = single_family(*g, {Family::B, Family::D}, "signed permutation");
  if (p.degree() != g->ambient_dim()) {
    throw DomainError("signed permutation degree " + std::to_string(p.degree()) +
                      " does not match " + g->type_name());
  }
  check_bijection(p.images, true);
  if (f == Family::D && p.negations() % 2 != 0) {
    throw DomainError("odd number of sign changes is not in " + g->type_name());
  }
  return element_from_monomial(g, p.images);
}

std::vector<std::vector<int>> classical_cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.degree(), false);
  for (int start = 1; start <= static_cast<int>(p.degree()); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v - 1]; v = p(v)) {
      seen[v - 1] = true;
      cycle.push_back(v);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::vector<int>> signed_cycles(const SignedPermutation& p) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(p.degree());
  std::vector<bool> seen(p.degree(), false);
  auto orbit = [&](int start) {
    std::vector<int> cycle{start};
    for (int v = p(start); v != start; v = p(v)) cycle.push_back(v);
    return cycle;
  };
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle = orbit(start);
    for (int v : cycle) seen[std::abs(v) - 1] = true;
    if (cycle.size() == 1) continue;
    const bool closed = std::find(cycle.begin(), cycle.end(), -start) != cycle.end();
    out.push_back(cycle);
    if (!closed) out.push_back(orbit(-start));
  }
  return out;
}

std::size_t perm_reflection_length(const Permutation& p) {
  std::size_t moved_cycles = 0;
  std::size_t moved_points = 0;
  for (const auto& c : classical_cycles(p)) {
    ++moved_cycles;
    moved_points += c.size();
  }
  return moved_points - moved_cycles;
}

std::string format_cycles(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Permutation& p) { return format_cycles(classical_cycles(p)); }
std::string to_string(const SignedPermutation& p) { return format_cycles(signed_cycles(p)); }

Permutation parse_permutation(std::string_view text, std::size_t n) {
  return Permutation{images_from_cycles(text, n, false)};
}

SignedPermutation parse_signed_permutation(std::string_view text, std::size_t n) {
  return SignedPermutation{images_from_cycles(text, n, true)};
}

}  // namespace dualcox
