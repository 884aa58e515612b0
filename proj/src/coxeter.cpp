#include "dualcox/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "root_data.hpp"

namespace dualcox {

namespace {

RootPerm compose(const RootPerm& x, const RootPerm& y) {
  RootPerm out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const SignedRoot a = y[i];
    const SignedRoot b = x[a.index];
    out[i] = {b.index, a.negative != b.negative};
  }
  return out;
}

bool is_identity_perm(const RootPerm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].index != i || p[i].negative) return false;
  }
  return true;
}

RootPerm identity_perm(std::size_t n) {
  RootPerm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = {static_cast<ReflIndex>(i), false};
  return p;
}

unsigned perm_order(const RootPerm& p) {
  RootPerm power = p;
  unsigned k = 1;
  while (!is_identity_perm(power)) {
    power = compose(p, power);
    ++k;
  }
  return k;
}

Vector negated(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool is_positive(const Vector& v) {
  bool nonzero = false;
  for (const auto& x : v) {
    int s = x.sign();
    if (s < 0) return false;
    if (s > 0) nonzero = true;
  }
  return nonzero;
}

Scalar height(const Vector& v) {
  Scalar h;
  for (const auto& x : v) h += x;
  return h;
}

unsigned parse_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  unsigned value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<unsigned>(text[pos] - '0');
    if (value > 100000) throw UsageError("rank too large in type string");
    ++pos;
  }
  if (pos == start) {
    throw UsageError("expected digits at position " + std::to_string(pos) +
                     " of type string '" + std::string(text) + "'");
  }
  return value;
}

Component normalize(Component c) {
  if (c.family == Family::I) {
    if (c.param == 3) return {Family::A, 2, 0};
    if (c.param == 4) return {Family::B, 2, 0};
    if (c.param == 6) return {Family::G, 2, 0};
  }
  return c;
}

void validate(const Component& c, std::string_view text) {
  bool ok = true;
  switch (c.family) {
    case Family::A: ok = c.rank >= 1; break;
    case Family::B: ok = c.rank >= 2; break;
    case Family::D: ok = c.rank >= 4; break;
    case Family::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case Family::F: ok = c.rank == 4; break;
    case Family::G: ok = c.rank == 2; break;
    case Family::H: ok = c.rank == 3 || c.rank == 4; break;
    case Family::I: ok = c.param >= 3; break;
  }
  if (!ok) {
    throw UsageError("unsupported or infinite Coxeter type '" + std::string(text) + "'");
  }
}

}  // namespace

std::size_t RootPermHash::operator()(const RootPerm& p) const noexcept {
  std::size_t seed = p.size();
  for (const auto& r : p) {
    std::size_t v = (static_cast<std::size_t>(r.index) << 1) | (r.negative ? 1u : 0u);
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

std::size_t ReflWordHash::operator()(const ReflWord& w) const noexcept {
  std::size_t seed = w.size();
  for (auto t : w) seed ^= t + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

std::string to_string(const ReflWord& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 't' << w[i];
  }
  os << ')';
  return os.str();
}

std::string Component::name() const {
  if (family == Family::I) return "I2(" + std::to_string(param) + ")";
  static constexpr char kLetters[] = "ABDEFGHI";
  return std::string(1, kLetters[static_cast<int>(family)]) + std::to_string(rank);
}

CoxeterDescriptor::CoxeterDescriptor(std::vector<Component> components) {
  for (auto& c : components) {
    validate(c, c.name());
    components_.push_back(normalize(c));
  }
  if (components_.empty()) throw UsageError("empty Coxeter type");
  std::sort(components_.begin(), components_.end());
}

CoxeterDescriptor CoxeterDescriptor::parse(std::string_view text) {
  std::vector<Component> parts;
  std::size_t pos = 0;
  if (text.empty()) throw UsageError("empty Coxeter type string");
  while (true) {
    if (pos >= text.size()) {
      throw UsageError("expected a component at position " + std::to_string(pos) +
                       " of type string '" + std::string(text) + "'");
    }
    Component c;
    char letter = text[pos];
    if (text.substr(pos, 3) == "I2(") {
      pos += 3;
      c.family = Family::I;
      c.rank = 2;
      c.param = parse_number(text, pos);
      if (pos >= text.size() || text[pos] != ')') {
        throw UsageError("expected ')' at position " + std::to_string(pos) +
                         " of type string '" + std::string(text) + "'");
      }
      ++pos;
    } else {
      switch (letter) {
        case 'A': c.family = Family::A; break;
        case 'B': c.family = Family::B; break;
        case 'D': c.family = Family::D; break;
        case 'E': c.family = Family::E; break;
        case 'F': c.family = Family::F; break;
        case 'G': c.family = Family::G; break;
        case 'H': c.family = Family::H; break;
        default:
          throw UsageError("unknown family '" + std::string(1, letter) +
                           "' at position " + std::to_string(pos) +
                           " of type string '" + std::string(text) + "'");
      }
      ++pos;
      c.rank = parse_number(text, pos);
    }
    validate(c, text);
    parts.push_back(c);
    if (pos == text.size()) break;
    if (text[pos] != 'x') {
      throw UsageError("expected 'x' at position " + std::to_string(pos) +
                       " of type string '" + std::string(text) + "'");
    }
    ++pos;
  }
  return CoxeterDescriptor(std::move(parts));
}

unsigned CoxeterDescriptor::rank() const {
  unsigned r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string CoxeterDescriptor::name() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += 'x';
    out += c.name();
  }
  return out;
}

const Vector& CoxeterSystem::root(ReflIndex t) const {
  if (!linear_) throw NoLinearModel("I2(m) model has no root coordinates");
  return roots_.at(t);
}

const Vector& CoxeterSystem::ambient_root(ReflIndex t) const {
  if (!linear_) throw NoLinearModel("I2(m) model has no root coordinates");
  return ambient_roots_.at(t);
}

const Matrix& CoxeterSystem::gram() const {
  if (!linear_) throw NoLinearModel("I2(m) model has no bilinear form");
  return gram_;
}

unsigned CoxeterSystem::coxeter_matrix(std::size_t i, std::size_t j) const {
  return coxeter_matrix_.at(i * rank_ + j);
}

unsigned CoxeterSystem::product_order(ReflIndex t, ReflIndex u) const {
  return product_orders_.at(static_cast<std::size_t>(t) * reflections_.size() + u);
}

bool CoxeterSystem::commute(ReflIndex t, ReflIndex u) const {
  return reflections_.at(t).at(u).index == u;
}

std::optional<SignedRoot> CoxeterSystem::find_root(const Vector& v) const {
  if (!linear_) return std::nullopt;
  if (auto it = root_lookup_.find(to_string(v)); it != root_lookup_.end()) {
    return SignedRoot{it->second, false};
  }
  if (auto it = root_lookup_.find(to_string(negated(v))); it != root_lookup_.end()) {
    return SignedRoot{it->second, true};
  }
  return std::nullopt;
}

std::optional<SignedRoot> CoxeterSystem::find_ambient_root(const Vector& v) const {
  if (!linear_) return std::nullopt;
  if (auto it = ambient_lookup_.find(to_string(v)); it != ambient_lookup_.end()) {
    return SignedRoot{it->second, false};
  }
  if (auto it = ambient_lookup_.find(to_string(negated(v)));
      it != ambient_lookup_.end()) {
    return SignedRoot{it->second, true};
  }
  return std::nullopt;
}

std::optional<ReflIndex> CoxeterSystem::find_reflection(const RootPerm& p) const {
  if (auto it = reflection_lookup_.find(p); it != reflection_lookup_.end()) {
    return it->second;
  }
  return std::nullopt;
}

bool CoxeterSystem::root_in_span(std::span<const ReflIndex> gens, ReflIndex t) const {
  if (!linear_) {
    // Any two distinct roots of a dihedral system span the plane.
    std::vector<ReflIndex> distinct(gens.begin(), gens.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= 2) return true;
    return distinct.size() == 1 && distinct.front() == t;
  }
  std::vector<Vector> spanning;
  spanning.reserve(gens.size());
  for (auto g : gens) spanning.push_back(roots_.at(g));
  return Subspace(rank_, spanning).contains(roots_.at(t));
}

GroupPtr build_group(std::string_view type) {
  return build_group(CoxeterDescriptor::parse(type));
}

GroupPtr build_group(const CoxeterDescriptor& d) {
  std::shared_ptr<CoxeterSystem> g(new CoxeterSystem());
  g->descriptor_ = d;
  g->rank_ = d.rank();

  const auto& comps = d.components();
  const bool dihedral = std::any_of(comps.begin(), comps.end(),
                                    detail::is_combinatorial_dihedral);
  if (dihedral) {
    if (comps.size() != 1) {
      throw DomainError("I2(m) without a linear model must be the only component");
    }
    const unsigned m = comps.front().param;
    g->linear_ = false;
    g->ambient_euclidean_ = false;
    g->dihedral_m_ = m;
    // Direction k*pi/m for k in [0, 2m); positive roots are k < m. Index 0 is
    // direction 0, index 1 is direction m-1 (the two simple roots), then 1..m-2.
    auto index_of_direction = [m](unsigned k) -> ReflIndex {
      if (k == 0) return 0;
      if (k == m - 1) return 1;
      return k + 1;
    };
    std::vector<unsigned> direction_of(m);
    for (unsigned k = 0; k < m; ++k) direction_of[index_of_direction(k)] = k;
    for (ReflIndex t = 0; t < m; ++t) {
      const unsigned k = direction_of[t];
      RootPerm p(m);
      for (ReflIndex i = 0; i < m; ++i) {
        const unsigned j = direction_of[i];
        const unsigned image = (2 * k + m + 2 * m - j) % (2 * m);
        p[i] = {index_of_direction(image % m), image >= m};
      }
      g->reflections_.push_back(std::move(p));
    }
  } else {
    // Block-diagonal assembly of the components.
    std::vector<detail::ComponentRoots> blocks;
    std::size_t ambient_dim = 0;
    for (const auto& c : comps) {
      blocks.push_back(detail::component_roots(c));
      ambient_dim += blocks.back().ambient_dim;
      g->ambient_euclidean_ = g->ambient_euclidean_ && blocks.back().euclidean;
    }
    const std::size_t n = g->rank_;
    g->ambient_dim_ = ambient_dim;
    g->gram_ = Matrix(n, n);
    std::vector<Vector> simple_ambient;
    std::size_t row = 0;
    std::size_t amb_offset = 0;
    for (const auto& b : blocks) {
      const std::size_t k = b.simple.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g->gram_(row + i, row + j) = b.gram(i, j);
        Vector v(ambient_dim);
        for (std::size_t a = 0; a < b.ambient_dim; ++a) v[amb_offset + a] = b.simple[i][a];
        simple_ambient.push_back(std::move(v));
      }
      row += k;
      amb_offset += b.ambient_dim;
    }

    const Matrix& gram = g->gram_;
    // s_i(v) = v - 2 (v, alpha_i) / (alpha_i, alpha_i) alpha_i in root coordinates.
    auto reflect = [&](const Vector& v, const Vector& beta) {
      Scalar vb, bb;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (gram(i, j).is_zero()) continue;
          if (!v[i].is_zero() && !beta[j].is_zero()) vb += v[i] * gram(i, j) * beta[j];
          if (!beta[i].is_zero() && !beta[j].is_zero()) bb += beta[i] * gram(i, j) * beta[j];
        }
      Scalar c = Scalar(2) * vb / bb;
      Vector out = v;
      for (std::size_t i = 0; i < n; ++i) out[i] -= c * beta[i];
      return out;
    };

    std::vector<Vector> roots;
    std::unordered_set<std::string> seen;
    std::deque<Vector> queue;
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = 1;
      seen.insert(to_string(e));
      roots.push_back(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      Vector v = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i) {
        Vector w = reflect(v, roots[i]);
        if (!is_positive(w)) continue;
        if (seen.insert(to_string(w)).second) {
          roots.push_back(w);
          queue.push_back(std::move(w));
        }
      }
    }

    std::vector<std::pair<Scalar, Vector>> keyed;
    keyed.reserve(roots.size());
    for (auto& r : roots) keyed.emplace_back(height(r), std::move(r));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return std::lexicographical_compare(y.second.begin(), y.second.end(),
                                          x.second.begin(), x.second.end());
    });
    for (auto& [h, r] : keyed) {
      Vector amb(ambient_dim);
      for (std::size_t i = 0; i < n; ++i) {
        if (r[i].is_zero()) continue;
        for (std::size_t a = 0; a < ambient_dim; ++a) amb[a] += r[i] * simple_ambient[i][a];
      }
      g->root_lookup_.emplace(to_string(r), static_cast<ReflIndex>(g->roots_.size()));
      g->ambient_lookup_.emplace(to_string(amb), static_cast<ReflIndex>(g->roots_.size()));
      g->roots_.push_back(std::move(r));
      g->ambient_roots_.push_back(std::move(amb));
    }

    const std::size_t count = g->roots_.size();
    for (std::size_t t = 0; t < count; ++t) {
      RootPerm p(count);
      for (std::size_t i = 0; i < count; ++i) {
        auto image = g->find_root(reflect(g->roots_[i], g->roots_[t]));
        if (!image) throw InvariantViolation("root system not closed under reflection");
        p[i] = *image;
      }
      g->reflections_.push_back(std::move(p));
    }
  }

  const std::size_t count = g->reflections_.size();
  for (std::size_t i = 0; i < g->rank_; ++i) g->simple_ids_.push_back(static_cast<ReflIndex>(i));
  for (std::size_t t = 0; t < count; ++t) {
    g->reflection_lookup_.emplace(g->reflections_[t], static_cast<ReflIndex>(t));
  }
  g->product_orders_.resize(count * count);
  for (std::size_t t = 0; t < count; ++t)
    for (std::size_t u = t; u < count; ++u) {
      const unsigned k = perm_order(compose(g->reflections_[t], g->reflections_[u]));
      g->product_orders_[t * count + u] = k;
      g->product_orders_[u * count + t] = k;
    }
  g->coxeter_matrix_.resize(g->rank_ * g->rank_);
  for (std::size_t i = 0; i < g->rank_; ++i)
    for (std::size_t j = 0; j < g->rank_; ++j)
      g->coxeter_matrix_[i * g->rank_ + j] = g->product_order(
          static_cast<ReflIndex>(i), static_cast<ReflIndex>(j));
  return g;
}

Element::Element(GroupPtr group, RootPerm perm)
    : group_(std::move(group)),
      perm_(std::move(perm)),
      cache_(std::make_shared<detail::ElementCache>()) {
  if (perm_.size() != group_->reflection_count()) {
    throw std::invalid_argument("root permutation has wrong length");
  }
}

Element Element::identity(GroupPtr group) {
  const std::size_t n = group->reflection_count();
  return Element(std::move(group), identity_perm(n));
}

bool Element::is_identity() const { return is_identity_perm(perm_); }

Element Element::inverse() const {
  RootPerm inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    inv[perm_[i].index] = {static_cast<ReflIndex>(i), perm_[i].negative};
  }
  return Element(group_, std::move(inv));
}

const Matrix& Element::matrix() const {
  if (!group_->has_linear_model()) {
    throw NoLinearModel("no linear model for " + group_->type_name());
  }
  std::call_once(cache_->matrix_once, [this] {
    const std::size_t n = group_->rank();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const SignedRoot img = perm_[group_->simple_reflection_ids()[j]];
      const Vector& r = group_->root(img.index);
      for (std::size_t i = 0; i < n; ++i) m(i, j) = img.negative ? -r[i] : r[i];
    }
    cache_->matrix = std::move(m);
  });
  return *cache_->matrix;
}

Element operator*(const Element& x, const Element& y) {
  if (x.group_ != y.group_) throw MixedGroups();
  return Element(x.group_, compose(x.perm_, y.perm_));
}

bool operator==(const Element& x, const Element& y) {
  if (x.group_ != y.group_) throw MixedGroups();
  return x.perm_ == y.perm_;
}

Element element_from_simple_word(const GroupPtr& g, std::span<const unsigned> word) {
  RootPerm p = identity_perm(g->reflection_count());
  for (unsigned s : word) {
    if (s >= g->rank()) {
      throw UsageError("simple index " + std::to_string(s) + " out of range for " +
                       g->type_name());
    }
    p = compose(p, g->reflection_perm(g->simple_reflection_ids()[s]));
  }
  return Element(g, std::move(p));
}

Element element_from_refl_word(const GroupPtr& g, const ReflWord& w) {
  RootPerm p = identity_perm(g->reflection_count());
  for (ReflIndex t : w) {
    if (t >= g->reflection_count()) {
      throw UsageError("reflection index " + std::to_string(t) + " out of range for " +
                       g->type_name());
    }
    p = compose(p, g->reflection_perm(t));
  }
  return Element(g, std::move(p));
}

Element reflection_element(const GroupPtr& g, ReflIndex t) {
  if (t >= g->reflection_count()) {
    throw UsageError("reflection index " + std::to_string(t) + " out of range for " +
                     g->type_name());
  }
  return Element(g, g->reflection_perm(t));
}

Element multiply(const Element& x, const Element& y) { return x * y; }
Element invert(const Element& x) { return x.inverse(); }
bool equal(const Element& x, const Element& y) { return x == y; }
const Matrix& matrix_of(const Element& x) { return x.matrix(); }

std::size_t order(const Element& x) {
  return perm_order(x.root_perm());
}

ReflIndex conjugate_reflection(const Element& x, ReflIndex t) {
  return x.image(t).index;
}

namespace {

// Orbit of the fundamental weight of node i under W_J, in coordinates
// c_j = 2(v, alpha_j)/(alpha_j, alpha_j) for j in J. Empty when larger than cap.
std::size_t weight_orbit_size(const Matrix& cartan, const std::vector<std::size_t>& nodes,
                              std::size_t i, std::size_t cap) {
  Vector start(nodes.size(), Scalar(0));
  start[i] = Scalar(1);
  std::set<Vector> seen{start};
  std::vector<Vector> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const Scalar ca = queue[head][a];
      if (ca.is_zero()) continue;
      Vector next = queue[head];
      for (std::size_t b = 0; b < nodes.size(); ++b)
        next[b] -= ca * cartan(nodes[a], nodes[b]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return 0;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::uint64_t parabolic_order(const Matrix& cartan, std::vector<std::size_t> nodes) {
  std::uint64_t order = 1;
  while (!nodes.empty()) {
    std::size_t orbit = 0;
    std::size_t pick = nodes.size();
    for (std::size_t cap = 64; orbit == 0; cap *= 8) {
      for (std::size_t k = nodes.size(); k-- > 0 && orbit == 0;) {
        orbit = weight_orbit_size(cartan, nodes, k, cap);
        pick = k;
      }
    }
    order *= orbit;
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return order;
}

}  // namespace

std::uint64_t group_order(const CoxeterSystem& g) {
  if (!g.has_linear_model()) return 2 * static_cast<std::uint64_t>(g.dihedral_order());
  const std::size_t n = g.rank();
  const Matrix& gram = g.gram();
  Matrix cartan(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cartan(i, j) = Scalar(2) * gram(i, j) / gram(j, j);
  std::vector<std::size_t> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
  return parabolic_order(cartan, nodes);
}

std::vector<Element> enumerate_group(const GroupPtr& g, std::size_t cap) {
  std::vector<Element> elements;
  std::unordered_set<RootPerm, RootPermHash> seen;
  elements.push_back(Element::identity(g));
  seen.insert(elements.front().root_perm());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto s : g->simple_reflection_ids()) {
      RootPerm next = compose(elements[head].root_perm(), g->reflection_perm(s));
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) {
        throw CapExceeded("group " + g->type_name() + " too large for exhaustive mode",
                          "--cap", cap);
      }
      seen.insert(next);
      elements.emplace_back(g, std::move(next));
    }
  }
  return elements;
}

std::vector<unsigned> canonical_s_word(const Element& x) {
  const GroupPtr& g = x.group();
  RootPerm current = x.root_perm();
  std::vector<unsigned> word;
  while (!is_identity_perm(current)) {
    unsigned descent = 0;
    while (!current[g->simple_reflection_ids()[descent]].negative) ++descent;
    word.push_back(descent);
    current = compose(current, g->reflection_perm(g->simple_reflection_ids()[descent]));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::optional<ReflIndex> as_reflection(const Element& x) {
  return x.system().find_reflection(x.root_perm());
}

}  // namespace dualcox
