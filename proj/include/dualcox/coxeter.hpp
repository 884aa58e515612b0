#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dualcox/algebra.hpp"
#include "dualcox/errors.hpp"

namespace dualcox {

enum class Family { A, B, D, E, F, G, H, I };

/// One irreducible factor of a finite Coxeter type. For I2(m) `rank` is 2 and
/// `param` holds m; otherwise `param` is 0.
struct Component {
  Family family = Family::A;
  unsigned rank = 1;
  unsigned param = 0;

  std::string name() const;
  friend auto operator<=>(const Component&, const Component&) = default;
};

/// Finite Coxeter type as a product of irreducible components, order-normalized.
class CoxeterDescriptor {
 public:
  CoxeterDescriptor() = default;
  explicit CoxeterDescriptor(std::vector<Component> components);

  /// Parses "A4", "D4", "B2xB2", "I2(7)". Throws UsageError.
  static CoxeterDescriptor parse(std::string_view text);

  const std::vector<Component>& components() const { return components_; }
  unsigned rank() const;
  std::string name() const;

  friend bool operator==(const CoxeterDescriptor&, const CoxeterDescriptor&) = default;

 private:
  std::vector<Component> components_;
};

using ReflIndex = std::uint32_t;

/// Image of a positive root under a group element: w(alpha_i) = ±alpha_index.
struct SignedRoot {
  ReflIndex index = 0;
  bool negative = false;

  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

using RootPerm = std::vector<SignedRoot>;

struct RootPermHash {
  std::size_t operator()(const RootPerm& p) const noexcept;
};

/// Ordered tuple of reflections (t_1, ..., t_k), by positive-root index.
struct ReflWord {
  std::vector<ReflIndex> letters;

  ReflWord() = default;
  ReflWord(std::initializer_list<ReflIndex> l) : letters(l) {}
  explicit ReflWord(std::vector<ReflIndex> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  ReflIndex operator[](std::size_t i) const { return letters[i]; }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  friend auto operator<=>(const ReflWord&, const ReflWord&) = default;
};

struct ReflWordHash {
  std::size_t operator()(const ReflWord& w) const noexcept;
};

std::string to_string(const ReflWord& w);

class CoxeterSystem;
using GroupPtr = std::shared_ptr<const CoxeterSystem>;

/// Immutable finite Coxeter system: positive roots, reflections and the
/// Coxeter matrix.
///
/// Roots are stored in simple-root coordinates, where the matrix of every
/// element is n x n. Standard ("ambient") coordinates are kept alongside for
/// output and the permutation models. Positive roots are indexed by height,
/// ties broken by descending lexicographic order on simple-root coordinates,
/// so reflection k < rank is always the simple reflection s_k.
///
/// I2(m) with m outside {3,4,5,6} has no linear model; its roots are handled
/// combinatorially as the 2m directions k*pi/m.
class CoxeterSystem {
 public:
  const CoxeterDescriptor& descriptor() const { return descriptor_; }
  std::string type_name() const { return descriptor_.name(); }
  std::size_t rank() const { return rank_; }
  std::size_t reflection_count() const { return reflections_.size(); }
  bool has_linear_model() const { return linear_; }

  /// Simple-root coordinates of alpha_t. Throws NoLinearModel.
  const Vector& root(ReflIndex t) const;
  /// Standard coordinates of alpha_t. Throws NoLinearModel.
  const Vector& ambient_root(ReflIndex t) const;
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Gram matrix of the simple roots. Throws NoLinearModel.
  const Matrix& gram() const;
  /// Whether the ambient coordinates carry the standard dot product.
  bool ambient_is_euclidean() const { return ambient_euclidean_; }

  const std::vector<ReflIndex>& simple_reflection_ids() const { return simple_ids_; }
  /// Action of reflection t on the positive roots.
  const RootPerm& reflection_perm(ReflIndex t) const { return reflections_.at(t); }
  /// m(s_i, s_j).
  unsigned coxeter_matrix(std::size_t i, std::size_t j) const;
  /// Order of the product of reflections t and u.
  unsigned product_order(ReflIndex t, ReflIndex u) const;
  /// Whether reflections t and u commute.
  bool commute(ReflIndex t, ReflIndex u) const;

  /// Index of the positive root ±v (simple-root coordinates), if any.
  std::optional<SignedRoot> find_root(const Vector& v) const;
  /// Index of the positive root ±v (standard coordinates), if any.
  std::optional<SignedRoot> find_ambient_root(const Vector& v) const;
  /// Reflection index whose root permutation equals p, if any.
  std::optional<ReflIndex> find_reflection(const RootPerm& p) const;

  /// True iff alpha_t is in the linear span of {alpha_g : g in gens}.
  bool root_in_span(std::span<const ReflIndex> gens, ReflIndex t) const;

  /// Dihedral parameter m when the combinatorial model is in use, else 0.
  unsigned dihedral_order() const { return dihedral_m_; }

 private:
  friend GroupPtr build_group(const CoxeterDescriptor& d);
  CoxeterSystem() = default;

  CoxeterDescriptor descriptor_;
  std::size_t rank_ = 0;
  bool linear_ = true;
  bool ambient_euclidean_ = true;
  unsigned dihedral_m_ = 0;
  std::size_t ambient_dim_ = 0;
  Matrix gram_;
  std::vector<Vector> roots_;
  std::vector<Vector> ambient_roots_;
  std::vector<RootPerm> reflections_;
  std::vector<ReflIndex> simple_ids_;
  std::vector<unsigned> coxeter_matrix_;
  std::vector<unsigned> product_orders_;  // |T| x |T|
  std::unordered_map<std::string, ReflIndex> root_lookup_;
  std::unordered_map<std::string, ReflIndex> ambient_lookup_;
  std::unordered_map<RootPerm, ReflIndex, RootPermHash> reflection_lookup_;
};

/// Builds the root system for a finite type. Throws UsageError for
/// unsupported input and DomainError for unsupported products.
GroupPtr build_group(const CoxeterDescriptor& d);
GroupPtr build_group(std::string_view type);

struct MovData;

namespace detail {
struct ElementCache {
  std::once_flag matrix_once;
  std::optional<Matrix> matrix;
  std::once_flag mov_once;
  std::shared_ptr<const MovData> mov;
};
}  // namespace detail

/// Group element stored as a signed permutation of the positive roots.
class Element {
 public:
  Element(GroupPtr group, RootPerm perm);
  static Element identity(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const CoxeterSystem& system() const { return *group_; }
  const RootPerm& root_perm() const { return perm_; }
  SignedRoot image(ReflIndex t) const { return perm_[t]; }
  bool is_identity() const;

  Element inverse() const;
  /// Exact matrix in the simple-root basis: column j is w(alpha_j).
  /// Throws NoLinearModel for the dihedral combinatorial model.
  const Matrix& matrix() const;

  std::size_t hash() const { return RootPermHash{}(perm_); }
  detail::ElementCache& cache() const { return *cache_; }

  friend Element operator*(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y);

 private:
  GroupPtr group_;
  RootPerm perm_;
  std::shared_ptr<detail::ElementCache> cache_;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept { return x.hash(); }
};

Element element_from_simple_word(const GroupPtr& g, std::span<const unsigned> word);
Element element_from_refl_word(const GroupPtr& g, const ReflWord& w);
Element reflection_element(const GroupPtr& g, ReflIndex t);

Element multiply(const Element& x, const Element& y);
Element invert(const Element& x);
bool equal(const Element& x, const Element& y);
/// Least k >= 1 with x^k = 1.
std::size_t order(const Element& x);
const Matrix& matrix_of(const Element& x);

/// Index of x t x^{-1}, the reflection whose root is ±x(alpha_t).
ReflIndex conjugate_reflection(const Element& x, ReflIndex t);

/// |W| from orbit sizes of fundamental weights, |W_J| = |W_J . w_i| |W_{J - i}|,
/// without enumerating W.
std::uint64_t group_order(const CoxeterSystem& g);

/// Every element once, by breadth-first search on the Cayley graph over S.
/// Throws CapExceeded when |W| > cap.
std::vector<Element> enumerate_group(const GroupPtr& g,
                                     std::size_t cap = kDefaultElementCap);

/// Reduced S-word by repeatedly stripping the smallest right descent.
std::vector<unsigned> canonical_s_word(const Element& x);

/// The reflection index of x when x is a reflection.
std::optional<ReflIndex> as_reflection(const Element& x);

}  // namespace dualcox
