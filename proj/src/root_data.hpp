#pragma once

#include <vector>

#include "dualcox/algebra.hpp"
#include "dualcox/coxeter.hpp"

namespace dualcox::detail {

/// Simple roots of one irreducible component in its standard coordinates.
struct ComponentRoots {
  std::vector<Vector> simple;  // ambient coordinates
  std::size_t ambient_dim = 0;
  Matrix gram;                 // Gram matrix of the simple roots
  bool euclidean = true;       // ambient coordinates use the dot product
};

ComponentRoots component_roots(const Component& c);

/// Whether I2(m) falls back to the combinatorial dihedral model.
inline bool is_combinatorial_dihedral(const Component& c) {
  return c.family == Family::I && c.param != 5;
}

}  // namespace dualcox::detail
