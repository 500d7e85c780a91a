#pragma once

#include <string>
#include <vector>

#include "mlakit/group.hpp"

namespace mlakit {

/// Z_n = <g>, element i is g^i.
GroupTable cyclic_group(std::size_t n);

/// (Z_2)^k; element index bits are the exponents of the generators.
/// Generators are named a, b for k = 2, x, y, z for k = 3 and a, b, c, d otherwise.
GroupTable elementary_abelian_group(std::size_t k);

/// Dihedral group of order 2m = <x, y | x^2 = y^m = 1, xyx = y^-1>.
/// Element y^i x^a has index i + m*a, so y is 1 and x is m.
GroupTable dihedral_group(std::size_t m);

/// Dicyclic group of order 4m = <x, y | x^(2m) = 1, y^2 = x^m, yxy^-1 = x^-1>.
/// Element x^i y^j has index i + 2m*j. dicyclic_group(2) is the quaternion group Q8.
GroupTable dicyclic_group(std::size_t m);

/// Direct product with labels joined as "(g,h)".
GroupTable product_group(const GroupTable& a, const GroupTable& b);

struct NamedGroup {
  std::string name;
  GroupTable group;
};

/// The shipped fixture groups of order <= max_order (at most 16): cyclic,
/// elementary abelian, other small abelian products, dihedral, quaternion
/// and S3. One entry per isomorphism class, sorted by order then name.
std::vector<NamedGroup> group_library(std::size_t max_order = 16);

/// Looks a group up by its library name ("Z4", "V4", "Q8", "S3", ...).
/// Throws ParseError for an unknown name.
GroupTable library_group(const std::string& name);

}  // namespace mlakit
