#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace mlakit {

/// Index of an element inside a finite algebra. Index 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

/// Order caps applied by the different layers.
struct Limits {
  /// Largest group the star-structure search accepts.
  std::size_t enumeration_cap = 8;
  /// Largest order accepted when loading and validating a document (O(n^3)).
  std::size_t validation_cap = 64;
  /// Largest intermediate order a pullback/descendant construction may build.
  std::size_t construction_cap = 256;
};

}  // namespace mlakit
