#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mlakit/types.hpp"

namespace mlakit {

class FiniteMLA;
class GroupTable;

/// A total map between the element sets of two algebras, with its
/// homomorphism status computed by `check_homomorphism`.
struct Morphism {
  std::vector<Elem> map;
  bool is_hom = false;
  bool is_injective = false;
  bool is_surjective = false;
  /// First pair (g, h) where mul or star is not preserved.
  std::optional<std::pair<Elem, Elem>> witness;

  Elem operator()(Elem g) const { return map[g]; }
  bool is_isomorphism() const { return is_hom && is_injective && is_surjective; }
};

/// Computes all flags for `map : G -> H`. Never throws for a map of the
/// right length; a non-homomorphism carries a witness pair.
Morphism check_homomorphism(std::vector<Elem> map, const FiniteMLA& G, const FiniteMLA& H);

/// Same as check_homomorphism but only the group operation is considered.
Morphism check_group_homomorphism(std::vector<Elem> map, const GroupTable& G, const GroupTable& H);

/// (second ∘ first). Flags are recomputed against the given algebras.
Morphism compose(const Morphism& first, const Morphism& second, const FiniteMLA& source, const FiniteMLA& target);

/// Inverse of a bijective morphism.
Morphism inverse(const Morphism& f, const FiniteMLA& source, const FiniteMLA& target);

Morphism identity_morphism(const FiniteMLA& G);

}  // namespace mlakit
