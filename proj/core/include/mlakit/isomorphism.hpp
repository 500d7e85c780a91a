#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mlakit/algebra.hpp"
#include "mlakit/morphism.hpp"

namespace mlakit {

/// Greedy generating sequence: each entry is the least element outside the
/// subgroup generated by the earlier ones. Every element smaller than the
/// k-th generator lies in the subgroup generated by the first k - 1.
std::vector<Elem> generating_sequence(const GroupTable& G);

enum class MapKind { kHomomorphism, kIsomorphism };

/// Calls `visit` with every group homomorphism (or isomorphism) G -> H as a
/// map vector, in lexicographic order of the vectors. Stops when `visit`
/// returns false.
void for_each_group_map(const GroupTable& G, const GroupTable& H, MapKind kind,
                        const std::function<bool(const std::vector<Elem>&)>& visit);

/// Same for multiplicative Lie algebra maps (both operations preserved).
void for_each_algebra_map(const FiniteMLA& G, const FiniteMLA& H, MapKind kind,
                          const std::function<bool(const std::vector<Elem>&)>& visit);

/// Up to `limit` isomorphisms G -> H in lexicographic order. Empty iff the
/// algebras are not isomorphic (when limit > 0).
std::vector<Morphism> find_isomorphisms(const FiniteMLA& G, const FiniteMLA& H, std::size_t limit);

bool are_isomorphic(const FiniteMLA& G, const FiniteMLA& H);

/// Hom(G, H) in lexicographic order.
std::vector<Morphism> all_homomorphisms(const FiniteMLA& G, const FiniteMLA& H);

}  // namespace mlakit
