#pragma once

#include <vector>

#include "mlakit/algebra.hpp"
#include "mlakit/morphism.hpp"
#include "mlakit/subset.hpp"

namespace mlakit {

// Closures. All of them are fixpoint loops over the Cayley tables.

/// Smallest subgroup containing `s` (the empty set closes to {0}).
Subset subgroup_closure(const GroupTable& G, const Subset& s);
inline Subset subgroup_closure(const FiniteMLA& G, const Subset& s) { return subgroup_closure(G.group(), s); }

/// Smallest subgroup containing `s` that is also closed under star.
Subset subalgebra_closure(const FiniteMLA& G, const Subset& s);

/// Smallest ideal containing `s`: normal, and absorbing g*h and h*g for g in G.
Subset ideal_closure(const FiniteMLA& G, const Subset& s);

// Predicates.

bool is_subgroup(const GroupTable& G, const Subset& s);
bool is_normal_subgroup(const GroupTable& G, const Subset& s);
bool is_subalgebra(const FiniteMLA& G, const Subset& s);
bool is_ideal(const FiniteMLA& G, const Subset& s);
/// Abelian group with trivial star; equivalently the multiplicative commutator is {0}.
bool is_abelian_trivial(const FiniteMLA& G);

// Structural subsets.

/// [G,G]: generated by all g h g^-1 h^-1.
Subset derived_subgroup(const FiniteMLA& G);
/// G*G: generated by all star values.
Subset star_subgroup(const FiniteMLA& G);
/// ^M[G,G] = [G,G](G*G). Throws InternalError if the result is not an ideal.
Subset m_commutator_ideal(const FiniteMLA& G);
/// Z(G)
Subset center(const FiniteMLA& G);
/// LZ(G): elements whose star with everything (either side) is trivial.
Subset lie_center(const FiniteMLA& G);
/// Z(G) ∩ LZ(G). Throws InternalError if the result is not an ideal.
Subset ml_center(const FiniteMLA& G);

/// {ab : a in A, b in B}
Subset product_set(const GroupTable& G, const Subset& a, const Subset& b);

/// Cosets of a normal subgroup, indexed by increasing least representative
/// (the identity coset is 0).
struct CosetPartition {
  std::vector<Elem> coset_of;         // element -> coset index
  std::vector<Elem> representatives;  // coset index -> least element
};
CosetPartition left_cosets(const GroupTable& G, const Subset& normal);

/// G/I with its projection. Coset representatives are least indices.
struct Quotient {
  FiniteMLA algebra;
  Morphism projection;  // G -> algebra
  std::vector<Elem> representatives;
};

/// Throws NotAnIdeal.
Quotient quotient(const FiniteMLA& G, const Subset& ideal);

/// A subalgebra materialised as a standalone algebra. Element i of `algebra`
/// is `embedding[i]` in the parent; members keep increasing parent order.
struct Subalgebra {
  FiniteMLA algebra;
  std::vector<Elem> embedding;
  std::vector<Elem> index_of;  // parent element -> local index, or kNoElem

  Elem local(Elem parent_elem) const { return index_of[parent_elem]; }
  Elem parent(Elem local_elem) const { return embedding[local_elem]; }
};

/// Throws NotASubalgebra.
Subalgebra make_subalgebra(const FiniteMLA& G, const Subset& s);

/// Component-wise product; element (g, h) has index g*|H| + h.
FiniteMLA direct_product(const FiniteMLA& G, const FiniteMLA& H);
GroupTable direct_product(const GroupTable& G, const GroupTable& H);

/// Index of (g, h) inside direct_product(G, H).
inline Elem pair_index(const FiniteMLA& H, Elem g, Elem h) { return static_cast<Elem>(g * H.order() + h); }

/// Every ideal of G, sorted. Built as the join-closure of principal ideals.
std::vector<Subset> all_ideals(const FiniteMLA& G);
/// Every subalgebra of G, sorted.
std::vector<Subset> all_subalgebras(const FiniteMLA& G);

}  // namespace mlakit
