#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mlakit/isoclinism.hpp"
#include "mlakit/types.hpp"

namespace mlakit {

/// K = {(g, h) : lambda(g𝒵(G)) = h𝒵(H)} inside G x H.
struct PullbackResult {
  FiniteMLA K;
  std::vector<std::pair<Elem, Elem>> coordinates;  // K element -> (g, h)
  Subset ZG;                                       // {(g, 1) : g in 𝒵(G)}
  Subset ZH;                                       // {(1, h) : h in 𝒵(H)}
  Morphism proj_G;
  Morphism proj_H;

  Elem index_of(Elem g, Elem h) const;
};

/// Builds K and asserts: K is a subalgebra of G x H, ZG and ZH are ideals,
/// the projections are surjective with kernels ZH and ZG, K/ZH ≅ G,
/// K/ZG ≅ H (by isomorphism search) and G ~ K ~ H (by the decision
/// procedure). Throws ConstructionFailure, OrderCapExceeded, or
/// PreconditionViolated when the pair does not belong to G and H.
PullbackResult isoclinism_pullback(const FiniteMLA& G, const FiniteMLA& H, const IsoclinismPair& pair,
                                   const Limits& limits = {});

/// T = K/ZH x K/^M[K,K], L = {((g,1)ZH, (g,1)^M[K,K]) : g in 𝒵(G)},
/// Ktilde = T/L with the embeddings gammaG, gammaH.
struct DescendantResult {
  PullbackResult pullback;
  FiniteMLA T;
  Subset L;
  Subset T_commutator;  // ^M[T,T]
  FiniteMLA Ktilde;
  Morphism gammaG;
  Morphism gammaH;
  Subset KG;  // gammaG(G)
  Subset KH;  // gammaH(H)
};

/// Asserts: L is an ideal of T with ^M[T,T] ∩ L = {1}; gammaG and gammaH
/// are injective homomorphisms whose images are isomorphic to G and H;
/// KG 𝒵(Ktilde) = Ktilde = KH 𝒵(Ktilde); and G, H, KG, KH are all
/// isoclinic to Ktilde. Throws ConstructionFailure or OrderCapExceeded.
DescendantResult common_descendant(const FiniteMLA& G, const FiniteMLA& H, const IsoclinismPair& pair,
                                   const Limits& limits = {});

struct QuotientIsoclinismReport {
  bool quotients_isoclinic = false;    // G/I ~ G/(I ∩ ^M[G,G])
  bool trivial_intersection = false;   // I ∩ ^M[G,G] = {1}
  bool isoclinic_to_quotient = false;  // G ~ G/I
  bool passed() const { return quotients_isoclinic && trivial_intersection == isoclinic_to_quotient; }
};

/// Throws NotAnIdeal.
QuotientIsoclinismReport quotient_isoclinism_check(const FiniteMLA& G, const Subset& ideal);

struct HomCorrespondenceReport {
  std::size_t hom_count = 0;           // |Hom(A, Ã)|
  std::size_t quotient_hom_count = 0;  // |Hom(A/^M[A,A], Ã)|
  bool composition_injective = false;
  bool composition_surjective = false;
  bool passed() const { return hom_count == quotient_hom_count && composition_injective && composition_surjective; }
};

/// Throws PreconditionViolated when Ã is not abelian with trivial star.
HomCorrespondenceReport hom_correspondence_check(const FiniteMLA& A, const FiniteMLA& Atilde);

struct NaturalityReport {
  std::size_t taus_checked = 0;
  bool functor_well_defined = false;  // F(f) respects the cosets
  bool commutes = false;
  bool passed() const { return functor_well_defined && commutes; }
};

/// For f : Mt -> M and g : A -> At (A, At abelian with trivial star),
/// compares g ∘ tau ∘ F(f) ∘ nu' with g ∘ tau ∘ nu ∘ f for every
/// tau in Hom(M/^M[M,M], A). Throws PreconditionViolated.
NaturalityReport adjunction_naturality_check(const FiniteMLA& M, const FiniteMLA& Mt, const Morphism& f,
                                             const FiniteMLA& A, const FiniteMLA& At, const Morphism& g);

/// The explicit pair S ~ S𝒵(G): lambda(s𝒵(S)) = s𝒵(S𝒵(G)) and mu the
/// identity on ^M[S,S]. Empty if the pair does not verify.
/// Throws NotASubalgebra.
std::optional<IsoclinismPair> center_expansion_pair(const FiniteMLA& G, const Subset& S);

struct CenterExpansionReport {
  bool expansion_pair_ok = false;   // S ~ S𝒵(G) by the explicit pair
  bool expansion_is_whole = false;  // S𝒵(G) = G
  bool isoclinic_to_parent = false;  // S ~ G by the decision procedure
  bool passed() const { return expansion_pair_ok && expansion_is_whole == isoclinic_to_parent; }
};

/// Throws NotASubalgebra.
CenterExpansionReport subalgebra_center_expansion_check(const FiniteMLA& G, const Subset& S);

/// {"construction", "inputs", "passed", "witness"} report document.
nlohmann::json verifier_report(const std::string& construction, const std::vector<std::string>& input_digests,
                               bool passed, const nlohmann::json& witness = nullptr);

}  // namespace mlakit
