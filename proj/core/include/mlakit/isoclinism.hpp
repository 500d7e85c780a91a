#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlakit/algebra.hpp"
#include "mlakit/morphism.hpp"
#include "mlakit/structure.hpp"

namespace mlakit {

/// Everything the isoclinism machinery needs to know about one algebra.
struct IsoclinismSide {
  FiniteMLA algebra;
  Subset center;                 // 𝒵(G)
  Quotient central;              // G/𝒵(G)
  Subset commutator;             // ^M[G,G]
  Subalgebra commutator_algebra;  // ^M[G,G] as a standalone algebra
};

std::shared_ptr<const IsoclinismSide> analyse_isoclinism_side(const FiniteMLA& G);

/// One checked entry of the commuting diagram, per pair of coset
/// representatives (g, g') of G/𝒵(G).
struct CertificateEntry {
  Elem g = 0;
  Elem g_prime = 0;
  Elem commutator_image = 0;  // mu([g, g'])
  Elem star_image = 0;        // mu(g * g')
};

/**
 * An isoclinism (lambda, mu) between G and H.
 *
 * lambda acts on the central quotients, mu on the multiplicative commutator
 * subalgebras (both in the local indices of the respective side objects).
 */
struct IsoclinismPair {
  std::shared_ptr<const IsoclinismSide> source;
  std::shared_ptr<const IsoclinismSide> target;
  Morphism lambda;
  Morphism mu;
  std::vector<CertificateEntry> certificate;

  /// Coset of H/𝒵(H) that lambda assigns to the coset of g.
  Elem lambda_coset(Elem g) const { return lambda(source->central.projection(g)); }
  /// Least representative of that coset in H.
  Elem lambda_rep(Elem g) const { return target->central.representatives[lambda_coset(g)]; }
  /// mu on an element of ^M[G,G], as an element of H.
  Elem mu_of(Elem g) const {
    return target->commutator_algebra.parent(mu(source->commutator_algebra.local(g)));
  }
};

/// Why mu could not be derived from lambda.
struct MuConflict {
  Elem element = 0;  // element of ^M[G,G] with two different images
  Elem image_a = 0;
  Elem image_b = 0;
  std::string reason;
};

struct InducedMu {
  std::optional<Morphism> mu;  // present iff well defined and an isomorphism
  std::optional<MuConflict> conflict;
};

/// The mu forced by lambda: mu(g * g') = h * h' and mu([g, g']) = [h, h']
/// where h, h' are the least representatives of the lambda images,
/// extended multiplicatively. Throws NotAnIsomorphism when lambda is not an
/// isomorphism of the central quotients.
InducedMu induced_mu(const Morphism& lambda, const IsoclinismSide& G, const IsoclinismSide& H);

struct PairCheck {
  bool ok = false;
  std::string failed_square;  // "commutator", "star" or "morphisms"
  std::optional<std::pair<Elem, Elem>> witness;
};

/// Exhaustively checks both squares over all element pairs of G and fills
/// the certificate.
PairCheck check_isoclinism_pair(IsoclinismPair& pair);

/// Assembles a pair from explicit maps (quotient-local lambda, commutator-local mu).
IsoclinismPair make_isoclinism_pair(std::shared_ptr<const IsoclinismSide> source,
                                    std::shared_ptr<const IsoclinismSide> target, std::vector<Elem> lambda,
                                    std::vector<Elem> mu);

/// Iterates lambda over the isomorphisms of the central quotients in
/// lexicographic order and returns the first one whose forced mu gives a
/// verified pair.
std::optional<IsoclinismPair> are_isoclinic(std::shared_ptr<const IsoclinismSide> G,
                                            std::shared_ptr<const IsoclinismSide> H);
std::optional<IsoclinismPair> are_isoclinic(const FiniteMLA& G, const FiniteMLA& H);

/// (lambda^-1, mu^-1)
IsoclinismPair invert(const IsoclinismPair& pair);
/// second ∘ first; first.target and second.source must describe the same algebra.
IsoclinismPair compose(const IsoclinismPair& first, const IsoclinismPair& second);

/// 𝒵(G) ⊆ ^M[G,G]
bool is_stem(const FiniteMLA& G);

/// Isoclinism classes as lists of input positions; classes are ordered by
/// their first member and the first member is the representative.
std::vector<std::vector<std::size_t>> partition_by_isoclinism(std::span<const FiniteMLA> catalog);

/// Position of the stem of a class: the first member of minimal order.
/// Throws NoStemFound if that member is not stem, if another member of
/// minimal order is not stem, or if some stem member is not of minimal order.
std::size_t find_stem_in_class(std::span<const FiniteMLA> members);

/// ker(alpha) ∩ ^M[G,G] = {1} and H = Image(alpha) 𝒵(H).
/// Throws NotAHomomorphism.
bool homomorphism_induces_isoclinism(const Morphism& alpha, const FiniteMLA& G, const FiniteMLA& H);

/// The pair induced by alpha: lambda(g𝒵(G)) = alpha(g)𝒵(H), mu = alpha on
/// ^M[G,G]. Empty when either map is not a well-defined isomorphism or the
/// squares fail. Throws NotAHomomorphism.
std::optional<IsoclinismPair> isoclinism_from_homomorphism(const Morphism& alpha, const FiniteMLA& G, const FiniteMLA& H);

/// For isoclinic stems: whether mu restricts to an isomorphism 𝒵(G) -> 𝒵(H).
/// Throws PreconditionViolated if either is not stem or they are not isoclinic.
bool stems_have_isomorphic_centers(const FiniteMLA& G, const FiniteMLA& H);

}  // namespace mlakit
