#include "mlakit/isoclinism.hpp"

#include <algorithm>

#include "mlakit/errors.hpp"
#include "mlakit/isomorphism.hpp"

namespace mlakit {

std::shared_ptr<const IsoclinismSide> analyse_isoclinism_side(const FiniteMLA& G) {
  auto side = std::make_shared<IsoclinismSide>();
  side->algebra = G;
  side->center = ml_center(G);
  side->central = quotient(G, side->center);
  side->commutator = m_commutator_ideal(G);
  side->commutator_algebra = make_subalgebra(G, side->commutator);
  return side;
}

InducedMu induced_mu(const Morphism& lambda, const IsoclinismSide& G, const IsoclinismSide& H) {
  const FiniteMLA& QG = G.central.algebra;
  const FiniteMLA& QH = H.central.algebra;
  if (lambda.map.size() != QG.order() || QG.order() != QH.order() ||
      !check_homomorphism(lambda.map, QG, QH).is_isomorphism())
    throw NotAnIsomorphism("lambda is not an isomorphism of the central quotients");

  const FiniteMLA& A = G.algebra;
  const FiniteMLA& B = H.algebra;
  InducedMu result;

  // Generator images forced by the two squares.
  std::vector<Elem> forced(A.order(), kNoElem);
  std::vector<Elem> gens;
  auto force = [&](Elem s, Elem t) {
    if (forced[s] == kNoElem) {
      forced[s] = t;
      gens.push_back(s);
      return true;
    }
    if (forced[s] == t) return true;
    result.conflict = MuConflict{s, forced[s], t, "two generator factorizations disagree"};
    return false;
  };
  const auto& reps = G.central.representatives;
  for (Elem a : reps)
    for (Elem b : reps) {
      const Elem ha = H.central.representatives[lambda(G.central.projection(a))];
      const Elem hb = H.central.representatives[lambda(G.central.projection(b))];
      if (!force(A.star(a, b), B.star(ha, hb)) || !force(A.commutator(a, b), B.commutator(ha, hb))) return result;
    }
  if (forced[0] != kNoElem && forced[0] != 0) {
    result.conflict = MuConflict{0, 0, forced[0], "identity is forced to a non-identity element"};
    return result;
  }

  // Multiplicative extension along the Cayley graph of the generators.
  std::vector<Elem> image(A.order(), kNoElem);
  image[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (Elem s : gens) {
      const Elem y = A.mul(x, s);
      const Elem v = B.mul(image[x], forced[s]);
      if (image[y] == kNoElem) {
        image[y] = v;
        queue.push_back(y);
      } else if (image[y] != v) {
        result.conflict = MuConflict{y, image[y], v, "two factorizations give different images"};
        return result;
      }
    }
  }

  const auto& MG = G.commutator_algebra;
  const auto& MH = H.commutator_algebra;
  if (queue.size() != MG.embedding.size())
    throw InternalError("forced generators do not generate the multiplicative commutator");
  std::vector<Elem> local(MG.embedding.size());
  for (std::size_t i = 0; i < local.size(); ++i) {
    const Elem v = image[MG.embedding[i]];
    if (MH.local(v) == kNoElem) {
      result.conflict = MuConflict{MG.embedding[i], v, v, "image lies outside the target commutator"};
      return result;
    }
    local[i] = MH.local(v);
  }
  if (MG.embedding.size() != MH.embedding.size()) {
    result.conflict = MuConflict{0, 0, 0, "multiplicative commutators have different orders"};
    return result;
  }
  Morphism mu = check_homomorphism(std::move(local), MG.algebra, MH.algebra);
  if (!mu.is_isomorphism()) {
    const auto w = mu.witness.value_or(std::pair<Elem, Elem>{0, 0});
    result.conflict = MuConflict{MG.parent(w.first), 0, 0, "forced map is not an isomorphism"};
    return result;
  }
  result.mu = std::move(mu);
  return result;
}

PairCheck check_isoclinism_pair(IsoclinismPair& pair) {
  PairCheck out;
  pair.certificate.clear();
  const IsoclinismSide& S = *pair.source;
  const IsoclinismSide& T = *pair.target;
  if (pair.lambda.map.size() != S.central.algebra.order() || pair.mu.map.size() != S.commutator.size() ||
      S.central.algebra.order() != T.central.algebra.order() || S.commutator.size() != T.commutator.size() ||
      !check_homomorphism(pair.lambda.map, S.central.algebra, T.central.algebra).is_isomorphism() ||
      !check_homomorphism(pair.mu.map, S.commutator_algebra.algebra, T.commutator_algebra.algebra).is_isomorphism()) {
    out.failed_square = "morphisms";
    return out;
  }
  const FiniteMLA& G = S.algebra;
  const FiniteMLA& H = T.algebra;
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem gp = 0; gp < G.order(); ++gp) {
      const Elem h = pair.lambda_rep(g), hp = pair.lambda_rep(gp);
      if (pair.mu_of(G.commutator(g, gp)) != H.commutator(h, hp)) {
        out.failed_square = "commutator";
        out.witness = {g, gp};
        return out;
      }
      if (pair.mu_of(G.star(g, gp)) != H.star(h, hp)) {
        out.failed_square = "star";
        out.witness = {g, gp};
        return out;
      }
    }
  for (Elem a : S.central.representatives)
    for (Elem b : S.central.representatives)
      pair.certificate.push_back({a, b, pair.mu_of(G.commutator(a, b)), pair.mu_of(G.star(a, b))});
  out.ok = true;
  return out;
}

IsoclinismPair make_isoclinism_pair(std::shared_ptr<const IsoclinismSide> source,
                                    std::shared_ptr<const IsoclinismSide> target, std::vector<Elem> lambda,
                                    std::vector<Elem> mu) {
  IsoclinismPair p;
  p.lambda = check_homomorphism(std::move(lambda), source->central.algebra, target->central.algebra);
  p.mu = check_homomorphism(std::move(mu), source->commutator_algebra.algebra, target->commutator_algebra.algebra);
  p.source = std::move(source);
  p.target = std::move(target);
  return p;
}

std::optional<IsoclinismPair> are_isoclinic(std::shared_ptr<const IsoclinismSide> G,
                                            std::shared_ptr<const IsoclinismSide> H) {
  if (G->central.algebra.order() != H->central.algebra.order() || G->commutator.size() != H->commutator.size())
    return std::nullopt;
  std::optional<IsoclinismPair> found;
  for_each_algebra_map(G->central.algebra, H->central.algebra, MapKind::kIsomorphism,
                       [&](const std::vector<Elem>& lambda_map) {
                         Morphism lambda = check_homomorphism(lambda_map, G->central.algebra, H->central.algebra);
                         InducedMu mu = induced_mu(lambda, *G, *H);
                         if (!mu.mu) return true;
                         IsoclinismPair pair{G, H, std::move(lambda), std::move(*mu.mu), {}};
                         if (!check_isoclinism_pair(pair).ok) return true;
                         found = std::move(pair);
                         return false;
                       });
  return found;
}

std::optional<IsoclinismPair> are_isoclinic(const FiniteMLA& G, const FiniteMLA& H) {
  return are_isoclinic(analyse_isoclinism_side(G), analyse_isoclinism_side(H));
}

IsoclinismPair invert(const IsoclinismPair& pair) {
  IsoclinismPair inv;
  inv.source = pair.target;
  inv.target = pair.source;
  inv.lambda = inverse(pair.lambda, pair.source->central.algebra, pair.target->central.algebra);
  inv.mu = inverse(pair.mu, pair.source->commutator_algebra.algebra, pair.target->commutator_algebra.algebra);
  check_isoclinism_pair(inv);
  return inv;
}

IsoclinismPair compose(const IsoclinismPair& first, const IsoclinismPair& second) {
  if (!(first.target->algebra == second.source->algebra))
    throw PreconditionViolated("pairs do not share the middle algebra");
  IsoclinismPair c;
  c.source = first.source;
  c.target = second.target;
  c.lambda = compose(first.lambda, second.lambda, first.source->central.algebra, second.target->central.algebra);
  c.mu = compose(first.mu, second.mu, first.source->commutator_algebra.algebra,
                 second.target->commutator_algebra.algebra);
  check_isoclinism_pair(c);
  return c;
}

bool is_stem(const FiniteMLA& G) { return ml_center(G).is_subset_of(m_commutator_ideal(G)); }

std::vector<std::vector<std::size_t>> partition_by_isoclinism(std::span<const FiniteMLA> catalog) {
  std::vector<std::shared_ptr<const IsoclinismSide>> sides;
  sides.reserve(catalog.size());
  for (const auto& G : catalog) sides.push_back(analyse_isoclinism_side(G));
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (are_isoclinic(sides[cls.front()], sides[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

std::size_t find_stem_in_class(std::span<const FiniteMLA> members) {
  if (members.empty()) throw NoStemFound("empty class");
  std::size_t min_order = members.front().order();
  for (const auto& m : members) min_order = std::min(min_order, m.order());
  std::size_t stem = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const bool minimal = members[i].order() == min_order;
    const bool stem_i = is_stem(members[i]);
    if (minimal != stem_i)
      throw NoStemFound("member " + std::to_string(i) + (minimal ? " has minimal order but is not stem"
                                                                 : " is stem but not of minimal order"));
    if (minimal && stem == members.size()) stem = i;
  }
  return stem;
}

bool homomorphism_induces_isoclinism(const Morphism& alpha, const FiniteMLA& G, const FiniteMLA& H) {
  if (!check_homomorphism(alpha.map, G, H).is_hom) throw NotAHomomorphism("alpha does not preserve both operations");
  const Subset m = m_commutator_ideal(G);
  for (Elem g : m.members())
    if (g != 0 && alpha(g) == 0) return false;
  Subset image(H.order());
  for (Elem v : alpha.map) image.insert(v);
  return product_set(H.group(), image, ml_center(H)) == Subset::full(H.order());
}

std::optional<IsoclinismPair> isoclinism_from_homomorphism(const Morphism& alpha, const FiniteMLA& G,
                                                           const FiniteMLA& H) {
  if (!check_homomorphism(alpha.map, G, H).is_hom) throw NotAHomomorphism("alpha does not preserve both operations");
  auto S = analyse_isoclinism_side(G);
  auto T = analyse_isoclinism_side(H);
  if (S->central.algebra.order() != T->central.algebra.order() || S->commutator.size() != T->commutator.size())
    return std::nullopt;
  std::vector<Elem> lambda(S->central.algebra.order(), kNoElem);
  for (Elem g = 0; g < G.order(); ++g) {
    const Elem c = S->central.projection(g);
    const Elem v = T->central.projection(alpha(g));
    if (lambda[c] == kNoElem)
      lambda[c] = v;
    else if (lambda[c] != v)
      return std::nullopt;
  }
  std::vector<Elem> mu(S->commutator_algebra.embedding.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Elem v = T->commutator_algebra.local(alpha(S->commutator_algebra.embedding[i]));
    if (v == kNoElem) return std::nullopt;
    mu[i] = v;
  }
  IsoclinismPair pair = make_isoclinism_pair(S, T, std::move(lambda), std::move(mu));
  if (!check_isoclinism_pair(pair).ok) return std::nullopt;
  return pair;
}

bool stems_have_isomorphic_centers(const FiniteMLA& G, const FiniteMLA& H) {
  if (!is_stem(G) || !is_stem(H)) throw PreconditionViolated("both algebras must be stem");
  auto pair = are_isoclinic(G, H);
  if (!pair) throw PreconditionViolated("algebras are not isoclinic");
  const Subset& zg = pair->source->center;
  const Subset& zh = pair->target->center;
  if (zg.size() != zh.size()) return false;
  Subset image(H.order());
  for (Elem z : zg.members()) {
    const Elem v = pair->mu_of(z);
    if (!zh.contains(v)) return false;
    image.insert(v);
  }
  return image == zh;
}

}  // namespace mlakit
