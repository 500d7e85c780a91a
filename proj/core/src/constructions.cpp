#include "mlakit/constructions.hpp"

#include <map>
#include <set>

#include "mlakit/errors.hpp"
#include "mlakit/isomorphism.hpp"
#include "mlakit/validation.hpp"

namespace mlakit {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw ConstructionFailure(what);
}

void check_cap(std::size_t order, const Limits& limits, const char* what) {
  if (order > limits.construction_cap)
    throw OrderCapExceeded(std::string(what) + " would have order " + std::to_string(order) +
                           ", above the construction cap " + std::to_string(limits.construction_cap));
}

Subset image_of(const Morphism& m, std::size_t universe) {
  Subset s(universe);
  for (Elem v : m.map) s.insert(v);
  return s;
}

Subset kernel_of(const Morphism& m) {
  Subset s(m.map.size());
  for (Elem g = 0; g < m.map.size(); ++g)
    if (m.map[g] == 0) s.insert(g);
  return s;
}

}  // namespace

Elem PullbackResult::index_of(Elem g, Elem h) const {
  for (Elem i = 0; i < coordinates.size(); ++i)
    if (coordinates[i] == std::pair<Elem, Elem>{g, h}) return i;
  return kNoElem;
}

PullbackResult isoclinism_pullback(const FiniteMLA& G, const FiniteMLA& H, const IsoclinismPair& pair,
                                   const Limits& limits) {
  if (!(pair.source->algebra == G) || !(pair.target->algebra == H))
    throw PreconditionViolated("isoclinism pair does not connect the given algebras");
  const std::size_t order = G.order() * pair.target->center.size();
  check_cap(order, limits, "pullback");

  PullbackResult r;
  const std::size_t nh = H.order();
  std::vector<Elem> local(G.order() * nh, kNoElem);
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < nh; ++h)
      if (pair.lambda_coset(g) == pair.target->central.projection(h)) {
        local[g * nh + h] = static_cast<Elem>(r.coordinates.size());
        r.coordinates.emplace_back(g, h);
      }
  const std::size_t m = r.coordinates.size();
  require(m == order, "pullback has unexpected order");

  std::vector<Elem> mul(m * m), star(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    const auto [g1, h1] = r.coordinates[a];
    labels.push_back("(" + G.label(g1) + "," + H.label(h1) + ")");
    for (std::size_t b = 0; b < m; ++b) {
      const auto [g2, h2] = r.coordinates[b];
      const Elem p = local[G.mul(g1, g2) * nh + H.mul(h1, h2)];
      const Elem s = local[G.star(g1, g2) * nh + H.star(h1, h2)];
      require(p != kNoElem && s != kNoElem, "pullback is not closed in G x H");
      mul[a * m + b] = p;
      star[a * m + b] = s;
    }
  }
  GroupTable KG = GroupTable::trusted(std::move(mul), m, std::move(labels));
  require(check_mla_axioms(KG, star).ok(), "pullback fails the algebra axioms");
  r.K = FiniteMLA::trusted(std::move(KG), std::move(star));

  r.ZG = Subset(m);
  r.ZH = Subset(m);
  for (Elem z : pair.source->center.members()) r.ZG.insert(local[z * nh]);
  for (Elem z : pair.target->center.members()) r.ZH.insert(local[z]);
  require(is_ideal(r.K, r.ZG), "ZG is not an ideal of K");
  require(is_ideal(r.K, r.ZH), "ZH is not an ideal of K");

  std::vector<Elem> pg(m), ph(m);
  for (std::size_t i = 0; i < m; ++i) {
    pg[i] = r.coordinates[i].first;
    ph[i] = r.coordinates[i].second;
  }
  r.proj_G = check_homomorphism(std::move(pg), r.K, G);
  r.proj_H = check_homomorphism(std::move(ph), r.K, H);
  require(r.proj_G.is_hom && r.proj_G.is_surjective, "projection to G is not a surjective homomorphism");
  require(r.proj_H.is_hom && r.proj_H.is_surjective, "projection to H is not a surjective homomorphism");
  require(kernel_of(r.proj_G) == r.ZH, "kernel of the projection to G is not ZH");
  require(kernel_of(r.proj_H) == r.ZG, "kernel of the projection to H is not ZG");

  require(are_isomorphic(quotient(r.K, r.ZH).algebra, G), "K/ZH is not isomorphic to G");
  require(are_isomorphic(quotient(r.K, r.ZG).algebra, H), "K/ZG is not isomorphic to H");
  auto k_side = analyse_isoclinism_side(r.K);
  require(are_isoclinic(pair.source, k_side).has_value(), "G is not isoclinic to K");
  require(are_isoclinic(k_side, pair.target).has_value(), "K is not isoclinic to H");
  return r;
}

DescendantResult common_descendant(const FiniteMLA& G, const FiniteMLA& H, const IsoclinismPair& pair,
                                   const Limits& limits) {
  DescendantResult d;
  d.pullback = isoclinism_pullback(G, H, pair, limits);
  const FiniteMLA& K = d.pullback.K;
  const Subset MK = m_commutator_ideal(K);
  const std::size_t t_order = (K.order() / d.pullback.ZH.size()) * (K.order() / MK.size());
  check_cap(t_order, limits, "descendant product T");

  const Quotient Q1 = quotient(K, d.pullback.ZH);
  const Quotient Q2 = quotient(K, MK);
  d.T = direct_product(Q1.algebra, Q2.algebra);
  auto t_of = [&](Elem k1, Elem k2) { return pair_index(Q2.algebra, Q1.projection(k1), Q2.projection(k2)); };

  d.L = Subset(d.T.order());
  for (Elem z : pair.source->center.members()) {
    const Elem k = d.pullback.index_of(z, 0);
    d.L.insert(t_of(k, k));
  }
  require(is_ideal(d.T, d.L), "L is not an ideal of T");
  d.T_commutator = m_commutator_ideal(d.T);
  require((d.T_commutator & d.L) == Subset::identity_only(d.T.order()), "^M[T,T] meets L nontrivially");

  const Quotient Kt = quotient(d.T, d.L);
  d.Ktilde = Kt.algebra;

  // Least g with lambda(g𝒵(G)) equal to each coset of H/𝒵(H).
  std::vector<Elem> lift(pair.target->central.algebra.order(), kNoElem);
  for (Elem g = G.order(); g-- > 0;) lift[pair.lambda_coset(g)] = g;

  std::vector<Elem> gg(G.order()), gh(H.order());
  for (Elem g = 0; g < G.order(); ++g) {
    const Elem k = d.pullback.index_of(g, pair.lambda_rep(g));
    gg[g] = Kt.projection(t_of(k, 0));
  }
  for (Elem h = 0; h < H.order(); ++h) {
    const Elem k = d.pullback.index_of(lift[pair.target->central.projection(h)], h);
    gh[h] = Kt.projection(t_of(k, k));
  }
  d.gammaG = check_homomorphism(std::move(gg), G, d.Ktilde);
  d.gammaH = check_homomorphism(std::move(gh), H, d.Ktilde);
  require(d.gammaG.is_hom && d.gammaG.is_injective, "gammaG is not an injective homomorphism");
  require(d.gammaH.is_hom && d.gammaH.is_injective, "gammaH is not an injective homomorphism");

  d.KG = image_of(d.gammaG, d.Ktilde.order());
  d.KH = image_of(d.gammaH, d.Ktilde.order());
  require(is_subalgebra(d.Ktilde, d.KG) && is_subalgebra(d.Ktilde, d.KH), "images are not subalgebras");
  const Subalgebra SG = make_subalgebra(d.Ktilde, d.KG);
  const Subalgebra SH = make_subalgebra(d.Ktilde, d.KH);
  require(are_isomorphic(SG.algebra, G), "gammaG(G) is not isomorphic to G");
  require(are_isomorphic(SH.algebra, H), "gammaH(H) is not isomorphic to H");

  const Subset whole = Subset::full(d.Ktilde.order());
  const Subset zk = ml_center(d.Ktilde);
  require(product_set(d.Ktilde.group(), d.KG, zk) == whole, "KG 𝒵(Ktilde) is not all of Ktilde");
  require(product_set(d.Ktilde.group(), d.KH, zk) == whole, "KH 𝒵(Ktilde) is not all of Ktilde");
  require(center_expansion_pair(d.Ktilde, d.KG).has_value(), "KG is not isoclinic to Ktilde");
  require(center_expansion_pair(d.Ktilde, d.KH).has_value(), "KH is not isoclinic to Ktilde");
  auto kt_side = analyse_isoclinism_side(d.Ktilde);
  require(are_isoclinic(pair.source, kt_side).has_value(), "G is not isoclinic to Ktilde");
  require(are_isoclinic(pair.target, kt_side).has_value(), "H is not isoclinic to Ktilde");
  return d;
}

QuotientIsoclinismReport quotient_isoclinism_check(const FiniteMLA& G, const Subset& ideal) {
  if (ideal.universe() != G.order() || !is_ideal(G, ideal)) throw NotAnIdeal("quotient_isoclinism_check needs an ideal");
  QuotientIsoclinismReport r;
  const Subset meet = ideal & m_commutator_ideal(G);
  const Quotient by_ideal = quotient(G, ideal);
  const Quotient by_meet = quotient(G, meet);
  r.quotients_isoclinic = are_isoclinic(by_ideal.algebra, by_meet.algebra).has_value();
  r.trivial_intersection = meet == Subset::identity_only(G.order());
  r.isoclinic_to_quotient = are_isoclinic(G, by_ideal.algebra).has_value();
  return r;
}

HomCorrespondenceReport hom_correspondence_check(const FiniteMLA& A, const FiniteMLA& Atilde) {
  if (!is_abelian_trivial(Atilde)) throw PreconditionViolated("target must be abelian with trivial star");
  HomCorrespondenceReport r;
  const Quotient F = quotient(A, m_commutator_ideal(A));
  const auto direct = all_homomorphisms(A, Atilde);
  const auto through = all_homomorphisms(F.algebra, Atilde);
  r.hom_count = direct.size();
  r.quotient_hom_count = through.size();

  std::set<std::vector<Elem>> direct_maps;
  for (const auto& m : direct) direct_maps.insert(m.map);
  std::set<std::vector<Elem>> composites;
  bool all_homs = true;
  for (const auto& rho_bar : through) {
    Morphism c = compose(F.projection, rho_bar, A, Atilde);
    all_homs = all_homs && c.is_hom;
    composites.insert(c.map);
  }
  r.composition_injective = all_homs && composites.size() == through.size();
  r.composition_surjective = all_homs && composites == direct_maps;
  return r;
}

NaturalityReport adjunction_naturality_check(const FiniteMLA& M, const FiniteMLA& Mt, const Morphism& f,
                                             const FiniteMLA& A, const FiniteMLA& At, const Morphism& g) {
  if (!check_homomorphism(f.map, Mt, M).is_hom) throw PreconditionViolated("f must be a homomorphism Mt -> M");
  if (!is_abelian_trivial(A) || !is_abelian_trivial(At))
    throw PreconditionViolated("A and At must be abelian with trivial star");
  if (!check_homomorphism(g.map, A, At).is_hom) throw PreconditionViolated("g must be a homomorphism A -> At");

  NaturalityReport r;
  const Quotient FM = quotient(M, m_commutator_ideal(M));
  const Quotient FMt = quotient(Mt, m_commutator_ideal(Mt));

  // F(f) on cosets, checked for independence of the representative.
  std::vector<Elem> Ff(FMt.algebra.order(), kNoElem);
  r.functor_well_defined = true;
  for (Elem x = 0; x < Mt.order(); ++x) {
    const Elem c = FMt.projection(x);
    const Elem v = FM.projection(f(x));
    if (Ff[c] == kNoElem)
      Ff[c] = v;
    else if (Ff[c] != v)
      r.functor_well_defined = false;
  }
  if (!r.functor_well_defined) return r;

  r.commutes = true;
  for (const auto& tau : all_homomorphisms(FM.algebra, A)) {
    ++r.taus_checked;
    for (Elem x = 0; x < Mt.order(); ++x) {
      const Elem down_then_across = g(tau(Ff[FMt.projection(x)]));  // Φ(Ψ(τ))
      const Elem across_then_down = g(tau(FM.projection(f(x))));     // Ψ(Φ(τ))
      if (down_then_across != across_then_down) r.commutes = false;
    }
  }
  return r;
}

std::optional<IsoclinismPair> center_expansion_pair(const FiniteMLA& G, const Subset& S) {
  if (S.universe() != G.order() || !is_subalgebra(G, S)) throw NotASubalgebra("center expansion needs a subalgebra");
  const Subset SZ = product_set(G.group(), S, ml_center(G));
  const Subalgebra small = make_subalgebra(G, S);
  const Subalgebra big = make_subalgebra(G, SZ);
  auto src = analyse_isoclinism_side(small.algebra);
  auto dst = analyse_isoclinism_side(big.algebra);
  if (src->central.algebra.order() != dst->central.algebra.order() || src->commutator.size() != dst->commutator.size())
    return std::nullopt;

  std::vector<Elem> lambda(src->central.algebra.order());
  for (Elem c = 0; c < lambda.size(); ++c) {
    const Elem parent = small.parent(src->central.representatives[c]);
    lambda[c] = dst->central.projection(big.local(parent));
  }
  std::vector<Elem> mu(src->commutator.size());
  for (Elem i = 0; i < mu.size(); ++i) {
    const Elem parent = small.parent(src->commutator_algebra.parent(i));
    const Elem local = dst->commutator_algebra.local(big.local(parent));
    if (local == kNoElem) return std::nullopt;
    mu[i] = local;
  }
  IsoclinismPair pair = make_isoclinism_pair(src, dst, std::move(lambda), std::move(mu));
  if (!check_isoclinism_pair(pair).ok) return std::nullopt;
  return pair;
}

CenterExpansionReport subalgebra_center_expansion_check(const FiniteMLA& G, const Subset& S) {
  CenterExpansionReport r;
  r.expansion_pair_ok = center_expansion_pair(G, S).has_value();
  r.expansion_is_whole = product_set(G.group(), S, ml_center(G)) == Subset::full(G.order());
  r.isoclinic_to_parent = are_isoclinic(make_subalgebra(G, S).algebra, G).has_value();
  return r;
}

nlohmann::json verifier_report(const std::string& construction, const std::vector<std::string>& input_digests,
                               bool passed, const nlohmann::json& witness) {
  nlohmann::json r{{"construction", construction}, {"inputs", input_digests}, {"passed", passed}};
  if (!passed) r["witness"] = witness;
  return r;
}

}  // namespace mlakit
