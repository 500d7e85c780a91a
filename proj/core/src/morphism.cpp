#include "mlakit/morphism.hpp"

#include <algorithm>

#include "mlakit/algebra.hpp"
#include "mlakit/errors.hpp"

namespace mlakit {

namespace {

void fill_bijectivity(Morphism& m, std::size_t target_order) {
  std::vector<char> hit(target_order, 0);
  bool injective = true;
  for (Elem v : m.map) {
    if (hit[v]) injective = false;
    hit[v] = 1;
  }
  m.is_injective = injective;
  m.is_surjective = std::find(hit.begin(), hit.end(), 0) == hit.end();
}

}  // namespace

Morphism check_group_homomorphism(std::vector<Elem> map, const GroupTable& G, const GroupTable& H) {
  if (map.size() != G.order()) throw PreconditionViolated("map length does not match source order");
  for (Elem v : map)
    if (v >= H.order()) throw PreconditionViolated("map value out of target range");
  Morphism m;
  m.map = std::move(map);
  m.is_hom = true;
  for (Elem a = 0; a < G.order() && m.is_hom; ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (m.map[G.mul(a, b)] != H.mul(m.map[a], m.map[b])) {
        m.is_hom = false;
        m.witness = {a, b};
        break;
      }
  fill_bijectivity(m, H.order());
  return m;
}

Morphism check_homomorphism(std::vector<Elem> map, const FiniteMLA& G, const FiniteMLA& H) {
  Morphism m = check_group_homomorphism(std::move(map), G.group(), H.group());
  if (!m.is_hom) return m;
  for (Elem a = 0; a < G.order() && m.is_hom; ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (m.map[G.star(a, b)] != H.star(m.map[a], m.map[b])) {
        m.is_hom = false;
        m.witness = {a, b};
        break;
      }
  return m;
}

Morphism compose(const Morphism& first, const Morphism& second, const FiniteMLA& source, const FiniteMLA& target) {
  std::vector<Elem> map(first.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map[first.map[i]];
  return check_homomorphism(std::move(map), source, target);
}

Morphism inverse(const Morphism& f, const FiniteMLA& source, const FiniteMLA& target) {
  if (!f.is_injective || !f.is_surjective) throw NotAnIsomorphism("cannot invert a non-bijective map");
  std::vector<Elem> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[f.map[i]] = static_cast<Elem>(i);
  return check_homomorphism(std::move(map), target, source);
}

Morphism identity_morphism(const FiniteMLA& G) {
  std::vector<Elem> map(G.order());
  for (Elem i = 0; i < G.order(); ++i) map[i] = i;
  return check_homomorphism(std::move(map), G, G);
}

}  // namespace mlakit
