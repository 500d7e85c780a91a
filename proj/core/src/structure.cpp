#include "mlakit/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mlakit/errors.hpp"

namespace mlakit {

Subset subgroup_closure(const GroupTable& G, const Subset& s) {
  Subset out = Subset::identity_only(G.order());
  const auto gens = s.members();
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (Elem g : gens) {
      const Elem y = G.mul(x, g);
      if (out.insert(y)) queue.push_back(y);
    }
  }
  return out;
}

Subset subalgebra_closure(const FiniteMLA& G, const Subset& s) {
  Subset cur = subgroup_closure(G, s);
  for (;;) {
    bool grew = false;
    const auto m = cur.members();
    Subset next = cur;
    for (Elem a : m)
      for (Elem b : m) grew |= next.insert(G.star(a, b));
    if (!grew) return cur;
    cur = subgroup_closure(G, next);
  }
}

Subset ideal_closure(const FiniteMLA& G, const Subset& s) {
  const Elem n = static_cast<Elem>(G.order());
  Subset cur = subgroup_closure(G, s);
  for (;;) {
    bool grew = false;
    Subset next = cur;
    for (Elem h : cur.members())
      for (Elem g = 0; g < n; ++g) {
        grew |= next.insert(G.conjugate(g, h));
        grew |= next.insert(G.star(g, h));
        grew |= next.insert(G.star(h, g));
      }
    if (!grew) return cur;
    cur = subgroup_closure(G, next);
  }
}

bool is_subgroup(const GroupTable& G, const Subset& s) {
  if (!s.contains(0)) return false;
  const auto m = s.members();
  for (Elem a : m) {
    if (!s.contains(G.inv(a))) return false;
    for (Elem b : m)
      if (!s.contains(G.mul(a, b))) return false;
  }
  return true;
}

bool is_normal_subgroup(const GroupTable& G, const Subset& s) {
  if (!is_subgroup(G, s)) return false;
  for (Elem h : s.members())
    for (Elem g = 0; g < G.order(); ++g)
      if (!s.contains(G.conjugate(g, h))) return false;
  return true;
}

bool is_subalgebra(const FiniteMLA& G, const Subset& s) {
  if (!is_subgroup(G.group(), s)) return false;
  const auto m = s.members();
  for (Elem a : m)
    for (Elem b : m)
      if (!s.contains(G.star(a, b))) return false;
  return true;
}

bool is_ideal(const FiniteMLA& G, const Subset& s) {
  if (!is_normal_subgroup(G.group(), s)) return false;
  for (Elem h : s.members())
    for (Elem g = 0; g < G.order(); ++g)
      if (!s.contains(G.star(g, h)) || !s.contains(G.star(h, g))) return false;
  return true;
}

bool is_abelian_trivial(const FiniteMLA& G) {
  if (!G.group().is_abelian()) return false;
  const auto st = G.star_table();
  return std::all_of(st.begin(), st.end(), [](Elem e) { return e == 0; });
}

Subset derived_subgroup(const FiniteMLA& G) {
  const Elem n = static_cast<Elem>(G.order());
  Subset gens(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) gens.insert(G.commutator(a, b));
  return subgroup_closure(G, gens);
}

Subset star_subgroup(const FiniteMLA& G) {
  Subset gens(G.order());
  for (Elem v : G.star_table()) gens.insert(v);
  return subgroup_closure(G, gens);
}

Subset m_commutator_ideal(const FiniteMLA& G) {
  const Elem n = static_cast<Elem>(G.order());
  Subset gens(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      gens.insert(G.commutator(a, b));
      gens.insert(G.star(a, b));
    }
  Subset m = subgroup_closure(G, gens);
  if (!is_ideal(G, m)) throw InternalError("multiplicative commutator is not an ideal; the tables are inconsistent");
  return m;
}

Subset center(const FiniteMLA& G) {
  const Elem n = static_cast<Elem>(G.order());
  Subset z(n);
  for (Elem g = 0; g < n; ++g) {
    bool central = true;
    for (Elem h = 0; h < n && central; ++h) central = G.mul(g, h) == G.mul(h, g);
    if (central) z.insert(g);
  }
  return z;
}

Subset lie_center(const FiniteMLA& G) {
  const Elem n = static_cast<Elem>(G.order());
  Subset z(n);
  for (Elem g = 0; g < n; ++g) {
    bool central = true;
    for (Elem h = 0; h < n && central; ++h) central = G.star(g, h) == 0 && G.star(h, g) == 0;
    if (central) z.insert(g);
  }
  return z;
}

Subset ml_center(const FiniteMLA& G) {
  Subset z = center(G) & lie_center(G);
  if (!is_ideal(G, z)) throw InternalError("multiplicative Lie center is not an ideal; the tables are inconsistent");
  return z;
}

Subset product_set(const GroupTable& G, const Subset& a, const Subset& b) {
  Subset out(G.order());
  const auto mb = b.members();
  for (Elem x : a.members())
    for (Elem y : mb) out.insert(G.mul(x, y));
  return out;
}

CosetPartition left_cosets(const GroupTable& G, const Subset& normal) {
  const Elem n = static_cast<Elem>(G.order());
  CosetPartition p;
  p.coset_of.assign(n, kNoElem);
  const auto members = normal.members();
  for (Elem g = 0; g < n; ++g) {
    if (p.coset_of[g] != kNoElem) continue;
    const Elem c = static_cast<Elem>(p.representatives.size());
    p.representatives.push_back(g);
    for (Elem i : members) p.coset_of[G.mul(g, i)] = c;
  }
  return p;
}

Quotient quotient(const FiniteMLA& G, const Subset& ideal) {
  if (ideal.universe() != G.order() || !is_ideal(G, ideal)) throw NotAnIdeal("quotient requires an ideal");
  auto cosets = left_cosets(G.group(), ideal);
  const std::size_t m = cosets.representatives.size();
  std::vector<Elem> mul(m * m), star(m * m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Elem ra = cosets.representatives[a];
    labels.push_back(G.label(ra));
    for (std::size_t b = 0; b < m; ++b) {
      const Elem rb = cosets.representatives[b];
      mul[a * m + b] = cosets.coset_of[G.mul(ra, rb)];
      star[a * m + b] = cosets.coset_of[G.star(ra, rb)];
    }
  }
  FiniteMLA q = FiniteMLA::trusted(GroupTable::trusted(std::move(mul), m, std::move(labels)), std::move(star));
  Morphism proj = check_homomorphism(cosets.coset_of, G, q);
  return Quotient{std::move(q), std::move(proj), std::move(cosets.representatives)};
}

Subalgebra make_subalgebra(const FiniteMLA& G, const Subset& s) {
  if (s.universe() != G.order() || !is_subalgebra(G, s)) throw NotASubalgebra("subset is not closed under the algebra operations");
  Subalgebra sub;
  sub.embedding = s.members();
  sub.index_of.assign(G.order(), kNoElem);
  const std::size_t m = sub.embedding.size();
  for (std::size_t i = 0; i < m; ++i) sub.index_of[sub.embedding[i]] = static_cast<Elem>(i);
  std::vector<Elem> mul(m * m), star(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(G.label(sub.embedding[a]));
    for (std::size_t b = 0; b < m; ++b) {
      mul[a * m + b] = sub.index_of[G.mul(sub.embedding[a], sub.embedding[b])];
      star[a * m + b] = sub.index_of[G.star(sub.embedding[a], sub.embedding[b])];
    }
  }
  sub.algebra = FiniteMLA::trusted(GroupTable::trusted(std::move(mul), m, std::move(labels)), std::move(star));
  return sub;
}

GroupTable direct_product(const GroupTable& G, const GroupTable& H) {
  const std::size_t n = G.order(), k = H.order(), m = n * k;
  std::vector<Elem> mul(m * m);
  std::vector<std::string> labels(m);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < k; ++h) {
      const std::size_t x = g * k + h;
      labels[x] = "(" + G.label(g) + "," + H.label(h) + ")";
      for (Elem g2 = 0; g2 < n; ++g2)
        for (Elem h2 = 0; h2 < k; ++h2) mul[x * m + g2 * k + h2] = static_cast<Elem>(G.mul(g, g2) * k + H.mul(h, h2));
    }
  return GroupTable::trusted(std::move(mul), m, std::move(labels));
}

FiniteMLA direct_product(const FiniteMLA& G, const FiniteMLA& H) {
  GroupTable P = direct_product(G.group(), H.group());
  const std::size_t n = G.order(), k = H.order(), m = n * k;
  std::vector<Elem> star(m * m);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < k; ++h)
      for (Elem g2 = 0; g2 < n; ++g2)
        for (Elem h2 = 0; h2 < k; ++h2)
          star[(g * k + h) * m + g2 * k + h2] = static_cast<Elem>(G.star(g, g2) * k + H.star(h, h2));
  return FiniteMLA::trusted(std::move(P), std::move(star));
}

namespace {

template <typename Close>
std::vector<Subset> join_closure(std::size_t n, Close close) {
  std::set<Subset> found;
  std::vector<Subset> work{close(Subset(n))};
  found.insert(work.front());
  while (!work.empty()) {
    Subset cur = std::move(work.back());
    work.pop_back();
    for (Elem g = 0; g < n; ++g) {
      if (cur.contains(g)) continue;
      Subset ext = cur;
      ext.insert(g);
      Subset next = close(ext);
      if (found.insert(next).second) work.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<Subset> all_ideals(const FiniteMLA& G) {
  return join_closure(G.order(), [&](const Subset& s) { return ideal_closure(G, s); });
}

std::vector<Subset> all_subalgebras(const FiniteMLA& G) {
  return join_closure(G.order(), [&](const Subset& s) { return subalgebra_closure(G, s); });
}

}  // namespace mlakit
