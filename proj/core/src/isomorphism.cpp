#include "mlakit/isomorphism.hpp"

#include <algorithm>

#include "mlakit/structure.hpp"

namespace mlakit {

std::vector<Elem> generating_sequence(const GroupTable& G) {
  std::vector<Elem> gens;
  Subset sub = Subset::identity_only(G.order());
  for (Elem g = 1; g < G.order(); ++g) {
    if (sub.contains(g)) continue;
    gens.push_back(g);
    Subset s(G.order());
    for (Elem x : gens) s.insert(x);
    sub = subgroup_closure(G, s);
  }
  return gens;
}

namespace {

/// Backtracking over generator images. The map is rebuilt breadth-first on
/// the subgroup generated so far, which detects inconsistent relations, and
/// star compatibility is checked wherever all three entries are mapped.
class MapSearch {
 public:
  MapSearch(const GroupTable& G, const GroupTable& H, const FiniteMLA* Gs, const FiniteMLA* Hs, MapKind kind,
            const std::function<bool(const std::vector<Elem>&)>& visit)
      : G_(G), H_(H), Gs_(Gs), Hs_(Hs), kind_(kind), visit_(visit), gens_(generating_sequence(G)) {}

  void run() {
    if (kind_ == MapKind::kIsomorphism && !order_profiles_match()) return;
    images_.clear();
    recurse();
  }

 private:
  bool order_profiles_match() const {
    if (G_.order() != H_.order()) return false;
    std::vector<std::size_t> a, b;
    for (Elem g = 0; g < G_.order(); ++g) a.push_back(G_.element_order(g));
    for (Elem h = 0; h < H_.order(); ++h) b.push_back(H_.element_order(h));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Builds the map on <gens_[0..images_.size())>; false on conflict.
  bool extend(std::vector<Elem>& map) const {
    map.assign(G_.order(), kNoElem);
    std::vector<char> used(kind_ == MapKind::kIsomorphism ? H_.order() : 0, 0);
    map[0] = 0;
    if (!used.empty()) used[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Elem x = queue[i];
      for (std::size_t j = 0; j < images_.size(); ++j) {
        const Elem y = G_.mul(x, gens_[j]);
        const Elem img = H_.mul(map[x], images_[j]);
        if (map[y] == kNoElem) {
          if (!used.empty()) {
            if (used[img]) return false;
            used[img] = 1;
          }
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    if (Gs_ != nullptr) {
      for (Elem a : queue)
        for (Elem b : queue) {
          const Elem s = Gs_->star(a, b);
          if (map[s] != kNoElem && map[s] != Hs_->star(map[a], map[b])) return false;
        }
    }
    return true;
  }

  bool recurse() {
    std::vector<Elem> map;
    if (images_.size() == gens_.size()) {
      if (!extend(map)) return true;
      if (Gs_ != nullptr) {
        for (Elem a = 0; a < G_.order(); ++a)
          for (Elem b = 0; b < G_.order(); ++b)
            if (map[Gs_->star(a, b)] != Hs_->star(map[a], map[b])) return true;
      }
      return visit_(map);
    }
    const Elem g = gens_[images_.size()];
    const std::size_t ord = G_.element_order(g);
    for (Elem t = 0; t < H_.order(); ++t) {
      const std::size_t ot = H_.element_order(t);
      if (kind_ == MapKind::kIsomorphism ? ot != ord : ord % ot != 0) continue;
      images_.push_back(t);
      bool keep_going = true;
      if (extend(map)) keep_going = recurse();
      images_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const GroupTable& G_;
  const GroupTable& H_;
  const FiniteMLA* Gs_;
  const FiniteMLA* Hs_;
  MapKind kind_;
  const std::function<bool(const std::vector<Elem>&)>& visit_;
  std::vector<Elem> gens_;
  std::vector<Elem> images_;
};

}  // namespace

void for_each_group_map(const GroupTable& G, const GroupTable& H, MapKind kind,
                        const std::function<bool(const std::vector<Elem>&)>& visit) {
  MapSearch(G, H, nullptr, nullptr, kind, visit).run();
}

void for_each_algebra_map(const FiniteMLA& G, const FiniteMLA& H, MapKind kind,
                          const std::function<bool(const std::vector<Elem>&)>& visit) {
  MapSearch(G.group(), H.group(), &G, &H, kind, visit).run();
}

std::vector<Morphism> find_isomorphisms(const FiniteMLA& G, const FiniteMLA& H, std::size_t limit) {
  std::vector<Morphism> out;
  if (limit == 0) return out;
  for_each_algebra_map(G, H, MapKind::kIsomorphism, [&](const std::vector<Elem>& m) {
    out.push_back(check_homomorphism(m, G, H));
    return out.size() < limit;
  });
  return out;
}

bool are_isomorphic(const FiniteMLA& G, const FiniteMLA& H) { return !find_isomorphisms(G, H, 1).empty(); }

std::vector<Morphism> all_homomorphisms(const FiniteMLA& G, const FiniteMLA& H) {
  std::vector<Morphism> out;
  for_each_algebra_map(G, H, MapKind::kHomomorphism, [&](const std::vector<Elem>& m) {
    out.push_back(check_homomorphism(m, G, H));
    return true;
  });
  return out;
}

}  // namespace mlakit
