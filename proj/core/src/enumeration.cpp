#include "mlakit/enumeration.hpp"

#include <algorithm>
#include <set>

#include "mlakit/document.hpp"
#include "mlakit/errors.hpp"
#include "mlakit/isoclinism.hpp"
#include "mlakit/isomorphism.hpp"
#include "mlakit/structure.hpp"

namespace mlakit {

std::vector<FiniteMLA> enumerate_star_structures(const GroupTable& group, const SearchOptions& options) {
  const std::size_t cap = std::min(options.cap, kEnumerationHardCap);
  if (group.order() > cap)
    throw OrderCapExceeded("group order " + std::to_string(group.order()) + " exceeds the enumeration cap " +
                           std::to_string(cap));
  StarSearch search(group);
  std::vector<FiniteMLA> out;
  for (auto& table : search.solve({}, options.workers)) out.push_back(FiniteMLA::trusted(group, std::move(table)));
  return out;
}

std::vector<std::vector<Elem>> group_automorphisms(const GroupTable& group) {
  std::vector<std::vector<Elem>> out;
  for_each_group_map(group, group, MapKind::kIsomorphism, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Elem> canonical_star(const FiniteMLA& algebra, const std::vector<std::vector<Elem>>& automorphisms) {
  const std::size_t n = algebra.order();
  std::vector<Elem> best(algebra.star_table().begin(), algebra.star_table().end());
  std::vector<Elem> cand(n * n);
  for (const auto& sigma : automorphisms) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) cand[sigma[a] * n + sigma[b]] = sigma[algebra.star(a, b)];
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<FiniteMLA> dedupe_up_to_isomorphism(const std::vector<FiniteMLA>& structures) {
  if (structures.empty()) return {};
  const GroupTable& group = structures.front().group();
  const auto autos = group_automorphisms(group);
  std::set<std::vector<Elem>> forms;
  for (const auto& s : structures) {
    if (!(s.group() == group)) throw PreconditionViolated("structures must share one group table");
    forms.insert(canonical_star(s, autos));
  }
  std::vector<FiniteMLA> out;
  for (const auto& f : forms) out.push_back(FiniteMLA::trusted(group, f));
  return out;
}

ClassificationReport classify_structures(const GroupTable& group, const SearchOptions& options) {
  ClassificationReport report;
  auto all = enumerate_star_structures(group, options);
  report.raw_count = all.size();
  auto reps = dedupe_up_to_isomorphism(all);
  for (const auto& a : reps) {
    StructureSummary s{a, digest(a)};
    s.center_order = center(a).size();
    s.lie_center_order = lie_center(a).size();
    s.ml_center_order = ml_center(a).size();
    s.m_commutator_order = m_commutator_ideal(a).size();
    s.is_stem = is_stem(a);
    report.structures.push_back(std::move(s));
  }
  for (auto& cls : partition_by_isoclinism(reps)) report.classes.push_back({cls, cls.front()});
  return report;
}

std::vector<FiniteMLA> complete_star(const GroupTable& group, std::span<const StarAssignment> partial, unsigned workers) {
  StarSearch search(group);
  std::vector<FiniteMLA> out;
  for (auto& table : search.solve(partial, workers)) out.push_back(FiniteMLA::trusted(group, std::move(table)));
  return out;
}

}  // namespace mlakit
