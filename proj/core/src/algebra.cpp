#include "mlakit/algebra.hpp"

#include "mlakit/errors.hpp"
#include "mlakit/validation.hpp"

namespace mlakit {

FiniteMLA FiniteMLA::from_tables(GroupTable group, std::vector<Elem> star) {
  const std::size_t n = group.order();
  if (star.size() != n * n) throw ParseError("star table must have order*order entries");
  for (Elem v : star)
    if (v >= n) throw ParseError("star entry " + std::to_string(v) + " out of range");
  auto report = check_mla_axioms(group, star);
  if (!report.ok()) throw MLAAxiomError(std::move(report));
  return FiniteMLA(std::move(group), std::move(star));
}

FiniteMLA FiniteMLA::trusted(GroupTable group, std::vector<Elem> star) {
  return FiniteMLA(std::move(group), std::move(star));
}

FiniteMLA FiniteMLA::trivial(GroupTable group) {
  std::vector<Elem> star(group.order() * group.order(), 0);
  return FiniteMLA(std::move(group), std::move(star));
}

FiniteMLA FiniteMLA::improper(GroupTable group) {
  const std::size_t n = group.order();
  std::vector<Elem> star(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) star[a * n + b] = group.commutator(a, b);
  return FiniteMLA(std::move(group), std::move(star));
}

}  // namespace mlakit
