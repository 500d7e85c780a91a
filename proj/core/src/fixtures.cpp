#include "mlakit/fixtures.hpp"

#include "mlakit/enumeration.hpp"
#include "mlakit/errors.hpp"
#include "mlakit/library.hpp"

namespace mlakit::fixtures {

namespace {

FiniteMLA unique_completion(const GroupTable& g, std::vector<StarAssignment> partial) {
  auto all = complete_star(g, partial);
  if (all.size() != 1) throw InternalError("fixture star table is not uniquely determined");
  return all.front();
}

}  // namespace

FiniteMLA v4_star_a() {
  // a = 1, b = 2
  return unique_completion(elementary_abelian_group(2), {{1, 2, 1}});
}

FiniteMLA example_a() {
  // x = 1, y = 2, z = 4
  return unique_completion(elementary_abelian_group(3), {{1, 2, 1}, {1, 4, 0}, {2, 4, 0}});
}

FiniteMLA z2_trivial() { return FiniteMLA::trivial(cyclic_group(2)); }

FiniteMLA z4_trivial() { return FiniteMLA::trivial(cyclic_group(4)); }

FiniteMLA q8_improper() { return FiniteMLA::improper(dicyclic_group(2)); }

std::vector<FiniteMLA> d4_completions() {
  // y = 1, x = 4
  return complete_star(dihedral_group(4), std::vector<StarAssignment>{{4, 1, 1}});
}

}  // namespace mlakit::fixtures
