#pragma once

#include <vector>

#include "mlakit/algebra.hpp"

/// Worked examples used throughout the tests, the acceptance suite and the
/// shipped data files. Algebras given by generator-level star values are
/// built through `complete_star`.
namespace mlakit::fixtures {

/// V4 = <a, b> with a*b = a (elements 1, a, b, ab).
FiniteMLA v4_star_a();

/// Z2^3 = <x, y, z> with x*y = x, x*z = 1, y*z = 1 (element bits x, y, z).
FiniteMLA example_a();

FiniteMLA z2_trivial();
FiniteMLA z4_trivial();

/// Q8 = <x, y | x^2 = y^2, y^4 = 1, yxy = x> with x*y = [x, y].
FiniteMLA q8_improper();

/// Every full table on D4 = <x, y | x^2 = y^4 = 1, xyx = y^3> extending x*y = y.
std::vector<FiniteMLA> d4_completions();

}  // namespace mlakit::fixtures
