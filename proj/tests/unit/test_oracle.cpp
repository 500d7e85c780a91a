#include <doctest.h>

#include "catalog.hpp"
#include "mlakit/fixtures.hpp"
#include "mlakit/library.hpp"

// Sanity checks on the reference implementations themselves, against
// hand-computed values.

using namespace mlakit;
using testing_support::raw_star;
using testing_support::raw_table;

TEST_SUITE("oracle") {
  TEST_CASE("hand-computed invariants") {
    const FiniteMLA A = fixtures::example_a();
    CHECK(oracle::naive_ml_center(raw_table(A), raw_star(A)) == std::vector<oracle::Elem>{0, 4});
    CHECK(oracle::naive_m_commutator(raw_table(A), raw_star(A)) == std::vector<oracle::Elem>{0, 1});
    const FiniteMLA v4 = fixtures::v4_star_a();
    CHECK(oracle::naive_ml_center(raw_table(v4), raw_star(v4)) == std::vector<oracle::Elem>{0});
  }

  TEST_CASE("hand-written V4 table") {
    // a*b = a, b*a = a, ab*a = a, a*ab = a, b*ab = a, ab*b = a.
    const std::vector<oracle::Elem> star{0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0};
    const auto T = raw_table(fixtures::v4_star_a());
    CHECK(oracle::star_axioms_hold(T, star));
    CHECK(star == raw_star(fixtures::v4_star_a()));
    auto broken = star;
    broken[1 * 4 + 2] = 2;
    CHECK_FALSE(oracle::star_axioms_hold(T, broken));
  }

  TEST_CASE("small counts") {
    const auto z2 = oracle::make_table({0, 1, 1, 0}, 2);
    CHECK(oracle::naive_star_tables(z2).size() == 1);
    const auto v4 = raw_table(FiniteMLA::trivial(elementary_abelian_group(2)));
    // Trivial plus the three tables with u*v equal to one fixed nonidentity element.
    CHECK(oracle::naive_star_tables(v4).size() == 4);
  }

  TEST_CASE("naive isoclinism on the worked examples") {
    const FiniteMLA v4 = fixtures::v4_star_a();
    const FiniteMLA A = fixtures::example_a();
    const FiniteMLA z4 = fixtures::z4_trivial();
    CHECK(oracle::naive_isoclinic(raw_table(A), raw_star(A), raw_table(v4), raw_star(v4)));
    CHECK_FALSE(oracle::naive_isoclinic(raw_table(v4), raw_star(v4), raw_table(z4), raw_star(z4)));
    CHECK_FALSE(oracle::naive_isomorphic(raw_table(A), raw_star(A), raw_table(v4), raw_star(v4)));
  }
}
