#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "mlakit/errors.hpp"
#include "mlakit/fixtures.hpp"
#include "mlakit/isoclinism.hpp"
#include "mlakit/isomorphism.hpp"
#include "mlakit/library.hpp"
#include "mlakit/structure.hpp"
#include "mlakit/validation.hpp"

using namespace mlakit;
using testing_support::full_catalog;
using testing_support::raw_star;
using testing_support::raw_table;

namespace {

Subset set_of(const FiniteMLA& G, std::initializer_list<Elem> members) { return Subset(G.order(), members); }

std::vector<Elem> star_vector(const FiniteMLA& G) { return {G.star_table().begin(), G.star_table().end()}; }

}  // namespace

TEST_SUITE("core-algebra") {
  TEST_CASE("loading and validation") {
    const GroupTable z2 = cyclic_group(2);
    CHECK(FiniteMLA::from_tables(z2, {0, 0, 0, 0}).order() == 2);

    const FiniteMLA v4 = fixtures::v4_star_a();
    CHECK(v4.order() == 4);
    CHECK(v4.star(1, 2) == 1);

    auto bad = star_vector(v4);
    bad[1 * 4 + 1] = 2;  // a * a = b
    try {
      (void)FiniteMLA::from_tables(v4.group(), bad);
      FAIL("expected MLAAxiomError");
    } catch (const MLAAxiomError& e) {
      REQUIRE(e.report().has("MLA1"));
      for (const auto& v : e.report().violations)
        if (v.axiom == "MLA1") CHECK(v.witness == std::vector<Elem>{1});
    }

    // V4 with rows 1 and 2 tampered.
    std::vector<Elem> mul{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
    std::swap(mul[1 * 4 + 2], mul[1 * 4 + 3]);
    std::swap(mul[2 * 4 + 2], mul[2 * 4 + 3]);
    CHECK_THROWS_AS((void)GroupTable::from_table(mul, 4), GroupAxiomError);
    CHECK_THROWS_AS((void)GroupTable::from_table({1, 0, 0, 1}, 2), GroupAxiomError);
  }

  TEST_CASE("validation agrees with the direct axiom check on perturbed tables") {
    std::mt19937 rng(7);
    for (const auto& entry : full_catalog(6)) {
      const FiniteMLA& G = entry.algebra;
      const auto T = raw_table(G);
      CHECK(check_mla_axioms(G.group(), G.star_table()).ok());
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(G.order() - 1));
      for (int trial = 0; trial < 20; ++trial) {
        auto star = star_vector(G);
        star[pick(rng) * G.order() + pick(rng)] = pick(rng);
        CHECK(check_mla_axioms(G.group(), star).ok() == oracle::star_axioms_hold(T, star));
      }
    }
  }

  TEST_CASE("conjugation and commutators") {
    const GroupTable d4 = dihedral_group(4);  // y = 1, x = 4
    CHECK(d4.conjugate(4, 1) == 3);
    for (Elem h = 0; h < 8; ++h) CHECK(d4.conjugate(0, h) == h);
    const GroupTable z4 = cyclic_group(4);
    for (Elem g = 0; g < 4; ++g)
      for (Elem h = 0; h < 4; ++h) {
        CHECK(z4.conjugate(g, h) == h);
        CHECK(z4.commutator(g, h) == 0);
      }
    const GroupTable q8 = dicyclic_group(2);  // x = 1, y = 4, x^2 = 2
    CHECK(q8.commutator(1, 4) == 2);
    for (Elem g = 0; g < 8; ++g) CHECK(q8.commutator(g, g) == 0);
  }

  TEST_CASE("multiplicative commutator of elements") {
    const FiniteMLA v4 = fixtures::v4_star_a();
    CHECK(v4.m_commutator(1, 2) == 1);
    for (Elem g = 0; g < 4; ++g) CHECK(v4.m_commutator(g, g) == 0);
    const FiniteMLA d4t = FiniteMLA::trivial(dihedral_group(4));
    for (Elem g = 0; g < 8; ++g)
      for (Elem h = 0; h < 8; ++h) CHECK(d4t.m_commutator(g, h) == d4t.commutator(g, h));
  }

  TEST_CASE("closures") {
    const FiniteMLA z4 = fixtures::z4_trivial();
    CHECK(subgroup_closure(z4, Subset(4)) == set_of(z4, {0}));
    CHECK(subgroup_closure(z4, set_of(z4, {1})) == Subset::full(4));
    const FiniteMLA v4 = fixtures::v4_star_a();
    CHECK(subgroup_closure(v4, set_of(v4, {1})) == set_of(v4, {0, 1}));
    CHECK(ideal_closure(v4, Subset(4)) == set_of(v4, {0}));
    CHECK(ideal_closure(v4, set_of(v4, {1})) == set_of(v4, {0, 1}));
    const FiniteMLA q8 = fixtures::q8_improper();
    CHECK(ideal_closure(q8, set_of(q8, {2})) == set_of(q8, {0, 2}));
    CHECK(subalgebra_closure(v4, set_of(v4, {2})) == set_of(v4, {0, 2}));  // a subalgebra, not an ideal
    CHECK(subalgebra_closure(v4, set_of(v4, {1, 2})) == Subset::full(4));
  }

  TEST_CASE("structural subsets") {
    const FiniteMLA q8 = fixtures::q8_improper();
    const FiniteMLA q8t = FiniteMLA::trivial(dicyclic_group(2));
    const FiniteMLA d4t = FiniteMLA::trivial(dihedral_group(4));
    const FiniteMLA v4 = fixtures::v4_star_a();
    const FiniteMLA A = fixtures::example_a();
    const FiniteMLA z4 = fixtures::z4_trivial();

    CHECK(derived_subgroup(z4) == set_of(z4, {0}));
    CHECK(derived_subgroup(q8) == set_of(q8, {0, 2}));
    CHECK(derived_subgroup(d4t) == set_of(d4t, {0, 2}));

    CHECK(star_subgroup(q8t) == set_of(q8t, {0}));
    CHECK(star_subgroup(v4) == set_of(v4, {0, 1}));
    CHECK(star_subgroup(q8) == set_of(q8, {0, 2}));

    CHECK(m_commutator_ideal(A) == set_of(A, {0, 1}));
    CHECK(m_commutator_ideal(v4) == set_of(v4, {0, 1}));
    CHECK(m_commutator_ideal(z4) == set_of(z4, {0}));

    CHECK(center(z4) == Subset::full(4));
    CHECK(center(q8) == set_of(q8, {0, 2}));
    CHECK(center(d4t) == set_of(d4t, {0, 2}));

    CHECK(lie_center(q8t) == Subset::full(8));
    CHECK(lie_center(v4) == set_of(v4, {0}));
    const auto naive_lz = oracle::naive_ml_center(raw_table(A), raw_star(A));  // A is abelian, so 𝒵 = LZ
    CHECK(lie_center(A).members() == naive_lz);
    CHECK(lie_center(A) == set_of(A, {0, 4}));

    CHECK(ml_center(A) == set_of(A, {0, 4}));
    CHECK(ml_center(v4) == set_of(v4, {0}));
    CHECK(ml_center(z4) == Subset::full(4));
  }

  TEST_CASE("quotients and products") {
    const FiniteMLA v4 = fixtures::v4_star_a();
    const FiniteMLA A = fixtures::example_a();
    CHECK(are_isomorphic(quotient(v4, set_of(v4, {0})).algebra, v4));
    CHECK(quotient(v4, Subset::full(4)).algebra.order() == 1);
    const Quotient qa = quotient(A, ml_center(A));
    CHECK(qa.algebra.order() == 4);
    CHECK(are_isomorphic(qa.algebra, v4));
    CHECK_THROWS_AS((void)quotient(v4, set_of(v4, {0, 2})), NotAnIdeal);

    const FiniteMLA one = FiniteMLA::trivial(cyclic_group(1));
    CHECK(are_isomorphic(direct_product(v4, one), v4));
    const FiniteMLA z2 = fixtures::z2_trivial();
    const FiniteMLA zz = direct_product(z2, z2);
    CHECK(are_isomorphic(zz, FiniteMLA::trivial(elementary_abelian_group(2))));
    const FiniteMLA v4z2 = direct_product(v4, z2);
    CHECK(v4z2.order() == 8);
    CHECK(check_mla_axioms(v4z2.group(), v4z2.star_table()).ok());
    CHECK(are_isoclinic(v4z2, v4).has_value());
  }

  TEST_CASE("ideal and abelian-trivial predicates") {
    const FiniteMLA v4 = fixtures::v4_star_a();
    CHECK(is_ideal(v4, set_of(v4, {0})));
    CHECK(is_ideal(v4, Subset::full(4)));
    CHECK_FALSE(is_ideal(v4, set_of(v4, {0, 2})));
    CHECK(is_abelian_trivial(fixtures::z4_trivial()));
    CHECK_FALSE(is_abelian_trivial(v4));
    CHECK_FALSE(is_abelian_trivial(FiniteMLA::trivial(dicyclic_group(2))));
  }

  TEST_CASE("subset enumeration matches a scan of all subsets") {
    for (const auto& entry : full_catalog(8)) {
      const FiniteMLA& G = entry.algebra;
      std::vector<Subset> ideals, subalgebras;
      for (std::uint32_t mask = 1; mask < (1u << G.order()); mask += 2) {  // must contain 0
        Subset s(G.order());
        for (Elem e = 0; e < G.order(); ++e)
          if (mask >> e & 1u) s.insert(e);
        if (is_subalgebra(G, s)) subalgebras.push_back(s);
        if (is_ideal(G, s)) ideals.push_back(s);
      }
      std::sort(ideals.begin(), ideals.end());
      std::sort(subalgebras.begin(), subalgebras.end());
      CHECK(all_ideals(G) == ideals);
      CHECK(all_subalgebras(G) == subalgebras);
    }
  }

  TEST_CASE("catalog invariants") {
    for (const auto& entry : full_catalog(8)) {
      const FiniteMLA& G = entry.algebra;
      const auto T = raw_table(G);
      const Subset M = m_commutator_ideal(G);
      const Subset Z = ml_center(G);
      CHECK(is_ideal(G, M));
      CHECK(is_ideal(G, Z));
      CHECK(M.members() == oracle::naive_m_commutator(T, raw_star(G)));
      CHECK(Z.members() == oracle::naive_ml_center(T, raw_star(G)));
      CHECK(is_abelian_trivial(quotient(G, M).algebra));

      // ^M[G,G] is the smallest ideal with abelian-trivial quotient.
      for (const Subset& I : all_ideals(G))
        CHECK(is_abelian_trivial(quotient(G, I).algebra) == M.is_subset_of(I));

      // Values of [g,g'] and g*g' depend only on cosets of 𝒵(G).
      const auto zs = Z.members();
      for (Elem g = 0; g < G.order(); ++g)
        for (Elem h = 0; h < G.order(); ++h)
          for (Elem z1 : zs)
            for (Elem z2 : zs) {
              const Elem g2 = G.mul(g, z1), h2 = G.mul(h, z2);
              CHECK(G.commutator(g, h) == G.commutator(g2, h2));
              CHECK(G.star(g, h) == G.star(g2, h2));
            }

      // Projections are surjective homomorphisms with kernel I.
      for (const Subset& I : all_ideals(G)) {
        const Quotient q = quotient(G, I);
        CHECK(check_mla_axioms(q.algebra.group(), q.algebra.star_table()).ok());
        CHECK(q.projection.is_hom);
        CHECK(q.projection.is_surjective);
        for (Elem g = 0; g < G.order(); ++g) CHECK((q.projection(g) == 0) == I.contains(g));
      }
    }
  }

  TEST_CASE("direct products split both ideals") {
    const auto& cat = testing_support::reduced_catalog(4);
    for (const auto& a : cat)
      for (const auto& b : cat) {
        const FiniteMLA P = direct_product(a.algebra, b.algebra);
        Subset zprod(P.order()), mprod(P.order());
        const Subset za = ml_center(a.algebra), zb = ml_center(b.algebra);
        const Subset ma = m_commutator_ideal(a.algebra), mb = m_commutator_ideal(b.algebra);
        for (Elem g : za.members())
          for (Elem h : zb.members()) zprod.insert(pair_index(b.algebra, g, h));
        for (Elem g : ma.members())
          for (Elem h : mb.members()) mprod.insert(pair_index(b.algebra, g, h));
        CHECK(ml_center(P) == zprod);
        CHECK(m_commutator_ideal(P) == mprod);
      }
  }
}
