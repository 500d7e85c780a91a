#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlakit/group.hpp"
#include "mlakit/types.hpp"

namespace mlakit {

/**
 * A finite multiplicative Lie algebra: a group table together with a star
 * table satisfying MLA1..MLA5.
 *
 * Conventions: conjugation is g h g^-1 and the group commutator is
 * [g,h] = g h g^-1 h^-1. Values are immutable after construction and can be
 * shared read-only between threads.
 */
class FiniteMLA {
 public:
  FiniteMLA() = default;

  /// Validates the star table against the group; throws MLAAxiomError.
  static FiniteMLA from_tables(GroupTable group, std::vector<Elem> star);

  /// Skips validation. For tables produced by constructions that preserve
  /// the axioms (products, quotients, subalgebras).
  static FiniteMLA trusted(GroupTable group, std::vector<Elem> star);

  /// The group with x*y = 1 for all x, y.
  static FiniteMLA trivial(GroupTable group);
  /// The group with x*y = [x, y].
  static FiniteMLA improper(GroupTable group);

  std::size_t order() const { return group_.order(); }
  const GroupTable& group() const { return group_; }

  Elem mul(Elem a, Elem b) const { return group_.mul(a, b); }
  Elem inv(Elem a) const { return group_.inv(a); }
  Elem star(Elem a, Elem b) const { return star_[a * order() + b]; }
  Elem conjugate(Elem g, Elem h) const { return group_.conjugate(g, h); }
  Elem commutator(Elem g, Elem h) const { return group_.commutator(g, h); }
  /// (g*h)[g,h]
  Elem m_commutator(Elem g, Elem h) const { return mul(star(g, h), commutator(g, h)); }

  std::span<const Elem> star_table() const { return star_; }
  std::string label(Elem e) const { return group_.label(e); }

  bool operator==(const FiniteMLA& other) const { return group_ == other.group_ && star_ == other.star_; }

 private:
  FiniteMLA(GroupTable group, std::vector<Elem> star) : group_(std::move(group)), star_(std::move(star)) {}

  GroupTable group_;
  std::vector<Elem> star_;
};

}  // namespace mlakit
