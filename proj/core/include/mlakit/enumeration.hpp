#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mlakit/algebra.hpp"
#include "mlakit/group.hpp"
#include "mlakit/types.hpp"

namespace mlakit {

/// One prescribed star value: left * right = value.
struct StarAssignment {
  Elem left = 0;
  Elem right = 0;
  Elem value = 0;
  bool operator==(const StarAssignment&) const = default;
};

/**
 * Backtracking search over star tables on a fixed group.
 *
 * Cells are branched in row-major order with values tried in increasing
 * index order. After each assignment the MLA2, MLA3 and MLA5 instances
 * touching the cell are propagated: once all but one cell of an instance is
 * known the last one is derived, and fully known instances are checked.
 * MLA1 pre-fills the diagonal. MLA4 is only a check on complete tables.
 */
class StarSearch {
 public:
  explicit StarSearch(const GroupTable& group);

  /// Every star table on the group that agrees with `fixed` and satisfies
  /// MLA1..MLA5, sorted lexicographically. Top-level subtrees are split
  /// across `workers` threads; the result does not depend on the count.
  std::vector<std::vector<Elem>> solve(std::span<const StarAssignment> fixed = {}, unsigned workers = 1) const;

  std::size_t constraint_count() const { return constraints_.size(); }

 private:
  struct Constraint {
    enum Kind : std::uint8_t { kMla2, kMla3, kMla5 } kind;
    Elem p, q, r;
  };
  class State;

  std::array<std::size_t, 3> cells_of(const Constraint& c) const;

  const GroupTable* group_;
  std::size_t n_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::uint32_t>> watches_;  // cell -> constraint ids
};

struct SearchOptions {
  /// Order cap; groups above it raise OrderCapExceeded.
  std::size_t cap = 8;
  unsigned workers = 1;
};

/// Largest cap the enumeration accepts at all.
inline constexpr std::size_t kEnumerationHardCap = 16;

/// All multiplicative Lie algebra structures on `group`, sorted by the
/// flattened star table. Throws OrderCapExceeded.
std::vector<FiniteMLA> enumerate_star_structures(const GroupTable& group, const SearchOptions& options = {});

/// Automorphisms of a group as permutation vectors, lexicographically sorted.
std::vector<std::vector<Elem>> group_automorphisms(const GroupTable& group);

/// Least flattened star table over all group automorphisms.
std::vector<Elem> canonical_star(const FiniteMLA& algebra, const std::vector<std::vector<Elem>>& automorphisms);

/// One representative (in canonical form) per orbit of the automorphism
/// group, sorted. All inputs must share the same group table.
std::vector<FiniteMLA> dedupe_up_to_isomorphism(const std::vector<FiniteMLA>& structures);

struct StructureSummary {
  FiniteMLA algebra;
  std::string digest;
  std::size_t center_order = 0;       // |Z|
  std::size_t lie_center_order = 0;   // |LZ|
  std::size_t ml_center_order = 0;    // |𝒵|
  std::size_t m_commutator_order = 0;  // |^M[G,G]|
  bool is_stem = false;
};

struct IsoclinismClassSummary {
  std::vector<std::size_t> members;  // indices into `structures`
  std::size_t representative = 0;
};

struct ClassificationReport {
  std::size_t raw_count = 0;  // before deduplication
  std::vector<StructureSummary> structures;
  std::vector<IsoclinismClassSummary> classes;
};

/// Enumerate, deduplicate, then partition by isoclinism.
ClassificationReport classify_structures(const GroupTable& group, const SearchOptions& options = {});

/// All completions of a partially given star table. Empty means the
/// prescribed values contradict the axioms; more than one means they do not
/// determine the table.
std::vector<FiniteMLA> complete_star(const GroupTable& group, std::span<const StarAssignment> partial, unsigned workers = 1);

}  // namespace mlakit
