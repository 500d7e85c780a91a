#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlakit/types.hpp"

namespace mlakit {

/**
 * A finite group given by its Cayley table. Element 0 is the identity.
 *
 * Instances are immutable; the only way to build one is through
 * `from_table`, which validates, or `trusted`, which callers use when the
 * table comes out of a construction that preserves the group axioms.
 */
class GroupTable {
 public:
  GroupTable() = default;

  /// Throws GroupAxiomError with witnesses when `mul` is not a group table,
  /// ParseError on shape problems.
  static GroupTable from_table(std::vector<Elem> mul, std::size_t order,
                               std::vector<std::string> labels = {});

  static GroupTable trusted(std::vector<Elem> mul, std::size_t order,
                            std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }

  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }

  /// g h g^-1
  Elem conjugate(Elem g, Elem h) const { return mul(mul(g, h), inv_[g]); }

  /// g h g^-1 h^-1
  Elem commutator(Elem g, Elem h) const { return mul(mul(g, h), mul(inv_[g], inv_[h])); }

  Elem power(Elem g, std::size_t k) const;
  std::size_t element_order(Elem g) const { return element_orders_[g]; }
  bool is_abelian() const;

  std::span<const Elem> mul_table() const { return mul_; }
  std::span<const Elem> inv_table() const { return inv_; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name: the label when present, otherwise the index.
  std::string label(Elem e) const;

  bool operator==(const GroupTable& other) const { return order_ == other.order_ && mul_ == other.mul_; }

 private:
  void derive();

  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> element_orders_;
  std::vector<std::string> labels_;
};

}  // namespace mlakit
