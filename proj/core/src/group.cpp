#include "mlakit/group.hpp"

#include "mlakit/errors.hpp"
#include "mlakit/validation.hpp"

namespace mlakit {

GroupTable GroupTable::from_table(std::vector<Elem> mul, std::size_t order, std::vector<std::string> labels) {
  if (order == 0) throw ParseError("group order must be positive");
  if (mul.size() != order * order) throw ParseError("mul table must have order*order entries");
  if (!labels.empty() && labels.size() != order) throw ParseError("labels must have one entry per element");
  for (Elem v : mul)
    if (v >= order) throw ParseError("mul entry " + std::to_string(v) + " out of range");
  auto report = check_group_axioms(mul, order);
  if (!report.ok()) throw GroupAxiomError(std::move(report));
  return trusted(std::move(mul), order, std::move(labels));
}

GroupTable GroupTable::trusted(std::vector<Elem> mul, std::size_t order, std::vector<std::string> labels) {
  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.labels_ = std::move(labels);
  g.derive();
  return g;
}

void GroupTable::derive() {
  inv_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  element_orders_.assign(order_, 1);
  for (Elem a = 0; a < order_; ++a) {
    Elem x = a;
    std::size_t k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    element_orders_[a] = k;
  }
}

Elem GroupTable::power(Elem g, std::size_t k) const {
  Elem r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

bool GroupTable::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string GroupTable::label(Elem e) const {
  if (e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

}  // namespace mlakit
