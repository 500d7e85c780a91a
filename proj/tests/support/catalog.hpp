#pragma once

#include <string>
#include <vector>

#include "mlakit/algebra.hpp"
#include "oracle.hpp"

namespace testing_support {

struct CatalogEntry {
  std::string group_name;
  mlakit::FiniteMLA algebra;
};

/// Every star structure on every library group of order <= max_order.
const std::vector<CatalogEntry>& full_catalog(std::size_t max_order);
/// One structure per automorphism orbit.
const std::vector<CatalogEntry>& reduced_catalog(std::size_t max_order);

oracle::Table raw_table(const mlakit::FiniteMLA& algebra);
std::vector<oracle::Elem> raw_star(const mlakit::FiniteMLA& algebra);

}  // namespace testing_support
