#include "catalog.hpp"

#include <map>
#include <mutex>

#include "mlakit/enumeration.hpp"
#include "mlakit/library.hpp"

namespace testing_support {

namespace {

const std::vector<CatalogEntry>& build(std::size_t max_order, bool reduced) {
  static std::mutex lock;
  static std::map<std::pair<std::size_t, bool>, std::vector<CatalogEntry>> cache;
  std::lock_guard guard(lock);
  auto [it, fresh] = cache.try_emplace({max_order, reduced});
  if (fresh) {
    for (const auto& ng : mlakit::group_library(max_order)) {
      auto all = mlakit::enumerate_star_structures(ng.group);
      if (reduced) all = mlakit::dedupe_up_to_isomorphism(all);
      for (auto& a : all) it->second.push_back({ng.name, std::move(a)});
    }
  }
  return it->second;
}

}  // namespace

const std::vector<CatalogEntry>& full_catalog(std::size_t max_order) { return build(max_order, false); }
const std::vector<CatalogEntry>& reduced_catalog(std::size_t max_order) { return build(max_order, true); }

oracle::Table raw_table(const mlakit::FiniteMLA& algebra) {
  const auto mul = algebra.group().mul_table();
  return oracle::make_table({mul.begin(), mul.end()}, algebra.order());
}

std::vector<oracle::Elem> raw_star(const mlakit::FiniteMLA& algebra) {
  const auto s = algebra.star_table();
  return {s.begin(), s.end()};
}

}  // namespace testing_support
