#include "mlakit/library.hpp"

#include <algorithm>

#include "mlakit/errors.hpp"
#include "mlakit/structure.hpp"

namespace mlakit {

namespace {

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::string word(std::string s) { return s.empty() ? "1" : s; }

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = word(power_label("g", a));
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return GroupTable::trusted(std::move(mul), n, std::move(labels));
}

GroupTable elementary_abelian_group(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  if (k == 2)
    names = {"a", "b"};
  else if (k == 3)
    names = {"x", "y", "z"};
  else
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string l;
    for (std::size_t i = 0; i < k; ++i)
      if (a >> i & 1) l += names[i];
    labels[a] = word(l);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>(a ^ b);
  }
  return GroupTable::trusted(std::move(mul), n, std::move(labels));
}

GroupTable dihedral_group(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      const std::size_t x = i + m * a;
      labels[x] = word(power_label("y", i) + (a ? "x" : ""));
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t b = 0; b < 2; ++b) {
          // (y^i x^a)(y^k x^b) = y^(i + (-1)^a k) x^(a+b)
          const std::size_t r = a ? (i + m - k) % m : (i + k) % m;
          mul[x * n + k + m * b] = static_cast<Elem>(r + m * ((a + b) % 2));
        }
    }
  return GroupTable::trusted(std::move(mul), n, std::move(labels));
}

GroupTable dicyclic_group(std::size_t m) {
  const std::size_t half = 2 * m, n = 4 * m;
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t x = i + half * j;
      labels[x] = word(power_label("x", i) + (j ? "y" : ""));
      for (std::size_t k = 0; k < half; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          // y x^k = x^-k y and y^2 = x^m
          std::size_t e = j ? (i + half - k) % half : (i + k) % half;
          std::size_t t = j + l;
          if (t == 2) {
            e = (e + m) % half;
            t = 0;
          }
          mul[x * n + k + half * l] = static_cast<Elem>(e + half * t);
        }
    }
  return GroupTable::trusted(std::move(mul), n, std::move(labels));
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) { return direct_product(a, b); }

std::vector<NamedGroup> group_library(std::size_t max_order) {
  std::vector<NamedGroup> all;
  for (std::size_t n = 1; n <= 16; ++n) all.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  all.push_back({"V4", elementary_abelian_group(2)});
  all.push_back({"Z2^3", elementary_abelian_group(3)});
  all.push_back({"Z2^4", elementary_abelian_group(4)});
  all.push_back({"Z2xZ4", product_group(cyclic_group(2), cyclic_group(4))});
  all.push_back({"Z3xZ3", product_group(cyclic_group(3), cyclic_group(3))});
  all.push_back({"Z2xZ6", product_group(cyclic_group(2), cyclic_group(6))});
  all.push_back({"Z2xZ8", product_group(cyclic_group(2), cyclic_group(8))});
  all.push_back({"Z4xZ4", product_group(cyclic_group(4), cyclic_group(4))});
  all.push_back({"Z2xZ2xZ4", product_group(elementary_abelian_group(2), cyclic_group(4))});
  all.push_back({"S3", dihedral_group(3)});
  for (std::size_t m = 4; m <= 8; ++m) all.push_back({"D" + std::to_string(m), dihedral_group(m)});
  all.push_back({"Q8", dicyclic_group(2)});
  all.push_back({"Q12", dicyclic_group(3)});
  all.push_back({"Q16", dicyclic_group(4)});

  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.group.order() <= max_order) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const NamedGroup& a, const NamedGroup& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.name < b.name;
  });
  return out;
}

GroupTable library_group(const std::string& name) {
  for (auto& g : group_library(16))
    if (g.name == name) return g.group;
  throw ParseError("unknown library group '" + name + "'");
}

}  // namespace mlakit
