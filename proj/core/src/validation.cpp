#include "mlakit/validation.hpp"

#include <sstream>

#include "mlakit/group.hpp"

namespace mlakit {

bool ValidationReport::has(const std::string& axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i > 0) os << "; ";
    os << v.axiom << " fails at (";
    for (std::size_t j = 0; j < v.witness.size(); ++j) os << (j ? "," : "") << v.witness[j];
    os << ")";
    if (!v.message.empty()) os << ": " << v.message;
  }
  return os.str();
}

ValidationReport check_group_axioms(std::span<const Elem> mul, std::size_t n) {
  ValidationReport report;
  auto at = [&](Elem a, Elem b) { return mul[a * n + b]; };

  for (Elem g = 0; g < n; ++g) {
    if (at(0, g) != g || at(g, 0) != g) {
      report.violations.push_back({"identity", {g}, "element 0 is not a two-sided identity"});
      break;
    }
  }

  // Every row and column must be a permutation.
  bool latin_ok = true;
  std::vector<char> seen(n);
  for (Elem r = 0; r < n && latin_ok; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem c = 0; c < n; ++c) {
      if (seen[at(r, c)]) {
        report.violations.push_back({"latin", {r, c}, "row repeats a value"});
        latin_ok = false;
        break;
      }
      seen[at(r, c)] = 1;
    }
  }
  for (Elem c = 0; c < n && latin_ok; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem r = 0; r < n; ++r) {
      if (seen[at(r, c)]) {
        report.violations.push_back({"latin", {r, c}, "column repeats a value"});
        latin_ok = false;
        break;
      }
      seen[at(r, c)] = 1;
    }
  }

  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) {
            report.violations.push_back({"associativity", {a, b, c}, "(ab)c != a(bc)"});
            return;
          }
  }();

  for (Elem g = 0; g < n; ++g) {
    bool found = false;
    for (Elem h = 0; h < n && !found; ++h) found = at(g, h) == 0 && at(h, g) == 0;
    if (!found) {
      report.violations.push_back({"inverse", {g}, "no two-sided inverse"});
      break;
    }
  }
  return report;
}

ValidationReport check_mla_axioms(const GroupTable& G, std::span<const Elem> star) {
  ValidationReport report;
  const std::size_t n = G.order();
  auto st = [&](Elem a, Elem b) { return star[a * n + b]; };

  for (Elem g = 0; g < n; ++g)
    if (st(g, g) != 0) {
      report.violations.push_back({"MLA1", {g}, "g*g is not the identity"});
      break;
    }

  // g*(h h') = (g*h) . h(g*h')
  [&] {
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        for (Elem hp = 0; hp < n; ++hp)
          if (st(g, G.mul(h, hp)) != G.mul(st(g, h), G.conjugate(h, st(g, hp)))) {
            report.violations.push_back({"MLA2", {g, h, hp}, "g*(hh') != (g*h) h(g*h')"});
            return;
          }
  }();

  // (g g')*h = g(g'*h) . (g*h)
  [&] {
    for (Elem g = 0; g < n; ++g)
      for (Elem gp = 0; gp < n; ++gp)
        for (Elem h = 0; h < n; ++h)
          if (st(G.mul(g, gp), h) != G.mul(G.conjugate(g, st(gp, h)), st(g, h))) {
            report.violations.push_back({"MLA3", {g, gp, h}, "(gg')*h != g(g'*h) (g*h)"});
            return;
          }
  }();

  [&] {
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        for (Elem k = 0; k < n; ++k) {
          const Elem a = st(st(g, h), G.conjugate(h, k));
          const Elem b = st(st(h, k), G.conjugate(k, g));
          const Elem c = st(st(k, g), G.conjugate(g, h));
          if (G.mul(G.mul(a, b), c) != 0) {
            report.violations.push_back({"MLA4", {g, h, k}, "Jacobi-type identity fails"});
            return;
          }
        }
  }();

  // k(g*h) = (kg)*(kh)
  [&] {
    for (Elem k = 0; k < n; ++k)
      for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h)
          if (G.conjugate(k, st(g, h)) != st(G.conjugate(k, g), G.conjugate(k, h))) {
            report.violations.push_back({"MLA5", {k, g, h}, "k(g*h) != (kg)*(kh)"});
            return;
          }
  }();
  return report;
}

}  // namespace mlakit
