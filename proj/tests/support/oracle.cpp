#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

Table make_table(const std::vector<Elem>& mul, std::size_t n) {
  Table t{n, mul, std::vector<Elem>(n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t.m(a, b) == 0) t.inv[a] = b;
  return t;
}

namespace {

constexpr Elem kUnset = 0xffffffffu;

// Each check returns false only on a fully evaluable violation.
struct Checker {
  const Table& G;
  const std::vector<Elem>& s;
  std::size_t n;

  bool known(Elem a, Elem b) const { return s[a * n + b] != kUnset; }
  Elem st(Elem a, Elem b) const { return s[a * n + b]; }

  bool mla1(Elem g) const { return !known(g, g) || st(g, g) == 0; }

  bool mla2(Elem g, Elem h, Elem k) const {
    const Elem hk = G.m(h, k);
    if (!known(g, hk) || !known(g, h) || !known(g, k)) return true;
    return st(g, hk) == G.m(st(g, h), G.conj(h, st(g, k)));
  }

  bool mla3(Elem g, Elem h, Elem k) const {
    const Elem gh = G.m(g, h);
    if (!known(gh, k) || !known(h, k) || !known(g, k)) return true;
    return st(gh, k) == G.m(G.conj(g, st(h, k)), st(g, k));
  }

  bool mla5(Elem g, Elem h, Elem k) const {
    const Elem a = G.conj(k, g), b = G.conj(k, h);
    if (!known(g, h) || !known(a, b)) return true;
    return G.conj(k, st(g, h)) == st(a, b);
  }

  bool mla4(Elem g, Elem h, Elem k) const {
    const Elem x = st(st(g, h), G.conj(h, k));
    const Elem y = st(st(h, k), G.conj(k, g));
    const Elem z = st(st(k, g), G.conj(g, h));
    return G.m(G.m(x, y), z) == 0;
  }

  bool early() const {
    for (Elem g = 0; g < n; ++g) {
      if (!mla1(g)) return false;
      for (Elem h = 0; h < n; ++h)
        for (Elem k = 0; k < n; ++k)
          if (!mla2(g, h, k) || !mla3(g, h, k) || !mla5(g, h, k)) return false;
    }
    return true;
  }

  bool full() const {
    if (!early()) return false;
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        for (Elem k = 0; k < n; ++k)
          if (!mla4(g, h, k)) return false;
    return true;
  }
};

void naive_dfs(const Table& G, std::vector<Elem>& s, std::size_t cell, std::vector<std::vector<Elem>>& out) {
  const std::size_t n = G.n;
  if (cell == n * n) {
    if (Checker{G, s, n}.full()) out.push_back(s);
    return;
  }
  for (Elem v = 0; v < n; ++v) {
    s[cell] = v;
    if (Checker{G, s, n}.early()) naive_dfs(G, s, cell + 1, out);
  }
  s[cell] = kUnset;
}

std::vector<Elem> closure(const Table& G, std::vector<Elem> gens) {
  std::set<Elem> s{0};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(G.m(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

bool preserves(const Table& A, const std::vector<Elem>& sA, const Table& B, const std::vector<Elem>& sB,
               const std::vector<Elem>& f) {
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b) {
      if (f[A.m(a, b)] != B.m(f[a], f[b])) return false;
      if (f[sA[a * A.n + b]] != sB[f[a] * B.n + f[b]]) return false;
    }
  return true;
}

// Everything about one side that the definition mentions.
struct Side {
  const Table& G;
  const std::vector<Elem>& star;
  std::vector<Elem> centre;            // 𝒵
  std::vector<Elem> coset;             // element -> coset id
  std::vector<Elem> rep;               // coset id -> least element
  std::vector<Elem> comm;              // ^M members
  std::vector<Elem> comm_index;        // element -> position in comm, or kUnset

  Side(const Table& g, const std::vector<Elem>& s) : G(g), star(s) {
    centre = naive_ml_center(G, star);
    coset.assign(G.n, kUnset);
    for (Elem a = 0; a < G.n; ++a) {
      if (coset[a] != kUnset) continue;
      const Elem id = static_cast<Elem>(rep.size());
      rep.push_back(a);
      for (Elem z : centre) coset[G.m(a, z)] = id;
    }
    comm = naive_m_commutator(G, star);
    comm_index.assign(G.n, kUnset);
    for (Elem i = 0; i < comm.size(); ++i) comm_index[comm[i]] = i;
  }
  Elem st(Elem a, Elem b) const { return star[a * G.n + b]; }
};

}  // namespace

bool star_axioms_hold(const Table& G, const std::vector<Elem>& star) { return Checker{G, star, G.n}.full(); }

std::vector<std::vector<Elem>> naive_star_tables(const Table& G) {
  std::vector<Elem> s(G.n * G.n, kUnset);
  std::vector<std::vector<Elem>> out;
  naive_dfs(G, s, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool naive_isomorphic(const Table& A, const std::vector<Elem>& starA, const Table& B, const std::vector<Elem>& starB) {
  if (A.n != B.n) return false;
  std::vector<Elem> f(A.n);
  std::iota(f.begin(), f.end(), 0);
  do {
    if (preserves(A, starA, B, starB, f)) return true;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return false;
}

bool naive_isoclinic(const Table& A, const std::vector<Elem>& starA, const Table& B, const std::vector<Elem>& starB) {
  const Side a(A, starA), b(B, starB);
  const std::size_t q = a.rep.size(), m = a.comm.size();
  if (q != b.rep.size() || m != b.comm.size()) return false;

  std::vector<Elem> lam(q);
  std::iota(lam.begin(), lam.end(), 0);
  do {
    if (lam[0] != 0) continue;
    // lambda must respect both quotient operations.
    bool ok = true;
    for (Elem x = 0; x < q && ok; ++x)
      for (Elem y = 0; y < q && ok; ++y) {
        const Elem gx = a.rep[x], gy = a.rep[y];
        const Elem hx = b.rep[lam[x]], hy = b.rep[lam[y]];
        ok = lam[a.coset[A.m(gx, gy)]] == b.coset[B.m(hx, hy)] &&
             lam[a.coset[a.st(gx, gy)]] == b.coset[b.st(hx, hy)];
      }
    if (!ok) continue;

    std::vector<Elem> mu(m);
    std::iota(mu.begin(), mu.end(), 0);
    do {
      if (mu[0] != 0) continue;
      auto image = [&](Elem g) { return b.comm[mu[a.comm_index[g]]]; };
      bool good = true;
      for (Elem i = 0; i < m && good; ++i)
        for (Elem j = 0; j < m && good; ++j) {
          const Elem g = a.comm[i], h = a.comm[j];
          good = image(A.m(g, h)) == B.m(image(g), image(h)) && image(a.st(g, h)) == b.st(image(g), image(h));
        }
      for (Elem g = 0; g < A.n && good; ++g)
        for (Elem h = 0; h < A.n && good; ++h) {
          const Elem hg = b.rep[lam[a.coset[g]]], hh = b.rep[lam[a.coset[h]]];
          good = image(A.comm(g, h)) == B.comm(hg, hh) && image(a.st(g, h)) == b.st(hg, hh);
        }
      if (good) return true;
    } while (std::next_permutation(mu.begin(), mu.end()));
  } while (std::next_permutation(lam.begin(), lam.end()));
  return false;
}

std::vector<Elem> naive_ml_center(const Table& G, const std::vector<Elem>& star) {
  std::vector<Elem> out;
  for (Elem g = 0; g < G.n; ++g) {
    bool in = true;
    for (Elem h = 0; h < G.n && in; ++h)
      in = G.m(g, h) == G.m(h, g) && star[g * G.n + h] == 0 && star[h * G.n + g] == 0;
    if (in) out.push_back(g);
  }
  return out;
}

std::vector<Elem> naive_m_commutator(const Table& G, const std::vector<Elem>& star) {
  std::vector<Elem> gens;
  for (Elem g = 0; g < G.n; ++g)
    for (Elem h = 0; h < G.n; ++h) {
      gens.push_back(G.comm(g, h));
      gens.push_back(star[g * G.n + h]);
    }
  return closure(G, gens);
}

}  // namespace oracle
