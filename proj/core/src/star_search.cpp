#include <algorithm>
#include <atomic>
#include <thread>

#include "mlakit/enumeration.hpp"
#include "mlakit/errors.hpp"

namespace mlakit {

namespace {
constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);
}

StarSearch::StarSearch(const GroupTable& group) : group_(&group), n_(group.order()) {
  const GroupTable& G = group;
  const Elem n = static_cast<Elem>(n_);
  std::vector<char> central(n, 1);
  for (Elem k = 0; k < n; ++k)
    for (Elem g = 0; g < n && central[k]; ++g) central[k] = G.mul(k, g) == G.mul(g, k);

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        constraints_.push_back({Constraint::kMla2, a, b, c});
        constraints_.push_back({Constraint::kMla3, a, b, c});
        if (!central[a]) constraints_.push_back({Constraint::kMla5, a, b, c});
      }

  watches_.resize(n_ * n_);
  for (std::uint32_t id = 0; id < constraints_.size(); ++id) {
    auto cells = cells_of(constraints_[id]);
    for (std::size_t i = 0; i < 3; ++i) {
      if (cells[i] == kNoCell) continue;
      if (std::find(cells.begin(), cells.begin() + static_cast<long>(i), cells[i]) != cells.begin() + static_cast<long>(i))
        continue;
      watches_[cells[i]].push_back(id);
    }
  }
}

std::array<std::size_t, 3> StarSearch::cells_of(const Constraint& c) const {
  const GroupTable& G = *group_;
  auto cell = [&](Elem a, Elem b) { return static_cast<std::size_t>(a) * n_ + b; };
  switch (c.kind) {
    case Constraint::kMla2:  // g*(hh') = (g*h) h(g*h')
      return {cell(c.p, G.mul(c.q, c.r)), cell(c.p, c.q), cell(c.p, c.r)};
    case Constraint::kMla3:  // (gg')*h = g(g'*h) (g*h)
      return {cell(G.mul(c.p, c.q), c.r), cell(c.q, c.r), cell(c.p, c.r)};
    case Constraint::kMla5:  // k(g*h) = (kg)*(kh)
      return {cell(c.q, c.r), cell(G.conjugate(c.p, c.q), G.conjugate(c.p, c.r)), kNoCell};
  }
  return {kNoCell, kNoCell, kNoCell};
}

class StarSearch::State {
 public:
  explicit State(const StarSearch& s) : s_(s), G_(*s.group_), table_(s.n_ * s.n_, kNoElem) {}

  std::size_t mark() const { return trail_.size(); }

  void undo_to(std::size_t m) {
    while (trail_.size() > m) {
      table_[trail_.back()] = kNoElem;
      trail_.pop_back();
    }
  }

  /// Assigns and propagates. On failure the caller undoes to its mark.
  bool assign(std::size_t cell, Elem v) {
    queue_.clear();
    if (!set(cell, v)) return false;
    for (std::size_t i = 0; i < queue_.size(); ++i)
      for (std::uint32_t id : s_.watches_[queue_[i]])
        if (!propagate(s_.constraints_[id])) return false;
    return true;
  }

  std::size_t next_unset(std::size_t from) const {
    for (std::size_t c = from; c < table_.size(); ++c)
      if (table_[c] == kNoElem) return c;
    return kNoCell;
  }

  const std::vector<Elem>& table() const { return table_; }

  bool satisfies_mla4() const {
    const std::size_t n = s_.n_;
    auto st = [&](Elem a, Elem b) { return table_[a * n + b]; };
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        for (Elem k = 0; k < n; ++k) {
          const Elem a = st(st(g, h), G_.conjugate(h, k));
          const Elem b = st(st(h, k), G_.conjugate(k, g));
          const Elem c = st(st(k, g), G_.conjugate(g, h));
          if (G_.mul(G_.mul(a, b), c) != 0) return false;
        }
    return true;
  }

 private:
  bool set(std::size_t cell, Elem v) {
    if (table_[cell] != kNoElem) return table_[cell] == v;
    table_[cell] = v;
    trail_.push_back(cell);
    queue_.push_back(cell);
    return true;
  }

  // Relation value of the left-hand cell computed from the others, or the
  // value a single unknown position must take.
  bool propagate(const Constraint& c) {
    const auto cells = s_.cells_of(c);
    const std::size_t arity = c.kind == Constraint::kMla5 ? 2 : 3;
    std::array<Elem, 3> v{};
    int unknown = -1;
    int unknown_count = 0;
    for (std::size_t i = 0; i < arity; ++i) {
      v[i] = table_[cells[i]];
      if (v[i] == kNoElem) {
        ++unknown_count;
        unknown = static_cast<int>(i);
      }
    }
    if (unknown_count == 0) return holds(c, v);
    if (unknown_count > 1) return true;  // includes a repeated unknown cell
    return set(cells[static_cast<std::size_t>(unknown)], solve(c, unknown, v));
  }

  bool holds(const Constraint& c, const std::array<Elem, 3>& v) const {
    switch (c.kind) {
      case Constraint::kMla2:
        return v[0] == G_.mul(v[1], G_.conjugate(c.q, v[2]));
      case Constraint::kMla3:
        return v[0] == G_.mul(G_.conjugate(c.p, v[1]), v[2]);
      case Constraint::kMla5:
        return v[1] == G_.conjugate(c.p, v[0]);
    }
    return false;
  }

  Elem solve(const Constraint& c, int pos, const std::array<Elem, 3>& v) const {
    switch (c.kind) {
      case Constraint::kMla2: {  // X = Y h(Z), h = q
        if (pos == 0) return G_.mul(v[1], G_.conjugate(c.q, v[2]));
        if (pos == 1) return G_.mul(v[0], G_.inv(G_.conjugate(c.q, v[2])));
        return G_.conjugate(G_.inv(c.q), G_.mul(G_.inv(v[1]), v[0]));
      }
      case Constraint::kMla3: {  // X = g(Y) Z, g = p
        if (pos == 0) return G_.mul(G_.conjugate(c.p, v[1]), v[2]);
        if (pos == 2) return G_.mul(G_.inv(G_.conjugate(c.p, v[1])), v[0]);
        return G_.conjugate(G_.inv(c.p), G_.mul(v[0], G_.inv(v[2])));
      }
      case Constraint::kMla5: {  // Y = k(X), k = p
        if (pos == 1) return G_.conjugate(c.p, v[0]);
        return G_.conjugate(G_.inv(c.p), v[1]);
      }
    }
    return kNoElem;
  }

  const StarSearch& s_;
  const GroupTable& G_;
  std::vector<Elem> table_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
};

namespace {

template <typename State>
void dfs(State& st, std::size_t from, std::size_t n, std::vector<std::vector<Elem>>& out) {
  const std::size_t cell = st.next_unset(from);
  if (cell == kNoCell) {
    if (st.satisfies_mla4()) out.push_back(st.table());
    return;
  }
  for (Elem v = 0; v < n; ++v) {
    const std::size_t m = st.mark();
    if (st.assign(cell, v)) dfs(st, cell + 1, n, out);
    st.undo_to(m);
  }
}

}  // namespace

std::vector<std::vector<Elem>> StarSearch::solve(std::span<const StarAssignment> fixed, unsigned workers) const {
  std::vector<std::vector<Elem>> out;
  State root(*this);
  for (Elem g = 0; g < n_; ++g)
    if (!root.assign(g * n_ + g, 0)) return out;
  for (const auto& a : fixed) {
    if (a.left >= n_ || a.right >= n_ || a.value >= n_) throw PreconditionViolated("star assignment out of range");
    if (!root.assign(a.left * n_ + a.right, a.value)) return out;
  }

  const std::size_t first = root.next_unset(0);
  if (workers <= 1 || first == kNoCell) {
    dfs(root, 0, n_, out);
  } else {
    // One task per value of the first open cell; merged in task order.
    std::vector<std::vector<std::vector<Elem>>> parts(n_);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t v = next++; v < n_; v = next++) {
        State st = root;
        if (st.assign(first, static_cast<Elem>(v))) dfs(st, first + 1, n_, parts[v]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, n_); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mlakit
