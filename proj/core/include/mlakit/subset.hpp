#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mlakit/types.hpp"

namespace mlakit {

/**
 * A set of element indices of one finite algebra, stored as a bitset.
 *
 * Orders up to 64 fit in a single word; larger algebras (products built by
 * the constructions) just use more words. The universe size is fixed at
 * construction and two subsets are only comparable when it matches.
 */
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<Elem> members) : Subset(universe) {
    for (Elem e : members) insert(e);
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  static Subset identity_only(std::size_t universe) { return Subset(universe, {0}); }

  std::size_t universe() const { return universe_; }

  bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }

  /// Returns true when the element was not present before.
  bool insert(Elem e) {
    auto& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }

  void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  Subset operator&(const Subset& other) const {
    Subset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
    return r;
  }

  Subset operator|(const Subset& other) const {
    Subset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
    return r;
  }

  /// Members in increasing index order.
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const Subset&) const = default;
  auto operator<=>(const Subset& other) const { return words_ <=> other.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mlakit
