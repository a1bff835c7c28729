#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

/// Index of an element inside its owning FiniteRing.
using Elem = std::uint16_t;

/// Fixed-universe bitset over the elements of one ring.
///
/// Every ideal, radical, residual and unit set in the library is an ElemSet;
/// the word-level operations are what keep the triple scans quadratic.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(std::size_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(std::size_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(std::size_t x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Removes every member of `o`.
  ElemSet& subtract(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a.subtract(b); }

  /// Smallest member, or -1 when empty.
  long first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<long>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Smallest member of (*this & a & ~b), or -1. Avoids materializing the set.
  long first_in_and_not(const ElemSet& a, const ElemSet& b) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & a.words_[i] & ~b.words_[i];
      if (w) return static_cast<long>(i * 64 + std::countr_zero(w));
    }
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  /// Orders by size, then lexicographically by sorted members.
  friend bool canonical_less(const ElemSet& a, const ElemSet& b);

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline bool canonical_less(const ElemSet& a, const ElemSet& b) {
  auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.to_vector() < b.to_vector();
}

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace ringlab
