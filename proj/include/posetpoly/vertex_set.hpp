#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace posetpoly {

// Fixed-width bitset over vertex indices, sized at construction.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static VertexSet full(std::size_t bits) {
    VertexSet s(bits);
    for (std::size_t i = 0; i < bits; ++i) s.set(i);
    return s;
  }

  std::size_t bits() const { return bits_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool subset_of(const VertexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        out.push_back(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const VertexSet& o) const = default;

  // Lexicographic on the ascending index lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace posetpoly
