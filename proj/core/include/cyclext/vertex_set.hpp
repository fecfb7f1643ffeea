#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#ifndef CYCLEXT_MAX_VERTICES
#define CYCLEXT_MAX_VERTICES 64
#endif

namespace cyclext {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxVertices = CYCLEXT_MAX_VERTICES;
static_assert(kMaxVertices > 0 && kMaxVertices % 64 == 0,
              "CYCLEXT_MAX_VERTICES must be a positive multiple of 64");

/// Fixed-capacity set of vertex ids in [0, kMaxVertices).
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  bool contains(Vertex v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or kMaxVertices when empty.
  Vertex first() const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0)
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kMaxVertices;
  }

  /// Smallest member strictly greater than v, or kMaxVertices.
  Vertex next(Vertex v) const noexcept {
    ++v;
    if (v >= kMaxVertices) return kMaxVertices;
    std::size_t w = v >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w == kWords) return kMaxVertices;
      bits = words_[w];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lowest word, for callers that know n <= 64.
  std::uint64_t low_word() const noexcept { return words_[0]; }

  std::size_t hash() const noexcept {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace cyclext
