#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spincomb/error.hpp"

namespace spincomb {

/// Fixed-width bit vector over GF(2), tagged by what its bits index.
///
/// A chain is created against a graph and keeps that graph's edge (or
/// vertex) count as its width. Addition is symmetric difference; mixing
/// widths is an error.
template <class Tag>
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  static Chain full(std::size_t width) {
    Chain c(width);
    for (std::size_t i = 0; i < width; ++i) c.set(i);
    return c;
  }

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  Chain& operator^=(const Chain& other) {
    require_same_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  Chain& operator&=(const Chain& other) {
    require_same_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Chain& operator|=(const Chain& other) {
    require_same_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend Chain operator^(Chain a, const Chain& b) { return a ^= b; }
  friend Chain operator&(Chain a, const Chain& b) { return a &= b; }
  friend Chain operator|(Chain a, const Chain& b) { return a |= b; }

  Chain complement() const {
    Chain c(width_);
    for (std::size_t i = 0; i < width_; ++i)
      if (!test(i)) c.set(i);
    return c;
  }

  bool is_subset_of(const Chain& other) const {
    require_same_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  /// Indices of set bits, ascending.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Renders bit 0 first, e.g. "0110".
  std::string to_bit_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }
  friend auto operator<=>(const Chain& a, const Chain& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(width_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void require_same_width(const Chain& other) const {
    if (other.width_ != width_)
      throw Error(ErrorKind::WidthMismatch,
                  "chain widths differ: " + std::to_string(width_) + " vs " + std::to_string(other.width_));
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeTag {};
struct VertexTag {};

/// A 1-chain: subset of edges.
using EdgeSubset = Chain<EdgeTag>;
/// A 0-chain: subset of vertices.
using ZeroChain = Chain<VertexTag>;

}  // namespace spincomb

template <class Tag>
struct std::hash<spincomb::Chain<Tag>> {
  std::size_t operator()(const spincomb::Chain<Tag>& c) const noexcept { return c.hash(); }
};
