#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace uchain {

/// A vector over F2 of fixed dimension.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

  static BitVector unit(std::size_t dim, std::size_t i) {
    BitVector v(dim);
    v.set(i);
    return v;
  }

  std::size_t dim() const noexcept { return dim_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool is_zero() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Index of the lowest set bit, or dim() when zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return 64 * w + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return dim_;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Dot product over F2.
  bool dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  BitVector& operator^=(const BitVector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental Gaussian elimination over F2 with bookkeeping tags.
///
/// Rows are kept in semi-echelon form keyed by their lowest set bit. Each row
/// carries a tag vector recording which inserted vectors it combines, which
/// gives kernels, solutions and quotient coordinates.
class Reducer {
 public:
  Reducer(std::size_t dim, std::size_t tag_dim) : dim_(dim), tag_dim_(tag_dim), pivot_row_(dim, kNone) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t tag_dim() const noexcept { return tag_dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  struct Reduced {
    BitVector residual;
    BitVector tag;
  };

  /// Subtracts stored rows at the residual's lowest bits until that bit has no pivot.
  Reduced reduce(BitVector v, BitVector tag) const;
  Reduced reduce(BitVector v) const { return reduce(std::move(v), BitVector(tag_dim_)); }

  /// Inserts v; returns true when v was independent of the stored rows.
  /// When v is dependent, the reduced tag (a relation) is available from reduce().
  bool insert(BitVector v, BitVector tag);
  bool insert(BitVector v) { return insert(std::move(v), BitVector(tag_dim_)); }

  bool contains(const BitVector& v) const { return reduce(v).residual.is_zero(); }

  /// Stored rows whose pivot is at least `threshold`. With an index order that
  /// puts a coordinate block first, these span the intersection of the row
  /// space with the complementary coordinate subspace.
  std::vector<BitVector> rows_with_pivot_at_least(std::size_t threshold) const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t dim_;
  std::size_t tag_dim_;
  std::vector<std::size_t> pivot_row_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> tags_;
};

/// A linear map F2^cols -> F2^rows given by its column images.
struct F2Map {
  std::size_t rows = 0;
  std::vector<BitVector> columns;
};

/// Basis of the kernel.
std::vector<BitVector> kernel(const F2Map& m);
std::size_t rank(const F2Map& m);
/// Some x with m x = b, if one exists.
std::optional<BitVector> solve(const F2Map& m, const BitVector& b);

}  // namespace uchain
