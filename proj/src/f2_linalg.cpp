#include "uchain/f2_linalg.hpp"

#include <cassert>

namespace uchain {

Reducer::Reduced Reducer::reduce(BitVector v, BitVector tag) const {
  assert(v.dim() == dim_);
  while (true) {
    std::size_t p = v.lowest();
    if (p == dim_ || pivot_row_[p] == kNone) break;
    v ^= rows_[pivot_row_[p]];
    if (tag_dim_ != 0) tag ^= tags_[pivot_row_[p]];
  }
  return {std::move(v), std::move(tag)};
}

bool Reducer::insert(BitVector v, BitVector tag) {
  auto r = reduce(std::move(v), std::move(tag));
  std::size_t p = r.residual.lowest();
  if (p == dim_) return false;
  pivot_row_[p] = rows_.size();
  rows_.push_back(std::move(r.residual));
  tags_.push_back(std::move(r.tag));
  return true;
}

std::vector<BitVector> Reducer::rows_with_pivot_at_least(std::size_t threshold) const {
  std::vector<BitVector> out;
  for (const auto& row : rows_) {
    if (row.lowest() >= threshold) out.push_back(row);
  }
  return out;
}

std::vector<BitVector> kernel(const F2Map& m) {
  const std::size_t n = m.columns.size();
  Reducer r(m.rows, n);
  std::vector<BitVector> out;
  for (std::size_t c = 0; c < n; ++c) {
    BitVector tag = BitVector::unit(n, c);
    auto red = r.reduce(m.columns[c], tag);
    if (red.residual.is_zero()) {
      out.push_back(std::move(red.tag));
    } else {
      r.insert(std::move(red.residual), std::move(red.tag));
    }
  }
  return out;
}

std::size_t rank(const F2Map& m) {
  Reducer r(m.rows, 0);
  for (const auto& c : m.columns) r.insert(c);
  return r.rank();
}

std::optional<BitVector> solve(const F2Map& m, const BitVector& b) {
  const std::size_t n = m.columns.size();
  Reducer r(m.rows, n);
  for (std::size_t c = 0; c < n; ++c) r.insert(m.columns[c], BitVector::unit(n, c));
  auto red = r.reduce(b, BitVector(n));
  if (!red.residual.is_zero()) return std::nullopt;
  return red.tag;
}

}  // namespace uchain
