#pragma once

#include <cstddef>
#include <vector>

#include "uchain/complex.hpp"
#include "uchain/f2_linalg.hpp"
#include "uchain/laurent_chain.hpp"

namespace uchain {

/// The F2 vector space spanned by U^e g for the generators g of one grading
/// and lo <= e < hi: a graded piece of the subquotient U^lo C / U^hi C of
/// C ⊗ F2[U, U^-1].
///
/// Indices are exponent-major, so the vectors supported on exponents >= e
/// form a tail of the index range.
class Window {
 public:
  Window(const GradedComplex& c, int grading, int lo, int hi);

  int grading() const noexcept { return grading_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  std::size_t dim() const noexcept { return gens_.size() * static_cast<std::size_t>(hi_ - lo_); }
  const std::vector<std::size_t>& generators() const noexcept { return gens_; }
  std::size_t rank() const noexcept { return rank_; }

  std::size_t index(std::size_t slot, int exponent) const {
    return static_cast<std::size_t>(exponent - lo_) * gens_.size() + slot;
  }
  /// First index whose exponent is >= e.
  std::size_t first_index_at(int exponent) const {
    return static_cast<std::size_t>(exponent - lo_) * gens_.size();
  }
  /// Slot of a generator index, or -1 when it is in another grading.
  int slot_of(std::size_t generator) const { return slot_of_[generator]; }

  /// Terms outside the window (other gradings, exponents outside [lo, hi)) are dropped.
  BitVector encode(const LaurentChain& x) const;
  LaurentChain decode(const BitVector& v) const;

 private:
  int grading_;
  int lo_;
  int hi_;
  std::size_t rank_;
  std::vector<std::size_t> gens_;
  std::vector<int> slot_of_;
};

/// Column images of the basis of `from` under m, truncated to `to`.
F2Map window_map(const PolyMatrix& m, const Window& from, const Window& to);

/// Homology classes of cycles of the subquotient [src_lo, src_hi) read in the
/// homology of [tgt_lo, tgt_hi), for one grading. With tgt_lo <= src_lo and
/// tgt_hi <= src_hi this is the image of H(src) -> H(tgt) under
/// include-then-project, which discards classes created by truncation.
struct WindowedHomology {
  Window source;
  Window target;
  std::vector<BitVector> cycles;  // basis of cycles in `source`
  Reducer boundaries;             // boundaries in `target`

  /// Embeds a chain into `target` (dropping terms outside it).
  BitVector in_target(const LaurentChain& x) const { return target.encode(x); }
  /// Dimension of the span of the classes of the given target vectors.
  std::size_t class_rank(const std::vector<BitVector>& vectors) const;
  /// Dimension of the windowed homology: class_rank of the cycles.
  std::size_t dimension() const;
  std::vector<LaurentChain> cycle_chains() const;
};

WindowedHomology windowed_homology(const GradedComplex& c, int grading, int src_lo, int src_hi,
                                   int tgt_lo, int tgt_hi);

}  // namespace uchain
