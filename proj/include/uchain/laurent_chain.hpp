#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "uchain/matrix.hpp"
#include "uchain/polynomial.hpp"

namespace uchain {

/// A finitely supported element of C ⊗ F2[U, U^-1], stored as one Laurent
/// polynomial per generator of C (by generator index).
///
/// As an element of C+ the chain stands for its strictly negative part.
class LaurentChain {
 public:
  LaurentChain() = default;
  explicit LaurentChain(std::size_t rank) : coeffs_(rank) {}

  /// U^exponent · generator.
  static LaurentChain term(std::size_t rank, std::size_t generator, int exponent = 0);

  std::size_t rank() const noexcept { return coeffs_.size(); }
  const LaurentPoly& operator[](std::size_t g) const { return coeffs_[g]; }
  LaurentPoly& operator[](std::size_t g) { return coeffs_[g]; }

  bool is_zero() const;
  /// kInfiniteValuation for the zero chain.
  int min_exponent() const;
  int max_exponent() const;
  bool coefficient(std::size_t g, int exponent) const { return coeffs_[g].coefficient(exponent); }
  void flip(std::size_t g, int exponent) { coeffs_[g].flip(exponent); }

  LaurentChain negative_part() const;
  LaurentChain nonnegative_part() const;
  LaurentChain restricted(int lo, int hi) const;
  LaurentChain shifted(int k) const;

  /// (generator index, exponent) pairs, sorted.
  std::vector<std::pair<std::size_t, int>> terms() const;

  LaurentChain& operator+=(const LaurentChain& other);
  friend LaurentChain operator+(LaurentChain a, const LaurentChain& b) { return a += b; }
  friend bool operator==(const LaurentChain&, const LaurentChain&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

/// m · x, where column c of m is the image of generator c.
LaurentChain apply(const PolyMatrix& m, const LaurentChain& x);

}  // namespace uchain
