#include "uchain/laurent_chain.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace uchain {

LaurentChain LaurentChain::term(std::size_t rank, std::size_t generator, int exponent) {
  LaurentChain x(rank);
  x.coeffs_[generator] = LaurentPoly::monomial(exponent);
  return x;
}

bool LaurentChain::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& p) { return p.is_zero(); });
}

int LaurentChain::min_exponent() const {
  int m = kInfiniteValuation;
  for (const auto& p : coeffs_) m = std::min(m, p.min_exponent());
  return m;
}

int LaurentChain::max_exponent() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& p : coeffs_) m = std::max(m, p.max_exponent());
  return m;
}

LaurentChain LaurentChain::negative_part() const {
  LaurentChain out(rank());
  for (std::size_t g = 0; g < rank(); ++g) out.coeffs_[g] = coeffs_[g].negative_part();
  return out;
}

LaurentChain LaurentChain::nonnegative_part() const {
  LaurentChain out(rank());
  for (std::size_t g = 0; g < rank(); ++g) out.coeffs_[g] = {0, coeffs_[g].nonnegative_part()};
  return out;
}

LaurentChain LaurentChain::restricted(int lo, int hi) const {
  LaurentChain out(rank());
  for (std::size_t g = 0; g < rank(); ++g) out.coeffs_[g] = coeffs_[g].restricted(lo, hi);
  return out;
}

LaurentChain LaurentChain::shifted(int k) const {
  LaurentChain out(rank());
  for (std::size_t g = 0; g < rank(); ++g) out.coeffs_[g] = coeffs_[g].shifted(k);
  return out;
}

std::vector<std::pair<std::size_t, int>> LaurentChain::terms() const {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t g = 0; g < rank(); ++g) {
    for (int e : coeffs_[g].exponents()) out.emplace_back(g, e);
  }
  return out;
}

LaurentChain& LaurentChain::operator+=(const LaurentChain& other) {
  assert(rank() == other.rank());
  for (std::size_t g = 0; g < rank(); ++g) coeffs_[g] += other.coeffs_[g];
  return *this;
}

LaurentChain apply(const PolyMatrix& m, const LaurentChain& x) {
  assert(m.cols() == x.rank());
  LaurentChain out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) out[r] += x[c] * m(r, c);
    }
  }
  return out;
}

}  // namespace uchain
