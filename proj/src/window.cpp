#include "uchain/window.hpp"

#include <cassert>

namespace uchain {

Window::Window(const GradedComplex& c, int grading, int lo, int hi)
    : grading_(grading),
      lo_(lo),
      hi_(std::max(lo, hi)),
      rank_(c.rank()),
      gens_(c.generators_in_grading(grading)),
      slot_of_(c.rank(), -1) {
  for (std::size_t s = 0; s < gens_.size(); ++s) slot_of_[gens_[s]] = static_cast<int>(s);
}

BitVector Window::encode(const LaurentChain& x) const {
  assert(x.rank() == rank_);
  BitVector v(dim());
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    const auto& p = x[gens_[s]];
    if (p.is_zero() || p.max_exponent() < lo_ || p.min_exponent() >= hi_) continue;
    for (int e : p.exponents()) {
      if (e >= lo_ && e < hi_) v.flip(index(s, e));
    }
  }
  return v;
}

LaurentChain Window::decode(const BitVector& v) const {
  LaurentChain x(rank_);
  const std::size_t width = gens_.size();
  if (width == 0) return x;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.get(i)) x.flip(gens_[i % width], lo_ + static_cast<int>(i / width));
  }
  return x;
}

F2Map window_map(const PolyMatrix& m, const Window& from, const Window& to) {
  F2Map out{to.dim(), {}};
  out.columns.reserve(from.dim());
  const auto& src_gens = from.generators();
  const auto& tgt_gens = to.generators();
  // Exponents of each entry, computed once per (target slot, source slot).
  std::vector<std::vector<std::vector<int>>> exps(src_gens.size(), std::vector<std::vector<int>>(tgt_gens.size()));
  for (std::size_t s = 0; s < src_gens.size(); ++s) {
    for (std::size_t t = 0; t < tgt_gens.size(); ++t) exps[s][t] = m(tgt_gens[t], src_gens[s]).exponents();
  }
  for (int e = from.lo(); e < from.hi(); ++e) {
    for (std::size_t s = 0; s < src_gens.size(); ++s) {
      BitVector col(to.dim());
      for (std::size_t t = 0; t < tgt_gens.size(); ++t) {
        for (int c : exps[s][t]) {
          int target_exp = e + c;
          if (target_exp >= to.lo() && target_exp < to.hi()) col.flip(to.index(t, target_exp));
        }
      }
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

std::size_t WindowedHomology::class_rank(const std::vector<BitVector>& vectors) const {
  Reducer r = boundaries;
  std::size_t added = 0;
  for (const auto& v : vectors) {
    if (r.insert(v)) ++added;
  }
  return added;
}

std::size_t WindowedHomology::dimension() const {
  std::vector<BitVector> embedded;
  embedded.reserve(cycles.size());
  for (const auto& z : cycles) embedded.push_back(target.encode(source.decode(z)));
  return class_rank(embedded);
}

std::vector<LaurentChain> WindowedHomology::cycle_chains() const {
  std::vector<LaurentChain> out;
  out.reserve(cycles.size());
  for (const auto& z : cycles) out.push_back(source.decode(z));
  return out;
}

WindowedHomology windowed_homology(const GradedComplex& c, int grading, int src_lo, int src_hi,
                                   int tgt_lo, int tgt_hi) {
  const auto& d = c.differential();
  Window source(c, grading, src_lo, src_hi);
  Window source_below(c, grading - 1, src_lo, src_hi);
  Window target(c, grading, tgt_lo, tgt_hi);
  Window target_above(c, grading + 1, tgt_lo, tgt_hi);

  std::vector<BitVector> cycles = kernel(window_map(d, source, source_below));
  Reducer boundaries(target.dim(), 0);
  for (auto& col : window_map(d, target_above, target).columns) boundaries.insert(std::move(col));
  return {std::move(source), std::move(target), std::move(cycles), std::move(boundaries)};
}

}  // namespace uchain
