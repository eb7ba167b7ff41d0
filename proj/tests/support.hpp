#pragma once

#include <cstdint>

#include "uchain/complex.hpp"
#include "uchain/normal_form.hpp"
#include "uchain/random.hpp"

namespace uchain::testing {

// Random normal form with at most max_rank generators; 1-steps only when allowed.
inline NormalForm random_normal_form(Rng& rng, int max_rank, int max_exponent, bool allow_free) {
  NormalForm nf;
  int budget = rng.uniform(1, max_rank);
  while (budget > 0) {
    if (budget >= 2 && (!allow_free || rng.chance(2, 3))) {
      nf.two_steps.push_back({rng.uniform(-1, 2), rng.uniform(1, max_exponent)});
      budget -= 2;
    } else if (allow_free) {
      nf.one_steps.push_back(rng.uniform(-1, 2));
      budget -= 1;
    } else {
      break;
    }
  }
  if (nf.rank() == 0) nf.two_steps.push_back({1, 1});
  nf.canonicalize();
  return nf;
}

// A scrambled complex with known normal form.
struct KnownComplex {
  NormalForm normal_form;
  GradedComplex complex;
};

inline KnownComplex random_known_complex(std::uint64_t seed, int max_rank, int max_exponent, bool allow_free,
                                         int max_steps = 20) {
  Rng rng(seed);
  NormalForm nf = random_normal_form(rng, max_rank, max_exponent, allow_free);
  GradedComplex c = random_basis_change(realize(nf, "C"), rng.next(), rng.uniform(0, max_steps));
  return {nf, c};
}

}  // namespace uchain::testing
