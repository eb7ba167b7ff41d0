#pragma once

#include <cstdint>
#include <vector>

#include "uchain/complex.hpp"
#include "uchain/matrix.hpp"

namespace uchain {

/// A summand a --U^n--> b; grading(b) = grading_a - 1.
struct TwoStep {
  int grading_a = 0;
  int exponent = 1;

  friend auto operator<=>(const TwoStep&, const TwoStep&) = default;
};

/// Isomorphism type over F2[[U]]: a multiset of 1-step and 2-step summands.
///
/// `cancelled_pairs` counts unit pivots removed during classification; it is
/// reported for transparency and is not part of the isomorphism type, so it
/// does not take part in equality.
struct NormalForm {
  std::vector<int> one_steps;
  std::vector<TwoStep> two_steps;
  int cancelled_pairs = 0;

  /// Sorts both multisets.
  void canonicalize();
  std::size_t rank() const { return one_steps.size() + 2 * two_steps.size(); }
  int max_exponent() const;
  /// Torsion exponents, sorted.
  std::vector<int> exponents() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b);
};

/// A pair of basis slots forming a 2-step (or a cancelled unit pivot when exponent is 0).
struct PairSummand {
  std::size_t source = 0;  // the `a` slot
  std::size_t target = 0;  // the `b` slot
  int exponent = 0;
};

/// Result of the reduction: the normal form together with the change of
/// basis that realizes it. Slot j of the new basis keeps the grading of
/// generator j.
struct Decomposition {
  NormalForm normal_form;
  std::vector<std::size_t> free;        // 1-step slots
  std::vector<PairSummand> pairs;       // positive exponents
  std::vector<PairSummand> cancelled;   // unit pivots
  /// Column j is the j-th new basis vector written in the original generators.
  LocalMatrix basis;
  /// Inverse of `basis`: row j gives the j-th new coordinate of an original generator.
  LocalMatrix inverse;
};

/// Reduces C by pivoting in F2[U]_(U): minimal U-adic valuation first, ties
/// broken by smallest (row, column) in generator order.
Decomposition decompose(const GradedComplex& c);
NormalForm classify(const GradedComplex& c);

/// The model complex: 2-steps a<k> -> b<k> first, then 1-steps x<k>.
GradedComplex realize(const NormalForm& nf, const std::string& name = "C");

/// Output of a seeded basis change together with the matrices relating the bases.
struct BasisChange {
  GradedComplex complex;
  /// Column j is the j-th new generator in the old generators.
  PolyMatrix basis;
  PolyMatrix inverse;
};

/// `steps` random elementary changes g_i <- g_i + p(U) g_j between generators of equal grading.
BasisChange random_basis_change_with_matrices(const GradedComplex& c, std::uint64_t seed, int steps);
GradedComplex random_basis_change(const GradedComplex& c, std::uint64_t seed, int steps);

/// Conjugates a map on the old basis to the new one: inverse · F · basis.
ChainMap transport(const ChainMap& f, const BasisChange& change);

/// A random degree-0 chain map C -> C: a summand-wise map in a normal-form
/// basis conjugated back (denominators cleared by a unit) plus ∂H + H∂.
ChainMap random_chain_map(const GradedComplex& c, std::uint64_t seed);

/// Torsion exponents from U-adic valuations of gcds of k×k minors of ∂.
/// Independent of decompose(); requires rank <= 12.
std::vector<int> minor_gcd_check(const GradedComplex& c);

/// A random normal form with only 2-steps, for test campaigns.
NormalForm random_torsion_normal_form(std::uint64_t seed, int max_rank, int max_exponent);

}  // namespace uchain
