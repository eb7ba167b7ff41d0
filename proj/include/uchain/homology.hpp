#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uchain/complex.hpp"
#include "uchain/laurent_chain.hpp"
#include "uchain/normal_form.hpp"

namespace uchain {

enum class Flavor { Minus, Infinity, Plus, RedMinus, RedPlus };

std::string to_string(Flavor flavor);
/// Accepts minus, infinity, plus, red-minus, red-plus (and red_minus, red_plus).
Flavor parse_flavor(const std::string& text);

struct TorsionSummand {
  int grading = 0;
  int exponent = 0;
  friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

/// Homology in terms of F2[U] (or F2[U, U^-1]) summands.
///
/// `basis` is an F2 basis of representatives when f2_dimension is finite.
/// When it is infinite, `basis` holds one module generator per free summand
/// instead (torsion representatives are omitted).
struct HomologyPresentation {
  Flavor flavor = Flavor::Minus;
  std::map<int, int> free_ranks;
  std::vector<TorsionSummand> torsion;
  std::optional<std::size_t> f2_dimension;  // nullopt means infinite
  std::vector<LaurentChain> basis;
};

HomologyPresentation h_minus(const GradedComplex& c);
HomologyPresentation h_infinity(const GradedComplex& c);
HomologyPresentation h_plus(const GradedComplex& c);
enum class Side { Minus, Plus };
HomologyPresentation h_red(const GradedComplex& c, Side side);
HomologyPresentation homology(const GradedComplex& c, Flavor flavor);

/// Basis of H_red^+: U^-i a_k for 1 <= i <= n_k, as purely negative chains,
/// grouped by summand in the order of `torsion_summands`.
std::vector<LaurentChain> plus_basis(const Decomposition& dec, std::size_t rank);
/// Basis of the torsion of H^-: U^j b_k for 0 <= j < n_k, same order.
std::vector<LaurentChain> minus_torsion_basis(const GradedComplex& c, const Decomposition& dec);

/// Connecting map H+ -> H-: ∂ of the strictly negative part.
LaurentChain delta(const GradedComplex& c, const LaurentChain& x);

struct DeltaInverseOptions {
  /// Exponent bound N with U^N H^- = 0; taken from classify() when absent.
  std::optional<int> window;
  /// Re-solve at double width and require the two answers to agree in H+.
  bool stability_check = true;
};

/// A purely negative chain y with delta(y) homologous to x, found by a
/// windowed F2 solve of ∂v = x.
LaurentChain delta_inverse(const GradedComplex& c, const LaurentChain& x,
                           const DeltaInverseOptions& options = {});

/// x (read in C+) is a boundary there. `margin` must be at least the
/// largest torsion exponent.
bool is_boundary_plus(const GradedComplex& c, const LaurentChain& x, int margin);
/// x lies in ∂C + U^depth C. For a cycle of a complex with vanishing H∞ and
/// depth at least the largest torsion exponent this means x is a boundary.
bool is_boundary_minus(const GradedComplex& c, const LaurentChain& x, int depth);
bool is_cycle(const GradedComplex& c, const LaurentChain& x);

struct LesJoint {
  int grading = 0;
  Flavor space = Flavor::Minus;  // Minus, Infinity or Plus
  std::size_t dimension = 0;
  std::size_t image_in = 0;     // rank of the incoming map
  std::size_t kernel_out = 0;   // nullity of the outgoing map
  bool exact = false;
};

struct LesReport {
  int window = 0;
  std::vector<LesJoint> joints;
  /// rank of δ: H+_k -> H-_{k-1}, by k.
  std::map<int, std::size_t> delta_ranks;
  bool exact = false;
  /// δ ranks and reduced dimensions agree at double width.
  bool stable = false;
  /// Window dimensions agree with the counts predicted by classify().
  bool matches_normal_form = false;
};

/// Checks exactness of H+ -> H- -> H∞ -> H+ on truncation windows of width
/// 2N + 2 and 4N + 4. Requires rank <= 12.
LesReport les_exactness_check(const GradedComplex& c);

/// F2 Betti numbers of cone(id + phi), keyed by grading.
std::map<int, std::size_t> mapping_torus_betti(const GradedComplex& c, const ChainMap& phi);
/// F2 Betti numbers of a U-free complex.
std::map<int, std::size_t> f2_betti(const GradedComplex& c);

/// ⟨x, y⟩ for x in C∞ and y in dual(C)∞: sum of x(g, i) y(g^, j) over i + j = -1.
bool f2_pairing(const LaurentChain& x, const LaurentChain& y);

}  // namespace uchain
