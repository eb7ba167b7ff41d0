#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uchain/complex.hpp"
#include "uchain/laurent_chain.hpp"

namespace uchain {

/// Entry-wise formal derivative of ∂ in the stored basis. Shifts the grading
/// by -1 like ∂ does.
ChainMap phi(const GradedComplex& c);
/// Transpose of phi(c), acting on dual(c).
ChainMap phi_dual(const GradedComplex& c);

/// tensor(c, dual(c)) -> unit_complex(): g ⊗ h^ goes to 1 when g = h.
ChainMap trace_map(const GradedComplex& c);
/// unit_complex() -> tensor(c, dual(c)): 1 goes to the sum of g ⊗ g^.
ChainMap cotrace_map(const GradedComplex& c);

enum class CompositionOrder {
  /// tr ∘ (F ⊗ Φ^) ∘ δ^-1 ∘ cotr
  InverseFirst,
  /// tr ∘ δ^-1 ∘ (F ⊗ Φ^) ∘ cotr
  MapFirst,
};

struct DeltaOptions {
  CompositionOrder order = CompositionOrder::InverseFirst;
  /// Fault injection for mutation testing: use the identity in place of Φ^.
  bool replace_phi_dual_with_identity = false;
};

/// The U^-1 coefficient of tr((F ⊗ Φ^)(δ^-1(cotr(1)))).
bool delta_quantity(const GradedComplex& c, const ChainMap& f, const DeltaOptions& options = {});

/// The element δ^-1(cotr(1)) of C+ ⊗ C^ used by delta_quantity.
LaurentChain delta_inverse_cotrace(const GradedComplex& c);
/// U^-1 coefficient of tr((F ⊗ Φ^)(w)) for a representative w.
bool evaluate_at_representative(const GradedComplex& c, const ChainMap& f, const LaurentChain& w);

struct LefschetzTrace {
  bool value = false;
  bool even = false;  // trace on H+ in even gradings
  bool odd = false;
  std::size_t dimension = 0;
};

/// Trace of F_* on H+, by Gaussian elimination on a truncated model of C+
/// (width from classify, checked at double width).
LefschetzTrace lefschetz_trace(const GradedComplex& c, const ChainMap& f);
bool lefschetz_oracle(const GradedComplex& c, const ChainMap& f);

/// One random (C, F) pair of a campaign.
struct Trial {
  GradedComplex complex;
  ChainMap map;
};
Trial generate_trial(std::uint64_t seed, int max_rank, int max_exponent, int max_steps);

struct VerifyOptions {
  std::uint64_t campaign_seed = 0;
  long long trials = 0;
  int max_rank = 8;
  int max_exponent = 6;
  int jobs = 1;
  int max_steps = 20;
  DeltaOptions delta;
};

struct Failure {
  std::uint64_t seed = 0;
  std::string complex_text;
  std::string map_text;
  std::optional<bool> delta_value;
  std::optional<bool> oracle_value;
  std::string error;  // empty unless a trial raised
};

struct VerificationReport {
  std::uint64_t campaign_seed = 0;
  long long trials = 0;
  std::vector<Failure> failures;
  long long elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Checks delta_quantity == lefschetz_oracle on seeded random trials.
/// Trial i uses derive_seed(campaign_seed, i), so the report does not depend on `jobs`.
VerificationReport verify_proposition(const VerifyOptions& options);

}  // namespace uchain
