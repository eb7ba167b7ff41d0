#include "uchain/lefschetz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "uchain/error.hpp"
#include "uchain/homology.hpp"
#include "uchain/normal_form.hpp"
#include "uchain/random.hpp"
#include "uchain/text_format.hpp"
#include "uchain/window.hpp"

namespace uchain {

ChainMap phi(const GradedComplex& c) {
  const auto& d = c.differential();
  PolyMatrix m(d.rows(), d.cols());
  for (std::size_t t = 0; t < d.rows(); ++t) {
    for (std::size_t s = 0; s < d.cols(); ++s) {
      if (!d(t, s).is_zero()) m(t, s) = d(t, s).derivative();
    }
  }
  return {"Phi", c, c, std::move(m), -1};
}

ChainMap phi_dual(const GradedComplex& c) { return dual(phi(c)).renamed("Phi^"); }

ChainMap trace_map(const GradedComplex& c) {
  const std::size_t n = c.rank();
  PolyMatrix m(1, n * n);
  for (std::size_t i = 0; i < n; ++i) m(0, i * n + i) = Polynomial::one();
  return {"tr", tensor(c, dual(c)), unit_complex(), std::move(m), 0};
}

ChainMap cotrace_map(const GradedComplex& c) {
  const std::size_t n = c.rank();
  PolyMatrix m(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) m(i * n + i, 0) = Polynomial::one();
  return {"cotr", unit_complex(), tensor(c, dual(c)), std::move(m), 0};
}

namespace {

// (a ⊗ b)(w) on tensor(C, dual(C)) without assembling the rank n^2 matrix.
LaurentChain apply_tensor(const PolyMatrix& a, const PolyMatrix& b, const LaurentChain& w) {
  const std::size_t n = a.rows();
  LaurentChain out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& coeff = w[i * n + j];
      if (coeff.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < n; ++i2) {
        if (a(i2, i).is_zero()) continue;
        LaurentPoly left = coeff * a(i2, i);
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          if (!b(j2, j).is_zero()) out[i2 * n + j2] += left * b(j2, j);
        }
      }
    }
  }
  return out;
}

LaurentPoly trace_of(const LaurentChain& w, std::size_t n) {
  LaurentPoly out;
  for (std::size_t i = 0; i < n; ++i) out += w[i * n + i];
  return out;
}

LaurentChain cotrace_chain(std::size_t n) {
  LaurentChain z(n * n);
  for (std::size_t i = 0; i < n; ++i) z.flip(i * n + i, 0);
  return z;
}

void check_endomorphism(const GradedComplex& c, const ChainMap& f) {
  if (f.degree() != 0) {
    throw Error(ErrorKind::DegreeMismatch, "expected a degree-0 map, got degree " + std::to_string(f.degree()));
  }
  if (!(f.source() == c) || !(f.target() == c)) {
    throw Error(ErrorKind::ComplexMismatch, "map '" + f.name() + "' is not an endomorphism of '" + c.name() + "'");
  }
}

// Largest torsion exponent; throws when H∞ is nonzero.
int finite_plus_bound(const GradedComplex& c) {
  NormalForm nf = classify(c);
  if (!nf.one_steps.empty()) {
    throw Error(ErrorKind::InfinityNotZero, "H-infinity of '" + c.name() + "' is nonzero, so H+ is infinite");
  }
  return nf.max_exponent();
}

PolyMatrix dual_factor(const GradedComplex& c, const DeltaOptions& options) {
  if (options.replace_phi_dual_with_identity) return PolyMatrix::identity(c.rank());
  return phi_dual(c).matrix();
}

}  // namespace

LaurentChain delta_inverse_cotrace(const GradedComplex& c) {
  int n = finite_plus_bound(c);
  if (n == 0) return LaurentChain(c.rank() * c.rank());
  // The torsion of C ⊗ C^ is bounded by that of C, so the window of C applies.
  return delta_inverse(tensor(c, dual(c)), cotrace_chain(c.rank()), {n, true});
}

bool evaluate_at_representative(const GradedComplex& c, const ChainMap& f, const LaurentChain& w) {
  check_endomorphism(c, f);
  return trace_of(apply_tensor(f.matrix(), phi_dual(c).matrix(), w), c.rank()).coefficient(-1);
}

bool delta_quantity(const GradedComplex& c, const ChainMap& f, const DeltaOptions& options) {
  check_endomorphism(c, f);
  const int n = finite_plus_bound(c);
  if (n == 0) return false;  // no 2-steps: H+ = 0

  const std::size_t r = c.rank();
  GradedComplex t = tensor(c, dual(c));
  PolyMatrix second = dual_factor(c, options);
  LaurentChain z = cotrace_chain(r);
  LaurentChain result;
  if (options.order == CompositionOrder::InverseFirst) {
    LaurentChain w = delta_inverse(t, z, {n, true});
    result = apply_tensor(f.matrix(), second, w);
  } else {
    LaurentChain mapped = apply_tensor(f.matrix(), second, z);
    result = delta_inverse(t, mapped, {n, true});
  }
  return trace_of(result, r).coefficient(-1);
}

namespace {

struct WindowTrace {
  std::size_t dimension = 0;
  bool trace = false;
};

// Trace of F_* on the classes of cycles of U^-w C / C, grading k.
WindowTrace trace_on_window(const GradedComplex& c, const ChainMap& f, int k, int w) {
  WindowedHomology h = windowed_homology(c, k, -w, 0, -2 * w, 0);
  Reducer independent = h.boundaries;
  std::vector<LaurentChain> reps;
  for (const auto& z : h.cycle_chains()) {
    if (independent.insert(h.in_target(z))) reps.push_back(z);
  }
  const std::size_t dim = reps.size();

  // Boundaries carry zero tags, representative i carries e_i, so reducing a
  // cycle leaves its coordinates in the tag.
  Reducer coords(h.target.dim(), dim);
  for (const auto& row : h.boundaries.rows_with_pivot_at_least(0)) coords.insert(row);
  for (std::size_t i = 0; i < dim; ++i) coords.insert(h.in_target(reps[i]), BitVector::unit(dim, i));

  WindowTrace out{dim, false};
  for (std::size_t i = 0; i < dim; ++i) {
    LaurentChain image = f(reps[i]).negative_part();
    auto reduced = coords.reduce(h.in_target(image));
    if (!reduced.residual.is_zero()) throw Error(ErrorKind::InternalCheck, "F maps a cycle of C+ outside the window");
    if (reduced.tag.get(i)) out.trace = !out.trace;
  }
  return out;
}

}  // namespace

LefschetzTrace lefschetz_trace(const GradedComplex& c, const ChainMap& f) {
  check_endomorphism(c, f);
  const int n = finite_plus_bound(c);
  LefschetzTrace out;
  if (n == 0) return out;
  for (int k : c.gradings()) {
    WindowTrace narrow = trace_on_window(c, f, k, n);
    WindowTrace wide = trace_on_window(c, f, k, 2 * n);
    if (narrow.dimension != wide.dimension || narrow.trace != wide.trace) {
      throw Error(ErrorKind::InternalCheck, "H+ trace changed at double window width in grading " + std::to_string(k));
    }
    out.dimension += narrow.dimension;
    bool& part = (k % 2 == 0) ? out.even : out.odd;
    part = part != narrow.trace;
  }
  out.value = out.even != out.odd;
  return out;
}

bool lefschetz_oracle(const GradedComplex& c, const ChainMap& f) { return lefschetz_trace(c, f).value; }

Trial generate_trial(std::uint64_t seed, int max_rank, int max_exponent, int max_steps) {
  Rng rng(seed);
  NormalForm nf = random_torsion_normal_form(rng.next(), max_rank, max_exponent);
  GradedComplex c = realize(nf, "C");
  // Sometimes add an acyclic pair with a unit coefficient 1 + U p.
  if (static_cast<int>(c.rank()) + 2 <= max_rank && rng.chance(1, 4)) {
    int g = rng.uniform(0, 2);
    Polynomial unit = Polynomial::one() + rng.polynomial(2).shifted_up(1);
    GradedComplex acyclic = GradedComplex::build("A", {{"u", g}, {"v", g - 1}}, {{"u", "v", unit}});
    c = direct_sum(c, acyclic).renamed("C");
  }
  c = random_basis_change(c, rng.next(), rng.uniform(0, max_steps));
  ChainMap f = random_chain_map(c, rng.next()).renamed("F");
  return {std::move(c), std::move(f)};
}

VerificationReport verify_proposition(const VerifyOptions& options) {
  if (options.trials < 0) throw Error(ErrorKind::ParameterOutOfRange, "trials must be nonnegative");
  if (options.max_rank < 2 || options.max_rank > 12) {
    throw Error(ErrorKind::ParameterOutOfRange, "max-rank must be between 2 and 12");
  }
  if (options.max_exponent < 1 || options.max_exponent > 64) {
    throw Error(ErrorKind::ParameterOutOfRange, "max-exponent must be between 1 and 64");
  }
  if (options.jobs < 1) throw Error(ErrorKind::ParameterOutOfRange, "jobs must be positive");
  if (options.max_steps < 0 || options.max_steps > 20) {
    throw Error(ErrorKind::ParameterOutOfRange, "basis-change steps must be between 0 and 20");
  }

  auto start = std::chrono::steady_clock::now();
  const auto count = static_cast<std::size_t>(options.trials);
  std::vector<std::optional<Failure>> results(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      std::uint64_t seed = derive_seed(options.campaign_seed, i);
      Failure failure;
      failure.seed = seed;
      try {
        Trial trial = generate_trial(seed, options.max_rank, options.max_exponent, options.max_steps);
        failure.complex_text = format_complex(trial.complex);
        failure.map_text = format_chain_map(trial.map);
        bool d = delta_quantity(trial.complex, trial.map, options.delta);
        bool l = lefschetz_oracle(trial.complex, trial.map);
        if (d == l) continue;
        failure.delta_value = d;
        failure.oracle_value = l;
      } catch (const Error& e) {
        failure.error = e.what();
      }
      results[i] = std::move(failure);
    }
  };

  const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(options.jobs), std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.campaign_seed = options.campaign_seed;
  report.trials = options.trials;
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace uchain
