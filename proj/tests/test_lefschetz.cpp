#include <gtest/gtest.h>

#include "support.hpp"
#include "uchain/error.hpp"
#include "uchain/homology.hpp"
#include "uchain/lefschetz.hpp"
#include "uchain/normal_form.hpp"

using namespace uchain;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

GradedComplex two_step(int n) {
  return GradedComplex::build("C", {{"a", 1}, {"b", 0}}, {{"a", "b", Polynomial::monomial(n)}});
}

LaurentChain term(const GradedComplex& c, const char* id, int exp) {
  return LaurentChain::term(c.rank(), *c.index_of(id), exp);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalCheck;
}

}  // namespace

TEST(Phi, Examples) {
  GradedComplex c = two_step(3);
  ChainMap f = phi(c);
  EXPECT_EQ(f.degree(), -1);
  EXPECT_EQ(f(term(c, "a", 0)), term(c, "b", 2));
  EXPECT_TRUE(phi(two_step(2)).matrix().is_zero());
  EXPECT_EQ(phi(GradedComplex::build("C", {{"a", 1}, {"b", 0}}, {{"a", "b", P("U+U^2+U^5")}})).matrix()(1, 0),
            P("1+U^4"));
}

TEST(Phi, AnticommutesWithDifferential) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Trial t = generate_trial(s, 8, 6, 20);
    const PolyMatrix& d = t.complex.differential();
    PolyMatrix f = phi(t.complex).matrix();
    EXPECT_TRUE((f * d + d * f).is_zero()) << s;
  }
}

TEST(Phi, DualIsTransposeOfDerivative) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    GradedComplex c = generate_trial(s, 8, 6, 20).complex;
    EXPECT_EQ(phi_dual(c).matrix(), phi(dual(c)).matrix());
    EXPECT_EQ(phi_dual(c).source(), dual(c));
  }
}

// Conjugating by a change of basis moves Φ by a null-homotopic term, so the
// maps induced on H+ agree.
TEST(Phi, InducedMapOnPlusIsBasisIndependent) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    GradedComplex c = generate_trial(s, 8, 6, 20).complex;
    BasisChange change = random_basis_change_with_matrices(c, s + 1, 20);
    PolyMatrix moved = change.basis * phi(change.complex).matrix() * change.inverse;
    const int w = std::max(1, classify(c).max_exponent());
    ChainMap f = phi(c);
    for (const auto& x : h_plus(c).basis) {
      LaurentChain diff = (f(x) + apply(moved, x)).negative_part();
      EXPECT_TRUE(is_boundary_plus(c, diff, w)) << "seed " << s;
    }
  }
}

TEST(TraceCotrace, Identities) {
  GradedComplex c = two_step(2);
  GradedComplex t = tensor(c, dual(c));
  ChainMap tr = trace_map(c), cotr = cotrace_map(c);
  LaurentChain x = term(t, "a|a^", 3);
  EXPECT_EQ(tr(x), LaurentChain::term(1, 0, 3));
  EXPECT_TRUE(tr(term(t, "a|b^", 3)).is_zero());
  EXPECT_EQ(cotr(LaurentChain::term(1, 0, 0)), term(t, "a|a^", 0) + term(t, "b|b^", 0));
  for (std::uint64_t s = 0; s < 60; ++s) {
    GradedComplex r = generate_trial(s, 8, 6, 20).complex;
    GradedComplex rt = tensor(r, dual(r));
    EXPECT_TRUE((trace_map(r).matrix() * rt.differential()).is_zero());
    EXPECT_TRUE((rt.differential() * cotrace_map(r).matrix()).is_zero());
    PolyMatrix loop = trace_map(r).matrix() * cotrace_map(r).matrix();
    EXPECT_EQ(loop(0, 0), r.rank() % 2 ? Polynomial::one() : Polynomial());
  }
}

TEST(Delta, TwoStepIdentity) {
  for (int n = 1; n <= 64; ++n) {
    GradedComplex c = two_step(n);
    EXPECT_EQ(delta_quantity(c, ChainMap::identity(c)), n % 2 == 1) << n;
  }
}

TEST(Delta, TwoStepScalar) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(1, 16);
    bool k = rng.chance(1, 2);
    Polynomial p = rng.polynomial(5).shifted_up(1);
    if (k) p = p + Polynomial::one();
    GradedComplex c = two_step(n);
    EXPECT_EQ(delta_quantity(c, ChainMap::scalar(c, p)), k && n % 2 == 1);
  }
  EXPECT_TRUE(delta_quantity(two_step(3), ChainMap::scalar(two_step(3), P("1+U"))));
}

TEST(Delta, Errors) {
  GradedComplex c = two_step(2);
  NormalForm nf;
  nf.one_steps = {0};
  GradedComplex free = realize(nf);
  EXPECT_EQ(kind_of([&] { delta_quantity(free, ChainMap::identity(free)); }), ErrorKind::InfinityNotZero);
  EXPECT_EQ(kind_of([&] { delta_quantity(c, phi(c)); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([&] { delta_quantity(c, ChainMap::identity(two_step(3))); }), ErrorKind::ComplexMismatch);
  GradedComplex acyclic = GradedComplex::build("A", {{"u", 1}, {"v", 0}}, {{"u", "v", P("1")}});
  EXPECT_FALSE(delta_quantity(acyclic, ChainMap::identity(acyclic)));
}

TEST(Oracle, Examples) {
  GradedComplex c = two_step(3);
  LefschetzTrace t = lefschetz_trace(c, ChainMap::identity(c));
  EXPECT_EQ(t.dimension, 3u);
  EXPECT_TRUE(t.odd);
  EXPECT_FALSE(t.even);
  EXPECT_TRUE(t.value);
  EXPECT_FALSE(lefschetz_oracle(c, ChainMap::zero(c, c)));
  for (std::uint64_t s = 0; s < 40; ++s) {
    Trial trial = generate_trial(s, 8, 6, 20);
    // U is nilpotent on H+ and commutes with F.
    ChainMap uf = compose(ChainMap::scalar(trial.complex, P("U")), trial.map);
    EXPECT_FALSE(lefschetz_oracle(trial.complex, uf)) << s;
    EXPECT_FALSE(delta_quantity(trial.complex, uf)) << s;
  }
}

TEST(Delta, InvariantUnderBasisChange) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Trial t = generate_trial(s, 8, 6, 20);
    BasisChange change = random_basis_change_with_matrices(t.complex, s + 9, 20);
    EXPECT_EQ(delta_quantity(t.complex, t.map), delta_quantity(change.complex, transport(t.map, change))) << s;
  }
}

TEST(Delta, IndependentOfRepresentative) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Trial t = generate_trial(s, 6, 5, 20);
    GradedComplex tt = tensor(t.complex, dual(t.complex));
    LaurentChain w = delta_inverse_cotrace(t.complex);
    Rng rng(s);
    LaurentChain y(tt.rank());
    for (std::size_t g = 0; g < tt.rank(); ++g) {
      if (rng.chance(1, 3)) y[g] = LaurentPoly(-6, rng.polynomial(8));
    }
    LaurentChain moved = w + apply(tt.differential(), y).negative_part();
    EXPECT_EQ(evaluate_at_representative(t.complex, t.map, w), delta_quantity(t.complex, t.map));
    EXPECT_EQ(evaluate_at_representative(t.complex, t.map, moved), evaluate_at_representative(t.complex, t.map, w))
        << s;
  }
}

TEST(Delta, AdditiveInTheMap) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Trial t = generate_trial(s, 8, 6, 20);
    ChainMap g = random_chain_map(t.complex, s + 100);
    ChainMap sum = t.map + g;
    EXPECT_EQ(delta_quantity(t.complex, sum), delta_quantity(t.complex, t.map) != delta_quantity(t.complex, g));
    EXPECT_EQ(lefschetz_oracle(t.complex, sum), lefschetz_oracle(t.complex, t.map) != lefschetz_oracle(t.complex, g));
  }
}

TEST(Delta, CompositionOrdersAgree) {
  DeltaOptions map_first;
  map_first.order = CompositionOrder::MapFirst;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Trial t = generate_trial(s, 8, 6, 20);
    EXPECT_EQ(delta_quantity(t.complex, t.map), delta_quantity(t.complex, t.map, map_first)) << s;
  }
}

TEST(Delta, AgreesWithOracle) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Trial t = generate_trial(s, 8, 6, 20);
    EXPECT_EQ(delta_quantity(t.complex, t.map), lefschetz_oracle(t.complex, t.map)) << s;
  }
}

TEST(Verify, EmptyCampaignAndParameterChecks) {
  VerifyOptions opts;
  opts.campaign_seed = 1;
  opts.trials = 0;
  VerificationReport r = verify_proposition(opts);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.trials, 0);

  auto bad = [](auto mutate) {
    VerifyOptions o;
    o.trials = 1;
    mutate(o);
    return kind_of([&] { verify_proposition(o); });
  };
  EXPECT_EQ(bad([](VerifyOptions& o) { o.trials = -1; }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(bad([](VerifyOptions& o) { o.max_rank = 1; }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(bad([](VerifyOptions& o) { o.max_rank = 13; }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(bad([](VerifyOptions& o) { o.max_exponent = 0; }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(bad([](VerifyOptions& o) { o.jobs = 0; }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(bad([](VerifyOptions& o) { o.max_steps = 21; }), ErrorKind::ParameterOutOfRange);
}

TEST(Verify, MutationIsDetectedAndJobsDoNotMatter) {
  VerifyOptions opts;
  opts.campaign_seed = 7;
  opts.trials = 200;
  opts.delta.replace_phi_dual_with_identity = true;
  VerificationReport one = verify_proposition(opts);
  opts.jobs = 4;
  VerificationReport four = verify_proposition(opts);
  EXPECT_FALSE(one.passed());
  ASSERT_EQ(one.failures.size(), four.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) {
    EXPECT_EQ(one.failures[i].seed, four.failures[i].seed);
    EXPECT_EQ(one.failures[i].complex_text, four.failures[i].complex_text);
    EXPECT_EQ(one.failures[i].delta_value, four.failures[i].delta_value);
  }
}

TEST(Verify, CampaignPasses) {
  VerifyOptions opts;
  opts.campaign_seed = 11;
  opts.trials = 200;
  opts.jobs = 2;
  EXPECT_TRUE(verify_proposition(opts).passed());
}
