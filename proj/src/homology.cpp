#include "uchain/homology.hpp"

#include <algorithm>
#include <set>

#include "uchain/error.hpp"
#include "uchain/window.hpp"

namespace uchain {

std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Minus: return "minus";
    case Flavor::Infinity: return "infinity";
    case Flavor::Plus: return "plus";
    case Flavor::RedMinus: return "red-minus";
    case Flavor::RedPlus: return "red-plus";
  }
  return "minus";
}

Flavor parse_flavor(const std::string& text) {
  if (text == "minus") return Flavor::Minus;
  if (text == "infinity") return Flavor::Infinity;
  if (text == "plus") return Flavor::Plus;
  if (text == "red-minus" || text == "red_minus") return Flavor::RedMinus;
  if (text == "red-plus" || text == "red_plus") return Flavor::RedPlus;
  throw Error(ErrorKind::ParameterOutOfRange, "unknown flavor '" + text + "'");
}

namespace {

// 2-steps in a fixed order: by grading of a, exponent, then slot.
std::vector<PairSummand> ordered_pairs(const GradedComplex& c, const Decomposition& dec) {
  std::vector<PairSummand> pairs = dec.pairs;
  std::sort(pairs.begin(), pairs.end(), [&](const PairSummand& x, const PairSummand& y) {
    auto kx = std::tuple(c.grading(x.source), x.exponent, x.source);
    auto ky = std::tuple(c.grading(y.source), y.exponent, y.source);
    return kx < ky;
  });
  return pairs;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return a * divmod(b, gcd(a, b)).first;
}

// Column `slot` of the basis matrix times the lcm of its denominators: a
// polynomial vector spanning the same F2[[U]]-line.
LaurentChain cleared_column(const LocalMatrix& basis, std::size_t slot) {
  Polynomial d = Polynomial::one();
  for (std::size_t g = 0; g < basis.rows(); ++g) {
    if (!basis(g, slot).is_polynomial()) d = lcm(d, basis(g, slot).denominator());
  }
  LaurentChain out(basis.rows());
  for (std::size_t g = 0; g < basis.rows(); ++g) {
    const LocalScalar& s = basis(g, slot);
    if (s.is_zero()) continue;
    out[g] = LaurentPoly(0, s.numerator() * divmod(d, s.denominator()).first);
  }
  return out;
}

std::vector<int> support_gradings(const GradedComplex& c, const LaurentChain& x) {
  std::set<int> gs;
  for (std::size_t g = 0; g < x.rank(); ++g) {
    if (!x[g].is_zero()) gs.insert(c.grading(g));
  }
  return {gs.begin(), gs.end()};
}

int torsion_bound(const NormalForm& nf) { return std::max(1, nf.max_exponent()); }

std::map<int, int> free_ranks_of(const NormalForm& nf) {
  std::map<int, int> out;
  for (int g : nf.one_steps) ++out[g];
  return out;
}

std::vector<LaurentChain> free_generators(const Decomposition& dec) {
  std::vector<LaurentChain> out;
  for (std::size_t slot : dec.free) out.push_back(cleared_column(dec.basis, slot));
  return out;
}

}  // namespace

std::vector<LaurentChain> plus_basis(const Decomposition& dec, std::size_t rank) {
  // The pairs are ordered by the caller's convention; see ordered_pairs.
  std::vector<LaurentChain> out;
  for (const auto& p : dec.pairs) {
    for (int i = 1; i <= p.exponent; ++i) {
      LaurentChain x(rank);
      for (std::size_t g = 0; g < rank; ++g) {
        const LocalScalar& s = dec.basis(g, p.source);
        if (!s.is_zero()) x[g] = LaurentPoly(-i, s.series(i));
      }
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<LaurentChain> minus_torsion_basis(const GradedComplex& c, const Decomposition& dec) {
  std::vector<LaurentChain> out;
  for (const auto& p : dec.pairs) {
    LaurentChain image = apply(c.differential(), cleared_column(dec.basis, p.source));
    // ∂ of the cleared a-vector is U^n times the cleared b-vector.
    LaurentChain b = image.shifted(-p.exponent);
    if (b.min_exponent() < 0) throw Error(ErrorKind::InternalCheck, "2-step image not divisible by U^n");
    for (int j = 0; j < p.exponent; ++j) out.push_back(b.shifted(j));
  }
  return out;
}

namespace {

Decomposition sorted_decomposition(const GradedComplex& c) {
  Decomposition dec = decompose(c);
  dec.pairs = ordered_pairs(c, dec);
  return dec;
}

std::vector<TorsionSummand> torsion_of(const GradedComplex& c, const Decomposition& dec, int shift) {
  std::vector<TorsionSummand> out;
  for (const auto& p : dec.pairs) out.push_back({c.grading(p.source) + shift, p.exponent});
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t torsion_size(const Decomposition& dec) {
  std::size_t n = 0;
  for (const auto& p : dec.pairs) n += static_cast<std::size_t>(p.exponent);
  return n;
}

}  // namespace

HomologyPresentation h_minus(const GradedComplex& c) {
  Decomposition dec = sorted_decomposition(c);
  HomologyPresentation h;
  h.flavor = Flavor::Minus;
  h.free_ranks = free_ranks_of(dec.normal_form);
  h.torsion = torsion_of(c, dec, -1);
  if (dec.free.empty()) {
    h.f2_dimension = torsion_size(dec);
    h.basis = minus_torsion_basis(c, dec);
  } else {
    h.basis = free_generators(dec);
  }
  return h;
}

HomologyPresentation h_infinity(const GradedComplex& c) {
  Decomposition dec = sorted_decomposition(c);
  HomologyPresentation h;
  h.flavor = Flavor::Infinity;
  h.free_ranks = free_ranks_of(dec.normal_form);
  if (dec.free.empty()) {
    h.f2_dimension = 0;
  } else {
    h.basis = free_generators(dec);
  }
  return h;
}

HomologyPresentation h_plus(const GradedComplex& c) {
  Decomposition dec = sorted_decomposition(c);
  HomologyPresentation h;
  h.flavor = Flavor::Plus;
  h.free_ranks = free_ranks_of(dec.normal_form);
  h.torsion = torsion_of(c, dec, 0);
  if (dec.free.empty()) {
    h.f2_dimension = torsion_size(dec);
    h.basis = plus_basis(dec, c.rank());
  } else {
    // U^-1 times each free generator generates a copy of F2[U,U^-1]/F2[U].
    for (auto& x : free_generators(dec)) h.basis.push_back(x.shifted(-1));
  }
  return h;
}

HomologyPresentation h_red(const GradedComplex& c, Side side) {
  Decomposition dec = sorted_decomposition(c);
  HomologyPresentation h;
  h.flavor = side == Side::Minus ? Flavor::RedMinus : Flavor::RedPlus;
  h.torsion = torsion_of(c, dec, side == Side::Minus ? -1 : 0);
  h.f2_dimension = torsion_size(dec);
  h.basis = side == Side::Minus ? minus_torsion_basis(c, dec) : plus_basis(dec, c.rank());
  return h;
}

HomologyPresentation homology(const GradedComplex& c, Flavor flavor) {
  switch (flavor) {
    case Flavor::Minus: return h_minus(c);
    case Flavor::Infinity: return h_infinity(c);
    case Flavor::Plus: return h_plus(c);
    case Flavor::RedMinus: return h_red(c, Side::Minus);
    case Flavor::RedPlus: return h_red(c, Side::Plus);
  }
  return h_minus(c);
}

bool is_cycle(const GradedComplex& c, const LaurentChain& x) {
  return apply(c.differential(), x).is_zero();
}

LaurentChain delta(const GradedComplex& c, const LaurentChain& x) {
  LaurentChain boundary = apply(c.differential(), x.negative_part());
  if (!boundary.negative_part().is_zero()) {
    throw Error(ErrorKind::NotACycleInPlus, "the negative part has a boundary below exponent 0");
  }
  return boundary;
}

bool is_boundary_plus(const GradedComplex& c, const LaurentChain& x, int margin) {
  LaurentChain y = x.negative_part();
  if (y.is_zero()) return true;
  const int lo = y.min_exponent() - std::max(margin, 1);
  for (int k : support_gradings(c, y)) {
    Window target(c, k, lo, 0);
    Window above(c, k + 1, lo, 0);
    Reducer boundaries(target.dim(), 0);
    for (auto& col : window_map(c.differential(), above, target).columns) boundaries.insert(std::move(col));
    if (!boundaries.contains(target.encode(y))) return false;
  }
  return true;
}

bool is_boundary_minus(const GradedComplex& c, const LaurentChain& x, int depth) {
  LaurentChain y = x.restricted(0, depth);
  if (y.is_zero()) return true;
  for (int k : support_gradings(c, y)) {
    Window target(c, k, 0, depth);
    Window above(c, k + 1, 0, depth);
    Reducer boundaries(target.dim(), 0);
    for (auto& col : window_map(c.differential(), above, target).columns) boundaries.insert(std::move(col));
    if (!boundaries.contains(target.encode(y))) return false;
  }
  return true;
}

namespace {

// Solves ∂v = x on exponents [-width, depth) grading by grading and returns
// the negative part of v.
LaurentChain solve_lift(const GradedComplex& c, const LaurentChain& x, int width, int depth) {
  LaurentChain out(c.rank());
  for (int k : support_gradings(c, x)) {
    Window unknowns(c, k + 1, -width, depth);
    Window equations(c, k, -width, depth);
    auto v = solve(window_map(c.differential(), unknowns, equations), equations.encode(x));
    if (!v) throw Error(ErrorKind::NotInImage, "class is not in the image of the connecting map");
    out += unknowns.decode(*v).negative_part();
  }
  return out;
}

}  // namespace

LaurentChain delta_inverse(const GradedComplex& c, const LaurentChain& x, const DeltaInverseOptions& options) {
  int n = 0;
  if (options.window) {
    n = std::max(1, *options.window);
  } else {
    NormalForm nf = classify(c);
    if (!nf.one_steps.empty()) {
      throw Error(ErrorKind::InfinityNotZero, "H-infinity is nonzero, so delta is not invertible");
    }
    n = torsion_bound(nf);
  }
  if (!x.negative_part().is_zero() || !is_cycle(c, x)) {
    throw Error(ErrorKind::NotACycle, "expected a cycle of C with nonnegative exponents");
  }
  if (x.is_zero()) return LaurentChain(c.rank());

  LaurentChain y = solve_lift(c, x, n, n);
  if (!is_boundary_minus(c, delta(c, y) + x, n)) {
    throw Error(ErrorKind::InternalCheck, "delta of the lift is not homologous to the class");
  }
  if (options.stability_check) {
    LaurentChain wide = solve_lift(c, x, 2 * n, 2 * n);
    if (!is_boundary_plus(c, y + wide, 2 * n)) {
      throw Error(ErrorKind::InternalCheck, "lift changed at double window width");
    }
  }
  return y;
}

namespace {

struct LesSpaces {
  WindowedHomology minus;
  WindowedHomology infinity;
  WindowedHomology plus;
};

struct LesRun {
  std::vector<LesJoint> joints;
  std::map<int, std::size_t> delta_ranks;
  std::map<int, std::size_t> dim_minus, dim_infinity, dim_plus;
  bool exact = true;
};

LesRun run_les(const GradedComplex& c, int w) {
  std::vector<int> gradings = c.gradings();
  std::map<int, LesSpaces> spaces;
  auto spaces_at = [&](int k) -> LesSpaces& {
    auto it = spaces.find(k);
    if (it == spaces.end()) {
      it = spaces
               .emplace(k, LesSpaces{windowed_homology(c, k, 0, 2 * w, 0, w),
                                     windowed_homology(c, k, -w, 2 * w, -2 * w, w),
                                     windowed_homology(c, k, -w, 0, -2 * w, 0)})
               .first;
    }
    return it->second;
  };

  struct Ranks {
    std::size_t iota = 0, pi = 0, delta = 0;  // ι_k: H-_k -> H∞_k, π_k: H∞_k -> H+_k, δ_k: H+_k -> H-_{k-1}
    bool zero_compositions = true;
  };
  std::map<int, Ranks> ranks;
  LesRun run;

  for (int k : gradings) {
    LesSpaces& s = spaces_at(k);
    LesSpaces& below = spaces_at(k - 1);
    Ranks& r = ranks[k];

    std::vector<BitVector> iota_images;
    std::vector<BitVector> pi_iota;
    for (const auto& z : s.minus.cycle_chains()) {
      iota_images.push_back(s.infinity.in_target(z));
      pi_iota.push_back(s.plus.in_target(z.negative_part()));
    }
    r.iota = s.infinity.class_rank(iota_images);

    std::vector<BitVector> pi_images;
    std::vector<BitVector> delta_pi;
    for (const auto& z : s.infinity.cycle_chains()) {
      LaurentChain neg = z.negative_part();
      pi_images.push_back(s.plus.in_target(neg));
      delta_pi.push_back(below.minus.in_target(apply(c.differential(), neg).nonnegative_part()));
    }
    r.pi = s.plus.class_rank(pi_images);

    std::vector<BitVector> delta_images;
    std::vector<BitVector> iota_delta;
    for (const auto& z : s.plus.cycle_chains()) {
      LaurentChain d = apply(c.differential(), z).nonnegative_part();
      delta_images.push_back(below.minus.in_target(d));
      iota_delta.push_back(below.infinity.in_target(d));
    }
    r.delta = below.minus.class_rank(delta_images);

    r.zero_compositions = s.plus.class_rank(pi_iota) == 0 && below.minus.class_rank(delta_pi) == 0 &&
                          below.infinity.class_rank(iota_delta) == 0;
    run.delta_ranks[k] = r.delta;
  }

  for (int k : gradings) {
    LesSpaces& s = spaces_at(k);
    const Ranks& r = ranks[k];
    std::size_t delta_in = ranks.count(k + 1) ? ranks[k + 1].delta : 0;
    bool compositions = r.zero_compositions && (!ranks.count(k + 1) || ranks[k + 1].zero_compositions);

    std::size_t dm = s.minus.dimension();
    std::size_t di = s.infinity.dimension();
    std::size_t dp = s.plus.dimension();
    run.dim_minus[k] = dm;
    run.dim_infinity[k] = di;
    run.dim_plus[k] = dp;

    // At each joint, image of the incoming map and kernel of the outgoing map
    // have the same dimension, and consecutive maps compose to zero.
    LesJoint jm{k, Flavor::Minus, dm, delta_in, dm - r.iota, delta_in == dm - r.iota && compositions};
    LesJoint ji{k, Flavor::Infinity, di, r.iota, di - r.pi, r.iota == di - r.pi && compositions};
    LesJoint jp{k, Flavor::Plus, dp, r.pi, dp - r.delta, r.pi == dp - r.delta && compositions};
    for (const auto& j : {jm, ji, jp}) {
      run.exact = run.exact && j.exact;
      run.joints.push_back(j);
    }
  }
  return run;
}

}  // namespace

LesReport les_exactness_check(const GradedComplex& c) {
  if (c.rank() > 12) {
    throw Error(ErrorKind::RankTooLarge, "exactness check supports rank <= 12, got " + std::to_string(c.rank()));
  }
  NormalForm nf = classify(c);
  const int n = torsion_bound(nf);
  const int w = 2 * n + 2;

  LesRun narrow = run_les(c, w);
  LesRun wide = run_les(c, 2 * w);

  LesReport report;
  report.window = w;
  report.joints = narrow.joints;
  report.delta_ranks = narrow.delta_ranks;
  report.exact = narrow.exact && wide.exact;

  std::map<int, std::size_t> free;
  std::map<int, std::size_t> torsion_plus;
  std::map<int, std::size_t> torsion_minus;
  for (int g : nf.one_steps) ++free[g];
  for (const auto& t : nf.two_steps) {
    torsion_plus[t.grading_a] += static_cast<std::size_t>(t.exponent);
    torsion_minus[t.grading_a - 1] += static_cast<std::size_t>(t.exponent);
  }

  // Free summands contribute width-proportional dimensions; what is left over
  // must not depend on the window.
  report.stable = narrow.delta_ranks == wide.delta_ranks;
  report.matches_normal_form = true;
  for (int k : c.gradings()) {
    auto fk = free[k];
    auto reduced = [&](const LesRun& run, int width) {
      return std::tuple(run.dim_minus.at(k) - width * fk, run.dim_infinity.at(k) - 2 * width * fk,
                        run.dim_plus.at(k) - width * fk);
    };
    report.stable = report.stable && reduced(narrow, w) == reduced(wide, 2 * w);
    report.matches_normal_form = report.matches_normal_form &&
                                 reduced(narrow, w) == std::tuple(torsion_minus[k], std::size_t{0}, torsion_plus[k]) &&
                                 narrow.delta_ranks.at(k) == torsion_plus[k];
  }
  return report;
}

std::map<int, std::size_t> f2_betti(const GradedComplex& c) {
  if (!c.is_u_free()) throw Error(ErrorKind::NotUFree, "complex '" + c.name() + "' has U in its differential");
  std::map<int, std::size_t> out;
  for (int k : c.gradings()) out[k] = windowed_homology(c, k, 0, 1, 0, 1).dimension();
  return out;
}

std::map<int, std::size_t> mapping_torus_betti(const GradedComplex& c, const ChainMap& phi) {
  if (phi.degree() != 0) {
    throw Error(ErrorKind::DegreeMismatch, "mapping torus needs a degree-0 map, got degree " + std::to_string(phi.degree()));
  }
  if (!(phi.source() == c) || !(phi.target() == c)) {
    throw Error(ErrorKind::ComplexMismatch, "map is not an endomorphism of '" + c.name() + "'");
  }
  if (!c.is_u_free()) throw Error(ErrorKind::NotUFree, "complex '" + c.name() + "' has U in its differential");
  const auto& m = phi.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (m(r, col).degree() > 0) throw Error(ErrorKind::NotUFree, "map '" + phi.name() + "' has U in its entries");
    }
  }
  GradedComplex torus = cone(ChainMap::identity(c) + phi);
  std::map<int, std::size_t> out = f2_betti(torus);
  // Report every grading between the extremes, including zeros.
  if (!out.empty()) {
    for (int k = out.begin()->first; k <= out.rbegin()->first; ++k) out.try_emplace(k, 0);
  }
  return out;
}

bool f2_pairing(const LaurentChain& x, const LaurentChain& y) {
  if (x.rank() != y.rank()) throw Error(ErrorKind::ComplexMismatch, "pairing needs chains on C and its dual");
  bool acc = false;
  for (std::size_t g = 0; g < x.rank(); ++g) {
    if (x[g].is_zero() || y[g].is_zero()) continue;
    for (int i : x[g].exponents()) {
      if (y[g].coefficient(-1 - i)) acc = !acc;
    }
  }
  return acc;
}

}  // namespace uchain
