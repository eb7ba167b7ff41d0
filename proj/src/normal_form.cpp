#include "uchain/normal_form.hpp"

#include <algorithm>
#include <functional>

#include "uchain/error.hpp"
#include "uchain/random.hpp"

namespace uchain {

void NormalForm::canonicalize() {
  std::sort(one_steps.begin(), one_steps.end());
  std::sort(two_steps.begin(), two_steps.end());
}

int NormalForm::max_exponent() const {
  int m = 0;
  for (const auto& t : two_steps) m = std::max(m, t.exponent);
  return m;
}

std::vector<int> NormalForm::exponents() const {
  std::vector<int> out;
  for (const auto& t : two_steps) out.push_back(t.exponent);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  NormalForm x = a;
  NormalForm y = b;
  x.canonicalize();
  y.canonicalize();
  return x.one_steps == y.one_steps && x.two_steps == y.two_steps;
}

namespace {

// Working state of the reduction: the differential in the current basis and
// the matrices relating the current basis to the original generators.
class Reduction {
 public:
  explicit Reduction(const GradedComplex& c)
      : n_(c.rank()),
        d_(to_local(c.differential())),
        basis_(LocalMatrix::identity(n_)),
        inverse_(LocalMatrix::identity(n_)) {}

  LocalMatrix& d() { return d_; }

  // e_j <- e_j + lambda e_k.
  void add_multiple(std::size_t j, std::size_t k, const LocalScalar& lambda) {
    for (std::size_t r = 0; r < n_; ++r) {
      if (!d_(r, k).is_zero()) d_(r, j) += lambda * d_(r, k);
      if (!basis_(r, k).is_zero()) basis_(r, j) += lambda * basis_(r, k);
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (!d_(j, c).is_zero()) d_(k, c) += lambda * d_(j, c);
      if (!inverse_(j, c).is_zero()) inverse_(k, c) += lambda * inverse_(j, c);
    }
  }

  // e_j <- u e_j for a unit u.
  void scale(std::size_t j, const LocalScalar& u) {
    LocalScalar inv = u.inverse();
    for (std::size_t r = 0; r < n_; ++r) {
      if (!d_(r, j).is_zero()) d_(r, j) = d_(r, j) * u;
      if (!basis_(r, j).is_zero()) basis_(r, j) = basis_(r, j) * u;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (!d_(j, c).is_zero()) d_(j, c) = d_(j, c) * inv;
      if (!inverse_(j, c).is_zero()) inverse_(j, c) = inverse_(j, c) * inv;
    }
  }

  LocalMatrix take_basis() { return std::move(basis_); }
  LocalMatrix take_inverse() { return std::move(inverse_); }

 private:
  std::size_t n_;
  LocalMatrix d_;
  LocalMatrix basis_;
  LocalMatrix inverse_;
};

}  // namespace

Decomposition decompose(const GradedComplex& c) {
  const std::size_t n = c.rank();
  Reduction red(c);
  auto& d = red.d();
  std::vector<bool> active(n, true);
  Decomposition out;

  while (true) {
    int best = kInfiniteValuation;
    std::size_t t0 = 0;
    std::size_t s0 = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (!active[t]) continue;
      for (std::size_t s = 0; s < n; ++s) {
        if (!active[s] || d(t, s).is_zero()) continue;
        int v = d(t, s).valuation();
        if (v < best) {
          best = v;
          t0 = t;
          s0 = s;
        }
      }
    }
    if (best == kInfiniteValuation) break;

    for (std::size_t t = 0; t < n; ++t) {
      if (t == t0 || !active[t] || d(t, s0).is_zero()) continue;
      red.add_multiple(t0, t, d(t, s0).divided_by(d(t0, s0)));
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (s == s0 || !active[s] || d(t0, s).is_zero()) continue;
      red.add_multiple(s, s0, d(t0, s).divided_by(d(t0, s0)));
    }
    LocalScalar unit = d(t0, s0).divided_by(LocalScalar(Polynomial::monomial(best)));
    if (!(unit == LocalScalar(Polynomial::one()))) red.scale(t0, unit);

    active[t0] = false;
    active[s0] = false;
    PairSummand pair{s0, t0, best};
    if (best == 0) {
      out.cancelled.push_back(pair);
    } else {
      out.pairs.push_back(pair);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) out.free.push_back(i);
  }

  // The reduced differential must be exactly the model.
  LocalMatrix model(n, n);
  for (const auto& p : out.pairs) model(p.target, p.source) = LocalScalar(Polynomial::monomial(p.exponent));
  for (const auto& p : out.cancelled) model(p.target, p.source) = LocalScalar(Polynomial::one());
  if (!(d == model)) {
    throw Error(ErrorKind::InternalCheck, "reduction did not reach the normal form of " + c.name());
  }

  for (std::size_t i : out.free) out.normal_form.one_steps.push_back(c.grading(i));
  for (const auto& p : out.pairs) out.normal_form.two_steps.push_back({c.grading(p.source), p.exponent});
  out.normal_form.cancelled_pairs = static_cast<int>(out.cancelled.size());
  out.normal_form.canonicalize();
  out.basis = red.take_basis();
  out.inverse = red.take_inverse();
  return out;
}

NormalForm classify(const GradedComplex& c) { return decompose(c).normal_form; }

GradedComplex realize(const NormalForm& input, const std::string& name) {
  NormalForm nf = input;
  nf.canonicalize();
  std::vector<Generator> gens;
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < nf.two_steps.size(); ++k) {
    const auto& t = nf.two_steps[k];
    if (t.exponent <= 0) {
      throw Error(ErrorKind::ParameterOutOfRange, "2-step exponents must be positive");
    }
    std::string a = "a" + std::to_string(k);
    std::string b = "b" + std::to_string(k);
    gens.push_back({a, t.grading_a});
    gens.push_back({b, t.grading_a - 1});
    entries.push_back({a, b, Polynomial::monomial(t.exponent)});
  }
  for (std::size_t k = 0; k < nf.one_steps.size(); ++k) {
    gens.push_back({"x" + std::to_string(k), nf.one_steps[k]});
  }
  return GradedComplex::build(name, std::move(gens), entries);
}

BasisChange random_basis_change_with_matrices(const GradedComplex& c, std::uint64_t seed, int steps) {
  if (steps < 0) throw Error(ErrorKind::ParameterOutOfRange, "steps must be nonnegative");
  const std::size_t n = c.rank();
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && c.grading(i) == c.grading(j)) candidates.emplace_back(i, j);
    }
  }
  PolyMatrix d = c.differential();
  PolyMatrix basis = PolyMatrix::identity(n);
  PolyMatrix inverse = PolyMatrix::identity(n);
  Rng rng(seed);
  for (int step = 0; step < steps && !candidates.empty(); ++step) {
    auto [i, j] = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(candidates.size()) - 1))];
    Polynomial p = rng.nonzero_polynomial(2);
    // g_i <- g_i + p g_j
    for (std::size_t r = 0; r < n; ++r) {
      if (!d(r, j).is_zero()) d(r, i) += p * d(r, j);
      if (!basis(r, j).is_zero()) basis(r, i) += p * basis(r, j);
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (!d(i, col).is_zero()) d(j, col) += p * d(i, col);
      if (!inverse(i, col).is_zero()) inverse(j, col) += p * inverse(i, col);
    }
  }
  return {GradedComplex(c.name(), c.generators(), std::move(d)), std::move(basis), std::move(inverse)};
}

GradedComplex random_basis_change(const GradedComplex& c, std::uint64_t seed, int steps) {
  return random_basis_change_with_matrices(c, seed, steps).complex;
}

ChainMap transport(const ChainMap& f, const BasisChange& change) {
  return {f.name(), change.complex, change.complex, change.inverse * f.matrix() * change.basis,
          f.degree()};
}

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return divmod(a * b, gcd(a, b)).first;
}

}  // namespace

ChainMap random_chain_map(const GradedComplex& c, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = c.rank();
  const int mode = rng.uniform(0, 7);
  if (mode == 0) return ChainMap::identity(c).renamed("F");
  if (mode == 1) return ChainMap::scalar(c, rng.polynomial(3)).renamed("F");

  Decomposition dec = decompose(c);
  std::vector<PairSummand> pairs = dec.pairs;
  pairs.insert(pairs.end(), dec.cancelled.begin(), dec.cancelled.end());

  LocalMatrix s(n, n);
  for (const auto& src : pairs) {
    for (const auto& tgt : pairs) {
      if (c.grading(src.source) != c.grading(tgt.source)) continue;
      Polynomial p = rng.polynomial(3);
      if (p.is_zero()) continue;
      Polynomial on_a = p;
      Polynomial on_b = p;
      if (src.exponent >= tgt.exponent) {
        on_a = p.shifted_up(src.exponent - tgt.exponent);
      } else {
        on_b = p.shifted_up(tgt.exponent - src.exponent);
      }
      s(tgt.source, src.source) = LocalScalar(on_a);
      s(tgt.target, src.target) = LocalScalar(on_b);
    }
  }
  for (std::size_t x : dec.free) {
    for (std::size_t y : dec.free) {
      if (c.grading(x) == c.grading(y)) s(y, x) = LocalScalar(rng.polynomial(3));
    }
  }

  LocalMatrix conjugated = dec.basis * s * dec.inverse;
  Polynomial common = Polynomial::one();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      if (!conjugated(r, col).is_polynomial()) common = lcm(common, conjugated(r, col).denominator());
    }
  }
  PolyMatrix f(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      const auto& x = conjugated(r, col);
      if (x.is_zero()) continue;
      f(r, col) = x.numerator() * divmod(common, x.denominator()).first;
    }
  }

  PolyMatrix h(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t src = 0; src < n; ++src) {
      if (c.grading(t) == c.grading(src) + 1 && rng.chance(1, 3)) h(t, src) = rng.polynomial(2);
    }
  }
  f += c.differential() * h + h * c.differential();
  return {"F", c, c, std::move(f), 0};
}

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::one();
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] + m[0][1] * m[1][0];
  Polynomial det;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      for (std::size_t c2 = 0; c2 < k; ++c2) {
        if (c2 != col) minor[r - 1].push_back(m[r][c2]);
      }
    }
    det += m[0][col] * determinant(std::move(minor));
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<int> minor_gcd_check(const GradedComplex& c) {
  if (c.rank() > 12) {
    throw Error(ErrorKind::RankTooLarge, "minor_gcd_check supports rank <= 12, got " + std::to_string(c.rank()));
  }
  std::vector<int> exponents;
  for (int g : c.gradings()) {
    auto cols = c.generators_in_grading(g);
    auto rows = c.generators_in_grading(g - 1);
    if (rows.empty() || cols.empty()) continue;
    int previous = 0;
    for (std::size_t k = 1; k <= std::min(rows.size(), cols.size()); ++k) {
      Polynomial g_k;
      for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& rs) {
        for_each_subset(cols.size(), k, [&](const std::vector<std::size_t>& cs) {
          std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) m[i][j] = c.entry(rows[rs[i]], cols[cs[j]]);
          }
          Polynomial det = determinant(std::move(m));
          if (!det.is_zero()) g_k = g_k.is_zero() ? det : gcd(g_k, det);
        });
      });
      if (g_k.is_zero()) break;
      int v = g_k.valuation();
      if (v - previous > 0) exponents.push_back(v - previous);
      previous = v;
    }
  }
  std::sort(exponents.begin(), exponents.end());
  return exponents;
}

NormalForm random_torsion_normal_form(std::uint64_t seed, int max_rank, int max_exponent) {
  if (max_rank < 2 || max_exponent < 1) {
    throw Error(ErrorKind::ParameterOutOfRange, "need max_rank >= 2 and max_exponent >= 1");
  }
  Rng rng(seed);
  NormalForm nf;
  int pairs = rng.uniform(1, max_rank / 2);
  for (int k = 0; k < pairs; ++k) nf.two_steps.push_back({rng.uniform(0, 2), rng.uniform(1, max_exponent)});
  nf.canonicalize();
  return nf;
}

}  // namespace uchain
