#include "uchain/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "uchain/error.hpp"

namespace uchain {

namespace {

std::string pair_string(const std::vector<Generator>& sources, std::size_t s,
                        const std::vector<Generator>& targets, std::size_t t) {
  return "(source " + sources[s].id + ", target " + targets[t].id + ")";
}

std::unordered_map<std::string, std::size_t> index_map(const std::vector<Generator>& gens) {
  std::unordered_map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!out.emplace(gens[i].id, i).second) {
      throw Error(ErrorKind::DuplicateGenerator, "generator '" + gens[i].id + "' appears twice");
    }
  }
  return out;
}

PolyMatrix assemble(const std::vector<Generator>& sources, const std::vector<Generator>& targets,
                    const std::vector<Entry>& entries) {
  auto src = index_map(sources);
  auto tgt = index_map(targets);
  PolyMatrix m(targets.size(), sources.size());
  for (const auto& e : entries) {
    auto s = src.find(e.source);
    if (s == src.end()) throw Error(ErrorKind::UnknownGenerator, "unknown source '" + e.source + "'");
    auto t = tgt.find(e.target);
    if (t == tgt.end()) throw Error(ErrorKind::UnknownGenerator, "unknown target '" + e.target + "'");
    m(t->second, s->second) += e.value;
  }
  return m;
}

void check_shift(const std::vector<Generator>& sources, const std::vector<Generator>& targets,
                 const PolyMatrix& m, int degree, ErrorKind kind) {
  for (std::size_t t = 0; t < m.rows(); ++t) {
    for (std::size_t s = 0; s < m.cols(); ++s) {
      if (m(t, s).is_zero()) continue;
      if (targets[t].grading != sources[s].grading + degree) {
        throw Error(kind, "entry " + pair_string(sources, s, targets, t) + " maps grading " +
                              std::to_string(sources[s].grading) + " to " +
                              std::to_string(targets[t].grading) + ", expected shift " +
                              std::to_string(degree));
      }
    }
  }
}

}  // namespace

GradedComplex::GradedComplex(std::string name, std::vector<Generator> generators,
                             PolyMatrix differential)
    : name_(std::move(name)), generators_(std::move(generators)), differential_(std::move(differential)) {
  if (name_.empty()) name_ = "C";
  index_map(generators_);
  for (const auto& g : generators_) {
    if (g.id.empty() || g.id.find_first_of(" \t\r\n#") != std::string::npos) {
      throw Error(ErrorKind::UnknownGenerator, "invalid generator identifier '" + g.id + "'");
    }
  }
  if (differential_.rows() != generators_.size() || differential_.cols() != generators_.size()) {
    throw Error(ErrorKind::ComplexMismatch, "differential shape does not match generator count");
  }
  check_shift(generators_, generators_, differential_, -1, ErrorKind::GradingViolation);
  PolyMatrix square = differential_ * differential_;
  for (std::size_t t = 0; t < square.rows(); ++t) {
    for (std::size_t s = 0; s < square.cols(); ++s) {
      if (!square(t, s).is_zero()) {
        throw Error(ErrorKind::DifferentialNotSquareZero,
                    "(∂∂) entry " + pair_string(generators_, s, generators_, t) + " is " +
                        square(t, s).to_string());
      }
    }
  }
}

GradedComplex GradedComplex::build(std::string name, std::vector<Generator> generators,
                                   const std::vector<Entry>& entries) {
  PolyMatrix d = assemble(generators, generators, entries);
  return {std::move(name), std::move(generators), std::move(d)};
}

std::optional<std::size_t> GradedComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<int> GradedComplex::gradings() const {
  std::set<int> s;
  for (const auto& g : generators_) s.insert(g.grading);
  return {s.begin(), s.end()};
}

std::vector<std::size_t> GradedComplex::generators_in_grading(int grading) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].grading == grading) out.push_back(i);
  }
  return out;
}

bool GradedComplex::is_u_free() const {
  for (std::size_t t = 0; t < rank(); ++t) {
    for (std::size_t s = 0; s < rank(); ++s) {
      const auto& p = differential_(t, s);
      if (!p.is_zero() && !p.is_one()) return false;
    }
  }
  return true;
}

GradedComplex GradedComplex::renamed(std::string name) const {
  GradedComplex out = *this;
  out.name_ = std::move(name);
  return out;
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(std::string name, GradedComplex source, GradedComplex target,
                   PolyMatrix entries, int degree)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)),
      degree_(degree) {
  if (entries_.rows() != target_.rank() || entries_.cols() != source_.rank()) {
    throw Error(ErrorKind::ComplexMismatch, "map shape does not match its complexes");
  }
  check_shift(source_.generators(), target_.generators(), entries_, degree_,
              ErrorKind::DegreeMismatch);
  PolyMatrix commutator = target_.differential() * entries_ + entries_ * source_.differential();
  for (std::size_t t = 0; t < commutator.rows(); ++t) {
    for (std::size_t s = 0; s < commutator.cols(); ++s) {
      if (!commutator(t, s).is_zero()) {
        throw Error(ErrorKind::NotAChainMap,
                    "(∂F + F∂) entry " +
                        pair_string(source_.generators(), s, target_.generators(), t) + " is " +
                        commutator(t, s).to_string());
      }
    }
  }
}

ChainMap ChainMap::build(std::string name, GradedComplex source, GradedComplex target,
                         const std::vector<Entry>& entries, int degree) {
  PolyMatrix m = assemble(source.generators(), target.generators(), entries);
  return {std::move(name), std::move(source), std::move(target), std::move(m), degree};
}

ChainMap ChainMap::identity(const GradedComplex& c) {
  return {"id", c, c, PolyMatrix::identity(c.rank()), 0};
}

ChainMap ChainMap::zero(const GradedComplex& source, const GradedComplex& target, int degree) {
  return {"zero", source, target, PolyMatrix(target.rank(), source.rank()), degree};
}

ChainMap ChainMap::scalar(const GradedComplex& c, const Polynomial& p) {
  PolyMatrix m(c.rank(), c.rank());
  for (std::size_t i = 0; i < c.rank(); ++i) m(i, i) = p;
  return {"scalar", c, c, std::move(m), 0};
}

ChainMap ChainMap::renamed(std::string name) const {
  ChainMap out = *this;
  out.name_ = std::move(name);
  return out;
}

// ---------------------------------------------------------------------------

std::string dual_id(const std::string& id) { return id + "^"; }

std::string tensor_id(const std::string& left, const std::string& right) {
  return left + "|" + right;
}

GradedComplex dual(const GradedComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.rank());
  for (const auto& g : c.generators()) gens.push_back({dual_id(g.id), -g.grading});
  return {c.name() + "^", std::move(gens), c.differential().transposed()};
}

GradedComplex tensor(const GradedComplex& c, const GradedComplex& d) {
  const std::size_t m = d.rank();
  std::vector<Generator> gens;
  gens.reserve(c.rank() * m);
  for (const auto& g : c.generators()) {
    for (const auto& h : d.generators()) gens.push_back({tensor_id(g.id, h.id), g.grading + h.grading});
  }
  PolyMatrix diff(gens.size(), gens.size());
  for (std::size_t i = 0; i < c.rank(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t col = i * m + j;
      for (std::size_t i2 = 0; i2 < c.rank(); ++i2) {
        if (!c.entry(i2, i).is_zero()) diff(i2 * m + j, col) += c.entry(i2, i);
      }
      for (std::size_t j2 = 0; j2 < m; ++j2) {
        if (!d.entry(j2, j).is_zero()) diff(i * m + j2, col) += d.entry(j2, j);
      }
    }
  }
  return {c.name() + "*" + d.name(), std::move(gens), std::move(diff)};
}

GradedComplex direct_sum(const GradedComplex& c, const GradedComplex& d) {
  std::vector<Generator> gens = c.generators();
  gens.insert(gens.end(), d.generators().begin(), d.generators().end());
  PolyMatrix diff(gens.size(), gens.size());
  for (std::size_t t = 0; t < c.rank(); ++t) {
    for (std::size_t s = 0; s < c.rank(); ++s) diff(t, s) = c.entry(t, s);
  }
  for (std::size_t t = 0; t < d.rank(); ++t) {
    for (std::size_t s = 0; s < d.rank(); ++s) diff(c.rank() + t, c.rank() + s) = d.entry(t, s);
  }
  return {c.name() + "+" + d.name(), std::move(gens), std::move(diff)};
}

GradedComplex shift(const GradedComplex& c, int k) {
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.grading += k;
  return {c.name(), std::move(gens), c.differential()};
}

GradedComplex cone(const ChainMap& f) {
  if (f.degree() != 0) {
    throw Error(ErrorKind::DegreeMismatch,
                "cone needs a degree-0 map, got degree " + std::to_string(f.degree()));
  }
  const auto& src = f.source();
  const auto& tgt = f.target();
  const std::size_t n = src.rank();
  std::vector<Generator> gens;
  for (const auto& g : src.generators()) gens.push_back({g.id + "[1]", g.grading + 1});
  gens.insert(gens.end(), tgt.generators().begin(), tgt.generators().end());
  PolyMatrix diff(gens.size(), gens.size());
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) diff(t, s) = src.entry(t, s);
  }
  for (std::size_t t = 0; t < tgt.rank(); ++t) {
    for (std::size_t s = 0; s < n; ++s) diff(n + t, s) = f.matrix()(t, s);
    for (std::size_t s = 0; s < tgt.rank(); ++s) diff(n + t, n + s) = tgt.entry(t, s);
  }
  return {"cone(" + f.name() + ")", std::move(gens), std::move(diff)};
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  if (!(g.target() == f.source())) {
    throw Error(ErrorKind::ComplexMismatch, "compose: target of " + g.name() +
                                                " differs from source of " + f.name());
  }
  return {f.name() + "." + g.name(), g.source(), f.target(), f.matrix() * g.matrix(),
          f.degree() + g.degree()};
}

ChainMap operator+(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorKind::ComplexMismatch, "sum of maps between different complexes");
  }
  if (f.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "sum of maps of different degree");
  return {f.name() + "+" + g.name(), f.source(), f.target(), f.matrix() + g.matrix(), f.degree()};
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  GradedComplex src = tensor(f.source(), g.source());
  GradedComplex tgt = tensor(f.target(), g.target());
  const auto& a = f.matrix();
  const auto& b = g.matrix();
  PolyMatrix m(tgt.rank(), src.rank());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t i2 = 0; i2 < a.rows(); ++i2) {
      if (a(i2, i).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t j2 = 0; j2 < b.rows(); ++j2) {
          if (b(j2, j).is_zero()) continue;
          m(i2 * b.rows() + j2, i * b.cols() + j) = a(i2, i) * b(j2, j);
        }
      }
    }
  }
  return {f.name() + "*" + g.name(), std::move(src), std::move(tgt), std::move(m),
          f.degree() + g.degree()};
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  if (f.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "direct sum of maps of different degree");
  GradedComplex src = direct_sum(f.source(), g.source());
  GradedComplex tgt = direct_sum(f.target(), g.target());
  PolyMatrix m(tgt.rank(), src.rank());
  for (std::size_t t = 0; t < f.target().rank(); ++t) {
    for (std::size_t s = 0; s < f.source().rank(); ++s) m(t, s) = f.matrix()(t, s);
  }
  for (std::size_t t = 0; t < g.target().rank(); ++t) {
    for (std::size_t s = 0; s < g.source().rank(); ++s) {
      m(f.target().rank() + t, f.source().rank() + s) = g.matrix()(t, s);
    }
  }
  return {f.name() + "+" + g.name(), std::move(src), std::move(tgt), std::move(m), f.degree()};
}

ChainMap dual(const ChainMap& f) {
  return {f.name() + "^", dual(f.target()), dual(f.source()), f.matrix().transposed(), f.degree()};
}

GradedComplex unit_complex() { return {"F2[U]", {{"1", 0}}, PolyMatrix(1, 1)}; }

}  // namespace uchain
