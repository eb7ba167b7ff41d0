#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uchain/laurent_chain.hpp"
#include "uchain/matrix.hpp"
#include "uchain/polynomial.hpp"

namespace uchain {

// Conventions: the differential lowers the integer grading by one and U has
// degree 0. Only grading parities matter for Lefschetz quantities; absolute
// gradings are kept so that Betti numbers of cones can be reported.

struct Generator {
  std::string id;
  int grading = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// One matrix entry: the coefficient of `target` in the image of `source`.
struct Entry {
  std::string source;
  std::string target;
  Polynomial value;
};

/// A free, finitely generated chain complex over F2[U].
///
/// Immutable after construction; the constructor checks that identifiers are
/// unique, that every nonzero entry lowers the grading by one, and that the
/// differential squares to zero.
class GradedComplex {
 public:
  GradedComplex() = default;
  GradedComplex(std::string name, std::vector<Generator> generators, PolyMatrix differential);

  /// Builds from named entries; repeated entries for one pair accumulate.
  static GradedComplex build(std::string name, std::vector<Generator> generators,
                             const std::vector<Entry>& entries);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_[i]; }
  int grading(std::size_t i) const { return generators_[i].grading; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  const PolyMatrix& differential() const noexcept { return differential_; }
  /// Coefficient of generator `target` in ∂(generator `source`).
  const Polynomial& entry(std::size_t target, std::size_t source) const {
    return differential_(target, source);
  }

  /// Sorted distinct gradings.
  std::vector<int> gradings() const;
  /// Indices of generators with the given grading, in generator order.
  std::vector<std::size_t> generators_in_grading(int grading) const;
  /// True when no differential entry involves U.
  bool is_u_free() const;

  GradedComplex renamed(std::string name) const;

  /// Structural equality: generator lists, gradings and entries. Names are ignored.
  friend bool operator==(const GradedComplex& a, const GradedComplex& b) {
    return a.generators_ == b.generators_ && a.differential_ == b.differential_;
  }

 private:
  std::string name_;
  std::vector<Generator> generators_;
  PolyMatrix differential_;
};

/// A chain map of the given degree: F ∂ = ∂ F (no signs in characteristic 2),
/// with every nonzero entry shifting the grading by exactly `degree`.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(std::string name, GradedComplex source, GradedComplex target, PolyMatrix entries,
           int degree);

  static ChainMap build(std::string name, GradedComplex source, GradedComplex target,
                        const std::vector<Entry>& entries, int degree);
  static ChainMap identity(const GradedComplex& c);
  static ChainMap zero(const GradedComplex& source, const GradedComplex& target, int degree = 0);
  /// Multiplication by p on every generator.
  static ChainMap scalar(const GradedComplex& c, const Polynomial& p);

  const std::string& name() const noexcept { return name_; }
  const GradedComplex& source() const noexcept { return source_; }
  const GradedComplex& target() const noexcept { return target_; }
  const PolyMatrix& matrix() const noexcept { return entries_; }
  int degree() const noexcept { return degree_; }

  LaurentChain operator()(const LaurentChain& x) const { return apply(entries_, x); }

  ChainMap renamed(std::string name) const;

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    return a.degree_ == b.degree_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::string name_;
  GradedComplex source_;
  GradedComplex target_;
  PolyMatrix entries_;
  int degree_ = 0;
};

/// Hom(C, F2[U]): generators g^ with negated grading, transposed differential.
GradedComplex dual(const GradedComplex& c);
/// Identifier of the dual generator of `id`.
std::string dual_id(const std::string& id);

/// C ⊗ D with generator g|h at index i * rank(D) + j.
GradedComplex tensor(const GradedComplex& c, const GradedComplex& d);
std::string tensor_id(const std::string& left, const std::string& right);

GradedComplex direct_sum(const GradedComplex& c, const GradedComplex& d);
GradedComplex shift(const GradedComplex& c, int k);

/// Cone of a degree-0 map F: C -> D. Generators are the source shifted up by
/// one (identifiers suffixed "[1]") followed by the target; ∂ = (∂_C 0; F ∂_D).
GradedComplex cone(const ChainMap& f);

/// f ∘ g; requires g.target() == f.source().
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap operator+(const ChainMap& f, const ChainMap& g);
/// f ⊗ g on tensor(f.source, g.source) -> tensor(f.target, g.target).
ChainMap tensor(const ChainMap& f, const ChainMap& g);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
/// Transpose: D^ -> C^ for F: C -> D.
ChainMap dual(const ChainMap& f);

/// The one-generator complex F2[U] in grading 0 (generator "1").
GradedComplex unit_complex();

}  // namespace uchain
