#pragma once

#include <string>

#include "uchain/polynomial.hpp"

namespace uchain {

/// An element of the localization F2[U]_(U): a reduced fraction whose
/// denominator has constant term 1. This ring is a discrete valuation ring
/// with uniformizer U and embeds in F2[[U]].
class LocalScalar {
 public:
  LocalScalar() : denominator_(Polynomial::one()) {}
  LocalScalar(Polynomial numerator);  // NOLINT(google-explicit-constructor)

  /// numerator / denominator; throws NotAUnit unless the denominator has constant term 1.
  static LocalScalar fraction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Polynomial& denominator() const noexcept { return denominator_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_polynomial() const noexcept { return denominator_.is_one(); }
  int valuation() const noexcept { return numerator_.valuation(); }
  bool is_unit() const noexcept { return valuation() == 0; }

  /// Multiplicative inverse; throws NotAUnit when the valuation is positive.
  LocalScalar inverse() const;
  /// this / other inside the ring; throws NotInRing if valuation(other) > valuation(this).
  LocalScalar divided_by(const LocalScalar& other) const;

  /// The power series expansion modulo U^precision.
  Polynomial series(int precision) const;

  LocalScalar& operator+=(const LocalScalar& other);
  friend LocalScalar operator+(LocalScalar a, const LocalScalar& b) { return a += b; }
  friend LocalScalar operator-(LocalScalar a, const LocalScalar& b) { return a += b; }
  friend LocalScalar operator*(const LocalScalar& a, const LocalScalar& b);
  friend bool operator==(const LocalScalar&, const LocalScalar&) = default;

  std::string to_string() const;

 private:
  LocalScalar(Polynomial numerator, Polynomial denominator, bool reduce);

  Polynomial numerator_;
  Polynomial denominator_;
};

/// Power series inverse of a polynomial with constant term 1, modulo U^precision.
Polynomial series_inverse(const Polynomial& unit, int precision);

}  // namespace uchain
