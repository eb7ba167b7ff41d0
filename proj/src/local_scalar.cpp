#include "uchain/local_scalar.hpp"

#include "uchain/error.hpp"

namespace uchain {

LocalScalar::LocalScalar(Polynomial numerator)
    : numerator_(std::move(numerator)), denominator_(Polynomial::one()) {}

LocalScalar::LocalScalar(Polynomial numerator, Polynomial denominator, bool reduce)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.is_zero()) {
    denominator_ = Polynomial::one();
    return;
  }
  if (reduce && !denominator_.is_one()) {
    Polynomial g = gcd(numerator_, denominator_);
    if (!g.is_one()) {
      numerator_ = divmod(numerator_, g).first;
      denominator_ = divmod(denominator_, g).first;
    }
  }
}

LocalScalar LocalScalar::fraction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw Error(ErrorKind::NotAUnit, "zero denominator");
  // Cancel common powers of U first so that e.g. U/U is accepted.
  int shared = std::min(numerator.valuation(), denominator.valuation());
  if (!numerator.is_zero() && shared > 0) {
    numerator = numerator.shifted_down(shared);
    denominator = denominator.shifted_down(shared);
  }
  if (!numerator.is_zero() && !denominator.coefficient(0)) {
    throw Error(ErrorKind::NotAUnit, "denominator " + denominator.to_string() +
                                         " is not a unit in F2[U]_(U)");
  }
  if (numerator.is_zero()) return {};
  return {std::move(numerator), std::move(denominator), true};
}

LocalScalar LocalScalar::inverse() const {
  if (is_zero() || valuation() > 0) {
    throw Error(ErrorKind::NotAUnit, to_string() + " has positive valuation");
  }
  return {denominator_, numerator_, false};
}

LocalScalar LocalScalar::divided_by(const LocalScalar& other) const {
  if (other.is_zero()) throw Error(ErrorKind::NotInRing, "division by zero");
  if (is_zero()) return {};
  int shift = other.valuation();
  if (valuation() < shift) {
    throw Error(ErrorKind::NotInRing,
                to_string() + " / " + other.to_string() + " leaves F2[U]_(U)");
  }
  Polynomial num = numerator_.shifted_down(shift) * other.denominator_;
  Polynomial den = denominator_ * other.numerator_.shifted_down(shift);
  return {std::move(num), std::move(den), true};
}

Polynomial LocalScalar::series(int precision) const {
  if (precision <= 0 || is_zero()) return {};
  if (is_polynomial()) return numerator_.truncated(precision);
  return (numerator_.truncated(precision) * series_inverse(denominator_, precision)).truncated(precision);
}

LocalScalar& LocalScalar::operator+=(const LocalScalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (denominator_ == other.denominator_) {
    *this = LocalScalar(numerator_ + other.numerator_, denominator_, !denominator_.is_one());
    return *this;
  }
  Polynomial num = numerator_ * other.denominator_ + other.numerator_ * denominator_;
  Polynomial den = denominator_ * other.denominator_;
  *this = LocalScalar(std::move(num), std::move(den), true);
  return *this;
}

LocalScalar operator*(const LocalScalar& a, const LocalScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return LocalScalar(a.numerator_ * b.numerator_);
  return {a.numerator_ * b.numerator_, a.denominator_ * b.denominator_, true};
}

std::string LocalScalar::to_string() const {
  if (is_polynomial()) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

Polynomial series_inverse(const Polynomial& unit, int precision) {
  if (!unit.coefficient(0)) throw Error(ErrorKind::NotAUnit, unit.to_string() + " is not a unit");
  // Long division of 1 by `unit`, one coefficient at a time.
  Polynomial result;
  Polynomial residual = Polynomial::one();
  for (int k = 0; k < precision; ++k) {
    if (residual.coefficient(k)) {
      result.flip(k);
      residual += unit.shifted_up(k).truncated(precision);
    }
  }
  return result;
}

}  // namespace uchain
