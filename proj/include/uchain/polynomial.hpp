#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uchain {

/// Valuation of the zero element.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Largest exponent any operation may produce.
inline constexpr int kMaxExponent = 1 << 20;

/// Adds two valuations with infinity absorbing.
constexpr int add_valuations(int a, int b) {
  return (a == kInfiniteValuation || b == kInfiniteValuation) ? kInfiniteValuation : a + b;
}

/// An element of F2[U].
///
/// Coefficients are packed one bit per exponent into 64-bit words with
/// trailing zero words trimmed, so two polynomials are equal exactly when
/// their word vectors are equal. The zero polynomial has no words.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial one() { return monomial(0); }
  static Polynomial monomial(int exponent);
  static Polynomial from_exponents(std::initializer_list<int> exponents);
  static Polynomial from_exponents(std::span<const int> exponents);

  /// Parses `1`, `U`, `U^k` monomials joined by `+`; `0` is zero.
  static Polynomial parse(std::string_view text);

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  /// Smallest exponent present; kInfiniteValuation for zero.
  int valuation() const noexcept;
  bool coefficient(int exponent) const noexcept;
  /// Exponents with nonzero coefficient, ascending.
  std::vector<int> exponents() const;
  std::size_t term_count() const noexcept;

  /// d/dU over F2.
  Polynomial derivative() const;
  /// Multiplication by U^k.
  Polynomial shifted_up(int k) const;
  /// Exact division by U^k; requires valuation() >= k.
  Polynomial shifted_down(int k) const;
  /// Reduction modulo U^k.
  Polynomial truncated(int k) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  // Subtraction coincides with addition in characteristic 2.
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Toggles the coefficient of U^exponent.
  void flip(int exponent);

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

/// Quotient and remainder of Euclidean division; throws NotInRing on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the Euclidean algorithm; throws BothZero when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// U^offset * body, an element of F2[U, U^-1].
///
/// Kept normalized: a nonzero body has valuation 0, and zero has offset 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int offset, Polynomial body);
  static LaurentPoly monomial(int exponent) { return {exponent, Polynomial::one()}; }

  bool is_zero() const noexcept { return body_.is_zero(); }
  int min_exponent() const noexcept;
  int max_exponent() const noexcept;
  bool coefficient(int exponent) const noexcept;
  std::vector<int> exponents() const;

  LaurentPoly shifted(int k) const;
  /// Terms with exponent < 0.
  LaurentPoly negative_part() const;
  /// Terms with exponent >= 0, as a polynomial.
  Polynomial nonnegative_part() const;
  /// Terms with lo <= exponent < hi.
  LaurentPoly restricted(int lo, int hi) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const Polynomial& p);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  void flip(int exponent);
  std::string to_string() const;

 private:
  void normalize();

  int offset_ = 0;
  Polynomial body_;
};

}  // namespace uchain
