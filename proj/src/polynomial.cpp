#include "uchain/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "uchain/error.hpp"

namespace uchain {

namespace {

void check_exponent(long long e) {
  if (e < 0 || e > kMaxExponent) {
    throw Error(ErrorKind::ExponentOverflow,
                "exponent " + std::to_string(e) + " outside [0, 2^20]");
  }
}

}  // namespace

Polynomial Polynomial::monomial(int exponent) {
  Polynomial p;
  p.flip(exponent);
  return p;
}

Polynomial Polynomial::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

Polynomial Polynomial::from_exponents(std::span<const int> exponents) {
  Polynomial p;
  for (int e : exponents) p.flip(e);
  return p;
}

Polynomial Polynomial::parse(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& msg) -> Polynomial {
    throw ParseError(1, static_cast<int>(pos) + 1, msg + " in polynomial '" + std::string(text) + "'");
  };
  Polynomial result;
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_spaces();
  if (i == text.size()) return fail(i, "empty polynomial");
  if (text[i] == '0') {
    ++i;
    skip_spaces();
    if (i != text.size()) return fail(i, "trailing characters after 0");
    return result;
  }
  while (true) {
    skip_spaces();
    if (i == text.size()) return fail(i, "expected monomial");
    if (text[i] == '1') {
      ++i;
      result.flip(0);
    } else if (text[i] == 'U') {
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        long long k = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          k = k * 10 + (text[i] - '0');
          if (k > kMaxExponent) {
            throw Error(ErrorKind::ExponentOverflow, "exponent in '" + std::string(text) + "'");
          }
          ++i;
        }
        if (i == start) return fail(i, "expected exponent after '^'");
        result.flip(static_cast<int>(k));
      } else {
        result.flip(1);
      }
    } else {
      return fail(i, std::string("unexpected character '") + text[i] + "'");
    }
    skip_spaces();
    if (i == text.size()) break;
    if (text[i] != '+') return fail(i, "expected '+'");
    ++i;
  }
  return result;
}

int Polynomial::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

int Polynomial::valuation() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(64 * w) + std::countr_zero(words_[w]);
  }
  return kInfiniteValuation;
}

bool Polynomial::coefficient(int exponent) const noexcept {
  if (exponent < 0) return false;
  auto w = static_cast<std::size_t>(exponent) / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (exponent % 64)) & 1U;
}

std::vector<int> Polynomial::exponents() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(64 * w) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Polynomial::term_count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Polynomial Polynomial::derivative() const {
  // U^k -> U^(k-1) for odd k: keep odd bits, shift right by one.
  Polynomial d;
  d.words_.resize(words_.size());
  constexpr std::uint64_t kOdd = 0xAAAAAAAAAAAAAAAAULL;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t odd = words_[w] & kOdd;
    d.words_[w] |= odd >> 1;
  }
  // bit 0 of each word is even, so no carry across words is needed.
  d.trim();
  return d;
}

Polynomial Polynomial::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  check_exponent(static_cast<long long>(degree()) + k);
  Polynomial out;
  std::size_t word_shift = static_cast<std::size_t>(k) / 64;
  int bit_shift = k % 64;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w + word_shift] |= words_[w] << bit_shift;
    if (bit_shift != 0) out.words_[w + word_shift + 1] |= words_[w] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

Polynomial Polynomial::shifted_down(int k) const {
  if (is_zero() || k == 0) return *this;
  if (valuation() < k) {
    throw Error(ErrorKind::NotInRing, "U^" + std::to_string(k) + " does not divide " + to_string());
  }
  Polynomial out;
  std::size_t word_shift = static_cast<std::size_t>(k) / 64;
  int bit_shift = k % 64;
  out.words_.assign(words_.size() - word_shift, 0);
  for (std::size_t w = word_shift; w < words_.size(); ++w) {
    out.words_[w - word_shift] |= words_[w] >> bit_shift;
    if (bit_shift != 0 && w + 1 < words_.size()) {
      out.words_[w - word_shift] |= words_[w + 1] << (64 - bit_shift);
    }
  }
  out.trim();
  return out;
}

Polynomial Polynomial::truncated(int k) const {
  if (k <= 0) return {};
  if (degree() < k) return *this;
  Polynomial out = *this;
  std::size_t keep = (static_cast<std::size_t>(k) + 63) / 64;
  out.words_.resize(keep);
  if (k % 64 != 0) out.words_.back() &= (std::uint64_t{1} << (k % 64)) - 1;
  out.trim();
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_exponent(static_cast<long long>(a.degree()) + b.degree());
  const Polynomial& sparse = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& dense = &sparse == &a ? b : a;
  Polynomial out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (int e : sparse.exponents()) {
    std::size_t word_shift = static_cast<std::size_t>(e) / 64;
    int bit_shift = e % 64;
    for (std::size_t w = 0; w < dense.words_.size(); ++w) {
      out.words_[w + word_shift] ^= dense.words_[w] << bit_shift;
      if (bit_shift != 0) out.words_[w + word_shift + 1] ^= dense.words_[w] >> (64 - bit_shift);
    }
  }
  out.trim();
  return out;
}

void Polynomial::flip(int exponent) {
  check_exponent(exponent);
  auto w = static_cast<std::size_t>(exponent) / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (exponent % 64);
  trim();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e : exponents()) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else if (e == 1) {
      out += 'U';
    } else {
      out += "U^" + std::to_string(e);
    }
  }
  return out;
}

void Polynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotInRing, "division by the zero polynomial");
  Polynomial quotient;
  Polynomial remainder = a;
  const int db = b.degree();
  while (!remainder.is_zero() && remainder.degree() >= db) {
    int shift = remainder.degree() - db;
    quotient.flip(shift);
    remainder += b.shifted_up(shift);
  }
  return {quotient, remainder};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  // Every nonzero polynomial over F2 is monic.
  return x;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(int offset, Polynomial body) : offset_(offset), body_(std::move(body)) {
  normalize();
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    offset_ = 0;
    return;
  }
  int v = body_.valuation();
  if (v > 0) {
    body_ = body_.shifted_down(v);
    offset_ += v;
  }
}

int LaurentPoly::min_exponent() const noexcept {
  return is_zero() ? kInfiniteValuation : offset_;
}

int LaurentPoly::max_exponent() const noexcept {
  return is_zero() ? std::numeric_limits<int>::min() : offset_ + body_.degree();
}

bool LaurentPoly::coefficient(int exponent) const noexcept {
  return body_.coefficient(exponent - offset_);
}

std::vector<int> LaurentPoly::exponents() const {
  auto out = body_.exponents();
  for (int& e : out) e += offset_;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.offset_ += k;
  return out;
}

LaurentPoly LaurentPoly::negative_part() const { return restricted(std::numeric_limits<int>::min(), 0); }

Polynomial LaurentPoly::nonnegative_part() const {
  if (is_zero() || max_exponent() < 0) return {};
  if (offset_ >= 0) return body_.shifted_up(offset_);
  // Drop the lowest -offset_ coefficients, then divide out U^-offset_.
  Polynomial high = body_;
  high += body_.truncated(-offset_);
  return high.shifted_down(-offset_);
}

LaurentPoly LaurentPoly::restricted(int lo, int hi) const {
  if (is_zero() || hi <= lo) return {};
  if (min_exponent() >= lo && max_exponent() < hi) return *this;
  Polynomial kept;
  for (int e : body_.exponents()) {
    long long ex = static_cast<long long>(e) + offset_;
    if (ex >= lo && ex < hi) kept.flip(e);
  }
  return {offset_, kept};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int base = std::min(offset_, other.offset_);
  Polynomial sum = body_.shifted_up(offset_ - base);
  sum += other.body_.shifted_up(other.offset_ - base);
  offset_ = base;
  body_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const Polynomial& p) {
  if (a.is_zero() || p.is_zero()) return {};
  return {a.offset_, a.body_ * p};
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.offset_ + b.offset_, a.body_ * b.body_};
}

void LaurentPoly::flip(int exponent) { *this += monomial(exponent); }

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e : exponents()) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else if (e == 1) {
      out += 'U';
    } else {
      out += "U^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace uchain
