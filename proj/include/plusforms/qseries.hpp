#pragma once

// Truncated q-expansions with exact coefficients.
//
// A QSeries knows the coefficients of q^0 .. q^{P-1}. Binary operations
// return the minimum precision of their operands, so a short input can never
// masquerade as a long output.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace plusforms {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient ring: exact rationals or integers modulo m (m >= 2).
class Ring {
 public:
  enum class Kind { ExactRational, Mod };

  static Ring rational() { return Ring(Kind::ExactRational, 0); }
  static Ring mod(std::int64_t m);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::ExactRational; }
  /// 0 for the rationals.
  std::int64_t modulus() const noexcept { return modulus_; }

  /// Canonical representative of c in this ring. Throws NonIntegralCoefficient(index)
  /// when c has a denominator that is not invertible modulo m.
  Rational element(const Rational& c, std::int64_t index = -1) const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, std::int64_t m) : kind_(kind), modulus_(m) {}
  Kind kind_;
  std::int64_t modulus_;
};

class QSeries {
 public:
  /// Coefficients are canonicalized into `ring`; precision = coeffs.size() > 0.
  QSeries(Ring ring, std::vector<Rational> coeffs);

  static QSeries zero(Ring ring, std::size_t precision);
  static QSeries one(Ring ring, std::size_t precision);
  static QSeries monomial(Ring ring, std::size_t exponent, const Rational& c, std::size_t precision);
  static QSeries from_ints(Ring ring, const std::vector<long>& coeffs);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

  bool is_zero() const;
  /// Lowest exponent with a nonzero coefficient, or precision() if none.
  std::size_t valuation() const;
  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Ring ring_;
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& c);
QSeries pow(const QSeries& a, unsigned e);
/// q^n -> q^{dn}; precision is kept, input terms past (P-1)/d are dropped.
QSeries dilate(const QSeries& a, std::size_t d);
QSeries truncate(const QSeries& a, std::size_t precision);
QSeries reduce_mod(const QSeries& a, std::int64_t m);

/// Multiplies by the lcm of the denominators and divides by the gcd of the
/// numerators; the first nonzero coefficient is made positive.
QSeries primitive_integral(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(a, c); }

/// "p/q" or "p" in base 10.
std::string format_rational(const Rational& c);
Rational parse_rational(const std::string& text);

/// One "n<TAB>coefficient" line per nonzero coefficient.
std::string render_text(const QSeries& a);
nlohmann::json to_json(const QSeries& a);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace plusforms
