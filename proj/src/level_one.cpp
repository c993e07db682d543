#include "plusforms/level_one.hpp"

#include "plusforms/errors.hpp"

namespace plusforms {

std::string Character::to_string() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Kronecker:
      return "kronecker(" + std::to_string(d) + ")";
    case Kind::Unset:
      break;
  }
  return "unset";
}

std::string FormMeta::weight_string() const {
  return half_integral() ? std::to_string(twice_weight) + "/2" : std::to_string(twice_weight / 2);
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += binom * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / Rational(m + 1);
    b[m].canonicalize();
  }
  return b;
}

Rational bernoulli(unsigned n) { return bernoulli_numbers(n)[n]; }

Integer sigma(unsigned e, std::uint64_t n) {
  Integer s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, e);
    s += t;
    const std::uint64_t other = n / d;
    if (other != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), other, e);
      s += t;
    }
  }
  return s;
}

Form eisenstein(int two_k, std::size_t precision) {
  if (two_k < 4 || two_k % 2 != 0) throw PreconditionViolation("eisenstein: weight must be even and >= 4");
  const Rational c = Rational(-2 * two_k) / bernoulli(static_cast<unsigned>(two_k));
  std::vector<Rational> v(precision);
  if (precision > 0) v[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) v[n] = c * sigma(static_cast<unsigned>(two_k - 1), n);
  return {QSeries(Ring::rational(), std::move(v)), FormMeta{2 * two_k, 1, Character::trivial()}};
}

QSeries eisenstein2(std::size_t precision) {
  std::vector<Rational> v(precision);
  if (precision > 0) v[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) v[n] = -24 * Rational(sigma(1, n));
  return QSeries(Ring::rational(), std::move(v));
}

Form delta(std::size_t precision) {
  // eta(z)/q^{1/24} = prod (1 - q^n), then raise to the 24th power.
  std::vector<Integer> eta(precision);
  if (precision > 0) eta[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) {
    for (std::size_t i = precision - 1; i >= n; --i) {
      eta[i] -= eta[i - n];
      if (i == n) break;
    }
  }
  std::vector<Rational> ev(eta.begin(), eta.end());
  const QSeries e1(Ring::rational(), std::move(ev));
  const QSeries e2 = mul(e1, e1);
  const QSeries e4 = mul(e2, e2);
  const QSeries e8 = mul(e4, e4);
  const QSeries e16 = mul(e8, e8);
  const QSeries e24 = mul(e16, e8);
  // shift by q
  std::vector<Rational> v(precision);
  for (std::size_t n = 1; n < precision; ++n) v[n] = e24[n - 1];
  return {QSeries(Ring::rational(), std::move(v)), FormMeta{24, 1, Character::trivial()}};
}

std::vector<QSeries> mk_basis(int k, std::size_t precision) {
  if (k == 2) throw Weight2Empty();
  if (k < 0 || k % 2 != 0) throw PreconditionViolation("mk_basis: weight must be even and nonnegative");
  std::vector<QSeries> basis;
  if (k == 0) {
    basis.push_back(QSeries::one(Ring::rational(), precision));
    return basis;
  }
  const QSeries e4 = eisenstein(4, precision).series;
  const QSeries e6 = eisenstein(6, precision).series;
  for (int a = k / 4; a >= 0; --a) {
    const int rest = k - 4 * a;
    if (rest % 6 != 0) continue;
    basis.push_back(mul(pow(e4, static_cast<unsigned>(a)), pow(e6, static_cast<unsigned>(rest / 6))));
  }
  return basis;
}

int dim_s(int two_k) {
  if (two_k < 0 || two_k % 2 != 0) throw PreconditionViolation("dim_s: weight must be even and nonnegative");
  if (two_k < 12) return 0;
  const int base = two_k / 12;
  return two_k % 12 == 2 ? base - 1 : base;
}

}  // namespace plusforms
