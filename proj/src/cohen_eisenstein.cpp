#include "plusforms/cohen_eisenstein.hpp"

#include <cmath>

#include "plusforms/class_numbers.hpp"
#include "plusforms/errors.hpp"
#include "plusforms/level_one.hpp"

namespace plusforms {

namespace {

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool plus_allowed(int k, std::uint64_t n) {
  const std::uint64_t r = n % 4;
  if (k % 2 == 0) return r == 0 || r == 1;
  return r == 0 || r == 3;
}

std::size_t first_plus_violation(const QSeries& g, int k) {
  for (std::size_t n = 0; n < g.precision(); ++n) {
    if (g[n] != 0 && !plus_allowed(k, n)) return n;
  }
  return g.precision();
}

Rational cohen_h(int r, std::uint64_t n) {
  if (r < 1) throw PreconditionViolation("cohen_h: r must be positive");
  if (r == 1) return hurwitz(n);
  if (n == 0) return -bernoulli(static_cast<unsigned>(2 * r)) / Rational(2 * r);
  if (!plus_allowed(r, n)) return 0;

  const auto signed_n = static_cast<std::int64_t>(n);
  const std::int64_t m = (r % 2 == 0) ? signed_n : -signed_n;
  std::int64_t d = 1;
  std::uint64_t f = 0;
  const std::uint64_t root = isqrt(n);
  if (m > 0 && root * root == n) {
    f = root;
  } else {
    d = field_discriminant(m);
    f = isqrt(static_cast<std::uint64_t>(m / d));
  }

  const Rational l_value = -gen_bernoulli(static_cast<unsigned>(r), d) / Rational(r);
  Rational s = 0;
  for (std::uint64_t e = 1; e <= f; ++e) {
    if (f % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    const int chi = kronecker(d, static_cast<std::int64_t>(e));
    if (chi == 0) continue;
    Integer ep;
    mpz_ui_pow_ui(ep.get_mpz_t(), e, static_cast<unsigned long>(r - 1));
    s += mu * chi * ep * sigma(static_cast<unsigned>(2 * r - 1), f / e);
  }
  Rational out = l_value * s;
  out.canonicalize();
  return out;
}

PlusForm cohen_series(int r, std::size_t precision) {
  if (r < 2) throw PreconditionViolation("cohen_series: r must be at least 2");
  std::vector<Rational> v(precision);
  for (std::size_t n = 0; n < precision; ++n) v[n] = cohen_h(r, n);
  return {QSeries(Ring::rational(), std::move(v)), FormMeta{2 * r + 1, 4, Character::trivial()}, r};
}

Form theta(std::size_t precision) {
  std::vector<Rational> v(precision);
  if (precision > 0) v[0] = 1;
  for (std::size_t n = 1; n * n < precision; ++n) v[n * n] = 2;
  return {QSeries(Ring::rational(), std::move(v)), FormMeta{1, 4, Character::trivial()}};
}

Form g_ab(std::int64_t a, std::int64_t b, std::size_t precision) {
  if (a < 1) throw PreconditionViolation("g_ab: modulus must be positive");
  const std::int64_t target = ((-b) % a + a) % a;
  for (std::int64_t x = 0; x < a; ++x) {
    if ((x * x) % a == target) throw ResidueConditionViolated(a, b);
  }
  const std::int64_t residue = ((b % a) + a) % a;
  std::vector<Rational> v(precision);
  for (std::size_t n = 0; n < precision; ++n) {
    if (static_cast<std::int64_t>(n % static_cast<std::uint64_t>(a)) == residue) v[n] = hurwitz(n);
  }
  const std::int64_t level = (a % 2 == 0) ? a * a : 4 * a * a;
  return {QSeries(Ring::rational(), std::move(v)), FormMeta{3, level, Character::unset()}};
}

PlusForm plus_isomorphism(int k, const Form& f, const Form& h, std::size_t precision) {
  if (k < 2) throw PreconditionViolation("plus_isomorphism: k must be at least 2");
  const bool even = k % 2 == 0;
  const int wf = even ? k : k - 3;
  const int wh = even ? k - 2 : k - 5;
  if (!f.series.is_zero() && f.meta.twice_weight != 2 * wf) {
    throw WeightMismatch("plus_isomorphism: f must have weight " + std::to_string(wf));
  }
  if (!h.series.is_zero() && h.meta.twice_weight != 2 * wh) {
    throw WeightMismatch("plus_isomorphism: h must have weight " + std::to_string(wh));
  }
  const QSeries fs = truncate(f.series, precision);
  const QSeries hs = truncate(h.series, precision);
  QSeries first = even ? theta(precision).series : cohen_series(3, precision).series;
  QSeries second = even ? cohen_series(2, precision).series : cohen_series(5, precision).series;
  const QSeries out = add(mul(dilate(fs, 4), first), mul(dilate(hs, 4), second));
  return {out, FormMeta{2 * k + 1, 4, Character::trivial()}, k};
}

}  // namespace plusforms
