#include "plusforms/operators.hpp"

#include <numeric>

#include "plusforms/class_numbers.hpp"
#include "plusforms/errors.hpp"
#include "plusforms/level_one.hpp"

namespace plusforms {

OperatorTrace OperatorTrace::source(std::string tag, std::int64_t level) {
  return {{std::move(tag)}, level};
}

OperatorTrace OperatorTrace::then_u(std::int64_t d) const {
  OperatorTrace t = *this;
  t.description.push_back("U" + std::to_string(d));
  t.level_bound_out = std::lcm(level_bound_out, 4 * d);
  return t;
}

OperatorTrace OperatorTrace::then_v(std::int64_t d) const {
  OperatorTrace t = *this;
  t.description.push_back("V" + std::to_string(d));
  t.level_bound_out = level_bound_out * d;
  return t;
}

OperatorTrace OperatorTrace::then_twist(std::string tag, std::int64_t modulus) const {
  OperatorTrace t = *this;
  t.description.push_back("twist:" + tag);
  t.level_bound_out = level_bound_out * modulus * modulus;
  return t;
}

OperatorTrace OperatorTrace::then_project(std::int64_t a, std::int64_t modulus) const {
  OperatorTrace t = *this;
  t.description.push_back("proj:" + std::to_string(a) + "mod" + std::to_string(modulus));
  t.level_bound_out = level_bound_out * modulus * modulus;
  return t;
}

OperatorTrace OperatorTrace::combine(const OperatorTrace& other, std::string tag) const {
  OperatorTrace t = *this;
  t.description.push_back(std::move(tag));
  t.description.insert(t.description.end(), other.description.begin(), other.description.end());
  t.level_bound_out = std::lcm(level_bound_out, other.level_bound_out);
  return t;
}

CharacterSpec CharacterSpec::kronecker(std::int64_t d) {
  CharacterSpec c;
  c.d_ = d;
  c.modulus_ = d < 0 ? -d : d;
  return c;
}

CharacterSpec CharacterSpec::table(std::vector<int> values) {
  if (values.empty()) throw PreconditionViolation("character table must be nonempty");
  CharacterSpec c;
  c.modulus_ = static_cast<std::int64_t>(values.size());
  c.values_ = std::move(values);
  return c;
}

int CharacterSpec::operator()(std::uint64_t n) const {
  if (!values_.empty()) return values_[n % values_.size()];
  return plusforms::kronecker(d_, static_cast<std::int64_t>(n));
}

std::string CharacterSpec::tag() const {
  if (values_.empty()) return "kronecker(" + std::to_string(d_) + ")";
  std::string s = "table[";
  for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
  return s + "]";
}

QSeries u_op(const QSeries& g, std::size_t d) {
  if (d == 0) throw PreconditionViolation("u_op: d must be positive");
  const std::size_t n = (g.precision() + d - 1) / d;
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g[i * d];
  return QSeries(g.ring(), std::move(v));
}

QSeries v_op(const QSeries& g, std::size_t d) {
  if (d == 0) throw PreconditionViolation("v_op: d must be positive");
  std::vector<Rational> v(g.precision() * d);
  for (std::size_t i = 0; i < g.precision(); ++i) v[i * d] = g[i];
  return QSeries(g.ring(), std::move(v));
}

QSeries twist(const QSeries& g, const CharacterSpec& chi) {
  std::vector<Rational> v(g.precision());
  for (std::size_t n = 0; n < v.size(); ++n) {
    const int c = chi(n);
    if (c != 0) v[n] = c * g[n];
  }
  return QSeries(g.ring(), std::move(v));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

QSeries hecke_t(const QSeries& g, std::int64_t l, int k) {
  if (l == 2 || !is_prime(l)) throw NotOddPrime(l);
  const auto l2 = static_cast<std::size_t>(l * l);
  const std::size_t out_prec = (g.precision() + l2 - 1) / l2;
  const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
  // l^{k-1} and l^{2k-1} as exact rationals; a negative power is only usable
  // over a ring where l is invertible, which Ring::element checks.
  auto lpow = [l](int e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1, p) : Rational(p);
  };
  const Rational c1 = g.ring().element(lpow(k - 1));
  const Rational c2 = g.ring().element(kronecker(sign, l * l) * lpow(2 * k - 1));
  std::vector<Rational> v(out_prec);
  for (std::size_t n = 0; n < out_prec; ++n) {
    Rational c = g[l2 * n];
    const int chi = kronecker(sign * static_cast<std::int64_t>(n), l);
    if (chi != 0) c += chi * c1 * g[n];
    if (n % l2 == 0) c += c2 * g[n / l2];
    v[n] = c;
  }
  return QSeries(g.ring(), std::move(v));
}

int r_exponent_m(int t) { return (t - 4 * (t / 4)) / 2; }

Form r_t(int t, std::size_t precision) {
  if (t < 0 || t % 2 != 0) throw PreconditionViolation("r_t: t must be even and nonnegative");
  if (t == 0) return {QSeries::one(Ring::rational(), precision), FormMeta{0, 1, Character::trivial()}};
  if (t == 2) {
    const QSeries e2 = eisenstein2(precision);
    const QSeries r2 = sub(scale(dilate(e2, 8), 2), dilate(e2, 4));
    return {r2, FormMeta{4, 8, Character::trivial()}};
  }
  const int m = r_exponent_m(t);
  const int a = t / 4 - m;
  if (a < 0) throw PreconditionViolation("r_t: negative E_4 exponent");
  const QSeries e4 = dilate(eisenstein(4, precision).series, 4);
  const QSeries e6 = dilate(eisenstein(6, precision).series, 4);
  const QSeries out = mul(pow(e4, static_cast<unsigned>(a)), pow(e6, static_cast<unsigned>(m)));
  return {out, FormMeta{2 * t, 4, Character::trivial()}};
}

QSeries ap_project(const QSeries& g, std::int64_t a, std::int64_t modulus) {
  if (modulus < 1 || a < 0 || a >= modulus) throw PreconditionViolation("ap_project: need 0 <= a < M");
  std::vector<Rational> v(g.precision());
  const auto m = static_cast<std::uint64_t>(modulus);
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (static_cast<std::int64_t>(n % m) == a) v[n] = g[n];
  }
  return QSeries(g.ring(), std::move(v));
}

}  // namespace plusforms
