#include "plusforms/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "plusforms/errors.hpp"

namespace plusforms {

namespace {

void require_same_ring(const QSeries& a, const QSeries& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
}

Integer lcm_of_denominators(const std::vector<Rational>& v, std::size_t n) {
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
  }
  return l;
}

std::vector<Integer> scaled_numerators(const std::vector<Rational>& v, std::size_t n, const Integer& den) {
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[i].get_num() * (den / v[i].get_den());
  }
  return out;
}

// Cauchy product truncated at n, over the integers.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// Small moduli: word arithmetic.
std::vector<Rational> convolve_mod(const QSeries& a, const QSeries& b, std::size_t n, std::uint64_t m) {
  std::vector<std::uint64_t> x(n), y(n), z(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = a[i].get_num().get_ui();
    y[i] = b[i].get_num().get_ui();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (y[j] == 0) continue;
      z[i + j] = (z[i + j] + x[i] * y[j]) % m;
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Rational(static_cast<unsigned long>(z[i]));
  return out;
}

}  // namespace

Ring Ring::mod(std::int64_t m) {
  if (m < 2) throw PreconditionViolation("modulus must be at least 2");
  return Ring(Kind::Mod, m);
}

Rational Ring::element(const Rational& c, std::int64_t index) const {
  if (is_rational()) {
    Rational r = c;
    r.canonicalize();
    return r;
  }
  const Integer m = static_cast<long>(modulus_);
  Integer num = c.get_num() % m;
  if (num < 0) num += m;
  if (c.get_den() == 1) return Rational(num);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), m.get_mpz_t()) == 0) {
    throw NonIntegralCoefficient(index);
  }
  Integer r = (num * inv) % m;
  return Rational(r);
}

std::string Ring::to_string() const {
  return is_rational() ? std::string("QQ") : "Z/" + std::to_string(modulus_) + "Z";
}

QSeries::QSeries(Ring ring, std::vector<Rational> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionViolation("series precision must be positive");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    coeffs_[n] = ring_.element(coeffs_[n], static_cast<std::int64_t>(n));
  }
}

QSeries QSeries::zero(Ring ring, std::size_t precision) {
  return QSeries(ring, std::vector<Rational>(precision));
}

QSeries QSeries::one(Ring ring, std::size_t precision) { return monomial(ring, 0, 1, precision); }

QSeries QSeries::monomial(Ring ring, std::size_t exponent, const Rational& c, std::size_t precision) {
  std::vector<Rational> v(precision);
  if (exponent < precision) v[exponent] = c;
  return QSeries(ring, std::move(v));
}

QSeries QSeries::from_ints(Ring ring, const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QSeries(ring, std::move(v));
}

bool QSeries::is_zero() const { return valuation() == precision(); }

std::size_t QSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return coeffs_.size();
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

QSeries add(const QSeries& a, const QSeries& b) {
  require_same_ring(a, b);
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i] + b[i];
  return QSeries(a.ring(), std::move(v));
}

QSeries sub(const QSeries& a, const QSeries& b) {
  require_same_ring(a, b);
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i] - b[i];
  return QSeries(a.ring(), std::move(v));
}

QSeries neg(const QSeries& a) { return scale(a, -1); }

QSeries mul(const QSeries& a, const QSeries& b) {
  require_same_ring(a, b);
  const std::size_t n = std::min(a.precision(), b.precision());
  const Ring& ring = a.ring();
  if (!ring.is_rational() && ring.modulus() < (std::int64_t{1} << 31)) {
    return QSeries(ring, convolve_mod(a, b, n, static_cast<std::uint64_t>(ring.modulus())));
  }
  const Integer da = lcm_of_denominators(a.coeffs(), n);
  const Integer db = lcm_of_denominators(b.coeffs(), n);
  const auto prod = convolve(scaled_numerators(a.coeffs(), n, da), scaled_numerators(b.coeffs(), n, db), n);
  const Integer den = da * db;
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(prod[i], den);
  return QSeries(ring, std::move(v));
}

QSeries scale(const QSeries& a, const Rational& c) {
  Rational s;
  try {
    s = a.ring().element(c);
  } catch (const NonIntegralCoefficient&) {
    throw RingMismatch();
  }
  std::vector<Rational> v(a.precision());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] * s;
  return QSeries(a.ring(), std::move(v));
}

QSeries pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::one(a.ring(), a.precision());
  for (unsigned i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

QSeries dilate(const QSeries& a, std::size_t d) {
  if (d == 0) throw PreconditionViolation("dilation factor must be positive");
  const std::size_t n = a.precision();
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i * d < n; ++i) v[i * d] = a[i];
  return QSeries(a.ring(), std::move(v));
}

QSeries truncate(const QSeries& a, std::size_t precision) {
  const std::size_t n = std::min(precision, a.precision());
  return QSeries(a.ring(), std::vector<Rational>(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(n)));
}

QSeries reduce_mod(const QSeries& a, std::int64_t m) {
  if (!a.ring().is_rational()) throw RingMismatch();
  return QSeries(Ring::mod(m), a.coeffs());
}

QSeries primitive_integral(const QSeries& a) {
  if (!a.ring().is_rational()) throw RingMismatch();
  const std::size_t n = a.precision();
  const Integer den = lcm_of_denominators(a.coeffs(), n);
  auto nums = scaled_numerators(a.coeffs(), n, den);
  Integer g = 0;
  for (const auto& x : nums) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return a;
  const std::size_t v = a.valuation();
  if (nums[v] < 0) g = -g;
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Rational(nums[i] / g);
  return QSeries(a.ring(), std::move(out));
}

std::string format_rational(const Rational& c) { return c.get_str(10); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw PreconditionViolation("not a rational number: " + text);
  r.canonicalize();
  return r;
}

std::string render_text(const QSeries& a) {
  std::ostringstream out;
  for (std::size_t n = 0; n < a.precision(); ++n) {
    if (a[n] != 0) out << n << '\t' << format_rational(a[n]) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const QSeries& a) {
  nlohmann::json ring;
  if (a.ring().is_rational()) {
    ring = {{"kind", "rational"}};
  } else {
    ring = {{"kind", "mod"}, {"modulus", a.ring().modulus()}};
  }
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(format_rational(c));
  return {{"ring", ring}, {"precision", a.precision()}, {"coeffs", coeffs}};
}

QSeries series_from_json(const nlohmann::json& j) {
  const auto& ring_j = j.at("ring");
  const Ring ring = ring_j.at("kind") == "rational" ? Ring::rational() : Ring::mod(ring_j.at("modulus").get<std::int64_t>());
  std::vector<Rational> v;
  for (const auto& c : j.at("coeffs")) v.push_back(parse_rational(c.get<std::string>()));
  if (v.size() != j.at("precision").get<std::size_t>()) throw PreconditionViolation("precision does not match coefficient count");
  return QSeries(ring, std::move(v));
}

}  // namespace plusforms
