#include "plusforms/class_numbers.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "plusforms/errors.hpp"
#include "plusforms/level_one.hpp"

namespace plusforms {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod_pos(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Rational weight_for(std::int64_t disc) {
  if (disc == -3) return Rational(1, 3);
  if (disc == -4) return Rational(1, 2);
  return 1;
}

}  // namespace

int kronecker(std::int64_t d, std::int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (d % 2 == 0) return 0;
    const std::int64_t r = mod_pos(d, 8);
    if (v % 2 == 1 && (r == 3 || r == 5)) result = -result;
  }
  return n == 1 ? result : result * jacobi(d, n);
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

bool is_fundamental(std::int64_t d) {
  if (d == 0) throw PreconditionViolation("is_fundamental: D must be nonzero");
  const std::int64_t r = mod_pos(d, 4);
  if (r == 1) return is_squarefree(static_cast<std::uint64_t>(std::llabs(d)));
  if (r == 0) {
    const std::int64_t m = d / 4;
    const std::int64_t rm = mod_pos(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(static_cast<std::uint64_t>(std::llabs(m)));
  }
  return false;
}

Discriminant Discriminant::of(std::int64_t d) { return {d, plusforms::is_fundamental(d)}; }

std::int64_t field_discriminant(std::int64_t d) {
  if (d == 0) throw PreconditionViolation("field_discriminant: D must be nonzero");
  std::uint64_t n = static_cast<std::uint64_t>(std::llabs(d));
  std::int64_t kernel = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) kernel *= static_cast<std::int64_t>(p);
  }
  kernel *= static_cast<std::int64_t>(n);
  if (d < 0) kernel = -kernel;
  if (kernel == 1) throw PreconditionViolation("field_discriminant: D is a square");
  return mod_pos(kernel, 4) == 1 ? kernel : 4 * kernel;
}

std::int64_t class_number(std::int64_t disc) {
  if (disc >= 0) throw NonNegativeInput();
  if (mod_pos(disc, 4) > 1) throw PreconditionViolation("class_number: discriminant must be 0 or 1 mod 4");
  const std::int64_t amax = isqrt(-disc / 3);
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (mod_pos(b - disc, 2) != 0) continue;
      const std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::int64_t class_number_of_field(std::int64_t d) {
  if (d >= 0) throw NonNegativeInput();
  return class_number(field_discriminant(d));
}

namespace {

Rational bernoulli_polynomial_with(const std::vector<Rational>& b, unsigned r, const Rational& x) {
  Rational s = 0;
  Rational xp = 1;  // x^{r-j}, built from j = r downwards
  Integer binom = 1;  // C(r, j) for j = r downwards
  for (unsigned j = r + 1; j-- > 0;) {
    s += binom * b[j] * xp;
    xp *= x;
    if (j > 0) binom = binom * j / (r - j + 1);
  }
  return s;
}

}  // namespace

Rational bernoulli_polynomial(unsigned r, const Rational& x) {
  return bernoulli_polynomial_with(bernoulli_numbers(r), r, x);
}

Rational gen_bernoulli(unsigned r, std::int64_t d) {
  if (r < 1) throw PreconditionViolation("gen_bernoulli: r must be positive");
  if (!is_fundamental(d)) throw PreconditionViolation("gen_bernoulli: D must be fundamental");
  const std::int64_t f = std::llabs(d);
  const auto b = bernoulli_numbers(r);
  Rational s = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    const int chi = kronecker(d, a);
    if (chi == 0) continue;
    s += chi * bernoulli_polynomial_with(b, r, Rational(a, f));
  }
  Integer fp;
  mpz_ui_pow_ui(fp.get_mpz_t(), static_cast<unsigned long>(f), r - 1);
  Rational out = s * fp;
  out.canonicalize();
  return out;
}

Rational hurwitz(std::uint64_t n) {
  if (n == 0) return Rational(-1, 12);
  if (n % 4 == 1 || n % 4 == 2) return 0;
  Rational s = 0;
  for (std::uint64_t f = 1; f * f <= n; ++f) {
    if (n % (f * f) != 0) continue;
    const auto disc = -static_cast<std::int64_t>(n / (f * f));
    if (mod_pos(disc, 4) > 1) continue;
    s += weight_for(disc) * class_number(disc);
  }
  s.canonicalize();
  return s;
}

}  // namespace plusforms
