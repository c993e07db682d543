#pragma once

// Cohen-Eisenstein series, theta, the progression series G_{a,b} and the
// Kohnen isomorphism M_a + M_b -> M^+_{k+1/2}(Gamma0(4)).

#include <cstddef>
#include <cstdint>

#include "plusforms/form_meta.hpp"
#include "plusforms/qseries.hpp"

namespace plusforms {

/// Form of weight k + 1/2 satisfying the plus condition.
struct PlusForm {
  QSeries series;
  FormMeta meta;
  int k;
};

/// True iff exponent n is allowed in the plus space of weight k + 1/2,
/// i.e. (-1)^k n == 0, 1 mod 4.
bool plus_allowed(int k, std::uint64_t n);

/// First exponent violating the plus condition, or precision() if none.
std::size_t first_plus_violation(const QSeries& g, int k);

/// H(r, N). Exact: r = 1 is the Hurwitz class number; for r >= 2 the value
/// L(1-r, chi_D) sum_{d|f} mu(d) chi_D(d) d^{r-1} sigma_{2r-1}(f/d) where
/// (-1)^r N = D f^2.
Rational cohen_h(int r, std::uint64_t n);

/// H_{r+1/2} = sum H(r, N) q^N, r >= 2.
PlusForm cohen_series(int r, std::size_t precision);

/// 1 + 2 sum q^{n^2}
Form theta(std::size_t precision);

/// sum_{n == b mod a} H(1, n) q^n. Throws ResidueConditionViolated if -b is
/// a square modulo a.
Form g_ab(std::int64_t a, std::int64_t b, std::size_t precision);

/// Even k: f(4z) theta + h(4z) H_{5/2}, f in M_k, h in M_{k-2}.
/// Odd k:  f(4z) H_{7/2} + h(4z) H_{11/2}, f in M_{k-3}, h in M_{k-5}.
/// A zero input is accepted at any weight. Throws WeightMismatch.
PlusForm plus_isomorphism(int k, const Form& f, const Form& h, std::size_t precision);

}  // namespace plusforms
