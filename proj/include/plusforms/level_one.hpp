#pragma once

// Level-one modular forms: Bernoulli numbers, divisor sums, E_{2k}, Delta,
// monomial bases of M_k and dim S_k.

#include <cstddef>
#include <vector>

#include "plusforms/form_meta.hpp"
#include "plusforms/qseries.hpp"

namespace plusforms {

/// B_0 .. B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned n);
Rational bernoulli(unsigned n);

/// sum_{d | n} d^e
Integer sigma(unsigned e, std::uint64_t n);

/// Normalized E_{two_k}: 1 - (2 two_k / B_{two_k}) sum sigma_{two_k - 1}(n) q^n.
Form eisenstein(int two_k, std::size_t precision);

/// E_2 = 1 - 24 sum sigma_1(n) q^n. Quasi-modular; only used to build
/// holomorphic combinations such as 2E_2(2z) - E_2(z).
QSeries eisenstein2(std::size_t precision);

/// q prod (1 - q^n)^24, via the eta product.
Form delta(std::size_t precision);

/// E_4^a E_6^b with 4a + 6b = k, a descending. Throws Weight2Empty for k = 2.
std::vector<QSeries> mk_basis(int k, std::size_t precision);

/// dim S_{two_k}(SL_2(Z)).
int dim_s(int two_k);

}  // namespace plusforms
