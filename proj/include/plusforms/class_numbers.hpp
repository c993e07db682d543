#pragma once

#include <cstdint>

#include "plusforms/qseries.hpp"

namespace plusforms {

/// Kronecker symbol (D/n), with the usual conventions at n = 2, n = -1 and n = 0.
int kronecker(std::int64_t d, std::int64_t n);

bool is_squarefree(std::uint64_t n);

/// D = 1, or D the discriminant of a quadratic field.
bool is_fundamental(std::int64_t d);

struct Discriminant {
  std::int64_t value;
  bool is_fundamental;

  static Discriminant of(std::int64_t d);
};

/// Discriminant of Q(sqrt(d)), d not a square.
std::int64_t field_discriminant(std::int64_t d);

/// Number of SL_2(Z)-classes of primitive positive definite forms of discriminant disc < 0.
std::int64_t class_number(std::int64_t disc);

/// Class number of Q(sqrt(d)) for d < 0. Throws NonNegativeInput.
std::int64_t class_number_of_field(std::int64_t d);

/// B_r(x) = sum_j C(r, j) B_j x^{r-j}
Rational bernoulli_polynomial(unsigned r, const Rational& x);

/// B_{r, chi_D} for fundamental D (D = 1 gives B_r(1)).
Rational gen_bernoulli(unsigned r, std::int64_t d);

/// Hurwitz class number H(N), H(0) = -1/12.
Rational hurwitz(std::uint64_t n);

}  // namespace plusforms
