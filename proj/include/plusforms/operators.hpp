#pragma once

// Coefficient action of U_d, V_d, quadratic twists, T(l^2, k), the
// weight-equalizing forms R_t and progression projections, together with the
// conservative level bookkeeping needed for Sturm bounds.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plusforms/form_meta.hpp"
#include "plusforms/qseries.hpp"

namespace plusforms {

/// Applied operators (for reports) and the resulting level bound.
/// Level rules: V_d multiplies by d, U_d maps N to lcm(N, 4d), a twist or
/// projection modulo m multiplies by m^2, sums and products take the lcm.
struct OperatorTrace {
  std::vector<std::string> description;
  std::int64_t level_bound_out = 1;

  static OperatorTrace source(std::string tag, std::int64_t level);

  OperatorTrace then_u(std::int64_t d) const;
  OperatorTrace then_v(std::int64_t d) const;
  OperatorTrace then_twist(std::string tag, std::int64_t modulus) const;
  OperatorTrace then_project(std::int64_t a, std::int64_t modulus) const;
  OperatorTrace combine(const OperatorTrace& other, std::string tag) const;
};

/// Dirichlet character used by `twist`: either a Kronecker symbol (D/.) of
/// modulus |D|, or an explicit table of values on residues mod m.
class CharacterSpec {
 public:
  static CharacterSpec kronecker(std::int64_t d);
  static CharacterSpec table(std::vector<int> values);
  /// (n/3)
  static CharacterSpec chi3() { return kronecker(-3); }
  /// Principal character mod 3: 1 if 3 does not divide n.
  static CharacterSpec chi3_squared() { return table({0, 1, 1}); }

  int operator()(std::uint64_t n) const;
  std::int64_t modulus() const noexcept { return modulus_; }
  std::string tag() const;

 private:
  std::int64_t d_ = 1;
  std::vector<int> values_;
  std::int64_t modulus_ = 1;
};

/// a(n) -> a(nd); precision ceil(P/d).
QSeries u_op(const QSeries& g, std::size_t d);
/// q^n -> q^{dn}; precision d*P, since every exponent below d*P is determined.
QSeries v_op(const QSeries& g, std::size_t d);
QSeries twist(const QSeries& g, const CharacterSpec& chi);

/// Half-integral weight Hecke operator T(l^2, k) on weight k + 1/2.
/// Output precision is ceil(P / l^2). Throws NotOddPrime.
QSeries hecke_t(const QSeries& g, std::int64_t l, int k);

/// m(t) = (t - 4 floor(t/4)) / 2
int r_exponent_m(int t);

/// R_0 = 1, R_t = E_4(4z)^{floor(t/4) - m(t)} E_6(4z)^{m(t)} for t >= 4,
/// and R_2 = 2E_2(8z) - E_2(4z). Level bound 4 (8 for t = 2).
Form r_t(int t, std::size_t precision);

/// Keeps exponents n == a mod M.
QSeries ap_project(const QSeries& g, std::int64_t a, std::int64_t modulus);

bool is_prime(std::int64_t n);

}  // namespace plusforms
