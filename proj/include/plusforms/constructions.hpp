#pragma once

// The named half-integral weight forms whose mod-3 reductions are checked:
// Phi_{k+1/2}, F, G_{3,1}, Psi_{k+1/2}, Psi_{10+1/2}, plus the helper series
// the congruence targets compare against.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "plusforms/form_meta.hpp"
#include "plusforms/operators.hpp"
#include "plusforms/qseries.hpp"

namespace plusforms {

struct FormName {
  enum class Kind { Phi, F, G31, Psi, Psi10, Custom };
  Kind kind = Kind::Custom;
  int k = 0;
  std::string label;

  static FormName phi(int k) { return {Kind::Phi, k, {}}; }
  static FormName f() { return {Kind::F, 0, {}}; }
  static FormName g31() { return {Kind::G31, 0, {}}; }
  static FormName psi(int k) { return {Kind::Psi, k, {}}; }
  static FormName psi10() { return {Kind::Psi10, 10, {}}; }
  static FormName custom(std::string label) { return {Kind::Custom, 0, std::move(label)}; }

  std::string to_string() const;
};

struct NamedForm {
  FormName name;
  QSeries series;
  FormMeta meta;
  OperatorTrace trace;
};

/// 28 H_{7/2} R_{k-3} - (44/3) H_{11/2} R_{k-5}, odd k >= 9. Coefficients beta_k(n).
NamedForm phi(int k, std::size_t precision);

/// A + A (x) chi_3 with A = Phi_{9+1/2} - Phi_{9+1/2}|U_3|V_3.
NamedForm f_form(std::size_t precision);
/// 2 * ap_project(Phi_{9+1/2}, 1, 3), the closed form of f_form.
NamedForm f_form_projection(std::size_t precision);

/// G_{3,1} on Gamma0(36).
NamedForm g31(std::size_t precision);

/// Delta(4z) R_{k-12} theta, even k > 10. Coefficients alpha_k(n).
NamedForm psi(int k, std::size_t precision);

/// -(B (x) chi_3) + B (x) chi_3^2 with B = theta E_4(4z)E_6(4z) - H_{5/2} E_4(4z)^2.
NamedForm psi10(std::size_t precision);

/// ap_project(psi(k), 2, 3) for even k > 10; psi10 itself for k = 10.
NamedForm psi_projected(int k, std::size_t precision);

/// sum_{n == 2 mod 3} H(1, 3n) q^n, built as G_{9,6}|U_3.
NamedForm hurwitz_3n(std::size_t precision);

/// sum_{n >= 1, 3 does not divide n} q^{n^2} = (theta - theta|V_9) / 2.
NamedForm theta_prime_to_3(std::size_t precision);

/// Generator of the cusp forms in M^+_{k+1/2}(Gamma0(4)) when that space is a
/// line, as the primitive integral series with positive leading coefficient.
NamedForm plus_cusp_line(int k, std::size_t precision);

NamedForm custom_form(std::string label, QSeries series, FormMeta meta);

nlohmann::json to_json(const NamedForm& f);

}  // namespace plusforms
