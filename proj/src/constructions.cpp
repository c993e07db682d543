#include "plusforms/constructions.hpp"

#include "plusforms/cohen_eisenstein.hpp"
#include "plusforms/errors.hpp"
#include "plusforms/level_one.hpp"

namespace plusforms {

namespace {

FormMeta half_meta(int k, std::int64_t level) { return FormMeta{2 * k + 1, level, Character::trivial()}; }

NamedForm make(FormName name, QSeries series, int twice_weight, OperatorTrace trace) {
  FormMeta meta{twice_weight, trace.level_bound_out, Character::trivial()};
  return {std::move(name), std::move(series), meta, std::move(trace)};
}

std::vector<Form> basis_forms(int weight, std::size_t precision) {
  std::vector<Form> out;
  if (weight < 0 || weight == 2) return out;
  for (auto& s : mk_basis(weight, precision)) out.push_back({std::move(s), FormMeta{2 * weight, 1, Character::trivial()}});
  return out;
}

}  // namespace

std::string FormName::to_string() const {
  switch (kind) {
    case Kind::Phi:
      return "phi:" + std::to_string(k);
    case Kind::F:
      return "f";
    case Kind::G31:
      return "g31";
    case Kind::Psi:
      return "psi:" + std::to_string(k);
    case Kind::Psi10:
      return "psi10";
    case Kind::Custom:
      break;
  }
  return label;
}

NamedForm phi(int k, std::size_t precision) {
  if (k < 9 || k % 2 == 0) throw PreconditionViolation("phi: k must be odd and at least 9");
  const QSeries h7 = cohen_series(3, precision).series;
  const QSeries h11 = cohen_series(5, precision).series;
  const QSeries s = sub(scale(mul(h7, r_t(k - 3, precision).series), 28),
                        scale(mul(h11, r_t(k - 5, precision).series), Rational(44, 3)));
  return {FormName::phi(k), s, half_meta(k, 4), OperatorTrace::source("phi:" + std::to_string(k), 4)};
}

NamedForm f_form(std::size_t precision) {
  const NamedForm p = phi(9, precision);
  const QSeries a = sub(p.series, v_op(u_op(p.series, 3), 3));
  const OperatorTrace ta = p.trace.combine(p.trace.then_u(3).then_v(3), "minus");
  const CharacterSpec chi = CharacterSpec::chi3();
  const QSeries f = add(a, twist(a, chi));
  const OperatorTrace tf = ta.combine(ta.then_twist(chi.tag(), chi.modulus()), "plus");
  return make(FormName::f(), f, p.meta.twice_weight, tf);
}

NamedForm f_form_projection(std::size_t precision) {
  const NamedForm p = phi(9, precision);
  return make(FormName::custom("2*proj(phi:9,1,3)"), scale(ap_project(p.series, 1, 3), 2), p.meta.twice_weight,
              p.trace.then_project(1, 3));
}

NamedForm g31(std::size_t precision) {
  Form g = g_ab(3, 1, precision);
  return {FormName::g31(), std::move(g.series), g.meta, OperatorTrace::source("G(3,1)", g.meta.level_bound)};
}

NamedForm psi(int k, std::size_t precision) {
  if (k <= 10 || k % 2 != 0) throw PreconditionViolation("psi: k must be even and greater than 10");
  const Form r = r_t(k - 12, precision);
  const QSeries s = mul(mul(dilate(delta(precision).series, 4), r.series), theta(precision).series);
  const std::int64_t level = std::max<std::int64_t>(4, r.meta.level_bound);
  return {FormName::psi(k), s, half_meta(k, level), OperatorTrace::source("psi:" + std::to_string(k), level)};
}

NamedForm psi10(std::size_t precision) {
  const QSeries th = theta(precision).series;
  const QSeries e4 = dilate(eisenstein(4, precision).series, 4);
  const QSeries e6 = dilate(eisenstein(6, precision).series, 4);
  const QSeries h5 = cohen_series(2, precision).series;
  const QSeries b = sub(mul(mul(th, e4), e6), mul(h5, mul(e4, e4)));
  const CharacterSpec chi = CharacterSpec::chi3();
  const CharacterSpec chi_sq = CharacterSpec::chi3_squared();
  const QSeries s = add(neg(twist(b, chi)), twist(b, chi_sq));
  const OperatorTrace base = OperatorTrace::source("theta*E4(4z)*E6(4z)-H5/2*E4(4z)^2", 4);
  const OperatorTrace tr = base.then_twist(chi.tag(), 3).combine(base.then_twist(chi_sq.tag(), 3), "plus");
  return make(FormName::psi10(), s, 21, tr);
}

NamedForm psi_projected(int k, std::size_t precision) {
  if (k == 10) return psi10(precision);
  NamedForm p = psi(k, precision);
  return make(FormName::custom("proj(psi:" + std::to_string(k) + ",2,3)"), ap_project(p.series, 2, 3),
              p.meta.twice_weight, p.trace.then_project(2, 3));
}

NamedForm hurwitz_3n(std::size_t precision) {
  const Form g = g_ab(9, 6, 3 * precision);
  const OperatorTrace tr = OperatorTrace::source("G(9,6)", g.meta.level_bound).then_u(3);
  return {FormName::custom("sum_{n=2(3)} H(1,3n) q^n"), truncate(u_op(g.series, 3), precision),
          FormMeta{3, tr.level_bound_out, Character::unset()}, tr};
}

NamedForm theta_prime_to_3(std::size_t precision) {
  const Form th = theta(precision);
  const QSeries s = scale(sub(th.series, truncate(v_op(th.series, 9), precision)), Rational(1, 2));
  const OperatorTrace base = OperatorTrace::source("theta", 4);
  return make(FormName::custom("sum_{3!|n} q^{n^2}"), s, th.meta.twice_weight, base.combine(base.then_v(9), "minus"));
}

NamedForm plus_cusp_line(int k, std::size_t precision) {
  const bool even = k % 2 == 0;
  const auto fs = basis_forms(even ? k : k - 3, precision);
  const auto hs = basis_forms(even ? k - 2 : k - 5, precision);
  const Form zero_f{QSeries::zero(Ring::rational(), precision), FormMeta{}};
  std::vector<QSeries> images;
  for (const auto& f : fs) images.push_back(plus_isomorphism(k, f, zero_f, precision).series);
  for (const auto& h : hs) images.push_back(plus_isomorphism(k, zero_f, h, precision).series);
  if (images.size() != 2) {
    throw PreconditionViolation("plus_cusp_line: the cusp plus space at k = " + std::to_string(k) + " is not a line");
  }
  const Rational c0 = images[0][0];
  const Rational c1 = images[1][0];
  const QSeries line = c0 == 0 ? images[0] : sub(scale(images[0], c1), scale(images[1], c0));
  const std::string label = "cusp+(" + std::to_string(2 * k + 1) + "/2)";
  return {FormName::custom(label), primitive_integral(line), half_meta(k, 4), OperatorTrace::source(label, 4)};
}

NamedForm custom_form(std::string label, QSeries series, FormMeta meta) {
  OperatorTrace tr = OperatorTrace::source(label, meta.level_bound);
  return {FormName::custom(std::move(label)), std::move(series), meta, std::move(tr)};
}

nlohmann::json to_json(const NamedForm& f) {
  nlohmann::json j = to_json(f.series);
  j["name"] = f.name.to_string();
  j["twice_weight"] = f.meta.twice_weight;
  j["level_bound"] = f.trace.level_bound_out;
  j["trace"] = f.trace.description;
  return j;
}

}  // namespace plusforms
