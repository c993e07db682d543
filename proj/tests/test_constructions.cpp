#include <doctest.h>

#include "oracles.hpp"
#include "plusforms/class_numbers.hpp"
#include "plusforms/cohen_eisenstein.hpp"
#include "plusforms/constructions.hpp"
#include "plusforms/errors.hpp"
#include "plusforms/level_one.hpp"
#include "plusforms/operators.hpp"

using namespace plusforms;

namespace {

const Ring QQ = Ring::rational();

// The unit u in {1, 2} with residue(n_i) == u * expected_i mod 3, or 0 if none.
int unit_against(const QSeries& s3, const std::vector<std::size_t>& ns, const std::vector<int>& expected) {
  for (int u : {1, 2}) {
    bool ok = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (s3[ns[i]] != (u * expected[i]) % 3) ok = false;
    }
    if (ok) return u;
  }
  return 0;
}

const std::vector<std::size_t> kCongExponents = {4, 7, 19, 28, 40, 43, 52, 55, 64, 67, 76};
const std::vector<int> kCongResidues = {2, 1, 1, 2, 2, 1, 2, 1, 2, 1, 1};
const std::vector<std::size_t> kPsiExponents = {8, 17, 20, 41, 44, 53, 56, 65, 68, 80, 89, 92};
const std::vector<int> kPsiResidues = {2, 2, 1, 2, 1, 1, 1, 1, 2, 2, 2, 2};

}  // namespace

TEST_CASE("phi(9) equals the plus_isomorphism image of 28 E6 - 44/3 E4") {
  const std::size_t p = 150;
  const NamedForm ph = phi(9, p);
  const Form e6{scale(eisenstein(6, p).series, 28), eisenstein(6, p).meta};
  const Form e4{scale(eisenstein(4, p).series, Rational(-44, 3)), eisenstein(4, p).meta};
  CHECK(ph.series == plus_isomorphism(9, e6, e4, p).series);
  CHECK(ph.meta.twice_weight == 19);
  CHECK(ph.name.to_string() == "phi:9");
}

TEST_CASE("phi preconditions") {
  CHECK_THROWS_AS(phi(7, 20), PreconditionViolation);
  CHECK_THROWS_AS(phi(10, 20), PreconditionViolation);
  CHECK_THROWS_AS(psi(10, 20), PreconditionViolation);
  CHECK_THROWS_AS(psi(13, 20), PreconditionViolation);
}

TEST_CASE("phi: plus support, 3-integrality, stability in k") {
  const std::size_t p = 300;
  const QSeries base = reduce_mod(phi(9, p).series, 3);
  for (int k : {9, 11, 13}) {
    const NamedForm ph = phi(k, p);
    CHECK(first_plus_violation(ph.series, k) == p);
    CHECK(reduce_mod(ph.series, 3) == base);
  }
}

TEST_CASE("F: recipe and projection agree, display residues") {
  const std::size_t p = 200;
  const NamedForm ph = phi(9, p);
  const QSeries a = sub(ph.series, v_op(u_op(ph.series, 3), 3));
  for (std::size_t n = 0; n < p; n += 3) CHECK(a[n] == 0);

  const NamedForm f = f_form(p);
  CHECK(f.series == f_form_projection(p).series);
  CHECK(f.series == scale(ap_project(ph.series, 1, 3), 2));
  for (std::size_t n = 0; n < p; ++n) {
    if (n % 3 != 1) CHECK(f.series[n] == 0);
  }
  CHECK(f.meta.twice_weight == 19);
  // pinned unit: F == 2 * display
  CHECK(unit_against(reduce_mod(f.series, 3), kCongExponents, kCongResidues) == 2);
}

TEST_CASE("G_{3,1}") {
  const NamedForm g = g31(200);
  CHECK(g.series[4] == Rational(1, 2));
  CHECK(g.series[7] == 1);
  const QSeries g3 = reduce_mod(g.series, 3);
  CHECK(g3[4] == 2);
  CHECK(g3[7] == 1);
  CHECK(g.meta.level_bound == 36);
  CHECK(g.meta.twice_weight == 3);
  CHECK(unit_against(g3, kCongExponents, kCongResidues) == 1);
}

TEST_CASE("beta_9(D) vs h(-D) mod 3 with pinned unit 1") {
  const std::size_t p = 400;
  const QSeries b = reduce_mod(phi(9, p).series, 3);
  int checked = 0;
  for (std::int64_t d = 4; d < static_cast<std::int64_t>(p); ++d) {
    if (d % 3 != 1 || !(d % 4 == 0 || d % 4 == 3) || !is_fundamental(-d)) continue;
    const Integer h = class_number_of_field(-d);
    // Q(i) has four units, so beta_9(4) tracks -B_1 = 1/2 rather than h
    if (d == 4) {
      CHECK(b[4] == 2);
      continue;
    }
    CHECK(b[static_cast<std::size_t>(d)] == Rational(Integer(h % 3)));
    ++checked;
  }
  CHECK(checked > 20);
  // two entries visible in the display
  CHECK(class_number_of_field(-4) == 1);
  CHECK(class_number_of_field(-40) == 2);
}

TEST_CASE("Psi: integrality, stability, display, Hurwitz at 3n") {
  const std::size_t p = 200;
  const NamedForm p12 = psi(12, p);
  CHECK(p12.series.is_integral());
  CHECK(p12.meta.twice_weight == 25);
  const QSeries proj12 = reduce_mod(ap_project(p12.series, 2, 3), 3);
  for (int k : {14, 16}) CHECK(reduce_mod(ap_project(psi(k, p).series, 2, 3), 3) == proj12);
  CHECK(unit_against(proj12, kPsiExponents, kPsiResidues) == 1);
  for (std::size_t n = 2; n < p; n += 3) {
    CHECK(proj12[n] == reduce_mod(QSeries::monomial(QQ, 0, hurwitz(3 * static_cast<std::int64_t>(n)), 1), 3)[0]);
  }
  CHECK(reduce_mod(hurwitz_3n(p).series, 3) == proj12);
  CHECK(psi_projected(12, p).series == ap_project(p12.series, 2, 3));
}

TEST_CASE("Psi_10") {
  const std::size_t p = 200;
  const NamedForm s = psi10(p);
  for (std::size_t n = 0; n < p; ++n) {
    if (n % 3 != 2) CHECK(s.series[n] == 0);
  }
  const QSeries e4 = dilate(eisenstein(4, p).series, 4);
  const QSeries e6 = dilate(eisenstein(6, p).series, 4);
  const QSeries b = sub(mul(mul(theta(p).series, e4), e6), mul(cohen_series(2, p).series, mul(e4, e4)));
  CHECK(s.series == scale(ap_project(b, 2, 3), 2));
  const QSeries s3 = reduce_mod(s.series, 3);
  const QSeries ref = reduce_mod(scale(ap_project(psi(12, p).series, 2, 3), 2), 3);
  const int u = unit_against(s3, kPsiExponents, kPsiResidues);
  CHECK(u != 0);
  CHECK(unit_against(ref, kPsiExponents, kPsiResidues) != 0);
  CHECK(psi_projected(10, p).series == s.series);
}

TEST_CASE("plus cusp line and theta away from 3") {
  const std::size_t p = 150;
  const QSeries t3 = theta_prime_to_3(p).series;
  for (std::size_t n = 1; n * n < p; ++n) CHECK(t3[n * n] == (n % 3 == 0 ? 0 : 1));
  CHECK(t3[0] == 0);
  // k = 9: the cusp line is spanned by phi(9)
  const QSeries line = plus_cusp_line(9, p).series;
  CHECK(line == primitive_integral(phi(9, p).series));
  // k = 6 reduces to a multiple of sum_{3 !| n} q^{n^2}
  const QSeries c6 = reduce_mod(plus_cusp_line(6, p).series, 3);
  const QSeries ref = reduce_mod(t3, 3);
  CHECK((c6 == ref || c6 == scale(ref, 2)));
  CHECK_THROWS_AS(plus_cusp_line(4, p), PreconditionViolation);
}

TEST_CASE("named form JSON") {
  const auto j = to_json(g31(20));
  CHECK(j.at("name") == "g31");
  CHECK(j.at("twice_weight") == 3);
  CHECK(j.at("level_bound") == 36);
  CHECK(j.at("precision") == 20);
  CHECK(j.contains("trace"));
}
