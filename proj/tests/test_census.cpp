#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "plusforms/census.hpp"
#include "plusforms/class_numbers.hpp"
#include "plusforms/constructions.hpp"

using namespace plusforms;

TEST_CASE("condition (**)") {
  CHECK(starstar_ok(1, 3));
  CHECK(!starstar_ok(9, 3));
  CHECK(!starstar_ok(3, 4));
  CHECK(starstar_ok(1, 4));
  CHECK(starstar_ok(8, 16));
  CHECK(starstar_ok(12, 16));
  CHECK(!starstar_ok(8, 4));
  CHECK(starstar_ok(3, 9));
  CHECK(starstar_ok(2, 3));
}

TEST_CASE("fundamental flags match the naive test") {
  for (const int sign : {-1, 1}) {
    const auto flags = fundamental_flags(3000, sign);
    CHECK(!flags[0]);
    for (std::int64_t d = 1; d < 3000; ++d) CHECK(flags[static_cast<std::size_t>(d)] == oracle::fundamental_naive(sign * d));
  }
}

TEST_CASE("N_2^- small values") {
  CHECK(n2minus(10, 1, 3) == 1);
  CHECK(n2minus(10, 0, 1) == 4);
  CHECK(n2minus(1, 0, 1) == 0);
}

TEST_CASE("N_2^- sieve agrees with naive enumeration up to 10^4") {
  struct Prog {
    std::int64_t m, n;
  };
  for (const Prog pr : {Prog{1, 3}, Prog{2, 3}, Prog{0, 1}}) {
    std::int64_t count = 0;
    for (std::int64_t x = 1; x <= 10000; ++x) {
      // count covers -x < D < 0
      const std::int64_t d = -(x - 1);
      if (d < 0 && oracle::fundamental_naive(d) && ((d - pr.m) % pr.n + pr.n) % pr.n == 0) ++count;
      if (x % 251 == 0 || x == 10000) CHECK(n2minus(x, pr.m, pr.n) == count);
    }
  }
}

TEST_CASE("census small prefix") {
  const CensusReport r = nonvanishing_census(100);
  bool saw13 = false;
  for (const auto& row : r.rows) {
    CHECK(row.d % 3 == 1);
    CHECK(is_fundamental(row.field_discriminant));
    CHECK(row.h == class_number(row.field_discriminant));
    if (row.d == 13) {
      saw13 = true;
      CHECK(row.field_discriminant == -52);
      CHECK(row.h == 2);
    }
  }
  CHECK(saw13);
  std::int64_t nonvanishing = 0;
  for (const auto& row : r.rows) nonvanishing += row.h % 3 != 0;
  CHECK(r.nonvanishing_count == nonvanishing);
  CHECK(r.progression_count == static_cast<std::int64_t>(r.rows.size()));
  CHECK(r.nonvanishing_density * 100 == r.nonvanishing_count);
  CHECK(r.nonvanishing_density <= r.progression_density);
  CHECK(r.n2minus_count == n2minus(100, 1, 3));
}

TEST_CASE("census monotone in x and independent of workers") {
  std::int64_t last = 0;
  for (std::int64_t x : {50, 200, 1000, 5000}) {
    const CensusReport r = nonvanishing_census(x);
    CHECK(r.nonvanishing_count >= last);
    last = r.nonvanishing_count;
  }
  const auto one = to_json(nonvanishing_census(20000, 1)).dump();
  for (unsigned w : {2u, 3u, 8u}) CHECK(to_json(nonvanishing_census(20000, w)).dump() == one);

  std::ostringstream a, b;
  write_csv(a, nonvanishing_census(3000, 1));
  write_csv(b, nonvanishing_census(3000, 5));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("D,field_discriminant,h,h_mod_3\n", 0) == 0);
}

TEST_CASE("census JSON") {
  const auto j = to_json(nonvanishing_census(10));
  CHECK(j.at("x") == 10);
  CHECK(j.at("reference_densities").at("nine_over_8pi2") == "0.11399");
  CHECK(j.at("reference_densities").at("nine_over_16pi2") == "0.05699");
}

TEST_CASE("decimal rendering") {
  CHECK(decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(decimal(Rational(0), 2) == "0.00");
}

TEST_CASE("beta_9 and class numbers share nonvanishing mod 3") {
  const NamedForm ph = phi(9, 400);
  const std::int64_t n = beta_census_crosscheck(100, ph);
  std::int64_t expected = 0;
  for (std::int64_t d = 2; d < 100; ++d) {
    if (d % 3 == 1 && (d % 4 == 0 || d % 4 == 3) && oracle::fundamental_naive(-d)) ++expected;
  }
  CHECK(n == expected);
  CHECK(beta_census_crosscheck(400, ph) > n);
}
