#pragma once

// Fundamental-discriminant counts and the 3-divisibility census of class
// numbers of imaginary quadratic fields.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "plusforms/constructions.hpp"
#include "plusforms/qseries.hpp"

namespace plusforms {

/// Nakagawa-Horie compatibility of the progression m mod N.
bool starstar_ok(std::int64_t m, std::int64_t n);

/// flags[d] == is_fundamental(sign * d) for 0 < d < x (flags[0] is false).
std::vector<bool> fundamental_flags(std::int64_t x, int sign);

/// Number of fundamental D with -x < D < 0 and D == m mod N.
std::int64_t n2minus(std::int64_t x, std::int64_t m, std::int64_t n);

struct CensusRow {
  std::int64_t d;
  std::int64_t field_discriminant;
  std::int64_t h;
};

struct CensusReport {
  std::int64_t x = 0;
  std::int64_t n2minus_count = 0;
  Rational n2minus_density;
  /// Fundamental 0 < D < x with D == 1 mod 3.
  std::int64_t progression_count = 0;
  Rational progression_density;
  /// ... and 3 does not divide h(Q(sqrt(-D))).
  std::int64_t nonvanishing_count = 0;
  Rational nonvanishing_density;
  /// nonvanishing_count / n2minus_count (0 when the latter is 0).
  Rational ratio_to_n2minus;
  std::vector<CensusRow> rows;
};

/// Splits (0, x) into `workers` contiguous chunks; the result does not depend
/// on the number of workers.
CensusReport nonvanishing_census(std::int64_t x, unsigned workers = 1);

/// For fundamental -D with 1 < D < x, D == 1 mod 3 and D == 0, 3 mod 4, checks
/// that beta_9(D) != 0 mod 3 exactly when 3 does not divide h(-D). Returns the
/// number of D checked; throws BridgeViolation on the first failure.
std::int64_t beta_census_crosscheck(std::int64_t x, const NamedForm& phi9);
std::int64_t beta_census_crosscheck(std::int64_t x);

std::string decimal(const Rational& r, int digits);
nlohmann::json to_json(const CensusReport& r);
void write_csv(std::ostream& out, const CensusReport& r);

}  // namespace plusforms
