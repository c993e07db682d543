#pragma once

// Sturm bounds and machine verification of congruences between q-series.
//
// Half-integral weight pairs are brought to a common integral weight before
// Sturm's bound is applied: the lighter side is multiplied by R_t (and, for an
// odd gap, by E_{1,chi_-3}), both of which are 1 modulo the modulus, and then
// both sides are multiplied by theta.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "plusforms/constructions.hpp"
#include "plusforms/form_meta.hpp"
#include "plusforms/qseries.hpp"

namespace plusforms {

/// [SL_2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p)
std::int64_t index_gamma0(std::int64_t n);

/// ceil((twice_weight/2) * index / 12) + 1. Throws HalfIntegralWeight.
std::int64_t sturm_bound(int twice_weight, std::int64_t level);

/// E_{1,chi_-3} = 1 + 6 sum_n (sum_{d|n} (d/3)) q^n: weight 1, level 3, == 1 mod 3.
Form weight_one_eisenstein(std::size_t precision);

struct WeightEqualizer {
  enum class Side { Lhs, Rhs };
  int t = 0;
  Side side = Side::Rhs;
  bool weight_one = false;  // E_{1,chi_-3} used for an odd gap
};

struct Equalized {
  QSeries lhs;
  QSeries rhs;
  int twice_weight;
  std::int64_t level;
  WeightEqualizer equalizer;
};

/// Both sides reduced mod m and brought to a common integral weight. Requires
/// weight(lhs) >= weight(rhs), equal parity of twice-weights, and an
/// equalizing form that is 1 mod m. Throws IncompatibleWeights otherwise and
/// NonIntegralCoefficient if a side is not m-integral.
Equalized equalize_and_integralize(const NamedForm& lhs, const NamedForm& rhs, std::int64_t m);

/// Sturm bound for comparing lhs and rhs, from weights and level bounds only.
std::int64_t congruence_bound(const NamedForm& lhs, const NamedForm& rhs);

struct CongruenceReport {
  enum class Status { Verified, Mismatch, InsufficientPrecision };

  std::string lhs_name;
  std::string rhs_name;
  std::int64_t modulus = 3;
  std::int64_t bound_used = 0;
  std::optional<WeightEqualizer> weight_equalizer;
  int twice_weight = 0;
  std::int64_t level = 1;
  Status status = Status::Verified;
  // Mismatch
  std::int64_t first_n = -1;
  Rational lhs_val;
  Rational rhs_val;
  // InsufficientPrecision
  std::int64_t required = 0;
  std::int64_t available = 0;
  /// lhs == unit * rhs
  std::int64_t unit = 1;
  std::int64_t compared = 0;
};

/// Status is reported, never thrown. With unit_search, units 1, 2, ... mod m
/// are tried in order and the first that verifies is reported.
CongruenceReport verify_congruence(const NamedForm& lhs, const NamedForm& rhs, std::int64_t m, bool unit_search);
/// Same, with the unit fixed (nullopt searches).
CongruenceReport verify_congruence(const NamedForm& lhs, const NamedForm& rhs, std::int64_t m,
                                   std::optional<std::int64_t> unit);

std::string to_string(CongruenceReport::Status s);
nlohmann::json to_json(const CongruenceReport& r);

}  // namespace plusforms
