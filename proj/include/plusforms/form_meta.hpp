#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plusforms/qseries.hpp"

namespace plusforms {

/// Nebentypus label. Only carried for reports; coefficient work never reads it.
struct Character {
  enum class Kind { Trivial, Kronecker, Unset };
  Kind kind = Kind::Trivial;
  std::int64_t d = 1;  // meaningful for Kronecker only

  static Character trivial() { return {}; }
  static Character kronecker(std::int64_t d) { return {Kind::Kronecker, d}; }
  static Character unset() { return {Kind::Unset, 0}; }
  std::string to_string() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Weight is stored doubled so that k + 1/2 is representable.
struct FormMeta {
  int twice_weight = 0;
  std::int64_t level_bound = 1;  // conservative N with the form on Gamma0(N)
  Character character;

  bool half_integral() const noexcept { return twice_weight % 2 != 0; }
  std::string weight_string() const;
};

/// A q-expansion together with its weight and level data.
struct Form {
  QSeries series;
  FormMeta meta;
};

}  // namespace plusforms
