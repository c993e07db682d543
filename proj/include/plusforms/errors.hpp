#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plusforms {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("coefficient rings differ") {}
};

/// Raised by reduce_mod when a denominator is not invertible modulo m.
class NonIntegralCoefficient : public Error {
 public:
  explicit NonIntegralCoefficient(std::int64_t index)
      : Error("coefficient at q^" + std::to_string(index) + " is not integral at the modulus"),
        index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class Weight2Empty : public PreconditionViolation {
 public:
  Weight2Empty() : PreconditionViolation("M_2 at level one is zero") {}
};

class NonNegativeInput : public PreconditionViolation {
 public:
  NonNegativeInput() : PreconditionViolation("expected a negative discriminant") {}
};

class ResidueConditionViolated : public PreconditionViolation {
 public:
  ResidueConditionViolated(std::int64_t a, std::int64_t b)
      : PreconditionViolation("-" + std::to_string(b) + " is a square modulo " + std::to_string(a)) {}
};

class WeightMismatch : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class NotOddPrime : public PreconditionViolation {
 public:
  explicit NotOddPrime(std::int64_t l) : PreconditionViolation(std::to_string(l) + " is not an odd prime") {}
};

class HalfIntegralWeight : public PreconditionViolation {
 public:
  HalfIntegralWeight() : PreconditionViolation("Sturm bound needs an integral weight") {}
};

class IncompatibleWeights : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// beta_9(D) and h(-D) disagree on divisibility by 3. Always a bug.
class BridgeViolation : public Error {
 public:
  explicit BridgeViolation(std::int64_t d)
      : Error("class-number bridge violated at D = " + std::to_string(d)), d_(d) {}
  std::int64_t discriminant() const noexcept { return d_; }

 private:
  std::int64_t d_;
};

}  // namespace plusforms
