#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liegeo {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A qualifying non-collinear pair whose convex closure is not a polar space;
/// the input cannot be parapolar.
struct NonPolarClosure : VerificationError {
  uint32_t p, q;
  NonPolarClosure(uint32_t p_, uint32_t q_)
      : VerificationError("convex closure of pair (" + std::to_string(p_) + "," +
                          std::to_string(q_) + ") is not a polar space"),
        p(p_), q(q_) {}
};

/// Two symps intersecting in a set that is not singular; inconsistent input.
struct IntersectionNotSingular : VerificationError {
  std::size_t symp_a, symp_b;
  IntersectionNotSingular(std::size_t a, std::size_t b)
      : VerificationError("intersection of symps " + std::to_string(a) + " and " +
                          std::to_string(b) + " is not a singular subspace"),
        symp_a(a), symp_b(b) {}
};

struct RankTooLow : VerificationError {
  RankTooLow(const std::string& what) : VerificationError(what) {}
};

struct C1Violation : VerificationError {
  std::string witness;
  explicit C1Violation(std::string w)
      : VerificationError("glue relation violates condition (C1): " + w),
        witness(std::move(w)) {}
};

struct C2Violation : VerificationError {
  explicit C2Violation(const std::string& w)
      : VerificationError("sheet graph violates condition (C2): " + w) {}
};

struct SheetNotValid : VerificationError {
  explicit SheetNotValid(const std::string& w) : VerificationError(w) {}
};

struct SizeExceeded : std::runtime_error {
  explicit SizeExceeded(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace liegeo
