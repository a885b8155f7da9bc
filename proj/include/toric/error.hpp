#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ZeroVector,
  DegenerateCone,
  InvalidCone,
  NotUnimodular,
  NotReebType,
  NoEdge,
  EmptySlice,
  Collinear,
  InvalidPolytope,
  InvalidEntry,
  NotTransverse,
  NotInterior,
  OffManifold,
  InvariantViolation,
  NotAReductionPair,
  NotUnitVector,
  OutOfBall,
  DegenerateLevel,
  DimensionTooSmall,
  SingularTangentFrame,
  IllConditioned,
  BlowUp,
  ChartSingularity,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` identifies the
// contract violation so callers (the CLI in particular) can map it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
