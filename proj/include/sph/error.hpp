#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sph {

enum class Errc {
  Parse,
  RankConstraint,
  WeightLength,
  NonDominantWeight,
  DependentBasis,
  LatticeMembership,
  MalformedPairing,
  Precondition,
  DimensionBudgetExceeded,
  SearchBudgetExceeded,
};

std::string_view to_string(Errc code);

/// Library error. `position` carries the offending token or weight index when
/// the failure can be pinned to one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace sph
