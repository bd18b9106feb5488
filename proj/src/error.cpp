#include "sph/error.hpp"

namespace sph {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::Parse: return "parse";
    case Errc::RankConstraint: return "rank_constraint";
    case Errc::WeightLength: return "weight_length";
    case Errc::NonDominantWeight: return "non_dominant_weight";
    case Errc::DependentBasis: return "dependent_basis";
    case Errc::LatticeMembership: return "lattice_membership";
    case Errc::MalformedPairing: return "malformed_pairing";
    case Errc::Precondition: return "precondition";
    case Errc::DimensionBudgetExceeded: return "dimension_budget_exceeded";
    case Errc::SearchBudgetExceeded: return "search_budget_exceeded";
  }
  return "unknown";
}

}  // namespace sph
