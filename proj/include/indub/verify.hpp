#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indub/graph.hpp"
#include "indub/partition.hpp"
#include "indub/spectral.hpp"

namespace indub {

struct ClaimResult {
    std::string claim;
    /// False when the graph is outside the claim's hypotheses.
    bool applicable = true;
    bool holds = true;
    std::string note;
    std::vector<std::pair<std::string, bool>> checks;
};

struct ClaimInfo {
    std::string_view name;
    std::string_view summary;
    bool needs_partition;
};

const std::vector<ClaimInfo>& claim_catalogue();

/// Runs a named claim on g. Throws PreconditionError for an unknown claim
/// or a missing partition; ordinary inapplicability is reported in the result.
ClaimResult verify_claim(std::string_view claim, const Graph& g, const std::optional<Partition>& pi,
                         double tol = kDefaultTolerance);

} // namespace indub
