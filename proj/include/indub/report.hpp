#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indub/classify.hpp"
#include "indub/graph.hpp"
#include "indub/partition.hpp"
#include "indub/scheme.hpp"
#include "indub/spectral.hpp"

namespace indub {

inline constexpr const char* kAnalysisSchema = "indub.analysis/1";

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_precondition = 3,
    exit_consistency = 4,
};

struct FullPartitionRecord {
    std::int64_t eigenvalue = 0;
    std::size_t multiplicity = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<std::vector<Vertex>> cells;
    bool operator==(const FullPartitionRecord&) const = default;
};

struct EigenRecord {
    double value = 0.0;
    /// Integral and confirmed by exact rational validation of E.
    bool exact = false;
    std::size_t multiplicity = 0;
    std::size_t hadamard_dim = 0;
    /// Only for simple eigenvalues other than the degree.
    std::optional<bool> constant_diagonal;
    std::optional<FullPartitionRecord> full_partition;
    bool operator==(const EigenRecord&) const = default;
};

struct ClassificationRecord {
    std::string kind; // four_eigenvalue, bipartite_five_eigenvalue, distance_regular
    Classification result;
    bool operator==(const ClassificationRecord&) const = default;
};

struct AnalysisReport {
    std::string schema = kAnalysisSchema;
    std::size_t n = 0;
    std::string graph6;
    bool connected = false;
    std::optional<std::size_t> regular_degree;
    bool bipartite = false;
    /// ok, not_connected, not_regular, consistency_error
    std::string status = "ok";
    std::string error;
    double tolerance = kDefaultTolerance;
    bool ambiguous_clustering = false;
    std::vector<EigenRecord> spectrum;
    std::optional<IntersectionArray> intersection_array;
    std::vector<ClassificationRecord> classifications;
    double timing_ms = 0.0;

    bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
    double tol = kDefaultTolerance;
    /// Exact rational cross-check of idempotents for integral spectra.
    bool rational_check = true;
};

/// Full pipeline for one graph. Degraded reports (disconnected or irregular
/// input) stop after the basic profile; consistency errors are recorded in
/// the report rather than thrown.
AnalysisReport run_analyze(const Graph& g, const AnalyzeOptions& options = {});

int exit_code(const AnalysisReport& report);

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);
void write_text(std::ostream& out, const AnalysisReport& r);

struct CensusOptions {
    double tol = kDefaultTolerance;
    bool all = false;
    std::size_t jobs = 1;
    std::size_t batch = 512;
};

struct CensusSummary {
    std::size_t lines = 0;          // non-blank input lines
    std::size_t parse_failures = 0;
    std::size_t connected_regular = 0;
    std::size_t records = 0;
    std::size_t consistency_errors = 0;
    /// (n, k, number of full partitions) -> graphs
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> counts;
};

/// One JSON-lines record per input graph that is connected, regular and has
/// a full indubitable partition (every parsed graph under `all`). Output is
/// in input order for any number of jobs. Malformed lines are reported on
/// `log` with their line number and skipped.
CensusSummary run_census(std::istream& in, std::ostream& out, std::ostream& log,
                         const CensusOptions& options = {});

/// The census record for a single graph, or nullopt when it would not be
/// emitted. Throws ConsistencyError on internal contradictions.
std::optional<nlohmann::json> census_record(const Graph& g, const std::string& graph6,
                                            const CensusOptions& options);

nlohmann::json summary_json(const CensusSummary& s);

} // namespace indub
