#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "indub/graph.hpp"
#include "indub/matrix.hpp"
#include "indub/spectral.hpp"

namespace indub {

/// Vertex partition in canonical form: cells ascending internally and
/// ordered by their smallest vertex.
class Partition {
public:
    /// Throws PreconditionError naming the first vertex that is repeated,
    /// missing or out of range, or if a cell is empty.
    Partition(std::vector<std::vector<Vertex>> cells, std::size_t order);

    const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    std::size_t order() const noexcept { return cell_of_.size(); }
    std::size_t cell_of(Vertex x) const { return cell_of_.at(x); }

    /// n x (cell count) 01 matrix, column j the indicator of cell j.
    IntMatrix characteristic_matrix() const;
    /// P P^T: 1 exactly where both vertices share a cell.
    IntMatrix same_cell_matrix() const;

    bool operator==(const Partition& other) const { return cells_ == other.cells_; }

private:
    std::vector<std::vector<Vertex>> cells_;
    std::vector<std::size_t> cell_of_;
};

/// One cell per line, space-separated labels; blank lines and '#' comments skipped.
Partition parse_partition(std::istream& in, std::size_t order);
void write_partition(std::ostream& out, const Partition& pi);

struct QuotientResult {
    IntMatrix Q; // Q(i,j) = neighbours in cell j of any vertex of cell i
};

/// Exact neighbour counting; nullopt unless the partition is equitable.
std::optional<QuotientResult> quotient_if_equitable(const Graph& g, const Partition& pi);

struct IndubitableParams {
    std::int64_t a = 0; // neighbours in own cell
    std::int64_t b = 0; // neighbours in each other cell
    bool operator==(const IndubitableParams&) const = default;
};

/// Present iff the quotient is a I + b (J - I). Requires a connected graph.
std::optional<IndubitableParams> indubitable_params(const Graph& g, const Partition& pi);

/// Parameters forced on an indubitable partition with r + 1 cells of a
/// k-regular graph whose quotient has eigenvalue lambda:
/// a = lambda + (k - lambda)/(r + 1), b = (k - lambda)/(r + 1).
std::pair<double, double> predicted_params(std::int64_t k, double lambda, std::int64_t r);

struct IndubitableReport {
    Partition partition;
    IndubitableParams params;
    double eigenvalue = 0.0;  // class representative
    std::int64_t exact_eigenvalue = 0; // a - b
    std::size_t class_index = 0;
    std::size_t multiplicity = 0;
    bool is_full = false;
};

/// Reads the full indubitable partition for an eigenvalue class off its
/// spectral idempotent. nullopt when the idempotent has other than two
/// entry values. Requires a connected regular graph; throws
/// ConsistencyError if the two-valued idempotent does not yield a full
/// indubitable partition.
std::optional<IndubitableReport> partition_from_idempotent(const Graph& g, const Spectrum& spec,
                                                           std::size_t class_index);
std::optional<IndubitableReport> partition_from_idempotent(const Graph& g, std::size_t class_index,
                                                           double tol = kDefaultTolerance);

/// E = ((m+1)/v) P P^T - J/v for a full indubitable partition, checked
/// against AE = lambda E, E^2 = E and trace E = m.
Idempotent idempotent_from_partition(const Graph& g, const Spectrum& spec, const Partition& pi,
                                     double lambda);

struct Census {
    /// Eigenvalue class index -> full indubitable partition.
    std::map<std::size_t, IndubitableReport> full;
    /// hadamard_dim of every class's idempotent, in class order.
    std::vector<std::size_t> hadamard_dims;
};

/// Runs partition_from_idempotent on every class except the degree.
/// Throws PreconditionError for disconnected or irregular graphs.
Census full_indubitable_census(const Graph& g, const Spectrum& spec);
Census full_indubitable_census(const Graph& g, double tol = kDefaultTolerance);

/// True iff the diagonal of E varies by at most `tol`.
bool constant_diagonal_check(const Idempotent& e, double tol = kDefaultTolerance);

/// Connected and regular; returns the degree or throws PreconditionError.
std::size_t require_connected_regular(const Graph& g);

} // namespace indub
