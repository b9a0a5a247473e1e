#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "indub/graph.hpp"
#include "indub/matrix.hpp"

namespace indub {

/// Shared default for every tolerance in the library.
inline constexpr double kDefaultTolerance = 1e-9;

struct EigenClass {
    double value = 0.0;
    std::size_t multiplicity = 0;
    RealMatrix basis; // n x multiplicity, orthonormal columns
    /// Set when `value` is within the clustering threshold of an integer.
    std::optional<std::int64_t> integer_value;
};

struct Spectrum {
    std::vector<EigenClass> classes; // descending by value
    double tolerance = kDefaultTolerance;
    /// Absolute clustering threshold tol * max(1, ||A||).
    double threshold = kDefaultTolerance;
    /// Some consecutive gap fell in (threshold, 10 * threshold].
    bool ambiguous = false;

    std::size_t order() const;
    /// Class whose representative is within `threshold` of `lambda`.
    std::optional<std::size_t> find_class(double lambda) const;
    bool all_integral() const;
};

/// Full symmetric eigendecomposition with eigenvalue clustering.
Spectrum spectrum(const Graph& g, double tol = kDefaultTolerance);
Spectrum spectrum(const RealMatrix& symmetric, double tol = kDefaultTolerance);

struct Idempotent {
    RealMatrix matrix;
    double eigenvalue = 0.0;
    std::size_t rank = 0;
};

/// E = U U^T for the class's orthonormal basis U. The idempotent
/// invariants (E^2 = E, AE = lambda E, trace = rank) are checked against
/// `adjacency` and a ConsistencyError is thrown if they fail.
Idempotent spectral_idempotent(const Graph& g, const Spectrum& spec, std::size_t class_index);
Idempotent spectral_idempotent(const Graph& g, std::size_t class_index,
                               double tol = kDefaultTolerance);

/// max |E^2 - E|, max |AE - lambda E|, |trace E - rank|.
struct IdempotentResiduals {
    double square = 0.0;
    double eigen = 0.0;
    double trace = 0.0;
};
IdempotentResiduals idempotent_residuals(const Idempotent& e, const RealMatrix& adjacency);

struct EntryClasses {
    std::vector<double> values; // ascending class representatives (means)
    Eigen::MatrixXi class_matrix;
    double max_spread = 0.0; // largest within-class max - min
};

/// Single-linkage clustering of all entries: a new class starts wherever
/// consecutive sorted values differ by more than `tol`.
EntryClasses entry_classes(const RealMatrix& m, double tol = kDefaultTolerance);

/// Dimension of the entrywise algebra generated by J and E, read off as the
/// number of distinct entries of E.
std::size_t hadamard_dim(const Idempotent& e, double tol = kDefaultTolerance);

/// Numerical dimension of span{J} + span{G, G o G, ..., G^(o max_power)}
/// over all generators G, computed independently of entry clustering.
std::size_t hadamard_span_oracle(const std::vector<RealMatrix>& generators,
                                 std::size_t max_power, double tol = kDefaultTolerance);

struct TwoValuedDecomposition {
    double theta0 = 0.0; // larger entry, m / v
    double theta1 = 0.0; // smaller entry, -1 / v
    IntMatrix K;         // 01 equivalence-relation matrix
    std::size_t rank = 0;
    std::vector<std::vector<Vertex>> classes; // classes of K, ordered by min vertex
};

/// Writes E = theta0 K + theta1 (J - K) when E has exactly two entry values.
/// Returns nullopt when E is not two-valued. Throws PreconditionError if
/// EJ != 0 and StructuralViolation if the two-valued form is malformed.
std::optional<TwoValuedDecomposition> two_valued_decomposition(const Idempotent& e, std::size_t v,
                                                               double tol = kDefaultTolerance);

/// Exact cross-check for integral spectra: E_lambda = N / D with
/// N = prod_{mu != lambda} (A - mu I) and D = prod_{mu != lambda} (lambda - mu).
struct RationalValidation {
    bool applicable = false; // integral spectrum and no int64 overflow
    bool valid = false;      // |E - N/D| <= tol entrywise
    std::int64_t denominator = 1;
    IntMatrix numerator;
};
RationalValidation rational_validation(const Graph& g, const Spectrum& spec,
                                       std::size_t class_index, const Idempotent& e);

} // namespace indub
