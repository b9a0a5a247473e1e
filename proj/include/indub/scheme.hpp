#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "indub/graph.hpp"
#include "indub/matrix.hpp"
#include "indub/partition.hpp"
#include "indub/spectral.hpp"

namespace indub {

/// Candidate association-scheme basis B_0 = I, B_1..B_d: nonzero symmetric
/// 01 matrices with disjoint supports summing to J.
class SchemeBasis {
public:
    /// Throws PreconditionError naming the offending matrix index (or pair)
    /// and an entry.
    explicit SchemeBasis(std::vector<IntMatrix> matrices);

    const std::vector<IntMatrix>& matrices() const noexcept { return matrices_; }
    std::size_t classes() const noexcept { return matrices_.size() - 1; }
    std::size_t order() const noexcept { return static_cast<std::size_t>(matrices_.front().rows()); }

private:
    std::vector<IntMatrix> matrices_;
};

/// B_i B_j = sum_h p(h, i, j) B_h.
struct StructureConstants {
    std::size_t size = 0; // d + 1
    std::vector<std::int64_t> p;
    std::vector<std::int64_t> valencies;

    std::int64_t operator()(std::size_t h, std::size_t i, std::size_t j) const
    {
        return p[(h * size + i) * size + j];
    }
};

/// Present iff every product B_i B_j lies in the span of the basis with
/// nonnegative integer coefficients. Coefficients are read from one entry
/// per relation and then checked on the whole matrix.
std::optional<StructureConstants> bose_mesner_closure(const SchemeBasis& basis);

struct IntersectionArray {
    std::vector<std::int64_t> b; // b_0 .. b_{d-1}
    std::vector<std::int64_t> c; // c_1 .. c_d
    std::size_t diameter() const { return c.size(); }
    bool operator==(const IntersectionArray&) const = default;
};

/// Present iff g is distance-regular. Throws PreconditionError if g is
/// disconnected.
std::optional<IntersectionArray> intersection_array(const Graph& g);

struct CoEdgeRegularProfile {
    std::int64_t mu = 0;                       // common neighbours of non-adjacent pairs
    std::set<std::int64_t> adjacent_common;    // values seen over adjacent pairs
};

/// Present iff all non-adjacent pairs have the same number of common
/// neighbours (and at least one such pair exists).
std::optional<CoEdgeRegularProfile> co_edge_regular_profile(const Graph& g);

struct TwoPartitionReport {
    std::size_t class1 = 0, class2 = 0;
    std::size_t m1 = 0, m2 = 0; // multiplicities
    std::size_t ell = 0;        // v / ((m1 + 1)(m2 + 1))
    IntMatrix intersection_sizes; // (m1 + 1) x (m2 + 1)
    /// Cells of the class2 partition outermost, class1 cells inside,
    /// ascending labels innermost.
    Permutation reordering;
    IntMatrix K1, K2; // same-cell matrices in the original labelling
    bool product_identity = false;   // K1 K2 = ell J
    bool block_form_verified = false;
};

/// Requires full indubitable partitions for both classes (nullopt
/// otherwise). Throws ConsistencyError if the cell intersections are not
/// all of one size.
std::optional<TwoPartitionReport> two_partition_analysis(const Graph& g, const Spectrum& spec,
                                                         std::size_t class1, std::size_t class2);

/// For a connected regular graph with four eigenvalues and a (0, b)
/// indubitable partition: returns whether the partition is full, after
/// confirming that {I, K - I, A, J - K - A} closes exactly when it is.
bool three_class_detection(const Graph& g, const Spectrum& spec, const Partition& pi);

} // namespace indub
