#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indub/graph.hpp"
#include "indub/scheme.hpp"
#include "indub/spectral.hpp"

namespace indub {

enum class Verdict {
    bipartite,
    complete_multipartite,
    antipodal_cover,               // antipodal distance-regular 3-cover of K_{m+1}
    grid,                          // K_p x K_q
    grid_complement,
    bipartite_double_multipartite, // bipartite double of K_{(m+1) x ell}
    unclassified,
};

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view text);

/// A verdict plus the data needed to re-check it on the graph alone.
struct Classification {
    Verdict verdict = Verdict::unclassified;
    /// Name of the check that settled the verdict (or that failed).
    std::string witness;
    /// Vertex i of the normal form is vertex reordering[i] of the graph.
    Permutation reordering;
    /// Normal-form dimensions, see check_witness.
    std::vector<std::size_t> shape;
    std::optional<std::int64_t> eigenvalue;
    std::size_t multiplicity = 0;
    /// Named sub-conditions evaluated along the way.
    std::vector<std::pair<std::string, bool>> checks;

    bool check(std::string_view name) const;
    bool operator==(const Classification&) const = default;
};

/// Re-verifies the exact-matrix witness:
///   grid / grid_complement: permuted graph == (complement of) grid(shape[0], shape[1]);
///   bipartite: both shape[0] x shape[0] and shape[1] x shape[1] diagonal blocks vanish;
///   complete_multipartite: permuted graph == complete_multipartite(shape);
///   antipodal_cover: diameter 3 and I + A_3 == I_{shape[0]} (x) J_{shape[1]};
///   bipartite_double_multipartite: == (J2 - I2) (x) (J - I)_{shape[0]} (x) J_{shape[1]}.
/// Unclassified verdicts always pass.
bool check_witness(const Graph& g, const Classification& c);

/// Combinatorial recognition of K_p x K_q with p != q, independent of the
/// spectrum: adjacent pairs with q - 2 and p - 2 common neighbours must
/// form the row and column cliques. Returns the witness (shape {p, q}).
std::optional<Classification> identify_grid(const Graph& g);

/// Connected regular graph with exactly four eigenvalues. Either all of
/// (two two-valued idempotents, two full partitions, the co-edge-regular
/// profile on g or its complement, exact grid identification) hold and the
/// verdict is grid / grid_complement, or none do and it is unclassified.
/// Any mixture throws ConsistencyError.
Classification classify_four_eigenvalue(const Graph& g, const Spectrum& spec);

/// Connected regular bipartite graph with exactly five eigenvalues.
Classification classify_bipartite_five_eigenvalue(const Graph& g, const Spectrum& spec);

/// Distance-regular graph with valency > 2 and diameter >= 2, one entry per
/// full indubitable partition (a single unclassified entry if none).
std::vector<Classification> classify_drg_full_partition(const Graph& g, const Spectrum& spec);

} // namespace indub
