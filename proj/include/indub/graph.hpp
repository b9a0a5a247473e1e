#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indub/matrix.hpp"

namespace indub {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with a dense 01 adjacency
/// matrix. Immutable once constructed.
class Graph {
public:
    /// Validates symmetry, 01 entries and zero diagonal; throws
    /// PreconditionError otherwise.
    explicit Graph(IntMatrix adjacency);

    std::size_t order() const noexcept { return static_cast<std::size_t>(adj_.rows()); }
    const IntMatrix& adjacency() const noexcept { return adj_; }
    RealMatrix real_adjacency() const { return adj_.cast<double>(); }

    bool adjacent(Vertex x, Vertex y) const
    {
        return adj_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) != 0;
    }
    std::size_t degree(Vertex x) const;
    std::vector<Vertex> neighbors(Vertex x) const;
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    IntMatrix adj_;
};

/// Graph from an edge list. Duplicate edges collapse; self-loops and
/// out-of-range endpoints throw PreconditionError naming the edge.
Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

enum class FamilyKind {
    complete,              // K_n
    cycle,                 // C_n, n >= 3
    complete_multipartite, // parts s_1..s_t
    crown,                 // bipartite double of K_{m+1}
    grid,                  // K_p x K_q (Cartesian)
    cycle_complete,        // C_p x K_q (Cartesian)
    double_multipartite,   // bipartite double of a complete multipartite graph
    kneser,                // K(n, r): r-subsets, adjacent when disjoint
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<std::size_t> parameters;

    /// Parses "kind:p1,p2,..." (e.g. "grid:3,4", "crown:4", "petersen").
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

/// Throws PreconditionError naming the violated constraint.
void validate(const FamilySpec& spec);

/// Deterministic; see the vertex orderings documented per family in graph.cpp.
Graph generate(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_multipartite(const std::vector<std::size_t>& parts);

/// Adjacency A (x) I + I (x) B; vertex (i,j) is i * order(h) + j.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Adjacency (J_2 - I_2) (x) A; vertex (s,x) is s * order(g) + x.
Graph bipartite_double(const Graph& g);

/// Adjacency J - I - A.
Graph complement(const Graph& g);

/// Each vertex blown up into a coclique of size t: adjacency A (x) J_t.
Graph coclique_extension(const Graph& g, std::size_t t);

/// Simultaneous relabeling; vertex i of the result is vertex perm[i] of g.
Graph permuted(const Graph& g, std::span<const std::size_t> perm);

Graph disjoint_union(const Graph& g, const Graph& h);

struct BasicProfile {
    bool connected = false;
    std::optional<std::size_t> regular_degree;
    /// Colour classes, each ascending; present iff connected and bipartite.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition;
};

BasicProfile basic_profile(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// A_0 = I, A_1 = A, ..., A_d for a connected graph of diameter d.
/// Throws PreconditionError on disconnected input.
std::vector<IntMatrix> distance_matrices(const Graph& g);

} // namespace indub
