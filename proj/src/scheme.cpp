#include "indub/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "indub/errors.hpp"

namespace indub {

namespace {

std::string entry_text(Eigen::Index x, Eigen::Index y)
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

SchemeBasis::SchemeBasis(std::vector<IntMatrix> matrices) : matrices_(std::move(matrices))
{
    if (matrices_.empty()) throw PreconditionError("scheme basis is empty");
    const auto n = matrices_.front().rows();
    if (matrices_.front() != int_identity(n)) throw PreconditionError("B_0 is not the identity");
    IntMatrix total = IntMatrix::Zero(n, n);
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        const auto& b = matrices_[i];
        if (b.rows() != n || b.cols() != n)
            throw PreconditionError("B_" + std::to_string(i) + " has the wrong shape");
        bool nonzero = false;
        for (Eigen::Index x = 0; x < n; ++x) {
            for (Eigen::Index y = 0; y < n; ++y) {
                if (b(x, y) != 0 && b(x, y) != 1)
                    throw PreconditionError("B_" + std::to_string(i) + " is not 01 at " + entry_text(x, y));
                if (b(x, y) != b(y, x))
                    throw PreconditionError("B_" + std::to_string(i) + " is not symmetric at " +
                                            entry_text(x, y));
                if (b(x, y) && total(x, y)) {
                    std::size_t j = 0;
                    while (matrices_[j](x, y) == 0) ++j;
                    throw PreconditionError("B_" + std::to_string(j) + " and B_" + std::to_string(i) +
                                            " overlap at " + entry_text(x, y));
                }
                nonzero = nonzero || b(x, y);
            }
        }
        if (!nonzero) throw PreconditionError("B_" + std::to_string(i) + " is zero");
        total += b;
    }
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y)
            if (total(x, y) != 1)
                throw PreconditionError("basis does not cover entry " + entry_text(x, y));
}

std::optional<StructureConstants> bose_mesner_closure(const SchemeBasis& basis)
{
    const auto& b = basis.matrices();
    const std::size_t d1 = b.size();
    const auto n = static_cast<Eigen::Index>(basis.order());

    // One representative position per relation.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> rep(d1);
    for (std::size_t h = 0; h < d1; ++h) {
        bool found = false;
        for (Eigen::Index x = 0; x < n && !found; ++x)
            for (Eigen::Index y = 0; y < n && !found; ++y)
                if (b[h](x, y)) {
                    rep[h] = {x, y};
                    found = true;
                }
    }

    StructureConstants out;
    out.size = d1;
    out.p.assign(d1 * d1 * d1, 0);
    for (std::size_t i = 0; i < d1; ++i) {
        const IntMatrix rowsums = b[i].rowwise().sum();
        if ((rowsums.array() != rowsums(0)).any()) return std::nullopt;
        out.valencies.push_back(rowsums(0));
    }
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d1; ++j) {
            const IntMatrix product = b[i] * b[j];
            IntMatrix expansion = IntMatrix::Zero(n, n);
            for (std::size_t h = 0; h < d1; ++h) {
                const auto coeff = product(rep[h].first, rep[h].second);
                out.p[(h * d1 + i) * d1 + j] = coeff;
                expansion += coeff * b[h];
            }
            if (expansion != product) return std::nullopt;
        }
    }
    return out;
}

std::optional<IntersectionArray> intersection_array(const Graph& g)
{
    const auto n = g.order();
    std::vector<std::vector<int>> dist(n);
    for (Vertex x = 0; x < n; ++x) {
        dist[x] = bfs_distances(g, x);
        if (std::any_of(dist[x].begin(), dist[x].end(), [](int d) { return d < 0; }))
            throw PreconditionError("intersection array needs a connected graph");
    }
    int diameter = 0;
    for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));

    const auto d = static_cast<std::size_t>(diameter);
    std::vector<std::int64_t> c(d + 1, -1), b(d + 1, -1);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            const int i = dist[x][y];
            std::int64_t down = 0;
            std::int64_t up = 0;
            for (Vertex z : g.neighbors(y)) {
                if (dist[x][z] == i - 1) ++down;
                if (dist[x][z] == i + 1) ++up;
            }
            auto& ci = c[static_cast<std::size_t>(i)];
            auto& bi = b[static_cast<std::size_t>(i)];
            if (ci < 0) ci = down;
            if (bi < 0) bi = up;
            if (ci != down || bi != up) return std::nullopt;
        }
    }
    IntersectionArray out;
    out.b.assign(b.begin(), b.end() - 1);
    out.c.assign(c.begin() + 1, c.end());
    return out;
}

std::optional<CoEdgeRegularProfile> co_edge_regular_profile(const Graph& g)
{
    const IntMatrix& a = g.adjacency();
    const IntMatrix common = a * a;
    CoEdgeRegularProfile out;
    bool seen_nonadjacent = false;
    for (Eigen::Index x = 0; x < a.rows(); ++x) {
        for (Eigen::Index y = x + 1; y < a.cols(); ++y) {
            if (a(x, y)) {
                out.adjacent_common.insert(common(x, y));
            } else if (!seen_nonadjacent) {
                out.mu = common(x, y);
                seen_nonadjacent = true;
            } else if (common(x, y) != out.mu) {
                return std::nullopt;
            }
        }
    }
    if (!seen_nonadjacent) return std::nullopt;
    return out;
}

std::optional<TwoPartitionReport> two_partition_analysis(const Graph& g, const Spectrum& spec,
                                                         std::size_t class1, std::size_t class2)
{
    if (class1 == class2) throw PreconditionError("two distinct eigenvalue classes required");
    const auto first = partition_from_idempotent(g, spec, class1);
    const auto second = partition_from_idempotent(g, spec, class2);
    if (!first || !second) return std::nullopt;

    const std::size_t v = g.order();
    TwoPartitionReport out;
    out.class1 = class1;
    out.class2 = class2;
    out.m1 = first->multiplicity;
    out.m2 = second->multiplicity;
    const auto& cells1 = first->partition.cells();
    const auto& cells2 = second->partition.cells();
    const auto s1 = static_cast<Eigen::Index>(cells1.size());
    const auto s2 = static_cast<Eigen::Index>(cells2.size());

    out.intersection_sizes = IntMatrix::Zero(s1, s2);
    for (Vertex x = 0; x < v; ++x)
        out.intersection_sizes(static_cast<Eigen::Index>(first->partition.cell_of(x)),
                               static_cast<Eigen::Index>(second->partition.cell_of(x))) += 1;
    const std::int64_t ell = out.intersection_sizes(0, 0);
    if ((out.intersection_sizes.array() != ell).any() || ell * s1 * s2 != static_cast<std::int64_t>(v))
        throw ConsistencyError("cells of the two full indubitable partitions do not meet in equal sizes");
    out.ell = static_cast<std::size_t>(ell);

    out.K1 = first->partition.same_cell_matrix();
    out.K2 = second->partition.same_cell_matrix();
    const auto n = static_cast<Eigen::Index>(v);
    out.product_identity = out.K1 * out.K2 == ell * int_ones(n);

    for (const auto& outer : cells2)
        for (const auto& inner : cells1)
            std::set_intersection(outer.begin(), outer.end(), inner.begin(), inner.end(),
                                  std::back_inserter(out.reordering));

    const IntMatrix ones_ell = int_ones(ell);
    const IntMatrix expected1 = kron(kron(int_ones(s2), int_identity(s1)), ones_ell);
    const IntMatrix expected2 = kron(kron(int_identity(s2), int_ones(s1)), ones_ell);
    out.block_form_verified = permute_symmetric(out.K1, out.reordering) == expected1 &&
                              permute_symmetric(out.K2, out.reordering) == expected2;
    return out;
}

bool three_class_detection(const Graph& g, const Spectrum& spec, const Partition& pi)
{
    const auto k = require_connected_regular(g);
    if (spec.classes.size() != 4)
        throw PreconditionError("three-class detection needs exactly four distinct eigenvalues");
    const auto params = indubitable_params(g, pi);
    if (!params) throw PreconditionError("partition is not indubitable");
    if (params->a != 0)
        throw PreconditionError("partition has a = " + std::to_string(params->a) + " (needs a = 0)");
    if (pi.cell_count() < 2 || params->b == 0)
        throw PreconditionError("partition needs at least two cells");

    const auto lambda_class = spec.find_class(static_cast<double>(-params->b));
    const bool full = lambda_class && spec.classes[*lambda_class].multiplicity + 1 == pi.cell_count();

    const auto n = static_cast<Eigen::Index>(g.order());
    const IntMatrix K = pi.same_cell_matrix();
    const IntMatrix& A = g.adjacency();
    const IntMatrix rest = int_ones(n) - K - A;
    if (K == int_identity(n) || rest.isZero()) {
        // Degenerate relations: the candidate is not a 3-class basis.
        if (full) throw ConsistencyError("full (0,b) partition but the 3-class basis degenerates");
        return false;
    }
    const SchemeBasis basis({int_identity(n), K - int_identity(n), A, rest});
    const bool closed = bose_mesner_closure(basis).has_value();
    if (closed != full)
        throw ConsistencyError(std::string("(0,b) partition is ") + (full ? "" : "not ") +
                               "full but the clique/graph/rest basis is " + (closed ? "" : "not ") +
                               "closed (k = " + std::to_string(k) + ")");
    return full;
}

} // namespace indub
