#include "indub/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "indub/errors.hpp"

namespace indub {

namespace {

std::string edge_text(const Edge& e)
{
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

struct KindName {
    FamilyKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::complete, "complete"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete_multipartite, "complete_multipartite"},
    {FamilyKind::crown, "crown"},
    {FamilyKind::grid, "grid"},
    {FamilyKind::cycle_complete, "cycle_complete"},
    {FamilyKind::double_multipartite, "double_multipartite"},
    {FamilyKind::kneser, "kneser"},
};

// r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current(r);
    for (std::size_t i = 0; i < r; ++i) current[i] = i;
    while (true) {
        out.push_back(current);
        std::size_t i = r;
        while (i > 0 && current[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < r; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

Graph kneser_graph(std::size_t n, std::size_t r)
{
    const auto sets = subsets(n, r);
    const auto v = static_cast<Eigen::Index>(sets.size());
    IntMatrix adj = IntMatrix::Zero(v, v);
    for (Eigen::Index i = 0; i < v; ++i) {
        for (Eigen::Index j = i + 1; j < v; ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                  sets[j].end(), std::back_inserter(common));
            if (common.empty()) adj(i, j) = adj(j, i) = 1;
        }
    }
    return Graph(std::move(adj));
}

} // namespace

Graph::Graph(IntMatrix adjacency) : adj_(std::move(adjacency))
{
    if (adj_.rows() != adj_.cols())
        throw PreconditionError("adjacency matrix is not square");
    if (adj_.rows() < 1) throw PreconditionError("graph must have at least one vertex");
    for (Eigen::Index i = 0; i < adj_.rows(); ++i) {
        if (adj_(i, i) != 0)
            throw PreconditionError("self-loop at vertex " + std::to_string(i));
        for (Eigen::Index j = i + 1; j < adj_.cols(); ++j) {
            if (adj_(i, j) != adj_(j, i))
                throw PreconditionError("adjacency not symmetric at " +
                                        edge_text({static_cast<Vertex>(i), static_cast<Vertex>(j)}));
            if (adj_(i, j) != 0 && adj_(i, j) != 1)
                throw PreconditionError("adjacency entry not 0/1 at " +
                                        edge_text({static_cast<Vertex>(i), static_cast<Vertex>(j)}));
        }
    }
}

std::size_t Graph::degree(Vertex x) const
{
    return static_cast<std::size_t>(adj_.row(static_cast<Eigen::Index>(x)).sum());
}

std::vector<Vertex> Graph::neighbors(Vertex x) const
{
    std::vector<Vertex> out;
    for (Vertex y = 0; y < order(); ++y)
        if (adjacent(x, y)) out.push_back(y);
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex x = 0; x < order(); ++x)
        for (Vertex y = x + 1; y < order(); ++y)
            if (adjacent(x, y)) out.emplace_back(x, y);
    return out;
}

Graph build_graph(std::size_t n, const std::vector<Edge>& edges)
{
    if (n < 1) throw PreconditionError("graph must have at least one vertex");
    const auto v = static_cast<Eigen::Index>(n);
    IntMatrix adj = IntMatrix::Zero(v, v);
    for (const auto& e : edges) {
        if (e.first >= n || e.second >= n)
            throw PreconditionError("edge " + edge_text(e) + " has an endpoint outside [0, " +
                                    std::to_string(n) + ")");
        if (e.first == e.second) throw PreconditionError("edge " + edge_text(e) + " is a self-loop");
        const auto a = static_cast<Eigen::Index>(e.first);
        const auto b = static_cast<Eigen::Index>(e.second);
        adj(a, b) = adj(b, a) = 1;
    }
    return Graph(std::move(adj));
}

FamilySpec FamilySpec::parse(std::string_view text)
{
    if (text == "petersen") return {FamilyKind::kneser, {5, 2}};
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto it = std::find_if(std::begin(kKindNames), std::end(kKindNames),
                                 [&](const KindName& k) { return k.name == name; });
    if (it == std::end(kKindNames))
        throw PreconditionError("unknown graph family '" + std::string(name) + "'");
    FamilySpec spec{it->kind, {}};
    if (colon != std::string_view::npos) {
        auto rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto token = rest.substr(0, comma);
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw PreconditionError("bad family parameter '" + std::string(token) + "'");
            spec.parameters.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    validate(spec);
    return spec;
}

std::string FamilySpec::to_string() const
{
    std::string out;
    for (const auto& k : kKindNames)
        if (k.kind == kind) out = std::string(k.name);
    for (std::size_t i = 0; i < parameters.size(); ++i)
        out += (i == 0 ? ":" : ",") + std::to_string(parameters[i]);
    return out;
}

void validate(const FamilySpec& spec)
{
    const auto& p = spec.parameters;
    auto need = [&](bool ok, const std::string& constraint) {
        if (!ok) throw PreconditionError(spec.to_string() + ": " + constraint);
    };
    auto all_positive = [&] {
        return std::all_of(p.begin(), p.end(), [](std::size_t s) { return s >= 1; });
    };
    switch (spec.kind) {
    case FamilyKind::complete:
        need(p.size() == 1, "complete takes one parameter n");
        need(p[0] >= 1, "complete requires n >= 1");
        break;
    case FamilyKind::cycle:
        need(p.size() == 1, "cycle takes one parameter n");
        need(p[0] >= 3, "cycle length must be >= 3");
        break;
    case FamilyKind::complete_multipartite:
    case FamilyKind::double_multipartite:
        need(!p.empty(), "at least one part size required");
        need(all_positive(), "all part sizes must be >= 1");
        break;
    case FamilyKind::crown:
        need(p.size() == 1, "crown takes one parameter m");
        need(p[0] >= 1, "crown requires m >= 1");
        break;
    case FamilyKind::grid:
        need(p.size() == 2, "grid takes two parameters p,q");
        need(all_positive(), "grid factors must have order >= 1");
        break;
    case FamilyKind::cycle_complete:
        need(p.size() == 2, "cycle_complete takes two parameters p,q");
        need(p[0] >= 3, "cycle length must be >= 3");
        need(p[1] >= 1, "complete factor must have order >= 1");
        break;
    case FamilyKind::kneser:
        need(p.size() == 2, "kneser takes two parameters n,r");
        need(p[1] >= 1 && p[0] >= p[1], "kneser requires 1 <= r <= n");
        break;
    }
}

Graph complete_graph(std::size_t n)
{
    if (n < 1) throw PreconditionError("complete requires n >= 1");
    const auto v = static_cast<Eigen::Index>(n);
    return Graph(int_ones(v) - int_identity(v));
}

// Vertex i is adjacent to i +- 1 mod n.
Graph cycle_graph(std::size_t n)
{
    if (n < 3) throw PreconditionError("cycle length must be >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

// Parts occupy consecutive label ranges in the given order.
Graph complete_multipartite(const std::vector<std::size_t>& parts)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw PreconditionError("all part sizes must be >= 1");
        part_of.insert(part_of.end(), parts[p], p);
    }
    const auto v = static_cast<Eigen::Index>(part_of.size());
    IntMatrix adj = IntMatrix::Zero(v, v);
    for (Eigen::Index i = 0; i < v; ++i)
        for (Eigen::Index j = 0; j < v; ++j)
            adj(i, j) = part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)];
    return Graph(std::move(adj));
}

Graph generate(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.parameters;
    switch (spec.kind) {
    case FamilyKind::complete: return complete_graph(p[0]);
    case FamilyKind::cycle: return cycle_graph(p[0]);
    case FamilyKind::complete_multipartite: return complete_multipartite(p);
    case FamilyKind::crown: return bipartite_double(complete_graph(p[0] + 1));
    case FamilyKind::grid: return cartesian_product(complete_graph(p[0]), complete_graph(p[1]));
    case FamilyKind::cycle_complete: return cartesian_product(cycle_graph(p[0]), complete_graph(p[1]));
    case FamilyKind::double_multipartite: return bipartite_double(complete_multipartite(p));
    case FamilyKind::kneser: return kneser_graph(p[0], p[1]);
    }
    throw PreconditionError("unhandled family");
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const auto a = g.adjacency();
    const auto b = h.adjacency();
    return Graph(kron(a, int_identity(b.rows())) + kron(int_identity(a.rows()), b));
}

Graph bipartite_double(const Graph& g)
{
    return Graph(kron(IntMatrix(int_ones(2) - int_identity(2)), g.adjacency()));
}

Graph complement(const Graph& g)
{
    const auto n = g.adjacency().rows();
    return Graph(int_ones(n) - int_identity(n) - g.adjacency());
}

Graph coclique_extension(const Graph& g, std::size_t t)
{
    if (t < 1) throw PreconditionError("coclique size must be >= 1");
    return Graph(kron(g.adjacency(), int_ones(static_cast<Eigen::Index>(t))));
}

Graph permuted(const Graph& g, std::span<const std::size_t> perm)
{
    if (perm.size() != g.order()) throw PreconditionError("permutation length differs from order");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw PreconditionError("not a permutation");
        seen[p] = true;
    }
    return Graph(permute_symmetric(g.adjacency(), perm));
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const auto n1 = g.adjacency().rows();
    const auto n2 = h.adjacency().rows();
    IntMatrix adj = IntMatrix::Zero(n1 + n2, n1 + n2);
    adj.topLeftCorner(n1, n1) = g.adjacency();
    adj.bottomRightCorner(n2, n2) = h.adjacency();
    return Graph(std::move(adj));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const auto x = frontier.front();
        frontier.pop();
        for (Vertex y = 0; y < g.order(); ++y) {
            if (g.adjacent(x, y) && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

BasicProfile basic_profile(const Graph& g)
{
    BasicProfile profile;
    const auto n = g.order();
    const auto dist = bfs_distances(g, 0);
    profile.connected = std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });

    const auto k = g.degree(0);
    bool regular = true;
    for (Vertex x = 1; x < n && regular; ++x) regular = g.degree(x) == k;
    if (regular) profile.regular_degree = k;

    if (profile.connected) {
        // BFS layers give the only candidate 2-colouring of a connected graph.
        bool bipartite = true;
        for (const auto& [x, y] : g.edges())
            if ((dist[x] % 2) == (dist[y] % 2)) bipartite = false;
        if (bipartite) {
            std::pair<std::vector<Vertex>, std::vector<Vertex>> sides;
            for (Vertex x = 0; x < n; ++x) (dist[x] % 2 == 0 ? sides.first : sides.second).push_back(x);
            profile.bipartition = std::move(sides);
        }
    }
    return profile;
}

std::vector<IntMatrix> distance_matrices(const Graph& g)
{
    const auto n = g.order();
    std::vector<std::vector<int>> dist(n);
    int diameter = 0;
    for (Vertex x = 0; x < n; ++x) {
        dist[x] = bfs_distances(g, x);
        for (int d : dist[x]) {
            if (d < 0) throw PreconditionError("distance matrices need a connected graph");
            diameter = std::max(diameter, d);
        }
    }
    const auto v = static_cast<Eigen::Index>(n);
    std::vector<IntMatrix> out(static_cast<std::size_t>(diameter) + 1, IntMatrix::Zero(v, v));
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            out[static_cast<std::size_t>(dist[x][y])](static_cast<Eigen::Index>(x),
                                                      static_cast<Eigen::Index>(y)) = 1;
    return out;
}

} // namespace indub
