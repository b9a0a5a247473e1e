#include "indub/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "indub/errors.hpp"
#include "indub/partition.hpp"

namespace indub {

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 7> kVerdictNames{{
    {Verdict::bipartite, "bipartite"},
    {Verdict::complete_multipartite, "complete_multipartite"},
    {Verdict::antipodal_cover, "antipodal_cover_of_complete"},
    {Verdict::grid, "grid"},
    {Verdict::grid_complement, "grid_complement"},
    {Verdict::bipartite_double_multipartite, "bipartite_double_of_complete_multipartite"},
    {Verdict::unclassified, "unclassified"},
}};

// Classes of a reflexive 01 matrix that encodes an equivalence relation,
// ordered by minimum vertex; nullopt if it is not one.
std::optional<std::vector<std::vector<Vertex>>> equivalence_classes(const IntMatrix& m)
{
    const auto n = m.rows();
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<std::vector<Vertex>> out;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (m(i, i) != 1) return std::nullopt;
        if (placed[static_cast<std::size_t>(i)]) continue;
        out.emplace_back();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!m(i, j)) continue;
            if (m.row(j) != m.row(i) || placed[static_cast<std::size_t>(j)]) return std::nullopt;
            placed[static_cast<std::size_t>(j)] = true;
            out.back().push_back(static_cast<Vertex>(j));
        }
    }
    return out;
}

Permutation concatenate(const std::vector<std::vector<Vertex>>& cells)
{
    Permutation out;
    for (const auto& c : cells) out.insert(out.end(), c.begin(), c.end());
    return out;
}

Graph grid_graph(std::size_t p, std::size_t q)
{
    return generate(FamilySpec{FamilyKind::grid, {p, q}});
}

// Co-edge-regular (v, m + m', 2) graph whose adjacent pairs have m - 1 or
// m' - 1 common neighbours.
bool matches_co_edge_profile(const Graph& h, std::size_t m, std::size_t mp)
{
    if (h.order() != (m + 1) * (mp + 1)) return false;
    const auto profile = basic_profile(h);
    if (!profile.connected || profile.regular_degree != m + mp) return false;
    const auto coedge = co_edge_regular_profile(h);
    if (!coedge || coedge->mu != 2) return false;
    const std::int64_t x = static_cast<std::int64_t>(m) - 1;
    const std::int64_t y = static_cast<std::int64_t>(mp) - 1;
    return std::all_of(coedge->adjacent_common.begin(), coedge->adjacent_common.end(),
                       [&](std::int64_t c) { return c == x || c == y; });
}

bool co_edge_condition(const Graph& g, std::size_t m, std::size_t mp)
{
    if (matches_co_edge_profile(g, m, mp)) return true;
    const Graph c = complement(g);
    return basic_profile(c).connected && matches_co_edge_profile(c, m, mp);
}

std::size_t degree_class(const Spectrum& spec, std::size_t k)
{
    const auto c = spec.find_class(static_cast<double>(k));
    if (!c) throw ConsistencyError("regular graph without its degree as an eigenvalue");
    return *c;
}

Classification verified(const Graph& g, Classification c)
{
    if (!check_witness(g, c))
        throw ConsistencyError("witness for verdict " + std::string(to_string(c.verdict)) +
                               " does not re-verify");
    return c;
}

} // namespace

std::string_view to_string(Verdict v)
{
    for (const auto& [verdict, name] : kVerdictNames)
        if (verdict == v) return name;
    return "unclassified";
}

Verdict verdict_from_string(std::string_view text)
{
    for (const auto& [verdict, name] : kVerdictNames)
        if (name == text) return verdict;
    throw PreconditionError("unknown verdict '" + std::string(text) + "'");
}

bool Classification::check(std::string_view name) const
{
    for (const auto& [n, ok] : checks)
        if (n == name) return ok;
    return false;
}

bool check_witness(const Graph& g, const Classification& c)
{
    if (c.verdict == Verdict::unclassified) return true;
    if (c.reordering.size() != g.order()) return false;
    Graph normal = g;
    try {
        normal = permuted(g, c.reordering);
    } catch (const PreconditionError&) {
        return false;
    }
    const IntMatrix& a = normal.adjacency();
    switch (c.verdict) {
    case Verdict::grid:
    case Verdict::grid_complement: {
        if (c.shape.size() != 2 || c.shape[0] * c.shape[1] != g.order()) return false;
        const Graph grid = grid_graph(c.shape[0], c.shape[1]);
        return normal == (c.verdict == Verdict::grid ? grid : complement(grid));
    }
    case Verdict::bipartite: {
        if (c.shape.size() != 2 || c.shape[0] + c.shape[1] != g.order()) return false;
        const auto s0 = static_cast<Eigen::Index>(c.shape[0]);
        const auto s1 = static_cast<Eigen::Index>(c.shape[1]);
        return a.topLeftCorner(s0, s0).isZero() && a.bottomRightCorner(s1, s1).isZero();
    }
    case Verdict::complete_multipartite: {
        std::size_t total = 0;
        for (auto s : c.shape) total += s;
        return total == g.order() && normal == complete_multipartite(c.shape);
    }
    case Verdict::antipodal_cover: {
        if (c.shape.size() != 2 || c.shape[0] * c.shape[1] != g.order()) return false;
        const auto dist = distance_matrices(normal);
        if (dist.size() != 4) return false;
        const auto fibres = static_cast<Eigen::Index>(c.shape[0]);
        const auto size = static_cast<Eigen::Index>(c.shape[1]);
        return IntMatrix(dist[0] + dist[3]) == kron(int_identity(fibres), int_ones(size));
    }
    case Verdict::bipartite_double_multipartite: {
        if (c.shape.size() != 2 || 2 * c.shape[0] * c.shape[1] != g.order()) return false;
        const auto parts = static_cast<Eigen::Index>(c.shape[0]);
        const auto ell = static_cast<Eigen::Index>(c.shape[1]);
        const IntMatrix l2 = int_ones(2) - int_identity(2);
        const IntMatrix expected =
            kron(kron(l2, IntMatrix(int_ones(parts) - int_identity(parts))), int_ones(ell));
        return a == expected;
    }
    case Verdict::unclassified: return true;
    }
    return false;
}

std::optional<Classification> identify_grid(const Graph& g)
{
    const auto profile = basic_profile(g);
    if (!profile.connected || !profile.regular_degree) return std::nullopt;
    const IntMatrix& a = g.adjacency();
    const IntMatrix common = a * a;
    std::set<std::int64_t> counts;
    for (Eigen::Index x = 0; x < a.rows(); ++x)
        for (Eigen::Index y = 0; y < a.cols(); ++y)
            if (a(x, y)) counts.insert(common(x, y));
    if (counts.size() != 2) return std::nullopt;

    // Columns have p - 2 common neighbours along an edge, rows q - 2.
    std::array<std::vector<std::vector<Vertex>>, 2> cliques;
    std::size_t idx = 0;
    for (const auto c : counts) {
        IntMatrix relation = int_identity(a.rows());
        for (Eigen::Index x = 0; x < a.rows(); ++x)
            for (Eigen::Index y = 0; y < a.cols(); ++y)
                if (a(x, y) && common(x, y) == c) relation(x, y) = 1;
        auto classes = equivalence_classes(relation);
        if (!classes) return std::nullopt;
        for (const auto& cl : *classes)
            if (static_cast<std::int64_t>(cl.size()) != c + 2) return std::nullopt;
        cliques[idx++] = std::move(*classes);
    }
    const auto& columns = cliques[0]; // size p, q of them
    const auto& rows = cliques[1];    // size q, p of them
    const std::size_t p = columns.front().size();
    const std::size_t q = rows.front().size();
    if (rows.size() != p || columns.size() != q || p * q != g.order()) return std::nullopt;

    std::vector<std::size_t> column_of(g.order());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (Vertex x : columns[j]) column_of[x] = j;
    Classification out;
    out.verdict = Verdict::grid;
    out.witness = "row_and_column_cliques";
    out.shape = {p, q};
    out.reordering.assign(p * q, g.order());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (Vertex x : rows[i]) {
            auto& slot = out.reordering[i * q + column_of[x]];
            if (slot != g.order()) return std::nullopt;
            slot = x;
        }
    }
    if (!check_witness(g, out)) return std::nullopt;
    return out;
}

Classification classify_four_eigenvalue(const Graph& g, const Spectrum& spec)
{
    const auto k = require_connected_regular(g);
    if (spec.classes.size() != 4)
        throw PreconditionError("graph has " + std::to_string(spec.classes.size()) +
                                " distinct eigenvalues, not four");
    const auto census = full_indubitable_census(g, spec);
    const auto top = degree_class(spec, k);

    std::vector<std::size_t> nontrivial;
    std::size_t two_valued = 0;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        if (c == top) continue;
        nontrivial.push_back(c);
        if (census.hadamard_dims[c] == 2) ++two_valued;
    }

    Classification out;
    if (census.full.size() > 2)
        throw ConsistencyError("more than two full indubitable partitions with four eigenvalues");

    if (census.full.size() == 2) {
        auto it = census.full.begin();
        const auto& ra = it->second;
        const auto& rb = (++it)->second;
        // Larger multiplicity first, so the reordering lists the smaller
        // partition's cells outermost.
        const auto& r1 = ra.multiplicity >= rb.multiplicity ? ra : rb;
        const auto& r2 = ra.multiplicity >= rb.multiplicity ? rb : ra;
        const std::size_t m = r1.multiplicity;
        const std::size_t mp = r2.multiplicity;
        const auto tp = two_partition_analysis(g, spec, r1.class_index, r2.class_index);
        if (!tp) throw ConsistencyError("census partitions not recovered by two-partition analysis");

        const auto n = static_cast<Eigen::Index>(g.order());
        bool grid = false;
        bool grid_c = false;
        bool closed = false;
        if (tp->ell == 1) {
            const Graph normal = permuted(g, tp->reordering);
            const Graph target = grid_graph(mp + 1, m + 1);
            grid = normal == target;
            grid_c = normal == complement(target);
            const SchemeBasis basis({int_identity(n), tp->K1 - int_identity(n), tp->K2 - int_identity(n),
                                     int_ones(n) + int_identity(n) - tp->K1 - tp->K2});
            closed = bose_mesner_closure(basis).has_value();
        }
        out.checks = {{"two_two_valued_idempotents", two_valued == 2},
                      {"two_full_partitions", true},
                      {"co_edge_regular", co_edge_condition(g, m, mp)},
                      {"grid_identified", grid || grid_c},
                      {"scheme_closed", closed},
                      {"distinct_multiplicities", m != mp}};
        for (const auto& [name, ok] : out.checks)
            if (!ok) throw ConsistencyError("two full partitions with four eigenvalues but '" + name +
                                            "' fails");
        out.verdict = grid ? Verdict::grid : Verdict::grid_complement;
        out.witness = "partition_reordering";
        out.reordering = tp->reordering;
        out.shape = {mp + 1, m + 1};
        out.eigenvalue = r1.exact_eigenvalue;
        out.multiplicity = m;
        return verified(g, std::move(out));
    }

    bool co_edge = false;
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        for (std::size_t j = 0; j < nontrivial.size(); ++j)
            if (i != j)
                co_edge = co_edge || co_edge_condition(g, spec.classes[nontrivial[i]].multiplicity,
                                                       spec.classes[nontrivial[j]].multiplicity);
    bool grid = identify_grid(g).has_value();
    const Graph c = complement(g);
    if (basic_profile(c).connected) grid = grid || identify_grid(c).has_value();
    out.checks = {{"two_two_valued_idempotents", two_valued >= 2},
                  {"two_full_partitions", false},
                  {"co_edge_regular", co_edge},
                  {"grid_identified", grid}};
    for (const auto& [name, ok] : out.checks)
        if (ok) throw ConsistencyError("fewer than two full partitions with four eigenvalues but '" +
                                       name + "' holds");
    out.verdict = Verdict::unclassified;
    out.witness = census.full.empty() ? "no_full_partition" : "one_full_partition";
    return out;
}

Classification classify_bipartite_five_eigenvalue(const Graph& g, const Spectrum& spec)
{
    const auto k = require_connected_regular(g);
    const auto profile = basic_profile(g);
    if (!profile.bipartition) throw PreconditionError("graph is not bipartite");
    if (spec.classes.size() != 5)
        throw PreconditionError("graph has " + std::to_string(spec.classes.size()) +
                                " distinct eigenvalues, not five");
    const auto census = full_indubitable_census(g, spec);
    const auto bottom = spec.find_class(-static_cast<double>(k));
    if (!bottom || !census.full.contains(*bottom))
        throw ConsistencyError("bipartite graph without a full partition at -k");

    Classification out;
    out.witness = "no_full_partition_off_minus_k";
    for (const auto& [cls, report] : census.full) {
        if (cls == *bottom) continue;
        if (report.exact_eigenvalue == 0)
            throw ConsistencyError("bipartite graph with a full partition at eigenvalue 0");
        const auto m = static_cast<std::int64_t>(report.multiplicity);
        const bool ratio = report.exact_eigenvalue * m == -static_cast<std::int64_t>(k);
        out.checks.emplace_back("eigenvalue_is_minus_k_over_m", ratio);
        if (!ratio)
            throw ConsistencyError("full partition at " + std::to_string(report.exact_eigenvalue) +
                                   " with multiplicity " + std::to_string(m) + " but k = " +
                                   std::to_string(k));
        const auto tp = two_partition_analysis(g, spec, cls, *bottom);
        if (!tp) throw ConsistencyError("census partitions not recovered by two-partition analysis");
        out.verdict = Verdict::bipartite_double_multipartite;
        out.witness = "partition_reordering";
        out.reordering = tp->reordering;
        out.shape = {report.multiplicity + 1, tp->ell};
        out.eigenvalue = report.exact_eigenvalue;
        out.multiplicity = report.multiplicity;
        out.checks.emplace_back("block_form", tp->block_form_verified);
        if (!check_witness(g, out))
            throw ConsistencyError("bipartite five-eigenvalue graph is not the predicted double");
        return out;
    }
    out.verdict = Verdict::unclassified;
    return out;
}

std::vector<Classification> classify_drg_full_partition(const Graph& g, const Spectrum& spec)
{
    const auto array = intersection_array(g);
    if (!array) throw PreconditionError("graph is not distance-regular");
    const auto k = static_cast<std::int64_t>(array->b.front());
    const auto d = array->diameter();
    if (k <= 2 || d < 2) throw PreconditionError("needs valency > 2 and diameter >= 2");
    const auto profile = basic_profile(g);
    const auto census = full_indubitable_census(g, spec);
    const auto v = static_cast<std::int64_t>(g.order());
    const auto n = static_cast<Eigen::Index>(g.order());

    std::vector<Classification> out;
    for (const auto& [cls, report] : census.full) {
        const auto lambda = report.exact_eigenvalue;
        const auto cells = static_cast<std::int64_t>(report.partition.cell_count());
        const IntMatrix K = report.partition.same_cell_matrix();
        Classification c;
        c.eigenvalue = lambda;
        c.multiplicity = report.multiplicity;
        if (lambda == -k && profile.bipartition) {
            c.verdict = Verdict::bipartite;
            c.witness = "bipartition";
            c.reordering = concatenate(report.partition.cells());
            c.shape = {report.partition.cells()[0].size(), report.partition.cells()[1].size()};
        } else if (lambda * cells == -v && g.adjacency() == int_ones(n) - K) {
            c.verdict = Verdict::complete_multipartite;
            c.witness = "complement_is_cells";
            c.reordering = concatenate(report.partition.cells());
            for (const auto& cell : report.partition.cells()) c.shape.push_back(cell.size());
        } else if (lambda == -1 && d == 3 && [&] {
                       const auto dist = distance_matrices(g);
                       return IntMatrix(dist[0] + dist[3]) == K;
                   }()) {
            c.verdict = Verdict::antipodal_cover;
            c.witness = "antipodal_classes_are_cells";
            c.reordering = concatenate(report.partition.cells());
            c.shape = {report.partition.cell_count(), report.partition.cells()[0].size()};
        } else {
            throw ConsistencyError("distance-regular graph has a full partition at " +
                                   std::to_string(lambda) + " matching no known branch");
        }
        out.push_back(verified(g, std::move(c)));
    }
    if (out.empty()) {
        Classification c;
        c.witness = "no_full_partition";
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace indub
