#include "indub/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "indub/errors.hpp"

namespace indub {

Partition::Partition(std::vector<std::vector<Vertex>> cells, std::size_t order)
    : cells_(std::move(cells)), cell_of_(order, order)
{
    for (auto& cell : cells_) {
        if (cell.empty()) throw PreconditionError("partition has an empty cell");
        std::sort(cell.begin(), cell.end());
    }
    std::sort(cells_.begin(), cells_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        for (Vertex x : cells_[c]) {
            if (x >= order)
                throw PreconditionError("vertex " + std::to_string(x) + " is outside [0, " +
                                        std::to_string(order) + ")");
            if (cell_of_[x] != order)
                throw PreconditionError("vertex " + std::to_string(x) + " appears in two cells");
            cell_of_[x] = c;
        }
    }
    for (Vertex x = 0; x < order; ++x)
        if (cell_of_[x] == order)
            throw PreconditionError("vertex " + std::to_string(x) + " is in no cell");
}

IntMatrix Partition::characteristic_matrix() const
{
    IntMatrix p = IntMatrix::Zero(static_cast<Eigen::Index>(order()),
                                  static_cast<Eigen::Index>(cell_count()));
    for (Vertex x = 0; x < order(); ++x)
        p(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(cell_of_[x])) = 1;
    return p;
}

IntMatrix Partition::same_cell_matrix() const
{
    const IntMatrix p = characteristic_matrix();
    return p * p.transpose();
}

Partition parse_partition(std::istream& in, std::size_t order)
{
    std::vector<std::vector<Vertex>> cells;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::vector<Vertex> cell;
        std::string token;
        while (row >> token) {
            std::size_t used = 0;
            unsigned long long value = 0;
            try {
                value = std::stoull(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || token.front() == '-')
                throw ParseError("bad vertex label '" + token + "' on line " + std::to_string(line_no),
                                 line_no);
            cell.push_back(static_cast<Vertex>(value));
        }
        if (!cell.empty()) cells.push_back(std::move(cell));
    }
    return Partition(std::move(cells), order);
}

void write_partition(std::ostream& out, const Partition& pi)
{
    for (const auto& cell : pi.cells()) {
        for (std::size_t i = 0; i < cell.size(); ++i) out << (i ? " " : "") << cell[i];
        out << '\n';
    }
}

std::optional<QuotientResult> quotient_if_equitable(const Graph& g, const Partition& pi)
{
    if (pi.order() != g.order()) throw PreconditionError("partition order differs from graph order");
    // counts(x, j) = neighbours of x in cell j, i.e. A P.
    const IntMatrix counts = g.adjacency() * pi.characteristic_matrix();
    const auto s = static_cast<Eigen::Index>(pi.cell_count());
    QuotientResult out{IntMatrix::Zero(s, s)};
    for (Eigen::Index i = 0; i < s; ++i) {
        const auto& cell = pi.cells()[static_cast<std::size_t>(i)];
        out.Q.row(i) = counts.row(static_cast<Eigen::Index>(cell.front()));
        for (Vertex x : cell)
            if (counts.row(static_cast<Eigen::Index>(x)) != out.Q.row(i)) return std::nullopt;
    }
    return out;
}

std::size_t require_connected_regular(const Graph& g)
{
    const auto profile = basic_profile(g);
    if (!profile.connected) throw PreconditionError("graph is not connected");
    if (!profile.regular_degree) throw PreconditionError("graph is not regular");
    return *profile.regular_degree;
}

std::optional<IndubitableParams> indubitable_params(const Graph& g, const Partition& pi)
{
    if (!basic_profile(g).connected) throw PreconditionError("graph is not connected");
    const auto quotient = quotient_if_equitable(g, pi);
    if (!quotient) return std::nullopt;
    const IntMatrix& q = quotient->Q;
    IndubitableParams p{q(0, 0), q.rows() > 1 ? q(0, 1) : 0};
    for (Eigen::Index i = 0; i < q.rows(); ++i)
        for (Eigen::Index j = 0; j < q.cols(); ++j)
            if (q(i, j) != (i == j ? p.a : p.b)) return std::nullopt;
    return p;
}

std::pair<double, double> predicted_params(std::int64_t k, double lambda, std::int64_t r)
{
    if (r < 1) throw PreconditionError("an indubitable partition needs r >= 1 (two or more cells)");
    const double b = (static_cast<double>(k) - lambda) / static_cast<double>(r + 1);
    return {lambda + b, b};
}

std::optional<IndubitableReport> partition_from_idempotent(const Graph& g, const Spectrum& spec,
                                                           std::size_t class_index)
{
    require_connected_regular(g);
    const auto e = spectral_idempotent(g, spec, class_index);
    if (hadamard_dim(e, spec.tolerance) != 2) return std::nullopt;
    const auto decomposition = two_valued_decomposition(e, g.order(), spec.tolerance);
    if (!decomposition) return std::nullopt;

    Partition pi(decomposition->classes, g.order());
    const auto params = indubitable_params(g, pi);
    const double lambda = spec.classes[class_index].value;
    if (!params || std::abs(static_cast<double>(params->a - params->b) - lambda) > spec.threshold ||
        pi.cell_count() != e.rank + 1)
        throw ConsistencyError("two-valued idempotent for eigenvalue " + std::to_string(lambda) +
                               " does not give a full indubitable partition");

    return IndubitableReport{std::move(pi), *params, lambda, params->a - params->b, class_index,
                             e.rank, true};
}

std::optional<IndubitableReport> partition_from_idempotent(const Graph& g, std::size_t class_index,
                                                           double tol)
{
    return partition_from_idempotent(g, spectrum(g, tol), class_index);
}

Idempotent idempotent_from_partition(const Graph& g, const Spectrum& spec, const Partition& pi,
                                     double lambda)
{
    const auto cls = spec.find_class(lambda);
    if (!cls) throw PreconditionError(std::to_string(lambda) + " is not an eigenvalue");
    const auto params = indubitable_params(g, pi);
    if (!params) throw PreconditionError("partition is not indubitable");
    if (std::abs(static_cast<double>(params->a - params->b) - lambda) > spec.threshold)
        throw PreconditionError("partition parameters give a - b = " +
                                std::to_string(params->a - params->b) + ", not " +
                                std::to_string(lambda));
    const std::size_t m = spec.classes[*cls].multiplicity;
    if (pi.cell_count() != m + 1)
        throw PreconditionError("partition has " + std::to_string(pi.cell_count()) +
                                " cells but the eigenvalue has multiplicity " + std::to_string(m) +
                                " (needs m + 1 cells)");

    const auto n = static_cast<Eigen::Index>(g.order());
    const double v = static_cast<double>(n);
    Idempotent e;
    e.eigenvalue = spec.classes[*cls].value;
    e.rank = m;
    e.matrix = (static_cast<double>(m + 1) / v) * pi.same_cell_matrix().cast<double>() -
               RealMatrix::Ones(n, n) / v;
    const auto r = idempotent_residuals(e, g.real_adjacency());
    const double limit = spec.threshold * std::max(1.0, std::sqrt(v));
    if (r.square > limit || r.eigen > limit || r.trace > limit)
        throw ConsistencyError("idempotent rebuilt from the partition fails its identities");
    return e;
}

Census full_indubitable_census(const Graph& g, const Spectrum& spec)
{
    const auto k = static_cast<double>(require_connected_regular(g));
    Census out;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        const auto e = spectral_idempotent(g, spec, c);
        out.hadamard_dims.push_back(hadamard_dim(e, spec.tolerance));
        if (std::abs(spec.classes[c].value - k) <= spec.threshold) continue;
        if (auto report = partition_from_idempotent(g, spec, c)) out.full.emplace(c, std::move(*report));
    }
    return out;
}

Census full_indubitable_census(const Graph& g, double tol)
{
    return full_indubitable_census(g, spectrum(g, tol));
}

bool constant_diagonal_check(const Idempotent& e, double tol)
{
    const RealVector d = e.matrix.diagonal();
    return d.size() == 0 || d.maxCoeff() - d.minCoeff() <= tol;
}

} // namespace indub
