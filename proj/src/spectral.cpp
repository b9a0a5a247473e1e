#include "indub/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "indub/errors.hpp"

namespace indub {

std::size_t Spectrum::order() const
{
    std::size_t n = 0;
    for (const auto& c : classes) n += c.multiplicity;
    return n;
}

std::optional<std::size_t> Spectrum::find_class(double lambda) const
{
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::abs(classes[i].value - lambda) <= threshold) return i;
    return std::nullopt;
}

bool Spectrum::all_integral() const
{
    return std::all_of(classes.begin(), classes.end(),
                       [](const EigenClass& c) { return c.integer_value.has_value(); });
}

Spectrum spectrum(const RealMatrix& symmetric, double tol)
{
    if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(symmetric);
    if (solver.info() != Eigen::Success)
        throw Error("symmetric eigensolver failed to converge");

    const RealVector& values = solver.eigenvalues(); // ascending
    const RealMatrix& vectors = solver.eigenvectors();
    const auto n = values.size();
    const double norm = n == 0 ? 0.0 : std::max(std::abs(values(0)), std::abs(values(n - 1)));

    Spectrum out;
    out.tolerance = tol;
    out.threshold = tol * std::max(1.0, norm);

    // Walk from the top so classes come out descending.
    Eigen::Index hi = n - 1;
    while (hi >= 0) {
        Eigen::Index lo = hi;
        while (lo > 0 && values(lo) - values(lo - 1) <= out.threshold) --lo;
        if (lo > 0 && values(lo) - values(lo - 1) <= 10.0 * out.threshold) out.ambiguous = true;

        EigenClass cls;
        cls.multiplicity = static_cast<std::size_t>(hi - lo + 1);
        cls.value = values.segment(lo, hi - lo + 1).mean();
        const double rounded = std::round(cls.value);
        if (std::abs(cls.value - rounded) <= out.threshold)
            cls.integer_value = static_cast<std::int64_t>(rounded);

        const RealMatrix block = vectors.middleCols(lo, hi - lo + 1);
        Eigen::HouseholderQR<RealMatrix> qr(block);
        cls.basis = qr.householderQ() * RealMatrix::Identity(block.rows(), block.cols());
        out.classes.push_back(std::move(cls));
        hi = lo - 1;
    }
    return out;
}

Spectrum spectrum(const Graph& g, double tol)
{
    return spectrum(g.real_adjacency(), tol);
}

IdempotentResiduals idempotent_residuals(const Idempotent& e, const RealMatrix& adjacency)
{
    IdempotentResiduals r;
    r.square = max_abs(e.matrix * e.matrix - e.matrix);
    r.eigen = max_abs(adjacency * e.matrix - e.eigenvalue * e.matrix);
    r.trace = std::abs(e.matrix.trace() - static_cast<double>(e.rank));
    return r;
}

Idempotent spectral_idempotent(const Graph& g, const Spectrum& spec, std::size_t class_index)
{
    if (class_index >= spec.classes.size())
        throw PreconditionError("eigenvalue class " + std::to_string(class_index) + " out of range");
    const auto& cls = spec.classes[class_index];
    Idempotent e;
    e.matrix = cls.basis * cls.basis.transpose();
    e.eigenvalue = cls.value;
    e.rank = cls.multiplicity;

    const auto r = idempotent_residuals(e, g.real_adjacency());
    const double n = static_cast<double>(g.order());
    const double limit = spec.threshold * std::max(1.0, std::sqrt(n));
    if (r.square > limit || r.eigen > limit || r.trace > limit)
        throw ConsistencyError("spectral idempotent for eigenvalue " + std::to_string(cls.value) +
                               " fails its defining identities");
    return e;
}

Idempotent spectral_idempotent(const Graph& g, std::size_t class_index, double tol)
{
    return spectral_idempotent(g, spectrum(g, tol), class_index);
}

EntryClasses entry_classes(const RealMatrix& m, double tol)
{
    if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
    const auto total = static_cast<std::size_t>(m.size());
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const double* data = m.data();
    // Ties keep storage order, so the labelling is deterministic.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return data[a] < data[b]; });

    EntryClasses out;
    out.class_matrix.resize(m.rows(), m.cols());
    int* labels = out.class_matrix.data();
    std::size_t start = 0;
    while (start < total) {
        std::size_t end = start + 1;
        while (end < total && data[order[end]] - data[order[end - 1]] <= tol) ++end;
        double sum = 0.0;
        const int label = static_cast<int>(out.values.size());
        for (std::size_t i = start; i < end; ++i) {
            sum += data[order[i]];
            labels[order[i]] = label;
        }
        out.values.push_back(sum / static_cast<double>(end - start));
        out.max_spread = std::max(out.max_spread, data[order[end - 1]] - data[order[start]]);
        start = end;
    }
    return out;
}

std::size_t hadamard_dim(const Idempotent& e, double tol)
{
    return entry_classes(e.matrix, tol).values.size();
}

std::size_t hadamard_span_oracle(const std::vector<RealMatrix>& generators, std::size_t max_power,
                                 double tol)
{
    if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
    if (generators.empty()) throw PreconditionError("at least one generator required");
    const auto len = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != len) throw PreconditionError("generators differ in size");

    // Orthonormal Krylov basis of diag(vec G) started from vec J, per
    // generator. Spans equal span{J, G, ..., G^(o p)} but avoid the
    // ill-conditioned monomial basis.
    std::vector<RealMatrix> blocks;
    std::size_t columns = 0;
    for (const auto& g : generators) {
        const RealVector diag = g.reshaped();
        const double scale = std::max(1.0, diag.cwiseAbs().maxCoeff());
        RealMatrix q(len, static_cast<Eigen::Index>(max_power) + 1);
        q.col(0) = RealVector::Ones(len) / std::sqrt(static_cast<double>(len));
        Eigen::Index found = 1;
        for (std::size_t p = 0; p < max_power; ++p) {
            RealVector w = diag.cwiseProduct(q.col(found - 1));
            for (int pass = 0; pass < 2; ++pass)
                w -= q.leftCols(found) * (q.leftCols(found).transpose() * w);
            const double norm = w.norm();
            if (norm <= tol * scale) break;
            q.col(found++) = w / norm;
        }
        columns += static_cast<std::size_t>(found);
        blocks.push_back(q.leftCols(found));
    }
    if (blocks.size() == 1) return columns;

    RealMatrix all(len, static_cast<Eigen::Index>(columns));
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        all.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    Eigen::JacobiSVD<RealMatrix> svd(all);
    const RealVector& s = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * std::max(1.0, s(0))) ++rank;
    return rank;
}

std::optional<TwoValuedDecomposition> two_valued_decomposition(const Idempotent& e, std::size_t v,
                                                               double tol)
{
    if (static_cast<std::size_t>(e.matrix.rows()) != v || e.matrix.rows() != e.matrix.cols())
        throw PreconditionError("idempotent is not " + std::to_string(v) + " x " + std::to_string(v));
    const double rowsum = e.matrix.rowwise().sum().cwiseAbs().maxCoeff();
    if (rowsum > tol * std::max(1.0, std::sqrt(static_cast<double>(v))))
        throw PreconditionError("idempotent row sums do not vanish (EJ != 0)");

    const auto classes = entry_classes(e.matrix, tol);
    if (classes.values.size() != 2) return std::nullopt;

    const double vd = static_cast<double>(v);
    const std::size_t m = e.rank;
    TwoValuedDecomposition out;
    out.theta1 = classes.values[0];
    out.theta0 = classes.values[1];
    out.rank = m;
    if (std::abs(out.theta0 - static_cast<double>(m) / vd) > tol ||
        std::abs(out.theta1 + 1.0 / vd) > tol)
        throw StructuralViolation("two-valued idempotent has entries " + std::to_string(out.theta0) +
                                  ", " + std::to_string(out.theta1) + " instead of m/v, -1/v");

    const auto n = static_cast<Eigen::Index>(v);
    out.K = IntMatrix::Zero(n, n);
    const RealMatrix scaled = (vd * e.matrix + RealMatrix::Ones(n, n)) / static_cast<double>(m + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double r = std::round(scaled(i, j));
            if ((r != 0.0 && r != 1.0) || std::abs(scaled(i, j) - r) > tol * vd)
                throw StructuralViolation("(vE + J)/(m + 1) does not round to a 01 matrix");
            out.K(i, j) = static_cast<std::int64_t>(r);
        }
    }

    // Equivalence relation: reflexive, and rows of related vertices coincide
    // (which gives symmetry and transitivity together).
    std::vector<int> class_of(v, -1);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (out.K(i, i) != 1) throw StructuralViolation("K is not reflexive");
        if (class_of[static_cast<std::size_t>(i)] >= 0) continue;
        const int label = static_cast<int>(out.classes.size());
        out.classes.emplace_back();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (out.K(i, j) == 0) continue;
            if (out.K.row(j) != out.K.row(i) || class_of[static_cast<std::size_t>(j)] >= 0)
                throw StructuralViolation("K is not an equivalence relation");
            class_of[static_cast<std::size_t>(j)] = label;
            out.classes.back().push_back(static_cast<Vertex>(j));
        }
    }
    if (out.classes.size() != m + 1)
        throw StructuralViolation("K has " + std::to_string(out.classes.size()) +
                                  " classes, expected m + 1 = " + std::to_string(m + 1));
    for (const auto& c : out.classes)
        if (c.size() * (m + 1) != v) throw StructuralViolation("K classes have unequal sizes");
    return out;
}

namespace {

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out)
{
    return !__builtin_mul_overflow(a, b, &out);
}

} // namespace

RationalValidation rational_validation(const Graph& g, const Spectrum& spec,
                                       std::size_t class_index, const Idempotent& e)
{
    RationalValidation out;
    if (!spec.all_integral() || class_index >= spec.classes.size()) return out;
    const std::int64_t lambda = *spec.classes[class_index].integer_value;
    const auto n = static_cast<Eigen::Index>(g.order());
    IntMatrix numerator = int_identity(n);
    std::int64_t denominator = 1;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        if (c == class_index) continue;
        const std::int64_t mu = *spec.classes[c].integer_value;
        if (!checked_mul(denominator, lambda - mu, denominator)) return out;
        const IntMatrix factor = g.adjacency() - mu * int_identity(n);
        IntMatrix next = IntMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                std::int64_t acc = 0;
                for (Eigen::Index t = 0; t < n; ++t) {
                    std::int64_t term = 0;
                    if (!checked_mul(numerator(i, t), factor(t, j), term)) return out;
                    if (__builtin_add_overflow(acc, term, &acc)) return out;
                }
                next(i, j) = acc;
            }
        }
        numerator = std::move(next);
    }
    out.applicable = true;
    out.denominator = denominator;
    const RealMatrix exact = numerator.cast<double>() / static_cast<double>(denominator);
    out.valid = max_abs(exact - e.matrix) <= spec.tolerance;
    out.numerator = std::move(numerator);
    return out;
}

} // namespace indub
