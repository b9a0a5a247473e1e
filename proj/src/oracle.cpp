#include "indub/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <Eigen/Dense>

#include "indub/errors.hpp"

namespace indub {
namespace {

using Mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                         boost::multiprecision::et_off>;

} // namespace
} // namespace indub

namespace Eigen {
template <>
struct NumTraits<indub::Mp> : GenericNumTraits<indub::Mp> {
    using Real = indub::Mp;
    using NonInteger = indub::Mp;
    using Nested = indub::Mp;
    using Literal = indub::Mp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 30,
        MulCost = 50,
    };
    static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
    static Real dummy_precision() { return epsilon() * 1000; }
    static Real highest() { return std::numeric_limits<Real>::max(); }
    static Real lowest() { return -std::numeric_limits<Real>::max(); }
    static Real infinity() { return std::numeric_limits<Real>::infinity(); }
    static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
    static int digits10() { return static_cast<int>(Real::default_precision()); }
};
} // namespace Eigen

namespace indub {
namespace {

using MpMatrix = Eigen::Matrix<Mp, Eigen::Dynamic, Eigen::Dynamic>;

mpfr_ptr raw(Mp& x) { return x.backend().data(); }
mpfr_srcptr raw(const Mp& x) { return x.backend().data(); }

Mp dot(const std::vector<Mp>& a, const std::vector<Mp>& b)
{
    Mp acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) mpfr_fma(raw(acc), raw(a[i]), raw(b[i]), raw(acc), MPFR_RNDN);
    return acc;
}

// y -= c x
void subtract_multiple(std::vector<Mp>& y, const Mp& c, const std::vector<Mp>& x)
{
    const Mp minus_c = -c;
    for (std::size_t i = 0; i < y.size(); ++i) mpfr_fma(raw(y[i]), raw(minus_c), raw(x[i]), raw(y[i]), MPFR_RNDN);
}

Mp norm(const std::vector<Mp>& x) { return sqrt(dot(x, x)); }

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits) : saved_(Mp::default_precision()) { Mp::default_precision(digits); }
    ~PrecisionScope() { Mp::default_precision(saved_); }

private:
    unsigned saved_;
};

std::size_t krylov_dimension(const MpMatrix& u, std::size_t max_power, unsigned digits)
{
    const auto n = u.rows();
    const MpMatrix e = u * u.transpose();

    // Upper triangle of the symmetrised E, off-diagonal rows weighted by
    // sqrt 2 so the inner product is that of vec E.
    std::vector<Mp> entries, start;
    const Mp root2 = sqrt(Mp(2));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            entries.push_back(i == j ? e(i, i) : Mp((e(i, j) + e(j, i)) / 2));
            start.push_back(i == j ? Mp(1) : root2);
        }
    }
    Mp scale(1);
    for (const auto& x : entries) scale = std::max(scale, Mp(abs(x)));
    const Mp stop = scale * pow(Mp(10), -static_cast<int>(digits / 2));

    // Full reorthogonalisation: a bare three-term recurrence produces ghost
    // directions once well separated entries converge.
    std::vector<std::vector<Mp>> basis;
    {
        const Mp len = norm(start);
        for (auto& x : start) x /= len;
        basis.push_back(std::move(start));
    }
    for (std::size_t p = 0; p < max_power; ++p) {
        std::vector<Mp> w(entries.size());
        const auto& last = basis.back();
        for (std::size_t i = 0; i < w.size(); ++i) mpfr_mul(raw(w[i]), raw(entries[i]), raw(last[i]), MPFR_RNDN);
        for (const auto& b : basis) subtract_multiple(w, dot(b, w), b);
        const Mp len = norm(w);
        if (len <= stop) break;
        for (auto& x : w) x /= len;
        basis.push_back(std::move(w));
    }
    return basis.size();
}

} // namespace

std::vector<std::size_t> hadamard_span_oracle_mp(const Graph& g, const Spectrum& spec, std::size_t max_power,
                                                 unsigned digits)
{
    if (digits < 30) throw PreconditionError("at least 30 digits required");
    const PrecisionScope scope(digits);
    const auto n = static_cast<Eigen::Index>(g.order());

    const MpMatrix a = g.adjacency().cast<Mp>();
    const Eigen::SelfAdjointEigenSolver<MpMatrix> solver(a);
    if (solver.info() != Eigen::Success) throw ConsistencyError("extended-precision eigensolver failed");

    // Classes are descending, the solver's eigenvalues ascending.
    std::vector<std::size_t> out;
    Eigen::Index end = n;
    for (const auto& cls : spec.classes) {
        const auto m = static_cast<Eigen::Index>(cls.multiplicity);
        const Eigen::Index begin = end - m;
        if (begin < 0) throw ConsistencyError("extended-precision spectrum disagrees with the eigenvalue classes");
        for (Eigen::Index i = begin; i < end; ++i)
            if (std::abs(static_cast<double>(solver.eigenvalues()(i)) - cls.value) > spec.threshold)
                throw ConsistencyError("extended-precision spectrum disagrees with the eigenvalue classes");
        out.push_back(krylov_dimension(solver.eigenvectors().middleCols(begin, m), max_power, digits));
        end = begin;
    }
    return out;
}

} // namespace indub
