#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace indub {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Vertex permutation, stored as new position -> old vertex.
using Permutation = std::vector<std::size_t>;

inline IntMatrix int_identity(Eigen::Index n) { return IntMatrix::Identity(n, n); }
inline IntMatrix int_ones(Eigen::Index n) { return IntMatrix::Ones(n, n); }

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
template <typename Derived1, typename Derived2>
auto kron(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b)
{
    using Scalar = typename Derived1::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                             a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Simultaneous row/column permutation: out(i,j) = m(perm[i], perm[j]).
template <typename Derived>
auto permute_symmetric(const Eigen::MatrixBase<Derived>& m, std::span<const std::size_t> perm)
{
    using Scalar = typename Derived::Scalar;
    const auto n = static_cast<Eigen::Index>(perm.size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(i, j) = m(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]),
                          static_cast<Eigen::Index>(perm[static_cast<std::size_t>(j)]));
    return out;
}

/// Largest absolute entry, 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
    if (m.size() == 0) return 0.0;
    return static_cast<double>(m.cwiseAbs().maxCoeff());
}

} // namespace indub
