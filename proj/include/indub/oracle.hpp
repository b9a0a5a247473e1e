#pragma once

#include <cstddef>
#include <vector>

#include "indub/graph.hpp"
#include "indub/spectral.hpp"

namespace indub {

inline constexpr unsigned kOracleDigits = 200;

/// The span oracle evaluated in extended precision, for every eigenvalue
/// class of `spec` in order. Each idempotent is recomputed from an MPFR eigendecomposition with `digits`
/// significant digits, and the dimension of span{J, E, E o E, ...,
/// E^(o max_power)} is the dimension of the Krylov space of diag(vec E)
/// from vec J, stopping at a residual below 10^(-digits/2).
std::vector<std::size_t> hadamard_span_oracle_mp(const Graph& g, const Spectrum& spec, std::size_t max_power,
                                                 unsigned digits = kOracleDigits);

} // namespace indub
