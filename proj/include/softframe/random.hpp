#pragma once

#include "softframe/operators.hpp"

#include <cstdint>
#include <random>

namespace softframe {

/// Deterministic Gaussian source. Uses an explicit Box-Muller transform so a
/// seed pins the sampled values independent of the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();

    /// Standard real normal.
    double gaussian();

    /// Circular complex normal with unit variance, E|z|^2 = 1.
    Complex complex_gaussian();

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Entrywise unit-variance complex Gaussian soft vector.
SoftVector random_soft_vector(Rng& rng, const ParameterSet& params, Eigen::Index dim);

/// Entrywise unit-variance complex Gaussian soft operator.
SoftOperator random_soft_operator(Rng& rng, const ParameterSet& params, Eigen::Index rows,
                                  Eigen::Index cols);

}  // namespace softframe
