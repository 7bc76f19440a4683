#include "softframe/random.hpp"

#include <cmath>
#include <numbers>

namespace softframe {

double Rng::uniform() {
    // 53 random bits mapped into [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
    const double scale = std::numbers::sqrt2 / 2.0;
    const double re = gaussian();
    const double im = gaussian();
    return Complex(scale * re, scale * im);
}

SoftVector random_soft_vector(Rng& rng, const ParameterSet& params, Eigen::Index dim) {
    std::vector<Eigen::VectorXcd> values(params.size());
    for (auto& v : values) {
        v.resize(dim);
        for (Eigen::Index k = 0; k < dim; ++k) v(k) = rng.complex_gaussian();
    }
    return SoftVector(params, dim, std::move(values));
}

SoftOperator random_soft_operator(Rng& rng, const ParameterSet& params, Eigen::Index rows,
                                  Eigen::Index cols) {
    std::vector<Eigen::MatrixXcd> values(params.size());
    for (auto& m : values) {
        m.resize(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.complex_gaussian();
    }
    return SoftOperator(params, rows, cols, std::move(values));
}

}  // namespace softframe
