#pragma once

#include "softframe/compose.hpp"
#include "softframe/random.hpp"

#include <initializer_list>
#include <vector>

namespace helpers {

using namespace softframe;

inline ParameterSet params_pq() { return ParameterSet({"p", "q"}); }
inline ParameterSet params_p() { return ParameterSet({"p"}); }

inline Eigen::VectorXcd vec(std::initializer_list<Complex> entries) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& e : entries) out(i++) = e;
    return out;
}

inline Eigen::VectorXcd unit(Eigen::Index dim, Eigen::Index k) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    out(k) = 1.0;
    return out;
}

/// The worked three-vector example: {e1, e1, e2} in dimension 2, constant
/// across the given parameter set.
inline SoftGFrame worked_example(const ParameterSet& params) {
    const std::vector<SoftVector> vectors = {
        SoftVector::constant(params, unit(2, 0)),
        SoftVector::constant(params, unit(2, 0)),
        SoftVector::constant(params, unit(2, 1)),
    };
    return induced_from_vectors(vectors);
}

inline SoftGFrame identity_frame(const ParameterSet& params, Eigen::Index dim) {
    return SoftGFrame(params, dim, {SoftOperator::identity(params, dim)});
}

}  // namespace helpers
