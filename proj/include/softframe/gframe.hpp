#pragma once

#include "softframe/operators.hpp"

namespace softframe {

/// A soft g-frame: a finite family of soft operators from a common ambient
/// space into per-index block spaces, all over the same parameter set.
class SoftGFrame {
public:
    SoftGFrame(ParameterSet params, Eigen::Index ambient_dim, std::vector<SoftOperator> blocks);

    const ParameterSet& params() const { return params_; }
    Eigen::Index ambient_dim() const { return ambient_dim_; }
    std::size_t block_count() const { return blocks_.size(); }
    const SoftOperator& block(std::size_t j) const { return blocks_[j]; }
    const std::vector<SoftOperator>& blocks() const { return blocks_; }

    std::vector<Eigen::Index> block_dims() const;

private:
    ParameterSet params_;
    Eigen::Index ambient_dim_;
    std::vector<SoftOperator> blocks_;
};

/// Optimal soft frame bounds: the per-parameter extreme eigenvalues of the
/// frame operator, with the frame and tightness predicates evaluated at a
/// given tolerance.
struct FrameBoundsCertificate {
    SoftReal lower;
    SoftReal upper;
    bool is_frame;
    bool is_tight;
};

/// Analysis: block j at lambda is block_j(lambda) * f(lambda).
DirectSumSoftVector analysis(const SoftGFrame& frame, const SoftVector& f);

/// Synthesis: sum over j (in increasing order) of block_j(lambda)* g_j(lambda).
SoftVector synthesis(const SoftGFrame& frame, const DirectSumSoftVector& g);

/// The frame operator, sum over j of block_j* block_j, Hermitian PSD per label.
SoftOperator frame_operator(const SoftGFrame& frame);

/// Certificate with lower/upper the extreme eigenvalues of the frame operator.
/// is_frame iff lower(lambda) > tol * upper(lambda) at every label.
FrameBoundsCertificate frame_bounds(const SoftGFrame& frame, double tol = 1e-10);

/// Leave-one-out exactness test: entry j is true iff removing block j
/// destroys the frame property at some label. Requires a frame at tol.
std::vector<bool> is_exact(const SoftGFrame& frame, double tol = 1e-10);

/// The induced g-frame of a vector family: block j is the rank-one operator
/// f -> <f, v_j>, i.e. the 1-by-n matrix v_j(lambda)*.
SoftGFrame induced_from_vectors(const std::vector<SoftVector>& vectors);

/// Sum over j of the squared block norms of the analysis of f.
SoftReal frame_energy(const SoftGFrame& frame, const SoftVector& f);

}  // namespace softframe
