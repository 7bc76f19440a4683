#pragma once

#include "softframe/dual.hpp"

namespace softframe {

/// One local vector frame per block space of a g-frame, together with the
/// per-family optimal bounds and an envelope enclosing all of them. Used to
/// turn a g-frame into an ordinary vector frame on the ambient space.
class LocalFrameFamily {
public:
    /// Builds the family, computing each local frame's optimal bounds and the
    /// tightest envelope. Throws NotAFrameError if some family fails the
    /// frame predicate for its block space at tol.
    static LocalFrameFamily from_vectors(std::vector<std::vector<SoftVector>> families,
                                         double tol = 1e-10);

    const ParameterSet& params() const { return params_; }
    std::size_t family_count() const { return families_.size(); }
    const std::vector<SoftVector>& family(std::size_t j) const { return families_[j]; }
    Eigen::Index family_dim(std::size_t j) const { return families_[j].front().dim(); }

    const SoftReal& lower_bound(std::size_t j) const { return lower_[j]; }
    const SoftReal& upper_bound(std::size_t j) const { return upper_[j]; }
    bool family_tight(std::size_t j) const { return tight_[j]; }

    const SoftReal& envelope_lower() const { return envelope_lower_; }
    const SoftReal& envelope_upper() const { return envelope_upper_; }

    /// Copy with an explicitly supplied envelope in place of the computed one.
    LocalFrameFamily with_envelope(SoftReal lower, SoftReal upper) const;

private:
    LocalFrameFamily(ParameterSet params, std::vector<std::vector<SoftVector>> families,
                     std::vector<SoftReal> lower, std::vector<SoftReal> upper,
                     std::vector<bool> tight, SoftReal envelope_lower, SoftReal envelope_upper);

    ParameterSet params_;
    std::vector<std::vector<SoftVector>> families_;
    std::vector<SoftReal> lower_;
    std::vector<SoftReal> upper_;
    std::vector<bool> tight_;
    SoftReal envelope_lower_;
    SoftReal envelope_upper_;
};

/// The composed vector family {block_j* applied to f_jk}, flattened in
/// (j ascending, k ascending) order. Throws PreconditionError when the
/// envelope does not enclose every family's bounds.
std::vector<SoftVector> compose_frame(const SoftGFrame& frame, const LocalFrameFamily& locals);

/// Randomized check that the two composed families built from a dual g-frame
/// pair and per-block dual local frames resynthesize random vectors, in both
/// coefficient orders, within tol.
bool composed_dual_pair(const SoftGFrame& frame, const SoftGFrame& partner,
                        const LocalFrameFamily& locals, const LocalFrameFamily& partner_locals,
                        int trials, double tol, std::uint64_t seed = 42);

/// For tight local frames sharing one soft bound: returns the canonical dual
/// of the composed family, verifying that the composed frame operator is the
/// common bound times the g-frame operator and that the dual vectors factor
/// through the canonical dual g-frame applied to the rescaled locals.
std::vector<SoftVector> tight_local_canonical_dual(const SoftGFrame& frame,
                                                   const LocalFrameFamily& locals,
                                                   double tol = 1e-10);

}  // namespace softframe
