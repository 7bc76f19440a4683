#pragma once

#include "softframe/gframe.hpp"

#include <cstdint>

namespace softframe {

/// A frame together with its canonical dual and the materialized inverse of
/// its frame operator. dual block j equals compose(frame block j, s_inverse).
struct DualPair {
    SoftGFrame frame;
    SoftGFrame dual;
    SoftOperator s_inverse;
};

/// Summation order of the reconstruction formula: the dual frame operator
/// applied before the blocks (dual_inside) or after them (dual_outside).
enum class ReconstructionOrder { dual_inside, dual_outside };

/// Which member of the dual pair carries the coefficients in an atomic
/// resolution of an operator.
enum class ResolutionSide { dual_first, frame_first };

/// Inverts the frame operator and forms the canonical dual g-frame.
/// Throws NotAFrameError when the input fails the frame predicate at tol.
DualPair canonical_dual(const SoftGFrame& frame, double tol = 1e-10);

/// Reconstructs f through the canonical dual pair. Both orders return f up
/// to conditioning-scaled rounding.
SoftVector reconstruct(const DualPair& pair, const SoftVector& f, ReconstructionOrder order);

/// Atomic resolution of a bounded operator through the dual pair: both sides
/// reproduce op(f).
SoftVector atomic_resolution(const DualPair& pair, const SoftOperator& op, const SoftVector& f,
                             ResolutionSide side);

/// Randomized check that (frame, candidate) satisfy both mutual
/// reconstruction identities on `trials` probes within tol.
bool dual_pair_check(const SoftGFrame& frame, const SoftGFrame& candidate, int trials, double tol,
                     std::uint64_t seed = 42);

}  // namespace softframe
