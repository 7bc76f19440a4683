#include "softframe/dual.hpp"

#include "softframe/random.hpp"

#include <string>

namespace softframe {

DualPair canonical_dual(const SoftGFrame& frame, double tol) {
    const FrameBoundsCertificate cert = frame_bounds(frame, tol);
    if (!cert.is_frame) {
        throw NotAFrameError("canonical_dual: input is not a frame at the given tolerance");
    }
    const SoftOperator s_inverse = invert_hpd(frame_operator(frame));
    std::vector<SoftOperator> dual_blocks;
    dual_blocks.reserve(frame.block_count());
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        dual_blocks.push_back(compose(frame.block(j), s_inverse));
    }
    return DualPair{frame, SoftGFrame(frame.params(), frame.ambient_dim(), std::move(dual_blocks)),
                    s_inverse};
}

SoftVector reconstruct(const DualPair& pair, const SoftVector& f, ReconstructionOrder order) {
    require_same_params(pair.frame.params(), f.params(), "reconstruct");
    if (f.dim() != pair.frame.ambient_dim()) {
        throw ShapeError("reconstruct: vector dimension does not match ambient dimension");
    }
    const std::size_t p = f.params().size();
    std::vector<Eigen::VectorXcd> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(f.dim());
        if (order == ReconstructionOrder::dual_inside) {
            const Eigen::VectorXcd precond = pair.s_inverse.at(i) * f.at(i);
            for (std::size_t j = 0; j < pair.frame.block_count(); ++j) {
                const Eigen::MatrixXcd& block = pair.frame.block(j).at(i);
                sum += block.adjoint() * (block * precond);
            }
        } else {
            for (std::size_t j = 0; j < pair.frame.block_count(); ++j) {
                const Eigen::MatrixXcd& block = pair.frame.block(j).at(i);
                sum += pair.s_inverse.at(i) * (block.adjoint() * (block * f.at(i)));
            }
        }
        out[i] = std::move(sum);
    }
    return SoftVector(f.params(), f.dim(), std::move(out));
}

SoftVector atomic_resolution(const DualPair& pair, const SoftOperator& op, const SoftVector& f,
                             ResolutionSide side) {
    require_same_params(pair.frame.params(), op.params(), "atomic_resolution");
    const Eigen::Index n = pair.frame.ambient_dim();
    if (op.rows() != n || op.cols() != n) {
        throw ShapeError("atomic_resolution: operator must be square on the ambient space");
    }
    const SoftVector transformed = apply(op, f);
    const std::size_t p = f.params().size();
    std::vector<Eigen::VectorXcd> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(n);
        for (std::size_t j = 0; j < pair.frame.block_count(); ++j) {
            const Eigen::MatrixXcd& frame_block = pair.frame.block(j).at(i);
            const Eigen::MatrixXcd& dual_block = pair.dual.block(j).at(i);
            if (side == ResolutionSide::dual_first) {
                sum += frame_block.adjoint() * (dual_block * transformed.at(i));
            } else {
                sum += dual_block.adjoint() * (frame_block * transformed.at(i));
            }
        }
        out[i] = std::move(sum);
    }
    return SoftVector(f.params(), n, std::move(out));
}

bool dual_pair_check(const SoftGFrame& frame, const SoftGFrame& candidate, int trials, double tol,
                     std::uint64_t seed) {
    require_same_params(frame.params(), candidate.params(), "dual_pair_check");
    if (candidate.ambient_dim() != frame.ambient_dim() ||
        candidate.block_dims() != frame.block_dims()) {
        throw ShapeError("dual_pair_check: frames have mismatched shapes");
    }
    if (trials < 1) {
        throw ShapeError("dual_pair_check: trials must be at least 1");
    }
    Rng rng(seed);
    const std::size_t p = frame.params().size();
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, frame.params(), frame.ambient_dim());
        const SoftVector via_frame = synthesis(frame, analysis(candidate, f));
        const SoftVector via_candidate = synthesis(candidate, analysis(frame, f));
        for (std::size_t i = 0; i < p; ++i) {
            const double scale = 1.0 + f.at(i).norm();
            if ((via_frame.at(i) - f.at(i)).norm() > tol * scale) return false;
            if ((via_candidate.at(i) - f.at(i)).norm() > tol * scale) return false;
        }
    }
    return true;
}

}  // namespace softframe
