#include "softframe/gframe.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace softframe {

SoftGFrame::SoftGFrame(ParameterSet params, Eigen::Index ambient_dim,
                       std::vector<SoftOperator> blocks)
    : params_(std::move(params)), ambient_dim_(ambient_dim), blocks_(std::move(blocks)) {
    if (ambient_dim_ <= 0) {
        throw ShapeError("SoftGFrame: ambient dimension must be positive");
    }
    if (blocks_.empty()) {
        throw ShapeError("SoftGFrame: at least one block operator required");
    }
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        require_same_params(params_, blocks_[j].params(), "SoftGFrame");
        if (blocks_[j].cols() != ambient_dim_) {
            throw ShapeError("SoftGFrame: block " + std::to_string(j) + " has " +
                             std::to_string(blocks_[j].cols()) + " columns, expected " +
                             std::to_string(ambient_dim_));
        }
    }
}

std::vector<Eigen::Index> SoftGFrame::block_dims() const {
    std::vector<Eigen::Index> dims;
    dims.reserve(blocks_.size());
    for (const auto& b : blocks_) dims.push_back(b.rows());
    return dims;
}

DirectSumSoftVector analysis(const SoftGFrame& frame, const SoftVector& f) {
    require_same_params(frame.params(), f.params(), "analysis");
    if (f.dim() != frame.ambient_dim()) {
        throw ShapeError("analysis: vector dimension " + std::to_string(f.dim()) +
                         " does not match ambient dimension " + std::to_string(frame.ambient_dim()));
    }
    const std::size_t p = frame.params().size();
    std::vector<std::vector<Eigen::VectorXcd>> values(p);
    for (std::size_t i = 0; i < p; ++i) {
        values[i].reserve(frame.block_count());
        for (std::size_t j = 0; j < frame.block_count(); ++j) {
            values[i].push_back(frame.block(j).at(i) * f.at(i));
        }
    }
    return DirectSumSoftVector(frame.params(), frame.block_dims(), std::move(values));
}

SoftVector synthesis(const SoftGFrame& frame, const DirectSumSoftVector& g) {
    require_same_params(frame.params(), g.params(), "synthesis");
    if (g.block_dims() != frame.block_dims()) {
        throw ShapeError("synthesis: block dimensions do not match the frame");
    }
    const std::size_t p = frame.params().size();
    std::vector<Eigen::VectorXcd> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(frame.ambient_dim());
        for (std::size_t j = 0; j < frame.block_count(); ++j) {
            sum += frame.block(j).at(i).adjoint() * g.block(i, j);
        }
        out[i] = std::move(sum);
    }
    return SoftVector(frame.params(), frame.ambient_dim(), std::move(out));
}

SoftOperator frame_operator(const SoftGFrame& frame) {
    const std::size_t p = frame.params().size();
    const Eigen::Index n = frame.ambient_dim();
    std::vector<Eigen::MatrixXcd> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
        for (std::size_t j = 0; j < frame.block_count(); ++j) {
            const Eigen::MatrixXcd& block = frame.block(j).at(i);
            sum += block.adjoint() * block;
        }
        out[i] = std::move(sum);
    }
    return SoftOperator(frame.params(), n, n, std::move(out));
}

FrameBoundsCertificate frame_bounds(const SoftGFrame& frame, double tol) {
    if (!(tol > 0.0)) {
        throw ShapeError("frame_bounds: tolerance must be positive");
    }
    const SpectralBoundsReport spectrum = hermitian_eig_extremes(frame_operator(frame));
    bool is_frame = true;
    bool close = true;
    for (std::size_t i = 0; i < frame.params().size(); ++i) {
        const double lo = spectrum.min_eig.at(i);
        const double hi = spectrum.max_eig.at(i);
        if (!(lo > tol * hi)) is_frame = false;
        if (!(std::abs(hi - lo) <= tol * hi)) close = false;
    }
    return FrameBoundsCertificate{spectrum.min_eig, spectrum.max_eig, is_frame,
                                  is_frame && close};
}

std::vector<bool> is_exact(const SoftGFrame& frame, double tol) {
    const FrameBoundsCertificate cert = frame_bounds(frame, tol);
    if (!cert.is_frame) {
        throw NotAFrameError("is_exact: input is not a frame at the given tolerance");
    }
    const std::size_t p = frame.params().size();
    const Eigen::Index n = frame.ambient_dim();
    std::vector<bool> removal_destroys(frame.block_count(), false);
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        // Assemble the leave-one-out frame operator in increasing block order.
        for (std::size_t i = 0; i < p; ++i) {
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
            for (std::size_t k = 0; k < frame.block_count(); ++k) {
                if (k == j) continue;
                const Eigen::MatrixXcd& block = frame.block(k).at(i);
                sum += block.adjoint() * block;
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
                Eigen::MatrixXcd(0.5 * (sum + sum.adjoint())), Eigen::EigenvaluesOnly);
            const double lo = solver.eigenvalues()(0);
            const double hi = solver.eigenvalues()(n - 1);
            if (!(lo > tol * hi)) {
                removal_destroys[j] = true;
                break;
            }
        }
    }
    return removal_destroys;
}

SoftGFrame induced_from_vectors(const std::vector<SoftVector>& vectors) {
    if (vectors.empty()) {
        throw ShapeError("induced_from_vectors: at least one vector required");
    }
    const ParameterSet& params = vectors.front().params();
    const Eigen::Index n = vectors.front().dim();
    std::vector<SoftOperator> blocks;
    blocks.reserve(vectors.size());
    for (const auto& v : vectors) {
        require_same_params(params, v.params(), "induced_from_vectors");
        if (v.dim() != n) {
            throw ShapeError("induced_from_vectors: vectors have mixed dimensions");
        }
        std::vector<Eigen::MatrixXcd> rows(params.size());
        for (std::size_t i = 0; i < params.size(); ++i) {
            rows[i] = v.at(i).adjoint();
        }
        blocks.emplace_back(params, 1, n, std::move(rows));
    }
    return SoftGFrame(params, n, std::move(blocks));
}

SoftReal frame_energy(const SoftGFrame& frame, const SoftVector& f) {
    require_same_params(frame.params(), f.params(), "frame_energy");
    if (f.dim() != frame.ambient_dim()) {
        throw ShapeError("frame_energy: vector dimension does not match ambient dimension");
    }
    const std::size_t p = frame.params().size();
    std::vector<double> out(p);
    for (std::size_t i = 0; i < p; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < frame.block_count(); ++j) {
            sum += (frame.block(j).at(i) * f.at(i)).squaredNorm();
        }
        out[i] = sum;
    }
    return SoftReal(frame.params(), std::move(out));
}

}  // namespace softframe
