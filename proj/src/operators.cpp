#include "softframe/operators.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace softframe {

SoftOperator::SoftOperator(ParameterSet params, Eigen::Index rows, Eigen::Index cols,
                           std::vector<Eigen::MatrixXcd> values)
    : params_(std::move(params)), rows_(rows), cols_(cols), values_(std::move(values)) {
    if (rows_ <= 0 || cols_ <= 0) {
        throw ShapeError("SoftOperator: rows and cols must be positive");
    }
    if (values_.size() != params_.size()) {
        throw ShapeError("SoftOperator: one matrix per parameter label required");
    }
    for (const auto& m : values_) {
        if (m.rows() != rows_ || m.cols() != cols_) {
            throw ShapeError("SoftOperator: matrix shape differs from the declared shape");
        }
    }
}

SoftOperator SoftOperator::identity(const ParameterSet& params, Eigen::Index n) {
    return SoftOperator(params, n, n,
                        std::vector<Eigen::MatrixXcd>(params.size(), Eigen::MatrixXcd::Identity(n, n)));
}

SoftOperator SoftOperator::zero(const ParameterSet& params, Eigen::Index rows, Eigen::Index cols) {
    return SoftOperator(params, rows, cols,
                        std::vector<Eigen::MatrixXcd>(params.size(), Eigen::MatrixXcd::Zero(rows, cols)));
}

SoftOperator SoftOperator::constant(const ParameterSet& params, const Eigen::MatrixXcd& value) {
    return SoftOperator(params, value.rows(), value.cols(),
                        std::vector<Eigen::MatrixXcd>(params.size(), value));
}

SoftVector apply(const SoftOperator& op, const SoftVector& x) {
    require_same_params(op.params(), x.params(), "apply");
    if (op.cols() != x.dim()) {
        throw ShapeError("apply: operator has " + std::to_string(op.cols()) +
                         " columns but vector has dimension " + std::to_string(x.dim()));
    }
    std::vector<Eigen::VectorXcd> out(op.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op.at(i) * x.at(i);
    return SoftVector(op.params(), op.rows(), std::move(out));
}

SoftOperator adjoint(const SoftOperator& op) {
    std::vector<Eigen::MatrixXcd> out(op.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op.at(i).adjoint();
    return SoftOperator(op.params(), op.cols(), op.rows(), std::move(out));
}

SoftOperator compose(const SoftOperator& a, const SoftOperator& b) {
    require_same_params(a.params(), b.params(), "compose");
    if (a.cols() != b.rows()) {
        throw ShapeError("compose: inner dimensions do not match (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
    }
    std::vector<Eigen::MatrixXcd> out(a.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) * b.at(i);
    return SoftOperator(a.params(), a.rows(), b.cols(), std::move(out));
}

namespace {

void require_same_shape(const SoftOperator& a, const SoftOperator& b, const char* where) {
    require_same_params(a.params(), b.params(), where);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(where) + ": shape mismatch");
    }
}

}  // namespace

SoftOperator add(const SoftOperator& a, const SoftOperator& b) {
    require_same_shape(a, b, "add");
    std::vector<Eigen::MatrixXcd> out(a.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) + b.at(i);
    return SoftOperator(a.params(), a.rows(), a.cols(), std::move(out));
}

SoftOperator subtract(const SoftOperator& a, const SoftOperator& b) {
    require_same_shape(a, b, "subtract");
    std::vector<Eigen::MatrixXcd> out(a.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) - b.at(i);
    return SoftOperator(a.params(), a.rows(), a.cols(), std::move(out));
}

SoftOperator scale(const SoftComplex& alpha, const SoftOperator& op) {
    require_same_params(alpha.params(), op.params(), "scale(SoftComplex, SoftOperator)");
    std::vector<Eigen::MatrixXcd> out(op.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha.at(i) * op.at(i);
    return SoftOperator(op.params(), op.rows(), op.cols(), std::move(out));
}

SoftOperator scale(Complex alpha, const SoftOperator& op) {
    return scale(SoftComplex::constant(op.params(), alpha), op);
}

SoftOperator operator+(const SoftOperator& a, const SoftOperator& b) { return add(a, b); }
SoftOperator operator-(const SoftOperator& a, const SoftOperator& b) { return subtract(a, b); }
SoftOperator operator*(const SoftOperator& a, const SoftOperator& b) { return compose(a, b); }

namespace {

void require_hermitian(const SoftOperator& op, double tol, const char* where) {
    if (op.rows() != op.cols()) {
        throw ShapeError(std::string(where) + ": operator must be square");
    }
    for (std::size_t i = 0; i < op.params().size(); ++i) {
        const double defect =
            (op.at(i) - op.at(i).adjoint()).cwiseAbs().maxCoeff();
        if (defect > tol) {
            throw NotHermitianError(std::string(where) + ": operator is not Hermitian at parameter '" +
                                    op.params().label(i) + "' (defect " + std::to_string(defect) + ")");
        }
    }
}

}  // namespace

SpectralBoundsReport hermitian_eig_extremes(const SoftOperator& op, double hermitian_tol) {
    require_hermitian(op, hermitian_tol, "hermitian_eig_extremes");
    const std::size_t p = op.params().size();
    std::vector<double> lo(p), hi(p), cond(p);
    for (std::size_t i = 0; i < p; ++i) {
        const Eigen::MatrixXcd sym = 0.5 * (op.at(i) + op.at(i).adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
        lo[i] = solver.eigenvalues()(0);
        hi[i] = solver.eigenvalues()(op.rows() - 1);
        cond[i] = lo[i] > 0.0 ? hi[i] / lo[i] : std::numeric_limits<double>::infinity();
    }
    return SpectralBoundsReport{SoftReal(op.params(), std::move(lo)),
                                SoftReal(op.params(), std::move(hi)),
                                SoftReal(op.params(), std::move(cond))};
}

namespace {

// Cholesky factors per label, after the HPD contract check.
std::vector<Eigen::LLT<Eigen::MatrixXcd>> hpd_factors(const SoftOperator& op, double pd_eps,
                                                      const char* where) {
    require_hermitian(op, 1e-10, where);
    std::vector<Eigen::LLT<Eigen::MatrixXcd>> factors;
    factors.reserve(op.params().size());
    for (std::size_t i = 0; i < op.params().size(); ++i) {
        const Eigen::MatrixXcd sym = 0.5 * (op.at(i) + op.at(i).adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
        const double lo = solver.eigenvalues()(0);
        const double hi = solver.eigenvalues()(op.rows() - 1);
        if (!(lo > pd_eps * hi) || !(lo > 0.0)) {
            throw NotPositiveDefiniteError(
                std::string(where) + ": operator is not positive definite at parameter '" +
                    op.params().label(i) + "' (min eigenvalue " + std::to_string(lo) + ")",
                op.params().label(i));
        }
        factors.emplace_back(sym);
    }
    return factors;
}

// One step of iterative refinement keeps the relative residual near eps.
Eigen::VectorXcd refined_solve(const Eigen::LLT<Eigen::MatrixXcd>& llt, const Eigen::MatrixXcd& a,
                               const Eigen::VectorXcd& b) {
    Eigen::VectorXcd x = llt.solve(b);
    const Eigen::VectorXcd r = b - a * x;
    x += llt.solve(r);
    return x;
}

}  // namespace

SoftVector solve_hpd(const SoftOperator& op, const SoftVector& rhs, double pd_eps) {
    require_same_params(op.params(), rhs.params(), "solve_hpd");
    if (op.cols() != rhs.dim()) {
        throw ShapeError("solve_hpd: operator/vector dimension mismatch");
    }
    auto factors = hpd_factors(op, pd_eps, "solve_hpd");
    std::vector<Eigen::VectorXcd> out(op.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = refined_solve(factors[i], op.at(i), rhs.at(i));
    }
    return SoftVector(op.params(), op.rows(), std::move(out));
}

SoftOperator invert_hpd(const SoftOperator& op, double pd_eps) {
    auto factors = hpd_factors(op, pd_eps, "invert_hpd");
    const Eigen::Index n = op.rows();
    std::vector<Eigen::MatrixXcd> out(op.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Eigen::MatrixXcd inv = factors[i].solve(Eigen::MatrixXcd::Identity(n, n));
        const Eigen::MatrixXcd residual = Eigen::MatrixXcd::Identity(n, n) - op.at(i) * inv;
        inv += factors[i].solve(residual);
        // The inverse of a Hermitian matrix is Hermitian; restore it exactly.
        out[i] = 0.5 * (inv + inv.adjoint());
    }
    return SoftOperator(op.params(), n, n, std::move(out));
}

SoftReal operator_norm_upper(const SoftOperator& op) {
    std::vector<double> out(op.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op.at(i));
        out[i] = svd.singularValues()(0);
    }
    return SoftReal(op.params(), std::move(out));
}

}  // namespace softframe
