#pragma once

#include "softframe/soft_core.hpp"

namespace softframe {

/// A soft linear operator: one m-by-n complex matrix per parameter label.
class SoftOperator {
public:
    SoftOperator(ParameterSet params, Eigen::Index rows, Eigen::Index cols,
                 std::vector<Eigen::MatrixXcd> values);

    static SoftOperator identity(const ParameterSet& params, Eigen::Index n);
    static SoftOperator zero(const ParameterSet& params, Eigen::Index rows, Eigen::Index cols);
    /// Same matrix at every label.
    static SoftOperator constant(const ParameterSet& params, const Eigen::MatrixXcd& value);

    const ParameterSet& params() const { return params_; }
    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    const Eigen::MatrixXcd& at(std::size_t i) const { return values_[i]; }
    const std::vector<Eigen::MatrixXcd>& values() const { return values_; }

private:
    ParameterSet params_;
    Eigen::Index rows_;
    Eigen::Index cols_;
    std::vector<Eigen::MatrixXcd> values_;
};

/// Per-parameter spectral extremes of a Hermitian operator. condition is
/// max_eig/min_eig when min_eig > 0 and +infinity otherwise.
struct SpectralBoundsReport {
    SoftReal min_eig;
    SoftReal max_eig;
    SoftReal condition;
};

/// Pointwise action, result(lambda) = op(lambda) * x(lambda).
SoftVector apply(const SoftOperator& op, const SoftVector& x);

/// Pointwise conjugate transpose.
SoftOperator adjoint(const SoftOperator& op);

/// Pointwise product a(lambda) * b(lambda).
SoftOperator compose(const SoftOperator& a, const SoftOperator& b);

SoftOperator add(const SoftOperator& a, const SoftOperator& b);
SoftOperator subtract(const SoftOperator& a, const SoftOperator& b);
SoftOperator scale(const SoftComplex& alpha, const SoftOperator& op);
SoftOperator scale(Complex alpha, const SoftOperator& op);

SoftOperator operator+(const SoftOperator& a, const SoftOperator& b);
SoftOperator operator-(const SoftOperator& a, const SoftOperator& b);
SoftOperator operator*(const SoftOperator& a, const SoftOperator& b);

/// Extreme eigenvalues per label. The input must be Hermitian to within
/// hermitian_tol on the max-abs entry of op - op*; it is symmetrized before
/// the eigendecomposition.
SpectralBoundsReport hermitian_eig_extremes(const SoftOperator& op, double hermitian_tol = 1e-10);

/// Solves op(lambda) x(lambda) = rhs(lambda) for a Hermitian positive
/// definite operator. Throws NotPositiveDefiniteError naming the offending
/// label when min eigenvalue <= pd_eps * max eigenvalue.
SoftVector solve_hpd(const SoftOperator& op, const SoftVector& rhs, double pd_eps = 1e-12);

/// Dense inverse of a Hermitian positive definite operator.
SoftOperator invert_hpd(const SoftOperator& op, double pd_eps = 1e-12);

/// Largest singular value per label.
SoftReal operator_norm_upper(const SoftOperator& op);

}  // namespace softframe
