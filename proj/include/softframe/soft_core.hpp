#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace softframe {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class SoftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or incompatible data handed to an operation.
class InputError : public SoftError {
public:
    using SoftError::SoftError;
};

/// Well-formed data that fails a mathematical property the operation requires.
class MathError : public SoftError {
public:
    using SoftError::SoftError;
};

class ParameterMismatchError : public InputError {
public:
    using InputError::InputError;
};

class ShapeError : public InputError {
public:
    using InputError::InputError;
};

class NotHermitianError : public MathError {
public:
    using MathError::MathError;
};

class NotPositiveDefiniteError : public MathError {
public:
    NotPositiveDefiniteError(const std::string& what, std::string label)
        : MathError(what), label_(std::move(label)) {}

    /// Parameter label at which positive definiteness fails.
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class NotAFrameError : public MathError {
public:
    using MathError::MathError;
};

class PreconditionError : public MathError {
public:
    using MathError::MathError;
};

/// An identity the operation promises to verify did not hold numerically.
class VerificationError : public MathError {
public:
    using MathError::MathError;
};

// ---------------------------------------------------------------------------
// ParameterSet
// ---------------------------------------------------------------------------

/// The finite ordered set of parameter labels underlying every soft object.
/// Immutable; copies share storage. Equality is structural (same labels in
/// the same order), so independently parsed sets are compatible.
class ParameterSet {
public:
    explicit ParameterSet(std::vector<std::string> labels);

    std::size_t size() const { return data_->labels.size(); }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    const std::vector<std::string>& labels() const { return data_->labels; }

    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const ParameterSet& other) const;
    bool operator!=(const ParameterSet& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Throws ParameterMismatchError unless a and b are the same set.
void require_same_params(const ParameterSet& a, const ParameterSet& b, const char* where);

// ---------------------------------------------------------------------------
// Soft scalars
// ---------------------------------------------------------------------------

/// A real-valued function on the parameter set, ordered pointwise.
class SoftReal {
public:
    SoftReal(ParameterSet params, std::vector<double> values);

    static SoftReal constant(const ParameterSet& params, double value);

    const ParameterSet& params() const { return params_; }
    std::size_t size() const { return values_.size(); }
    double at(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    SoftReal map(double (*fn)(double)) const;

private:
    ParameterSet params_;
    std::vector<double> values_;
};

SoftReal operator+(const SoftReal& a, const SoftReal& b);
SoftReal operator-(const SoftReal& a, const SoftReal& b);
SoftReal operator*(const SoftReal& a, const SoftReal& b);
SoftReal operator/(const SoftReal& a, const SoftReal& b);
SoftReal operator*(double s, const SoftReal& a);

SoftReal soft_sqrt(const SoftReal& a);
SoftReal soft_reciprocal(const SoftReal& a);
SoftReal soft_min(const SoftReal& a, const SoftReal& b);
SoftReal soft_max(const SoftReal& a, const SoftReal& b);

/// Pointwise for-all comparisons. The order is partial: incomparable pairs
/// return false in both directions.
bool soft_le(const SoftReal& a, const SoftReal& b);
bool soft_lt(const SoftReal& a, const SoftReal& b);
bool soft_ge(const SoftReal& a, const SoftReal& b);
bool soft_gt(const SoftReal& a, const SoftReal& b);

/// A complex-valued function on the parameter set.
class SoftComplex {
public:
    SoftComplex(ParameterSet params, std::vector<Complex> values);

    static SoftComplex constant(const ParameterSet& params, Complex value);

    const ParameterSet& params() const { return params_; }
    std::size_t size() const { return values_.size(); }
    Complex at(std::size_t i) const { return values_[i]; }
    const std::vector<Complex>& values() const { return values_; }

    SoftReal abs() const;
    SoftComplex conj() const;

private:
    ParameterSet params_;
    std::vector<Complex> values_;
};

SoftComplex operator+(const SoftComplex& a, const SoftComplex& b);
SoftComplex operator-(const SoftComplex& a, const SoftComplex& b);
SoftComplex operator*(const SoftComplex& a, const SoftComplex& b);

// ---------------------------------------------------------------------------
// Soft vectors
// ---------------------------------------------------------------------------

/// A soft element of a fixed-dimension space: one complex vector per label.
class SoftVector {
public:
    SoftVector(ParameterSet params, Eigen::Index dim, std::vector<Eigen::VectorXcd> values);

    static SoftVector zero(const ParameterSet& params, Eigen::Index dim);
    /// Same vector at every label.
    static SoftVector constant(const ParameterSet& params, const Eigen::VectorXcd& value);

    const ParameterSet& params() const { return params_; }
    Eigen::Index dim() const { return dim_; }
    const Eigen::VectorXcd& at(std::size_t i) const { return values_[i]; }
    const std::vector<Eigen::VectorXcd>& values() const { return values_; }

    bool is_zero(double tol = 0.0) const;

private:
    ParameterSet params_;
    Eigen::Index dim_;
    std::vector<Eigen::VectorXcd> values_;
};

SoftVector operator+(const SoftVector& x, const SoftVector& y);
SoftVector operator-(const SoftVector& x, const SoftVector& y);
SoftVector operator*(Complex s, const SoftVector& x);
SoftVector scale(const SoftComplex& alpha, const SoftVector& x);

/// Pointwise complex inner product, linear in the first slot and
/// conjugate-linear in the second.
SoftComplex soft_inner_product(const SoftVector& x, const SoftVector& y);

/// Pointwise Euclidean norm.
SoftReal soft_norm(const SoftVector& x);

// ---------------------------------------------------------------------------
// Direct sums
// ---------------------------------------------------------------------------

/// A soft element of a direct sum of spaces: per label, one vector per block.
class DirectSumSoftVector {
public:
    DirectSumSoftVector(ParameterSet params,
                        std::vector<Eigen::Index> block_dims,
                        std::vector<std::vector<Eigen::VectorXcd>> values);

    static DirectSumSoftVector zero(const ParameterSet& params,
                                    std::vector<Eigen::Index> block_dims);

    const ParameterSet& params() const { return params_; }
    const std::vector<Eigen::Index>& block_dims() const { return block_dims_; }
    std::size_t block_count() const { return block_dims_.size(); }

    /// Block j at parameter index i.
    const Eigen::VectorXcd& block(std::size_t i, std::size_t j) const { return values_[i][j]; }
    const std::vector<std::vector<Eigen::VectorXcd>>& values() const { return values_; }

    /// The block-j component as a SoftVector.
    SoftVector block_as_vector(std::size_t j) const;

private:
    ParameterSet params_;
    std::vector<Eigen::Index> block_dims_;
    std::vector<std::vector<Eigen::VectorXcd>> values_;
};

DirectSumSoftVector operator+(const DirectSumSoftVector& f, const DirectSumSoftVector& g);
DirectSumSoftVector operator-(const DirectSumSoftVector& f, const DirectSumSoftVector& g);
DirectSumSoftVector operator*(Complex s, const DirectSumSoftVector& f);

/// Pointwise sum over blocks of the blockwise inner products.
SoftComplex direct_sum_inner_product(const DirectSumSoftVector& f, const DirectSumSoftVector& g);

/// Pointwise norm in the direct sum, sqrt(sum of block squared norms).
SoftReal direct_sum_norm(const DirectSumSoftVector& f);

}  // namespace softframe
