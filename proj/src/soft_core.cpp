#include "softframe/soft_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace softframe {

namespace {

std::string shape_msg(const char* where, const std::string& detail) {
    std::ostringstream os;
    os << where << ": " << detail;
    return os.str();
}

}  // namespace

// --- ParameterSet -----------------------------------------------------------

ParameterSet::ParameterSet(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw ShapeError("ParameterSet: parameter set must be non-empty");
    }
    auto data = std::make_shared<Data>();
    data->index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = data->index.emplace(labels[i], i);
        if (!inserted) {
            throw ShapeError(shape_msg("ParameterSet", "duplicate label '" + labels[i] + "'"));
        }
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
}

std::optional<std::size_t> ParameterSet::index_of(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

bool ParameterSet::operator==(const ParameterSet& other) const {
    if (data_ == other.data_) return true;
    return data_->labels == other.data_->labels;
}

void require_same_params(const ParameterSet& a, const ParameterSet& b, const char* where) {
    if (a != b) {
        throw ParameterMismatchError(shape_msg(where, "operands live over different parameter sets"));
    }
}

// --- SoftReal ----------------------------------------------------------------

SoftReal::SoftReal(ParameterSet params, std::vector<double> values)
    : params_(std::move(params)), values_(std::move(values)) {
    if (values_.size() != params_.size()) {
        throw ShapeError(shape_msg("SoftReal", "value count does not match parameter set size"));
    }
}

SoftReal SoftReal::constant(const ParameterSet& params, double value) {
    return SoftReal(params, std::vector<double>(params.size(), value));
}

SoftReal SoftReal::map(double (*fn)(double)) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = fn(values_[i]);
    return SoftReal(params_, std::move(out));
}

namespace {

template <typename Op>
SoftReal zip_real(const SoftReal& a, const SoftReal& b, const char* where, Op op) {
    require_same_params(a.params(), b.params(), where);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a.at(i), b.at(i));
    return SoftReal(a.params(), std::move(out));
}

}  // namespace

SoftReal operator+(const SoftReal& a, const SoftReal& b) {
    return zip_real(a, b, "SoftReal::operator+", [](double x, double y) { return x + y; });
}
SoftReal operator-(const SoftReal& a, const SoftReal& b) {
    return zip_real(a, b, "SoftReal::operator-", [](double x, double y) { return x - y; });
}
SoftReal operator*(const SoftReal& a, const SoftReal& b) {
    return zip_real(a, b, "SoftReal::operator*", [](double x, double y) { return x * y; });
}
SoftReal operator/(const SoftReal& a, const SoftReal& b) {
    return zip_real(a, b, "SoftReal::operator/", [](double x, double y) { return x / y; });
}
SoftReal operator*(double s, const SoftReal& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a.at(i);
    return SoftReal(a.params(), std::move(out));
}

SoftReal soft_sqrt(const SoftReal& a) {
    return a.map([](double x) { return std::sqrt(x); });
}
SoftReal soft_reciprocal(const SoftReal& a) {
    return a.map([](double x) { return 1.0 / x; });
}
SoftReal soft_min(const SoftReal& a, const SoftReal& b) {
    return zip_real(a, b, "soft_min", [](double x, double y) { return std::min(x, y); });
}
SoftReal soft_max(const SoftReal& a, const SoftReal& b) {
    return zip_real(a, b, "soft_max", [](double x, double y) { return std::max(x, y); });
}

namespace {

template <typename Cmp>
bool compare_all(const SoftReal& a, const SoftReal& b, const char* where, Cmp cmp) {
    require_same_params(a.params(), b.params(), where);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!cmp(a.at(i), b.at(i))) return false;
    }
    return true;
}

}  // namespace

bool soft_le(const SoftReal& a, const SoftReal& b) {
    return compare_all(a, b, "soft_le", [](double x, double y) { return x <= y; });
}
bool soft_lt(const SoftReal& a, const SoftReal& b) {
    return compare_all(a, b, "soft_lt", [](double x, double y) { return x < y; });
}
bool soft_ge(const SoftReal& a, const SoftReal& b) {
    return compare_all(a, b, "soft_ge", [](double x, double y) { return x >= y; });
}
bool soft_gt(const SoftReal& a, const SoftReal& b) {
    return compare_all(a, b, "soft_gt", [](double x, double y) { return x > y; });
}

// --- SoftComplex -------------------------------------------------------------

SoftComplex::SoftComplex(ParameterSet params, std::vector<Complex> values)
    : params_(std::move(params)), values_(std::move(values)) {
    if (values_.size() != params_.size()) {
        throw ShapeError(shape_msg("SoftComplex", "value count does not match parameter set size"));
    }
}

SoftComplex SoftComplex::constant(const ParameterSet& params, Complex value) {
    return SoftComplex(params, std::vector<Complex>(params.size(), value));
}

SoftReal SoftComplex::abs() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::abs(values_[i]);
    return SoftReal(params_, std::move(out));
}

SoftComplex SoftComplex::conj() const {
    std::vector<Complex> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = std::conj(values_[i]);
    return SoftComplex(params_, std::move(out));
}

namespace {

template <typename Op>
SoftComplex zip_complex(const SoftComplex& a, const SoftComplex& b, const char* where, Op op) {
    require_same_params(a.params(), b.params(), where);
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a.at(i), b.at(i));
    return SoftComplex(a.params(), std::move(out));
}

}  // namespace

SoftComplex operator+(const SoftComplex& a, const SoftComplex& b) {
    return zip_complex(a, b, "SoftComplex::operator+", [](Complex x, Complex y) { return x + y; });
}
SoftComplex operator-(const SoftComplex& a, const SoftComplex& b) {
    return zip_complex(a, b, "SoftComplex::operator-", [](Complex x, Complex y) { return x - y; });
}
SoftComplex operator*(const SoftComplex& a, const SoftComplex& b) {
    return zip_complex(a, b, "SoftComplex::operator*", [](Complex x, Complex y) { return x * y; });
}

// --- SoftVector ----------------------------------------------------------------

SoftVector::SoftVector(ParameterSet params, Eigen::Index dim, std::vector<Eigen::VectorXcd> values)
    : params_(std::move(params)), dim_(dim), values_(std::move(values)) {
    if (dim_ <= 0) {
        throw ShapeError("SoftVector: dimension must be positive");
    }
    if (values_.size() != params_.size()) {
        throw ShapeError("SoftVector: one value per parameter label required");
    }
    for (const auto& v : values_) {
        if (v.size() != dim_) {
            throw ShapeError("SoftVector: all per-parameter values must have the declared dimension");
        }
    }
}

SoftVector SoftVector::zero(const ParameterSet& params, Eigen::Index dim) {
    return SoftVector(params, dim,
                      std::vector<Eigen::VectorXcd>(params.size(), Eigen::VectorXcd::Zero(dim)));
}

SoftVector SoftVector::constant(const ParameterSet& params, const Eigen::VectorXcd& value) {
    return SoftVector(params, value.size(), std::vector<Eigen::VectorXcd>(params.size(), value));
}

bool SoftVector::is_zero(double tol) const {
    for (const auto& v : values_) {
        if (v.lpNorm<Eigen::Infinity>() > tol) return false;
    }
    return true;
}

namespace {

void require_same_dim(const SoftVector& x, const SoftVector& y, const char* where) {
    require_same_params(x.params(), y.params(), where);
    if (x.dim() != y.dim()) {
        throw ShapeError(shape_msg(where, "dimension mismatch (" + std::to_string(x.dim()) +
                                              " vs " + std::to_string(y.dim()) + ")"));
    }
}

}  // namespace

SoftVector operator+(const SoftVector& x, const SoftVector& y) {
    require_same_dim(x, y, "SoftVector::operator+");
    std::vector<Eigen::VectorXcd> out(x.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.at(i) + y.at(i);
    return SoftVector(x.params(), x.dim(), std::move(out));
}

SoftVector operator-(const SoftVector& x, const SoftVector& y) {
    require_same_dim(x, y, "SoftVector::operator-");
    std::vector<Eigen::VectorXcd> out(x.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.at(i) - y.at(i);
    return SoftVector(x.params(), x.dim(), std::move(out));
}

SoftVector operator*(Complex s, const SoftVector& x) {
    std::vector<Eigen::VectorXcd> out(x.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * x.at(i);
    return SoftVector(x.params(), x.dim(), std::move(out));
}

SoftVector scale(const SoftComplex& alpha, const SoftVector& x) {
    require_same_params(alpha.params(), x.params(), "scale(SoftComplex, SoftVector)");
    std::vector<Eigen::VectorXcd> out(x.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha.at(i) * x.at(i);
    return SoftVector(x.params(), x.dim(), std::move(out));
}

SoftComplex soft_inner_product(const SoftVector& x, const SoftVector& y) {
    require_same_dim(x, y, "soft_inner_product");
    std::vector<Complex> out(x.params().size());
    // Eigen's dot conjugates its first operand; <x,y> here is linear in x.
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = y.at(i).dot(x.at(i));
    return SoftComplex(x.params(), std::move(out));
}

SoftReal soft_norm(const SoftVector& x) {
    std::vector<double> out(x.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.at(i).norm();
    return SoftReal(x.params(), std::move(out));
}

// --- DirectSumSoftVector ---------------------------------------------------------

DirectSumSoftVector::DirectSumSoftVector(ParameterSet params,
                                         std::vector<Eigen::Index> block_dims,
                                         std::vector<std::vector<Eigen::VectorXcd>> values)
    : params_(std::move(params)), block_dims_(std::move(block_dims)), values_(std::move(values)) {
    if (block_dims_.empty()) {
        throw ShapeError("DirectSumSoftVector: at least one block required");
    }
    for (auto d : block_dims_) {
        if (d <= 0) throw ShapeError("DirectSumSoftVector: block dimensions must be positive");
    }
    if (values_.size() != params_.size()) {
        throw ShapeError("DirectSumSoftVector: one block list per parameter label required");
    }
    for (const auto& blocks : values_) {
        if (blocks.size() != block_dims_.size()) {
            throw ShapeError("DirectSumSoftVector: block structure differs across parameters");
        }
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (blocks[j].size() != block_dims_[j]) {
                throw ShapeError("DirectSumSoftVector: block " + std::to_string(j) +
                                 " does not match its declared dimension");
            }
        }
    }
}

DirectSumSoftVector DirectSumSoftVector::zero(const ParameterSet& params,
                                              std::vector<Eigen::Index> block_dims) {
    std::vector<Eigen::VectorXcd> blocks;
    blocks.reserve(block_dims.size());
    for (auto d : block_dims) blocks.push_back(Eigen::VectorXcd::Zero(d));
    std::vector<std::vector<Eigen::VectorXcd>> values(params.size(), blocks);
    return DirectSumSoftVector(params, std::move(block_dims), std::move(values));
}

SoftVector DirectSumSoftVector::block_as_vector(std::size_t j) const {
    std::vector<Eigen::VectorXcd> out(params_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i][j];
    return SoftVector(params_, block_dims_[j], std::move(out));
}

namespace {

void require_same_structure(const DirectSumSoftVector& f, const DirectSumSoftVector& g,
                            const char* where) {
    require_same_params(f.params(), g.params(), where);
    if (f.block_dims() != g.block_dims()) {
        throw ShapeError(shape_msg(where, "block-structure mismatch"));
    }
}

}  // namespace

DirectSumSoftVector operator+(const DirectSumSoftVector& f, const DirectSumSoftVector& g) {
    require_same_structure(f, g, "DirectSumSoftVector::operator+");
    auto values = f.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values[i].size(); ++j) values[i][j] += g.block(i, j);
    return DirectSumSoftVector(f.params(), f.block_dims(), std::move(values));
}

DirectSumSoftVector operator-(const DirectSumSoftVector& f, const DirectSumSoftVector& g) {
    require_same_structure(f, g, "DirectSumSoftVector::operator-");
    auto values = f.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values[i].size(); ++j) values[i][j] -= g.block(i, j);
    return DirectSumSoftVector(f.params(), f.block_dims(), std::move(values));
}

DirectSumSoftVector operator*(Complex s, const DirectSumSoftVector& f) {
    auto values = f.values();
    for (auto& blocks : values)
        for (auto& b : blocks) b *= s;
    return DirectSumSoftVector(f.params(), f.block_dims(), std::move(values));
}

SoftComplex direct_sum_inner_product(const DirectSumSoftVector& f, const DirectSumSoftVector& g) {
    require_same_structure(f, g, "direct_sum_inner_product");
    std::vector<Complex> out(f.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < f.block_count(); ++j) {
            sum += g.block(i, j).dot(f.block(i, j));
        }
        out[i] = sum;
    }
    return SoftComplex(f.params(), std::move(out));
}

SoftReal direct_sum_norm(const DirectSumSoftVector& f) {
    std::vector<double> out(f.params().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < f.block_count(); ++j) sum += f.block(i, j).squaredNorm();
        out[i] = std::sqrt(sum);
    }
    return SoftReal(f.params(), std::move(out));
}

}  // namespace softframe
