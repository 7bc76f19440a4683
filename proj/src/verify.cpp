#include "softframe/verify.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace softframe::verify {

namespace {

constexpr double kTiny = 1e-300;

struct Worst {
    double value = 0.0;
    std::optional<std::string> witness;

    void update(double v, const ParameterSet& params, std::size_t lambda, int trial = -1) {
        if (v > value) {
            value = v;
            std::ostringstream os;
            os << "lambda='" << params.label(lambda) << "'";
            if (trial >= 0) os << ", trial=" << trial;
            witness = os.str();
        }
    }
};

PropertyReport finish(std::string id, double tol, const Worst& worst) {
    PropertyReport report;
    report.property_id = std::move(id);
    report.tolerance = tol;
    report.worst_violation = worst.value;
    report.passed = worst.value <= tol;
    report.witness = worst.witness;
    return report;
}

PropertyReport skipped(std::string id, double tol, std::string reason) {
    PropertyReport report;
    report.property_id = std::move(id);
    report.tolerance = tol;
    report.skip_reason = std::move(reason);
    return report;
}

/// Random soft vector with every per-parameter norm clamped to at most 1.
SoftVector normalized_probe(Rng& rng, const ParameterSet& params, Eigen::Index dim) {
    SoftVector v = random_soft_vector(rng, params, dim);
    std::vector<Eigen::VectorXcd> values(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double norm = v.at(i).norm();
        values[i] = norm > 1.0 ? Eigen::VectorXcd(v.at(i) / norm) : v.at(i);
    }
    return SoftVector(params, dim, std::move(values));
}

DirectSumSoftVector random_direct_sum(Rng& rng, const ParameterSet& params,
                                      const std::vector<Eigen::Index>& dims) {
    std::vector<std::vector<Eigen::VectorXcd>> values(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        values[i].reserve(dims.size());
        for (auto d : dims) {
            Eigen::VectorXcd block(d);
            for (Eigen::Index k = 0; k < d; ++k) block(k) = rng.complex_gaussian();
            values[i].push_back(std::move(block));
        }
    }
    return DirectSumSoftVector(params, dims, std::move(values));
}

// ---- properties -------------------------------------------------------------

PropertyReport check_frame_predicate(const FrameBoundsCertificate& cert, const ParameterSet& params,
                                     double tol, bool expect_frame) {
    Worst worst;
    if (expect_frame) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double hi = cert.upper.at(i);
            const double margin = (tol * hi - cert.lower.at(i)) / std::max(hi, kTiny);
            worst.update(std::max(0.0, margin), params, i);
        }
    } else if (cert.is_frame) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double hi = cert.upper.at(i);
            worst.update((cert.lower.at(i) - tol * hi) / std::max(hi, kTiny), params, i);
        }
    }
    return finish("frame-predicate", 0.0, worst);
}

PropertyReport check_soft_norm_axioms(const SoftGFrame& frame, int trials, Rng& rng) {
    const ParameterSet& params = frame.params();
    const Eigen::Index n = frame.ambient_dim();
    Worst worst;
    const SoftReal zero_norm = soft_norm(SoftVector::zero(params, n));
    for (std::size_t i = 0; i < params.size(); ++i) {
        worst.update(std::abs(zero_norm.at(i)), params, i);
    }
    for (int t = 0; t < trials; ++t) {
        const SoftVector x = normalized_probe(rng, params, n);
        const SoftVector y = normalized_probe(rng, params, n);
        const Complex alpha = rng.complex_gaussian();
        const SoftReal nx = soft_norm(x);
        const SoftReal ny = soft_norm(y);
        const SoftReal nsum = soft_norm(x + y);
        const SoftReal nscaled = soft_norm(alpha * x);
        for (std::size_t i = 0; i < params.size(); ++i) {
            worst.update(std::max(0.0, -nx.at(i)), params, i, t);
            worst.update(std::abs(nscaled.at(i) - std::abs(alpha) * nx.at(i)), params, i, t);
            worst.update(std::max(0.0, nsum.at(i) - nx.at(i) - ny.at(i)), params, i, t);
        }
    }
    return finish("soft-norm-axioms", 1e-12, worst);
}

PropertyReport check_inner_product_axioms(const SoftGFrame& frame, int trials, Rng& rng) {
    const ParameterSet& params = frame.params();
    const Eigen::Index n = frame.ambient_dim();
    Worst worst;
    const SoftComplex null_inner =
        soft_inner_product(SoftVector::zero(params, n), SoftVector::zero(params, n));
    for (std::size_t i = 0; i < params.size(); ++i) {
        worst.update(std::abs(null_inner.at(i)), params, i);
    }
    for (int t = 0; t < trials; ++t) {
        const SoftVector x = normalized_probe(rng, params, n);
        const SoftVector y = normalized_probe(rng, params, n);
        const SoftVector z = normalized_probe(rng, params, n);
        const Complex alpha = rng.complex_gaussian();
        const SoftComplex xy = soft_inner_product(x, y);
        const SoftComplex yx = soft_inner_product(y, x);
        const SoftComplex combo = soft_inner_product(alpha * x + y, z);
        const SoftComplex xz = soft_inner_product(x, z);
        const SoftComplex yz = soft_inner_product(y, z);
        const SoftComplex xx = soft_inner_product(x, x);
        for (std::size_t i = 0; i < params.size(); ++i) {
            worst.update(std::abs(xy.at(i) - std::conj(yx.at(i))), params, i, t);
            worst.update(std::abs(combo.at(i) - alpha * xz.at(i) - yz.at(i)), params, i, t);
            worst.update(std::abs(xx.at(i).imag()), params, i, t);
            worst.update(std::max(0.0, -xx.at(i).real()), params, i, t);
        }
    }
    return finish("inner-product-axioms", 1e-12, worst);
}

PropertyReport check_adjoint_pairing(const SoftGFrame& frame, int trials, Rng& rng) {
    const ParameterSet& params = frame.params();
    Worst worst;
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, frame.ambient_dim());
        const DirectSumSoftVector g = random_direct_sum(rng, params, frame.block_dims());
        const SoftComplex lhs = direct_sum_inner_product(analysis(frame, f), g);
        const SoftComplex rhs = soft_inner_product(f, synthesis(frame, g));
        const SoftReal fn = soft_norm(f);
        const SoftReal gn = direct_sum_norm(g);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double scale = 1.0 + fn.at(i) * gn.at(i);
            worst.update(std::abs(lhs.at(i) - rhs.at(i)) / scale, params, i, t);
        }
    }
    return finish("adjoint-pairing", 1e-10, worst);
}

Eigen::MatrixXcd stacked_matrix(const SoftGFrame& frame, std::size_t lambda) {
    Eigen::Index total = 0;
    for (std::size_t j = 0; j < frame.block_count(); ++j) total += frame.block(j).rows();
    Eigen::MatrixXcd stacked(total, frame.ambient_dim());
    Eigen::Index offset = 0;
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        stacked.middleRows(offset, frame.block(j).rows()) = frame.block(j).at(lambda);
        offset += frame.block(j).rows();
    }
    return stacked;
}

PropertyReport check_synthesis_norm_bound(const SoftGFrame& frame,
                                          const FrameBoundsCertificate& cert) {
    const ParameterSet& params = frame.params();
    Worst worst;
    for (std::size_t i = 0; i < params.size(); ++i) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked_matrix(frame, i));
        const double synthesis_norm = svd.singularValues()(0);
        worst.update(synthesis_norm - std::sqrt(std::max(cert.upper.at(i), 0.0)), params, i);
    }
    return finish("synthesis-norm-bound", 1e-8, worst);
}

PropertyReport check_frame_energy_identity(const SoftGFrame& frame, const SoftOperator& s,
                                           int trials, Rng& rng) {
    const ParameterSet& params = frame.params();
    Worst worst;
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, frame.ambient_dim());
        const SoftComplex quad = soft_inner_product(apply(s, f), f);
        const SoftReal energy = frame_energy(frame, f);
        const SoftReal fn = soft_norm(f);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double scale = 1.0 + fn.at(i) * fn.at(i);
            worst.update(std::abs(quad.at(i) - energy.at(i)) / scale, params, i, t);
        }
    }
    return finish("frame-energy-identity", 1e-10, worst);
}

PropertyReport check_frame_sandwich(const SoftGFrame& frame, const FrameBoundsCertificate& cert,
                                    int trials, Rng& rng) {
    const ParameterSet& params = frame.params();
    Worst worst;
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, frame.ambient_dim());
        const SoftReal energy = frame_energy(frame, f);
        const SoftReal fn = soft_norm(f);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double fsq = fn.at(i) * fn.at(i);
            const double scale = std::max(cert.upper.at(i) * fsq, kTiny);
            const double below = cert.lower.at(i) * fsq - energy.at(i);
            const double above = energy.at(i) - cert.upper.at(i) * fsq;
            worst.update(std::max(below, above) / scale, params, i, t);
        }
    }
    return finish("frame-sandwich", 1e-9, worst);
}

PropertyReport check_dual_bounds(const DualPair& pair, const FrameBoundsCertificate& cert,
                                 int trials, Rng& rng) {
    const ParameterSet& params = pair.frame.params();
    // Bound agreement is checked at 1e-8 relative and the inverse-operator
    // sandwich at 1e-9; the sandwich defect is rescaled into the master
    // tolerance so that passed <=> both sub-checks pass.
    const double master_tol = 1e-8;
    const double sandwich_scale = master_tol / 1e-9;
    Worst worst;
    const FrameBoundsCertificate dual_cert = frame_bounds(pair.dual);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double expected_lower = 1.0 / cert.upper.at(i);
        const double expected_upper = 1.0 / cert.lower.at(i);
        worst.update(std::abs(dual_cert.lower.at(i) - expected_lower) / expected_lower, params, i);
        worst.update(std::abs(dual_cert.upper.at(i) - expected_upper) / expected_upper, params, i);
    }
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, pair.frame.ambient_dim());
        const SoftComplex quad = soft_inner_product(apply(pair.s_inverse, f), f);
        const SoftReal fn = soft_norm(f);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double fsq = fn.at(i) * fn.at(i);
            const double lo = fsq / cert.upper.at(i);
            const double hi = fsq / cert.lower.at(i);
            const double defect = std::max(lo - quad.at(i).real(), quad.at(i).real() - hi) /
                                  std::max(hi, kTiny);
            worst.update(sandwich_scale * std::max(0.0, defect), params, i, t);
        }
    }
    return finish("dual-bounds", master_tol, worst);
}

PropertyReport check_decomposition(const DualPair& pair, const SoftReal& condition, int trials,
                                   Rng& rng) {
    const ParameterSet& params = pair.frame.params();
    Worst worst;
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, pair.frame.ambient_dim());
        const SoftVector inside = reconstruct(pair, f, ReconstructionOrder::dual_inside);
        const SoftVector outside = reconstruct(pair, f, ReconstructionOrder::dual_outside);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double scale = std::max(f.at(i).norm(), kTiny) * condition.at(i);
            worst.update((inside.at(i) - f.at(i)).norm() / scale, params, i, t);
            worst.update((outside.at(i) - f.at(i)).norm() / scale, params, i, t);
        }
    }
    return finish("decomposition", 1e-8, worst);
}

PropertyReport check_atomic_resolution(const DualPair& pair, const SoftReal& condition, int trials,
                                       Rng& rng) {
    const ParameterSet& params = pair.frame.params();
    const Eigen::Index n = pair.frame.ambient_dim();
    Worst worst;
    const int operator_count = std::min(trials, 20);
    for (int t = 0; t < operator_count; ++t) {
        const SoftOperator op = random_soft_operator(rng, params, n, n);
        const SoftVector f = random_soft_vector(rng, params, n);
        const SoftVector expected = apply(op, f);
        const SoftVector via_dual = atomic_resolution(pair, op, f, ResolutionSide::dual_first);
        const SoftVector via_frame = atomic_resolution(pair, op, f, ResolutionSide::frame_first);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double scale = std::max(expected.at(i).norm(), 1.0) * condition.at(i);
            worst.update((via_dual.at(i) - expected.at(i)).norm() / scale, params, i, t);
            worst.update((via_frame.at(i) - expected.at(i)).norm() / scale, params, i, t);
        }
    }
    return finish("atomic-resolution", 1e-8, worst);
}

/// Local frames guaranteed for their block space: scaled basis vectors plus
/// one random vector.
std::vector<std::vector<SoftVector>> make_local_families(const SoftGFrame& frame, Rng& rng) {
    const ParameterSet& params = frame.params();
    std::vector<std::vector<SoftVector>> families;
    families.reserve(frame.block_count());
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        const Eigen::Index d = frame.block(j).rows();
        std::vector<SoftVector> family;
        for (Eigen::Index k = 0; k < d; ++k) {
            std::vector<Eigen::VectorXcd> values(params.size());
            for (std::size_t i = 0; i < params.size(); ++i) {
                Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
                e(k) = 0.7 + 0.8 * rng.uniform();
                values[i] = std::move(e);
            }
            family.emplace_back(params, d, std::move(values));
        }
        family.push_back(random_soft_vector(rng, params, d));
        families.push_back(std::move(family));
    }
    return families;
}

PropertyReport check_composition_sandwich(const SoftGFrame& frame,
                                          const FrameBoundsCertificate& cert, int trials,
                                          Rng& rng) {
    const ParameterSet& params = frame.params();
    const LocalFrameFamily locals = LocalFrameFamily::from_vectors(make_local_families(frame, rng));
    // Sandwich slack is 1e-9; the composed resynthesis identity is allowed
    // 1e-8 and rescaled into the master tolerance.
    const double master_tol = 1e-9;
    const double resyn_scale = 1e-9 / 1e-8;
    Worst worst;
    for (int t = 0; t < trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, frame.ambient_dim());
        const SoftReal fn = soft_norm(f);
        for (std::size_t i = 0; i < params.size(); ++i) {
            double energy = 0.0;
            for (std::size_t j = 0; j < frame.block_count(); ++j) {
                const Eigen::VectorXcd image = frame.block(j).at(i) * f.at(i);
                for (const auto& local_vector : locals.family(j)) {
                    energy += std::norm(local_vector.at(i).dot(image));
                }
            }
            const double fsq = fn.at(i) * fn.at(i);
            const double lo = locals.envelope_lower().at(i) * cert.lower.at(i) * fsq;
            const double hi = locals.envelope_upper().at(i) * cert.upper.at(i) * fsq;
            const double defect = std::max(lo - energy, energy - hi) / std::max(hi, kTiny);
            worst.update(std::max(0.0, defect), params, i, t);
        }
    }
    // Resynthesis through the canonical duals of both layers.
    const DualPair pair = canonical_dual(frame);
    std::vector<std::vector<SoftVector>> dual_families;
    dual_families.reserve(locals.family_count());
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        const SoftOperator local_inverse =
            invert_hpd(frame_operator(induced_from_vectors(locals.family(j))));
        std::vector<SoftVector> dual_family;
        dual_family.reserve(locals.family(j).size());
        for (const auto& v : locals.family(j)) dual_family.push_back(apply(local_inverse, v));
        dual_families.push_back(std::move(dual_family));
    }
    const LocalFrameFamily dual_locals = LocalFrameFamily::from_vectors(std::move(dual_families));
    const auto composed = compose_frame(frame, locals);
    const auto composed_dual = compose_frame(pair.dual, dual_locals);
    const int resyn_trials = std::min(trials, 25);
    for (int t = 0; t < resyn_trials; ++t) {
        const SoftVector f = random_soft_vector(rng, params, frame.ambient_dim());
        for (std::size_t i = 0; i < params.size(); ++i) {
            Eigen::VectorXcd via_dual = Eigen::VectorXcd::Zero(frame.ambient_dim());
            Eigen::VectorXcd via_primal = Eigen::VectorXcd::Zero(frame.ambient_dim());
            for (std::size_t m = 0; m < composed.size(); ++m) {
                via_dual += composed[m].at(i).dot(f.at(i)) * composed_dual[m].at(i);
                via_primal += composed_dual[m].at(i).dot(f.at(i)) * composed[m].at(i);
            }
            const double scale = 1.0 + f.at(i).norm();
            const double defect = std::max((via_dual - f.at(i)).norm(),
                                           (via_primal - f.at(i)).norm()) /
                                  scale;
            worst.update(resyn_scale * defect, params, i, t);
        }
    }
    return finish("composition-sandwich", master_tol, worst);
}

PropertyReport check_tight_local_duality(const SoftGFrame& frame, Rng& rng) {
    const ParameterSet& params = frame.params();
    // One common soft bound shared by every local family.
    std::vector<double> bound_values(params.size());
    for (auto& b : bound_values) b = 0.5 + 2.0 * rng.uniform();
    // Tight local frames: unitary columns scaled by sqrt of the bound.
    std::vector<std::vector<SoftVector>> families;
    families.reserve(frame.block_count());
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        const Eigen::Index d = frame.block(j).rows();
        std::vector<Eigen::MatrixXcd> bases(params.size());
        for (std::size_t i = 0; i < params.size(); ++i) {
            Eigen::MatrixXcd g(d, d);
            for (Eigen::Index r = 0; r < d; ++r)
                for (Eigen::Index c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
            bases[i] = qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
            bases[i] *= std::sqrt(bound_values[i]);
        }
        std::vector<SoftVector> family;
        family.reserve(d);
        for (Eigen::Index k = 0; k < d; ++k) {
            std::vector<Eigen::VectorXcd> values(params.size());
            for (std::size_t i = 0; i < params.size(); ++i) values[i] = bases[i].col(k);
            family.emplace_back(params, d, std::move(values));
        }
        families.push_back(std::move(family));
    }
    const LocalFrameFamily locals = LocalFrameFamily::from_vectors(std::move(families));
    const DualPair pair = canonical_dual(frame);
    const auto composed = compose_frame(frame, locals);
    const SoftOperator s_composed = frame_operator(induced_from_vectors(composed));
    const SoftOperator s_frame = frame_operator(frame);

    // Scaled-operator identity at 1e-10 relative, dual factoring at 1e-8;
    // both folded into the master tolerance.
    const double master_tol = 1e-8;
    const double operator_scale = master_tol / 1e-10;
    Worst worst;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const Eigen::MatrixXcd expected = bound_values[i] * s_frame.at(i);
        const double defect = (s_composed.at(i) - expected).norm() / std::max(expected.norm(), kTiny);
        worst.update(operator_scale * defect, params, i);
    }
    const SoftOperator s_composed_inverse = invert_hpd(s_composed);
    std::size_t flat = 0;
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        const SoftOperator dual_lift = adjoint(pair.dual.block(j));
        for (const auto& local_vector : locals.family(j)) {
            const SoftVector actual = apply(s_composed_inverse, composed[flat]);
            for (std::size_t i = 0; i < params.size(); ++i) {
                const Eigen::VectorXcd expected =
                    dual_lift.at(i) * (local_vector.at(i) / bound_values[i]);
                const double scale = 1.0 + expected.norm();
                worst.update((actual.at(i) - expected).norm() / scale, params, i,
                             static_cast<int>(flat));
            }
            ++flat;
        }
    }
    return finish("tight-local-duality", master_tol, worst);
}

}  // namespace

SoftOperator oracle_frame_operator(const SoftGFrame& frame) {
    const ParameterSet& params = frame.params();
    const Eigen::Index n = frame.ambient_dim();
    Eigen::Index total = 0;
    for (std::size_t j = 0; j < frame.block_count(); ++j) total += frame.block(j).rows();

    std::vector<Eigen::MatrixXcd> out(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        // Stack every block, in increasing j, into one tall matrix.
        Eigen::MatrixXcd stacked(total, n);
        Eigen::Index offset = 0;
        for (std::size_t j = 0; j < frame.block_count(); ++j) {
            const Eigen::MatrixXcd& block = frame.block(j).at(i);
            for (Eigen::Index r = 0; r < block.rows(); ++r)
                for (Eigen::Index c = 0; c < n; ++c) stacked(offset + r, c) = block(r, c);
            offset += block.rows();
        }
        // Gram matrix by explicit accumulation in increasing row order.
        Eigen::MatrixXcd gram(n, n);
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = 0; q < n; ++q) {
                Complex sum = 0.0;
                for (Eigen::Index r = 0; r < total; ++r) {
                    sum += std::conj(stacked(r, p)) * stacked(r, q);
                }
                gram(p, q) = sum;
            }
        }
        out[i] = std::move(gram);
    }
    return SoftOperator(params, n, n, std::move(out));
}

SoftGFrame generate_frame(const RandomModel& model) {
    if (model.block_dims.empty()) {
        throw ShapeError("generate_frame: model must declare at least one block");
    }
    Rng rng(model.seed);
    std::vector<SoftOperator> base;
    base.reserve(model.block_dims.size());
    for (auto d : model.block_dims) {
        base.push_back(random_soft_operator(rng, model.params, d, model.ambient_dim));
    }

    if (model.kind == ModelKind::rank_deficient) {
        std::vector<SoftOperator> blocks;
        blocks.reserve(base.size());
        for (const auto& op : base) {
            std::vector<Eigen::MatrixXcd> values = op.values();
            for (auto& m : values) {
                if (model.ambient_dim == 1) {
                    m.setZero();
                } else {
                    m.col(model.ambient_dim - 1).setZero();
                }
            }
            blocks.emplace_back(model.params, op.rows(), op.cols(), std::move(values));
        }
        return SoftGFrame(model.params, model.ambient_dim, std::move(blocks));
    }

    Eigen::Index total = 0;
    for (auto d : model.block_dims) total += d;
    if (total < model.ambient_dim) {
        throw PreconditionError(
            "generate_frame: total block dimension is below the ambient dimension, no frame exists");
    }

    double eps = 0.0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<SoftOperator> blocks;
        blocks.reserve(base.size());
        Eigen::Index offset = 0;
        for (const auto& op : base) {
            std::vector<Eigen::MatrixXcd> values = op.values();
            if (eps > 0.0) {
                for (auto& m : values) {
                    for (Eigen::Index r = 0; r < m.rows(); ++r) {
                        const Eigen::Index global_row = offset + r;
                        if (global_row < model.ambient_dim) m(r, global_row) += eps;
                    }
                }
            }
            blocks.emplace_back(model.params, op.rows(), op.cols(), std::move(values));
            offset += op.rows();
        }
        SoftGFrame candidate(model.params, model.ambient_dim, std::move(blocks));
        if (frame_bounds(candidate).is_frame) return candidate;
        eps = eps == 0.0 ? 1.0 : 2.0 * eps;
    }
    throw VerificationError("generate_frame: failed to reach the frame predicate");
}

std::vector<PropertyReport> run_properties(const SoftGFrame& frame, const SuiteOptions& options) {
    if (options.trials < 1) {
        throw ShapeError("run_properties: trials must be at least 1");
    }
    const FrameBoundsCertificate cert = frame_bounds(frame, options.tol);
    std::vector<PropertyReport> reports;
    reports.reserve(12);

    // Each property draws from its own stream so insertions stay local.
    std::uint64_t stream = options.seed;
    const auto next_rng = [&stream] { return Rng(stream++); };

    reports.push_back(check_frame_predicate(cert, frame.params(), options.tol, options.expect_frame));
    {
        Rng rng = next_rng();
        reports.push_back(check_soft_norm_axioms(frame, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_inner_product_axioms(frame, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_adjoint_pairing(frame, options.trials, rng));
    }
    reports.push_back(check_synthesis_norm_bound(frame, cert));
    {
        Rng rng = next_rng();
        reports.push_back(check_frame_energy_identity(frame, frame_operator(frame), options.trials, rng));
    }

    const char* not_frame_reason = "instance is not a frame at the tolerance; property requires the frame predicate";
    if (!cert.is_frame) {
        reports.push_back(skipped("frame-sandwich", 1e-9, not_frame_reason));
        reports.push_back(skipped("dual-bounds", 1e-8, not_frame_reason));
        reports.push_back(skipped("decomposition", 1e-8, not_frame_reason));
        reports.push_back(skipped("atomic-resolution", 1e-8, not_frame_reason));
        reports.push_back(skipped("composition-sandwich", 1e-9, not_frame_reason));
        reports.push_back(skipped("tight-local-duality", 1e-8, not_frame_reason));
        return reports;
    }

    const DualPair pair = canonical_dual(frame, options.tol);
    std::vector<double> condition_values(frame.params().size());
    for (std::size_t i = 0; i < condition_values.size(); ++i) {
        condition_values[i] = cert.upper.at(i) / cert.lower.at(i);
    }
    const SoftReal condition(frame.params(), std::move(condition_values));

    {
        Rng rng = next_rng();
        reports.push_back(check_frame_sandwich(frame, cert, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_dual_bounds(pair, cert, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_decomposition(pair, condition, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_atomic_resolution(pair, condition, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_composition_sandwich(frame, cert, options.trials, rng));
    }
    {
        Rng rng = next_rng();
        reports.push_back(check_tight_local_duality(frame, rng));
    }
    return reports;
}

std::vector<PropertyReport> run_suite(const RandomModel& model, int trials) {
    SuiteOptions options;
    options.trials = trials;
    options.seed = model.seed + 1;
    options.expect_frame = model.kind == ModelKind::full_rank;
    return run_properties(generate_frame(model), options);
}

}  // namespace softframe::verify
