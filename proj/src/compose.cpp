#include "softframe/compose.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace softframe {

LocalFrameFamily::LocalFrameFamily(ParameterSet params,
                                   std::vector<std::vector<SoftVector>> families,
                                   std::vector<SoftReal> lower, std::vector<SoftReal> upper,
                                   std::vector<bool> tight, SoftReal envelope_lower,
                                   SoftReal envelope_upper)
    : params_(std::move(params)),
      families_(std::move(families)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      tight_(std::move(tight)),
      envelope_lower_(std::move(envelope_lower)),
      envelope_upper_(std::move(envelope_upper)) {}

LocalFrameFamily LocalFrameFamily::from_vectors(std::vector<std::vector<SoftVector>> families,
                                                double tol) {
    if (families.empty()) {
        throw ShapeError("LocalFrameFamily: at least one family required");
    }
    for (std::size_t j = 0; j < families.size(); ++j) {
        if (families[j].empty()) {
            throw ShapeError("LocalFrameFamily: family " + std::to_string(j) + " is empty");
        }
    }
    const ParameterSet params = families.front().front().params();
    std::vector<SoftReal> lower;
    std::vector<SoftReal> upper;
    std::vector<bool> tight;
    lower.reserve(families.size());
    upper.reserve(families.size());
    tight.reserve(families.size());
    for (std::size_t j = 0; j < families.size(); ++j) {
        for (const auto& v : families[j]) {
            require_same_params(params, v.params(), "LocalFrameFamily");
        }
        const FrameBoundsCertificate cert = frame_bounds(induced_from_vectors(families[j]), tol);
        if (!cert.is_frame) {
            throw NotAFrameError("LocalFrameFamily: family " + std::to_string(j) +
                                 " is not a frame for its block space");
        }
        lower.push_back(cert.lower);
        upper.push_back(cert.upper);
        tight.push_back(cert.is_tight);
    }
    SoftReal env_lo = lower.front();
    SoftReal env_hi = upper.front();
    for (std::size_t j = 1; j < families.size(); ++j) {
        env_lo = soft_min(env_lo, lower[j]);
        env_hi = soft_max(env_hi, upper[j]);
    }
    return LocalFrameFamily(params, std::move(families), std::move(lower), std::move(upper),
                            std::move(tight), std::move(env_lo), std::move(env_hi));
}

LocalFrameFamily LocalFrameFamily::with_envelope(SoftReal lower, SoftReal upper) const {
    require_same_params(params_, lower.params(), "LocalFrameFamily::with_envelope");
    require_same_params(params_, upper.params(), "LocalFrameFamily::with_envelope");
    LocalFrameFamily copy = *this;
    copy.envelope_lower_ = std::move(lower);
    copy.envelope_upper_ = std::move(upper);
    return copy;
}

namespace {

void require_compatible(const SoftGFrame& frame, const LocalFrameFamily& locals,
                        const char* where) {
    require_same_params(frame.params(), locals.params(), where);
    if (locals.family_count() != frame.block_count()) {
        throw ShapeError(std::string(where) + ": expected one local family per frame block (" +
                         std::to_string(frame.block_count()) + "), got " +
                         std::to_string(locals.family_count()));
    }
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        if (locals.family_dim(j) != frame.block(j).rows()) {
            throw ShapeError(std::string(where) + ": family " + std::to_string(j) +
                             " lives in dimension " + std::to_string(locals.family_dim(j)) +
                             " but block " + std::to_string(j) + " maps into dimension " +
                             std::to_string(frame.block(j).rows()));
        }
    }
}

void require_envelope(const LocalFrameFamily& locals, const char* where) {
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        if (!soft_le(locals.envelope_lower(), locals.lower_bound(j)) ||
            !soft_le(locals.upper_bound(j), locals.envelope_upper())) {
            throw PreconditionError(std::string(where) + ": envelope does not enclose the bounds of family " +
                                    std::to_string(j));
        }
    }
}

}  // namespace

std::vector<SoftVector> compose_frame(const SoftGFrame& frame, const LocalFrameFamily& locals) {
    require_compatible(frame, locals, "compose_frame");
    require_envelope(locals, "compose_frame");
    std::vector<SoftVector> composed;
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        const SoftOperator lift = adjoint(frame.block(j));
        for (const auto& local_vector : locals.family(j)) {
            composed.push_back(apply(lift, local_vector));
        }
    }
    return composed;
}

bool composed_dual_pair(const SoftGFrame& frame, const SoftGFrame& partner,
                        const LocalFrameFamily& locals, const LocalFrameFamily& partner_locals,
                        int trials, double tol, std::uint64_t seed) {
    require_same_params(frame.params(), partner.params(), "composed_dual_pair");
    if (partner.ambient_dim() != frame.ambient_dim() ||
        partner.block_dims() != frame.block_dims()) {
        throw ShapeError("composed_dual_pair: g-frames have mismatched shapes");
    }
    if (partner_locals.family_count() != locals.family_count()) {
        throw ShapeError("composed_dual_pair: local families differ in count");
    }
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        if (partner_locals.family(j).size() != locals.family(j).size()) {
            throw ShapeError("composed_dual_pair: family " + std::to_string(j) +
                             " differs in size between the two local systems");
        }
    }
    const auto composed = induced_from_vectors(compose_frame(frame, locals));
    const auto partner_composed = induced_from_vectors(compose_frame(partner, partner_locals));
    return dual_pair_check(composed, partner_composed, trials, tol, seed);
}

std::vector<SoftVector> tight_local_canonical_dual(const SoftGFrame& frame,
                                                   const LocalFrameFamily& locals,
                                                   double tol) {
    require_compatible(frame, locals, "tight_local_canonical_dual");
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        if (!locals.family_tight(j)) {
            throw PreconditionError("tight_local_canonical_dual: family " + std::to_string(j) +
                                    " is not tight");
        }
    }
    // All families must share one soft bound.
    const SoftReal common_bound = locals.lower_bound(0);
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        for (std::size_t i = 0; i < frame.params().size(); ++i) {
            const double a = locals.lower_bound(j).at(i);
            const double ref = common_bound.at(i);
            if (std::abs(a - ref) > 1e-8 * std::abs(ref)) {
                throw PreconditionError(
                    "tight_local_canonical_dual: families do not share a common bound at parameter '" +
                    frame.params().label(i) + "'");
            }
        }
    }

    const DualPair pair = canonical_dual(frame, tol);
    const std::vector<SoftVector> composed = compose_frame(frame, locals);
    const SoftGFrame composed_frame = induced_from_vectors(composed);
    const SoftOperator s_composed = frame_operator(composed_frame);

    // Composed frame operator must be the common bound times the g-frame operator.
    const SoftOperator s_frame = frame_operator(frame);
    for (std::size_t i = 0; i < frame.params().size(); ++i) {
        const Eigen::MatrixXcd expected = common_bound.at(i) * s_frame.at(i);
        const double defect = (s_composed.at(i) - expected).norm();
        if (defect > 1e-10 * expected.norm()) {
            throw VerificationError(
                "tight_local_canonical_dual: composed frame operator deviates from the scaled "
                "g-frame operator at parameter '" +
                frame.params().label(i) + "'");
        }
    }

    const SoftOperator s_composed_inverse = invert_hpd(s_composed);
    std::vector<SoftVector> duals;
    duals.reserve(composed.size());
    std::size_t flat = 0;
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        for (const auto& local_vector : locals.family(j)) {
            const SoftVector dual_vector = apply(s_composed_inverse, composed[flat]);
            // Cross-check against the factored form: the canonical dual
            // g-frame applied to the rescaled local vector.
            const SoftVector factored =
                apply(adjoint(pair.dual.block(j)),
                      scale(SoftComplex(frame.params(),
                                        [&] {
                                            std::vector<Complex> recip(frame.params().size());
                                            for (std::size_t i = 0; i < recip.size(); ++i)
                                                recip[i] = 1.0 / common_bound.at(i);
                                            return recip;
                                        }()),
                            local_vector));
            for (std::size_t i = 0; i < frame.params().size(); ++i) {
                const double scale_i = 1.0 + factored.at(i).norm();
                if ((dual_vector.at(i) - factored.at(i)).norm() > 1e-8 * scale_i) {
                    throw VerificationError(
                        "tight_local_canonical_dual: composed dual does not factor through the "
                        "dual g-frame at parameter '" +
                        frame.params().label(i) + "'");
                }
            }
            duals.push_back(dual_vector);
            ++flat;
        }
    }
    return duals;
}

}  // namespace softframe
