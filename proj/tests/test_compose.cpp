#include "softframe/compose.hpp"
#include "softframe/random.hpp"
#include "softframe/verify.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace softframe;
using helpers::identity_frame;
using helpers::params_pq;
using helpers::unit;
using helpers::vec;

namespace {

/// Two-block g-frame with one-dimensional block spaces: rows e1* and e2*.
SoftGFrame coordinate_frame(const ParameterSet& ps) {
    return induced_from_vectors(
        {SoftVector::constant(ps, unit(2, 0)), SoftVector::constant(ps, unit(2, 1))});
}

/// Per block space C^1, the tight local frame {1, 1} with bound 2.
LocalFrameFamily doubled_scalars(const ParameterSet& ps) {
    const SoftVector one = SoftVector::constant(ps, vec({1.0}));
    return LocalFrameFamily::from_vectors({{one, one}, {one, one}});
}

}  // namespace

TEST_CASE("local families compute their bounds and envelope") {
    const auto ps = params_pq();
    const auto locals = doubled_scalars(ps);
    CHECK(locals.family_count() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(locals.family_tight(j));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(locals.lower_bound(j).at(i) == doctest::Approx(2.0).epsilon(1e-14));
            CHECK(locals.upper_bound(j).at(i) == doctest::Approx(2.0).epsilon(1e-14));
        }
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(locals.envelope_lower().at(i) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(locals.envelope_upper().at(i) == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("local families must be frames for their block spaces") {
    const auto ps = params_pq();
    // Two copies of e1 never span C^2.
    const SoftVector e1 = SoftVector::constant(ps, unit(2, 0));
    CHECK_THROWS_AS(LocalFrameFamily::from_vectors({{e1, e1}}), NotAFrameError);
}

TEST_CASE("composing the identity g-frame with an orthonormal basis returns the basis") {
    const auto ps = params_pq();
    const auto frame = identity_frame(ps, 2);
    const std::vector<SoftVector> basis = {SoftVector::constant(ps, unit(2, 0)),
                                           SoftVector::constant(ps, unit(2, 1))};
    const auto locals = LocalFrameFamily::from_vectors({basis});
    const auto composed = compose_frame(frame, locals);
    REQUIRE(composed.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK((composed[k].at(i) - basis[k].at(i)).norm() == 0.0);
        }
    }
    const auto cert = frame_bounds(induced_from_vectors(composed));
    CHECK(cert.is_tight);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(cert.upper.at(i) == 1.0);
}

TEST_CASE("composing coordinate functionals with doubled scalars gives {e1,e1,e2,e2}") {
    const auto ps = params_pq();
    const auto composed = compose_frame(coordinate_frame(ps), doubled_scalars(ps));
    REQUIRE(composed.size() == 4);
    const Eigen::VectorXcd e1 = unit(2, 0);
    const Eigen::VectorXcd e2 = unit(2, 1);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK((composed[0].at(i) - e1).norm() == 0.0);
        CHECK((composed[1].at(i) - e1).norm() == 0.0);
        CHECK((composed[2].at(i) - e2).norm() == 0.0);
        CHECK((composed[3].at(i) - e2).norm() == 0.0);
    }
    const auto s = frame_operator(induced_from_vectors(composed));
    const auto cert = frame_bounds(induced_from_vectors(composed));
    CHECK(cert.is_tight);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK((s.at(i) - 2.0 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(cert.lower.at(i) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(cert.upper.at(i) == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("a zero probe has zero composed analysis coefficients") {
    const auto ps = params_pq();
    const auto composed = compose_frame(coordinate_frame(ps), doubled_scalars(ps));
    const auto theta = SoftVector::zero(ps, 2);
    for (const auto& u : composed) {
        const auto coeff = soft_inner_product(theta, u);
        for (std::size_t i = 0; i < ps.size(); ++i) CHECK(coeff.at(i) == Complex(0.0));
    }
}

TEST_CASE("compose_frame validates shapes and the envelope") {
    const auto ps = params_pq();
    const auto frame = coordinate_frame(ps);
    const auto locals = doubled_scalars(ps);

    // Wrong number of families.
    const SoftVector one = SoftVector::constant(ps, vec({1.0}));
    const auto too_few = LocalFrameFamily::from_vectors({{one, one}});
    CHECK_THROWS_AS(compose_frame(frame, too_few), ShapeError);

    // Envelope that no longer encloses the bounds.
    const auto violated = locals.with_envelope(SoftReal::constant(ps, 3.0),
                                               SoftReal::constant(ps, 4.0));
    CHECK_THROWS_AS(compose_frame(frame, violated), PreconditionError);
}

TEST_CASE("composed frame operator identity") {
    const auto ps = ParameterSet({"a", "b"});
    const auto frame = verify::generate_frame({97, 3, {2, 2, 1}, ps, verify::ModelKind::full_rank});
    Rng rng(103);
    std::vector<std::vector<SoftVector>> families;
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        const Eigen::Index d = frame.block(j).rows();
        std::vector<SoftVector> family;
        for (Eigen::Index k = 0; k < d + 1; ++k) {
            family.push_back(random_soft_vector(rng, ps, d));
        }
        // Anchor with a scaled basis so the family is a frame by construction.
        for (Eigen::Index k = 0; k < d; ++k) {
            family.push_back(SoftVector::constant(ps, Eigen::VectorXcd(unit(d, k))));
        }
        families.push_back(std::move(family));
    }
    const auto locals = LocalFrameFamily::from_vectors(families);
    const auto composed = compose_frame(frame, locals);
    const auto s_composed = frame_operator(induced_from_vectors(composed));

    // S_composed = sum_j block_j* S_j^loc block_j, assembled independently.
    for (std::size_t i = 0; i < ps.size(); ++i) {
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
        for (std::size_t j = 0; j < frame.block_count(); ++j) {
            const auto s_local = frame_operator(induced_from_vectors(locals.family(j)));
            expected += frame.block(j).at(i).adjoint() * s_local.at(i) * frame.block(j).at(i);
        }
        CHECK((s_composed.at(i) - expected).cwiseAbs().maxCoeff() <=
              1e-12 * expected.cwiseAbs().maxCoeff());
    }

    // Bound sandwich with the envelope constants.
    const auto cert = frame_bounds(frame);
    const auto composed_cert = frame_bounds(induced_from_vectors(composed));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double lo_expected = locals.envelope_lower().at(i) * cert.lower.at(i);
        const double hi_expected = locals.envelope_upper().at(i) * cert.upper.at(i);
        CHECK(composed_cert.lower.at(i) >= lo_expected - 1e-9 * hi_expected);
        CHECK(composed_cert.upper.at(i) <= hi_expected + 1e-9 * hi_expected);
    }
}

TEST_CASE("composed dual pairs resynthesize exactly when layers are dual") {
    const auto ps = params_pq();

    SUBCASE("canonical duals over the identity g-frame") {
        const auto frame = identity_frame(ps, 2);
        const std::vector<SoftVector> basis = {SoftVector::constant(ps, unit(2, 0)),
                                               SoftVector::constant(ps, unit(2, 1))};
        const auto locals = LocalFrameFamily::from_vectors({basis});
        CHECK(composed_dual_pair(frame, frame, locals, locals, 20, 1e-9));
    }

    SUBCASE("the doubled example with halved duals") {
        const auto frame = coordinate_frame(ps);
        const auto locals = doubled_scalars(ps);
        const SoftVector half = SoftVector::constant(ps, vec({0.5}));
        const auto duals = LocalFrameFamily::from_vectors({{half, half}, {half, half}});
        CHECK(composed_dual_pair(frame, frame, locals, duals, 20, 1e-9));
    }

    SUBCASE("mismatched local families fail") {
        const auto frame = coordinate_frame(ps);
        const auto locals = doubled_scalars(ps);
        CHECK_FALSE(composed_dual_pair(frame, frame, locals, locals, 5, 1e-9));
    }
}

TEST_CASE("tight-local canonical duals") {
    const auto ps = params_pq();

    SUBCASE("orthonormal locals with bound one") {
        const auto frame = identity_frame(ps, 2);
        const std::vector<SoftVector> basis = {SoftVector::constant(ps, unit(2, 0)),
                                               SoftVector::constant(ps, unit(2, 1))};
        const auto locals = LocalFrameFamily::from_vectors({basis});
        const auto duals = tight_local_canonical_dual(frame, locals);
        REQUIRE(duals.size() == 2);
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t i = 0; i < ps.size(); ++i) {
                CHECK((duals[k].at(i) - basis[k].at(i)).norm() <= 1e-10);
            }
        }
    }

    SUBCASE("bound-2 locals halve the composed family") {
        const auto frame = coordinate_frame(ps);
        const auto locals = doubled_scalars(ps);
        const auto composed = compose_frame(frame, locals);
        const auto s_composed = frame_operator(induced_from_vectors(composed));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK((s_composed.at(i) - 2.0 * Eigen::MatrixXcd::Identity(2, 2))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-14);
        }
        const auto duals = tight_local_canonical_dual(frame, locals);
        REQUIRE(duals.size() == 4);
        for (std::size_t m = 0; m < duals.size(); ++m) {
            for (std::size_t i = 0; i < ps.size(); ++i) {
                CHECK((duals[m].at(i) - 0.5 * composed[m].at(i)).norm() <= 1e-10);
            }
        }
    }

    SUBCASE("soft bound varying with the parameter") {
        // Locals are {s(lambda), s(lambda)} in C^1 with bound 2 s(lambda)^2.
        const SoftVector scaled(ps, 1, {vec({1.0}), vec({2.0})});
        const auto frame = coordinate_frame(ps);
        const auto locals = LocalFrameFamily::from_vectors({{scaled, scaled}, {scaled, scaled}});
        const auto composed = compose_frame(frame, locals);
        const auto duals = tight_local_canonical_dual(frame, locals);
        const std::vector<double> bound = {2.0, 8.0};
        for (std::size_t m = 0; m < duals.size(); ++m) {
            for (std::size_t i = 0; i < ps.size(); ++i) {
                CHECK((duals[m].at(i) - composed[m].at(i) / bound[i]).norm() <= 1e-10);
            }
        }
    }

    SUBCASE("families with different bounds are rejected") {
        const auto frame = coordinate_frame(ps);
        const SoftVector one = SoftVector::constant(ps, vec({1.0}));
        const SoftVector two = SoftVector::constant(ps, vec({2.0}));
        const auto unbalanced = LocalFrameFamily::from_vectors({{one, one}, {two, two}});
        CHECK_THROWS_AS(tight_local_canonical_dual(frame, unbalanced), PreconditionError);
    }

    SUBCASE("non-tight locals are rejected") {
        const auto frame = identity_frame(ps, 2);
        const auto loose = LocalFrameFamily::from_vectors({{
            SoftVector::constant(ps, unit(2, 0)),
            SoftVector::constant(ps, unit(2, 0)),
            SoftVector::constant(ps, unit(2, 1)),
        }});
        CHECK_THROWS_AS(tight_local_canonical_dual(frame, loose), PreconditionError);
    }
}
