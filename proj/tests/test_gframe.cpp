#include "softframe/gframe.hpp"
#include "softframe/random.hpp"
#include "softframe/verify.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace softframe;
using helpers::identity_frame;
using helpers::params_pq;
using helpers::unit;
using helpers::vec;
using helpers::worked_example;

TEST_CASE("analysis applies every block pointwise") {
    const auto ps = params_pq();

    const auto id = identity_frame(ps, 2);
    const auto f = SoftVector::constant(ps, vec({1.0, 2.0}));
    const auto coeffs = analysis(id, f);
    CHECK(coeffs.block_count() == 1);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(coeffs.block(i, 0) == f.at(i));

    const auto frame = worked_example(ps);
    const auto worked = analysis(frame, f);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(worked.block(i, 0)(0) == Complex(1.0));
        CHECK(worked.block(i, 1)(0) == Complex(1.0));
        CHECK(worked.block(i, 2)(0) == Complex(2.0));
    }

    const auto zero = analysis(frame, SoftVector::zero(ps, 2));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(zero.block(i, j).norm() == 0.0);
}

TEST_CASE("synthesis is the adjoint-weighted sum of blocks") {
    const auto ps = params_pq();

    const auto id = identity_frame(ps, 2);
    const auto g_single = DirectSumSoftVector(
        ps, {2}, {{vec({1.0, -2.0})}, {vec({1.0, -2.0})}});
    const auto back = synthesis(id, g_single);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(back.at(i) == g_single.block(i, 0));

    const auto frame = worked_example(ps);
    const auto g = DirectSumSoftVector(
        ps, {1, 1, 1},
        {{vec({1.0}), vec({1.0}), vec({2.0})}, {vec({1.0}), vec({1.0}), vec({2.0})}});
    const auto combined = synthesis(frame, g);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(combined.at(i)(0) == Complex(2.0));
        CHECK(combined.at(i)(1) == Complex(2.0));
    }

    // synthesis(analysis(f)) equals the frame operator applied to f
    const auto f = SoftVector::constant(ps, vec({{1.0, 0.5}, {-2.0, 1.0}}));
    const auto via_pair = synthesis(frame, analysis(frame, f));
    const auto via_operator = apply(frame_operator(frame), f);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK((via_pair.at(i) - via_operator.at(i)).norm() <= 1e-14);
    }
}

TEST_CASE("frame operator of the worked example is diag(2,1)") {
    const auto ps = params_pq();

    // Oracle first: the stacked Gram matrix of rows e1,e1,e2.
    const oracles::Mat expected =
        oracles::stacked_gram({{{1.0, 0.0}}, {{1.0, 0.0}}, {{0.0, 1.0}}}, 2);
    CHECK(expected[0][0] == Complex(2.0));
    CHECK(expected[1][1] == Complex(1.0));
    CHECK(expected[0][1] == Complex(0.0));

    const auto s = frame_operator(worked_example(ps));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(s.at(i)(0, 0) == expected[0][0]);
        CHECK(s.at(i)(1, 1) == expected[1][1]);
        CHECK(s.at(i)(0, 1) == expected[0][1]);
        CHECK(s.at(i)(1, 0) == expected[1][0]);
    }

    const auto id = frame_operator(identity_frame(ps, 2));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(id.at(i) == Eigen::MatrixXcd::Identity(2, 2));
    }
}

TEST_CASE("soft scaling of a block scales the frame operator pointwise") {
    const auto ps = params_pq();
    std::vector<Eigen::MatrixXcd> values = {Eigen::MatrixXcd::Identity(2, 2),
                                            2.0 * Eigen::MatrixXcd::Identity(2, 2)};
    const SoftGFrame frame(ps, 2, {SoftOperator(ps, 2, 2, values)});
    const auto s = frame_operator(frame);
    CHECK(s.at(0) == Eigen::MatrixXcd::Identity(2, 2));
    CHECK(s.at(1) == 4.0 * Eigen::MatrixXcd::Identity(2, 2));
}

TEST_CASE("frame_bounds certificates") {
    const auto ps = params_pq();

    const auto tight = frame_bounds(identity_frame(ps, 2));
    CHECK(tight.is_frame);
    CHECK(tight.is_tight);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(tight.lower.at(i) == 1.0);
        CHECK(tight.upper.at(i) == 1.0);
    }

    const auto worked = frame_bounds(worked_example(ps));
    CHECK(worked.is_frame);
    CHECK_FALSE(worked.is_tight);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(worked.lower.at(i) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(worked.upper.at(i) == doctest::Approx(2.0).epsilon(1e-14));
    }

    const auto deficient =
        frame_bounds(induced_from_vectors({SoftVector::constant(ps, unit(2, 0))}));
    CHECK_FALSE(deficient.is_frame);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(deficient.lower.at(i) == doctest::Approx(0.0));
    }

    CHECK_THROWS_AS(frame_bounds(identity_frame(ps, 2), 0.0), ShapeError);
}

TEST_CASE("exactness by leave-one-out spectral tests") {
    const auto ps = params_pq();

    const auto basis = induced_from_vectors(
        {SoftVector::constant(ps, unit(2, 0)), SoftVector::constant(ps, unit(2, 1))});
    CHECK(is_exact(basis) == std::vector<bool>{true, true});

    CHECK(is_exact(worked_example(ps)) == std::vector<bool>{false, false, true});

    CHECK(is_exact(identity_frame(ps, 2)) == std::vector<bool>{true});

    const auto not_frame = induced_from_vectors({SoftVector::constant(ps, unit(2, 0))});
    CHECK_THROWS_AS(is_exact(not_frame), NotAFrameError);
}

TEST_CASE("induced frames from vectors") {
    const auto ps = params_pq();

    const auto parseval = frame_bounds(induced_from_vectors(
        {SoftVector::constant(ps, unit(3, 0)), SoftVector::constant(ps, unit(3, 1)),
         SoftVector::constant(ps, unit(3, 2))}));
    CHECK(parseval.is_frame);
    CHECK(parseval.is_tight);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(parseval.upper.at(i) == 1.0);

    // First vector e1 at p and 2*e1 at q, second vector constant e2.
    const SoftVector varying(ps, 2, {unit(2, 0), 2.0 * unit(2, 0)});
    const auto cert =
        frame_bounds(induced_from_vectors({varying, SoftVector::constant(ps, unit(2, 1))}));
    CHECK(cert.lower.at(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cert.lower.at(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cert.upper.at(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cert.upper.at(1) == doctest::Approx(4.0).epsilon(1e-14));

    CHECK_THROWS_AS(
        induced_from_vectors({SoftVector::zero(ps, 2), SoftVector::zero(ps, 3)}), ShapeError);
}

TEST_CASE("frame energy") {
    const auto ps = params_pq();

    const auto frame = worked_example(ps);
    const auto f = SoftVector::constant(ps, vec({1.0, 1.0}));
    const auto energy = frame_energy(frame, f);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(energy.at(i) == 3.0);

    const auto zero_energy = frame_energy(frame, SoftVector::zero(ps, 2));
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(zero_energy.at(i) == 0.0);

    // Tight frame with bound 1: energy is the squared norm.
    const auto id = identity_frame(ps, 3);
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_soft_vector(rng, ps, 3);
        const auto e = frame_energy(id, g);
        const auto n = soft_norm(g);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(e.at(i) == doctest::Approx(n.at(i) * n.at(i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("frame energy equals the quadratic form of the frame operator") {
    const auto ps = ParameterSet({"a", "b", "c"});
    Rng rng(43);
    verify::RandomModel model{101, 3, {2, 1, 2}, ps, verify::ModelKind::full_rank};
    const auto frame = verify::generate_frame(model);
    const auto s = frame_operator(frame);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_soft_vector(rng, ps, 3);
        const auto energy = frame_energy(frame, f);
        const auto quad = soft_inner_product(apply(s, f), f);
        const auto n = soft_norm(f);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const double scale = 1.0 + n.at(i) * n.at(i);
            CHECK(std::abs(quad.at(i) - energy.at(i)) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("analysis and synthesis are adjoint to each other on random input") {
    const auto ps = params_pq();
    Rng rng(47);
    verify::RandomModel model{7, 4, {2, 3, 1}, ps, verify::ModelKind::full_rank};
    const auto frame = verify::generate_frame(model);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_soft_vector(rng, ps, 4);
        const auto g = [&] {
            std::vector<std::vector<Eigen::VectorXcd>> values(ps.size());
            for (std::size_t i = 0; i < ps.size(); ++i) {
                for (auto d : frame.block_dims()) {
                    Eigen::VectorXcd block(d);
                    for (Eigen::Index k = 0; k < d; ++k) block(k) = rng.complex_gaussian();
                    values[i].push_back(block);
                }
            }
            return DirectSumSoftVector(ps, frame.block_dims(), values);
        }();
        const auto lhs = direct_sum_inner_product(analysis(frame, f), g);
        const auto rhs = soft_inner_product(f, synthesis(frame, g));
        const auto fn = soft_norm(f);
        const auto gn = direct_sum_norm(g);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(std::abs(lhs.at(i) - rhs.at(i)) <= 1e-10 * (1.0 + fn.at(i) * gn.at(i)));
        }
    }
}

TEST_CASE("sandwich inequality holds for random frames") {
    const auto ps = ParameterSet({"a", "b"});
    verify::RandomModel model{53, 3, {2, 2}, ps, verify::ModelKind::full_rank};
    const auto frame = verify::generate_frame(model);
    const auto cert = frame_bounds(frame);
    REQUIRE(cert.is_frame);
    Rng rng(59);
    for (int t = 0; t < 200; ++t) {
        const auto f = random_soft_vector(rng, ps, 3);
        const auto energy = frame_energy(frame, f);
        const auto n = soft_norm(f);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const double fsq = n.at(i) * n.at(i);
            const double slack = 1e-9 * cert.upper.at(i) * fsq;
            CHECK(cert.lower.at(i) * fsq <= energy.at(i) + slack);
            CHECK(energy.at(i) <= cert.upper.at(i) * fsq + slack);
        }
    }
}

TEST_CASE("scaling every block rescales operator and bounds pointwise") {
    const auto ps = params_pq();
    verify::RandomModel model{61, 3, {2, 2}, ps, verify::ModelKind::full_rank};
    const auto frame = verify::generate_frame(model);
    const SoftComplex alpha(ps, {Complex(1.0, 1.0), Complex(0.0, 2.0)});

    std::vector<SoftOperator> scaled_blocks;
    for (std::size_t j = 0; j < frame.block_count(); ++j) {
        scaled_blocks.push_back(scale(alpha, frame.block(j)));
    }
    const SoftGFrame scaled(ps, 3, scaled_blocks);

    const auto s = frame_operator(frame);
    const auto s_scaled = frame_operator(scaled);
    const auto cert = frame_bounds(frame);
    const auto cert_scaled = frame_bounds(scaled);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double factor = std::norm(alpha.at(i));
        CHECK((s_scaled.at(i) - factor * s.at(i)).cwiseAbs().maxCoeff() <=
              1e-10 * factor * s.at(i).cwiseAbs().maxCoeff());
        CHECK(cert_scaled.lower.at(i) ==
              doctest::Approx(factor * cert.lower.at(i)).epsilon(1e-10));
        CHECK(cert_scaled.upper.at(i) ==
              doctest::Approx(factor * cert.upper.at(i)).epsilon(1e-10));
    }
}

TEST_CASE("induced frame energy equals the sum of squared frame coefficients") {
    const auto ps = params_pq();
    Rng rng(67);
    std::vector<SoftVector> vectors;
    for (int k = 0; k < 5; ++k) vectors.push_back(random_soft_vector(rng, ps, 3));
    const auto frame = induced_from_vectors(vectors);
    for (int t = 0; t < 30; ++t) {
        const auto f = random_soft_vector(rng, ps, 3);
        const auto energy = frame_energy(frame, f);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            double expected = 0.0;
            for (const auto& v : vectors) {
                expected += std::norm(oracles::inner(
                    std::vector<Complex>(f.at(i).data(), f.at(i).data() + 3),
                    std::vector<Complex>(v.at(i).data(), v.at(i).data() + 3)));
            }
            CHECK(energy.at(i) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}
