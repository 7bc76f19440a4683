#pragma once

#include "softframe/compose.hpp"
#include "softframe/random.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace softframe::verify {

/// Outcome of one machine-checked property. passed holds exactly when
/// worst_violation <= tolerance; a skipped property reports a reason and a
/// zero violation.
struct PropertyReport {
    std::string property_id;
    bool passed = true;
    double worst_violation = 0.0;
    double tolerance = 0.0;
    std::optional<std::string> witness;
    std::optional<std::string> skip_reason;
};

enum class ModelKind {
    /// Random blocks nudged toward a guaranteed frame.
    full_rank,
    /// Blocks constructed to span strictly fewer than ambient_dim dimensions.
    rank_deficient,
};

/// Deterministic description of a random test instance. A seed pins the
/// generated frame and every probe drawn by the suite; entries are
/// unit-variance complex Gaussian.
struct RandomModel {
    std::uint64_t seed;
    Eigen::Index ambient_dim;
    std::vector<Eigen::Index> block_dims;
    ParameterSet params;
    ModelKind kind = ModelKind::full_rank;
};

/// Independent route to the frame operator: stacks every block into one tall
/// matrix per label and accumulates the Gram matrix with explicit loops in a
/// fixed order. Shares no code with frame_operator.
SoftOperator oracle_frame_operator(const SoftGFrame& frame);

/// Instantiates the model. full_rank models add a scaled stacked identity to
/// the sampled blocks when needed so the frame predicate is guaranteed;
/// rank_deficient models zero the final ambient coordinate of every block.
SoftGFrame generate_frame(const RandomModel& model);

struct SuiteOptions {
    int trials = 200;
    std::uint64_t seed = 42;
    /// Frame-predicate tolerance.
    double tol = 1e-10;
    /// What the frame-predicate property asserts about the instance.
    bool expect_frame = true;
};

/// Machine-checks every property against the given frame with random probes.
/// Properties that need the frame predicate are skipped (with a reason) when
/// the input is not a frame. Reports appear in a fixed order.
std::vector<PropertyReport> run_properties(const SoftGFrame& frame, const SuiteOptions& options = {});

/// generate_frame followed by run_properties, expecting a frame exactly for
/// full_rank models.
std::vector<PropertyReport> run_suite(const RandomModel& model, int trials);

}  // namespace softframe::verify
