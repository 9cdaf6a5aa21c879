#pragma once

#include <cstdint>
#include <optional>

#include "cpmat/assignment.hpp"
#include "cpmat/color_rule.hpp"
#include "cpmat/rational_matrix.hpp"
#include "cpmat/sampling.hpp"
#include "cpmat/system.hpp"

namespace cpmat {

/// Exact Kalman test: rank [B, AB, ..., A^(n-1) B] == n.
bool kalman_controllable(const RationalMatrix& a, const RationalMatrix& b);

/// Outcome of the two-sided graph test for strong structural
/// controllability.
///  - SufficientControllable: both the composite graph and the
///    diagonal-modified graph are colorable; every admissible realization is
///    controllable.  This direction is exact.
///  - Inconclusive: at least one side is not colorable.  Because the
///    colorability condition is sufficient but not necessary, this does NOT
///    refute controllability of the class.
///  - RefutedBySample: sampling found an admissible realization that fails
///    the Kalman test, so the class is certainly not strongly structurally
///    controllable.
enum class ControllabilityStatus {
    SufficientControllable,
    Inconclusive,
    RefutedBySample,
};

struct VerificationOptions {
    ColorableOptions colorable;
};

struct ControllabilityVerdict {
    ControllabilityStatus status = ControllabilityStatus::Inconclusive;
    ColorableResult composite_side;  // colorability of [A B]
    ColorableResult barred_side;     // colorability of [Abar B]
    BarredSystem barred;
};

/// Runs both colorability checks.  Never returns RefutedBySample; combine
/// with refute_by_sampling to upgrade an Inconclusive verdict.
ControllabilityVerdict check_controllability(const ColoredSystem& sys,
                                             const VerificationOptions& options = {});

/// A sampled realization failing the Kalman test.
struct SystemCounterexample {
    std::uint64_t trial = 0;  // 0-based trial index
    ColorAssignment assignment;
    RationalMatrix a;
    RationalMatrix b;
};

struct SystemSamplingReport {
    std::uint64_t trials_requested = 0;
    std::uint64_t trials_run = 0;  // stops at the first counterexample
    std::optional<SystemCounterexample> counterexample;
};

/// Samples admissible realizations in trial order and Kalman-tests each,
/// stopping at the first failure.  Deterministic for a fixed plan.
SystemSamplingReport refute_by_sampling(const ColoredSystem& sys, const SamplePlan& plan);

/// A sampled realization of a wide pattern with deficient row rank.
struct MatrixCounterexample {
    std::uint64_t trial = 0;
    ColorAssignment assignment;
    RationalMatrix matrix;
    std::size_t rank = 0;
};

struct MatrixSamplingReport {
    std::uint64_t trials_requested = 0;
    std::uint64_t trials_run = 0;
    std::optional<MatrixCounterexample> counterexample;
};

/// Samples admissible realizations of a p x q pattern (p <= q) and tests
/// rank == p, stopping at the first failure.
MatrixSamplingReport refute_fullrank_by_sampling(const ColoredPatternMatrix& m,
                                                 const SamplePlan& plan);

}  // namespace cpmat
