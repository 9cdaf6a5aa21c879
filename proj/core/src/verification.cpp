#include "cpmat/verification.hpp"

#include <stdexcept>

namespace cpmat {

bool kalman_controllable(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("state matrix must be square");
    if (b.rows() != n) throw std::invalid_argument("input matrix row count must match");
    RationalMatrix block = b;
    RationalMatrix controllability = b;
    for (std::size_t power = 1; power < n; ++power) {
        block = a * block;
        controllability = RationalMatrix::hstack(controllability, block);
    }
    return controllability.rank() == n;
}

ControllabilityVerdict check_controllability(const ColoredSystem& sys,
                                             const VerificationOptions& options) {
    ControllabilityVerdict verdict;
    verdict.composite_side = is_colorable(sys.matrix, options.colorable);
    verdict.barred = build_barred(sys);
    verdict.barred_side = is_colorable(verdict.barred.system.matrix, options.colorable);
    verdict.status = (verdict.composite_side.colorable && verdict.barred_side.colorable)
                         ? ControllabilityStatus::SufficientControllable
                         : ControllabilityStatus::Inconclusive;
    return verdict;
}

SystemSamplingReport refute_by_sampling(const ColoredSystem& sys, const SamplePlan& plan) {
    SystemSamplingReport report;
    report.trials_requested = plan.trials;
    const std::vector<ColorId> colors = sys.matrix.colors();
    std::mt19937_64 rng(plan.seed);
    for (std::uint64_t trial = 0; trial < plan.trials; ++trial) {
        ColorAssignment a = sample_assignment(colors, rng, plan);
        RationalMatrix full = instantiate(sys.matrix, a);
        RationalMatrix state = full.columns(0, sys.state_dim);
        RationalMatrix input = full.columns(sys.state_dim, sys.input_dim);
        ++report.trials_run;
        if (!kalman_controllable(state, input)) {
            report.counterexample =
                SystemCounterexample{trial, std::move(a), std::move(state), std::move(input)};
            break;
        }
    }
    return report;
}

MatrixSamplingReport refute_fullrank_by_sampling(const ColoredPatternMatrix& m,
                                                 const SamplePlan& plan) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("full-row-rank sampling requires rows <= cols");
    MatrixSamplingReport report;
    report.trials_requested = plan.trials;
    const std::vector<ColorId> colors = m.colors();
    std::mt19937_64 rng(plan.seed);
    for (std::uint64_t trial = 0; trial < plan.trials; ++trial) {
        ColorAssignment a = sample_assignment(colors, rng, plan);
        RationalMatrix real = instantiate(m, a);
        std::size_t rank = real.rank();
        ++report.trials_run;
        if (rank != m.rows()) {
            report.counterexample = MatrixCounterexample{trial, std::move(a), std::move(real), rank};
            break;
        }
    }
    return report;
}

}  // namespace cpmat
