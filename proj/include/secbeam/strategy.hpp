#ifndef SECBEAM_STRATEGY_HPP
#define SECBEAM_STRATEGY_HPP

#include <vector>

#include "secbeam/linalg.hpp"

namespace secbeam {

/// One transmission step: beamforming gains w (sqrt-watts) and artificial
/// noise covariance Sigma (watts). Per-agent power |w(i)|^2 + Sigma(i,i)
/// stays below the cap of the environment that produced the step.
struct TransmitStep {
    std::vector<Complex> gains;    // length m
    HermitianMatrix noise_cov;     // m x m, PSD

    int num_agents() const { return static_cast<int>(gains.size()); }
};

/// A cycle of `steps` applied with period L over a horizon of N = L*K steps.
struct PeriodicStrategy {
    std::vector<TransmitStep> steps;
    int horizon = 0;  // N

    int period() const { return static_cast<int>(steps.size()); }

    /// 1-based phase of 1-based time step t: ((t-1) mod L) + 1.
    int phase(int t) const { return (t - 1) % period() + 1; }

    const TransmitStep& step_at(int t) const { return steps[phase(t) - 1]; }
};

}  // namespace secbeam

#endif
