#include "secbeam/channel.hpp"

#include <cmath>
#include <numbers>

#include "secbeam/errors.hpp"

namespace secbeam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Slack for interval membership/disjointness on the circle, so that
// touching endpoints (client interval meeting an adversary interval)
// do not flip on floating-point noise.
constexpr double kAngleTol = 1e-9;

double mod_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

}  // namespace

double wrap_angle(double theta) {
    double r = mod_two_pi(theta + std::numbers::pi) - std::numbers::pi;
    if (r >= std::numbers::pi) r -= kTwoPi;
    return r;
}

bool Interval::contains(double theta) const {
    if (length() >= kTwoPi) return true;
    const double offset = mod_two_pi(theta - lo);
    return offset <= length() + kAngleTol || offset >= kTwoPi - kAngleTol;
}

bool Interval::intersects_interior(const Interval& other) const {
    if (other.length() <= 0.0) return false;
    if (length() >= kTwoPi || other.length() >= kTwoPi) return true;
    const double start = mod_two_pi(other.lo - lo);
    if (start < length() - kAngleTol) return true;
    // The open arc wraps past 2*pi and re-enters at this interval's left end.
    return start + other.length() - kTwoPi > kAngleTol;
}

void EnvironmentSpec::validate() const {
    if (agent_positions.empty()) throw InvalidInput("environment: no agents");
    for (const auto& p : agent_positions) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
            throw InvalidInput("environment: non-finite agent position");
    }
    if (!std::isfinite(client_direction)) throw InvalidInput("environment: bad client direction");
    if (!(carrier_frequency > 0.0)) throw InvalidInput("environment: carrier frequency <= 0");
    if (!(propagation_speed > 0.0)) throw InvalidInput("environment: propagation speed <= 0");
    if (!(power_cap > 0.0)) throw InvalidInput("environment: power cap <= 0");
    if (!(noise_power > 0.0)) throw InvalidInput("environment: noise power <= 0");
    if (!(gamma_adversary > 0.0) || !(gamma_client > gamma_adversary))
        throw InvalidInput("environment: thresholds must satisfy gamma_c > gamma_a > 0");
    if (block_length < 1) throw InvalidInput("environment: block length K < 1");
    const int periods = std::max(num_adversaries(), 1);
    if (num_steps != block_length * periods)
        throw InvalidInput("environment: N must equal K * L");
    if (!adversary_free.contains(client_direction))
        throw InvalidInput("environment: client direction outside adversary-free interval");
    for (const Interval& iv : adversary_intervals) {
        if (!(iv.length() >= 0.0) || iv.length() > kTwoPi)
            throw InvalidInput("environment: bad adversary interval");
        if (iv.intersects_interior(adversary_free))
            throw InvalidInput("environment: adversary interval overlaps adversary-free interior");
    }
    double max_radius = 0.0;
    for (const auto& p : agent_positions)
        max_radius = std::max(max_radius, std::hypot(p[0], p[1]));
    if (!(receiver_radius > max_radius))
        throw InvalidGeometry("environment: receiver circle must enclose all agents");
}

ChannelVector channel_vector(const EnvironmentSpec& env, double theta) {
    const int m = env.num_agents();
    double max_radius = 0.0;
    for (const auto& p : env.agent_positions)
        max_radius = std::max(max_radius, std::hypot(p[0], p[1]));
    if (!(env.receiver_radius > max_radius))
        throw InvalidGeometry("channel_vector: receiver circle must enclose all agents");

    const double lambda = env.wavelength();
    const double rx = env.receiver_radius * std::cos(theta);
    const double ry = env.receiver_radius * std::sin(theta);

    ChannelVector h;
    h.direction = theta;
    h.gains.resize(m);
    for (int i = 0; i < m; ++i) {
        const double d = std::hypot(rx - env.agent_positions[i][0],
                                    ry - env.agent_positions[i][1]);
        // Reduce d/lambda to its fractional part before taking cos/sin; whole
        // wavelengths contribute exactly nothing to the phase.
        const double cycles = d / lambda;
        const double frac = cycles - std::round(cycles);
        const double phase = -kTwoPi * frac;
        h.gains[i] = Complex(std::cos(phase), std::sin(phase));
    }
    return h;
}

double sinr_unchecked(const std::vector<Complex>& w, const HermitianMatrix& sigma,
                      const ChannelVector& h, double noise_power) {
    const int m = h.size();
    Complex hw = 0.0;
    for (int i = 0; i < m; ++i) hw += std::conj(h.gains[i]) * w[i];
    double interference = 0.0;
    for (int i = 0; i < m; ++i) {
        interference += sigma.at(i, i).real() * std::norm(h.gains[i]);
        for (int j = i + 1; j < m; ++j) {
            const Complex term = std::conj(h.gains[i]) * sigma.at(i, j) * h.gains[j];
            interference += 2.0 * term.real();
        }
    }
    return std::norm(hw) / (interference + noise_power);
}

double sinr(const std::vector<Complex>& w, const HermitianMatrix& sigma,
            const ChannelVector& h, double noise_power) {
    if (static_cast<int>(w.size()) != h.size() || sigma.dim() != h.size())
        throw InvalidInput("sinr: dimension mismatch");
    if (!(noise_power > 0.0)) throw InvalidInput("sinr: noise power must be positive");
    if (!psd_check(sigma, 1e-9)) throw InvalidInput("sinr: noise covariance not PSD");
    return sinr_unchecked(w, sigma, h, noise_power);
}

std::vector<double> make_grid(const Interval& interval, int points) {
    if (points < 1) throw InvalidInput("make_grid: need at least one point");
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = interval.lo;
        return grid;
    }
    const double step = interval.length() / (points - 1);
    for (int i = 0; i < points; ++i) grid[i] = interval.lo + step * i;
    grid.back() = interval.hi;
    return grid;
}

std::vector<std::pair<double, double>> beampattern(const EnvironmentSpec& env,
                                                   const TransmitStep& step,
                                                   const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidInput("beampattern: empty grid");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw InvalidInput("beampattern: grid must be strictly increasing");
    if (step.num_agents() != env.num_agents() || step.noise_cov.dim() != env.num_agents())
        throw InvalidInput("beampattern: step does not match environment");
    if (!psd_check(step.noise_cov, 1e-9))
        throw InvalidInput("beampattern: noise covariance not PSD");

    std::vector<std::pair<double, double>> pattern;
    pattern.reserve(grid.size());
    for (double theta : grid) {
        const ChannelVector h = channel_vector(env, theta);
        pattern.emplace_back(theta, sinr_unchecked(step.gains, step.noise_cov, h, env.noise_power));
    }
    return pattern;
}

}  // namespace secbeam
