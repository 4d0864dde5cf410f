#ifndef SECBEAM_CHANNEL_HPP
#define SECBEAM_CHANNEL_HPP

#include <array>
#include <vector>

#include "secbeam/linalg.hpp"
#include "secbeam/strategy.hpp"

namespace secbeam {

/// Closed direction interval [lo, hi] in radians. Endpoints may extend past
/// [-pi, pi); directions are treated as 2*pi-periodic, so [7*pi/6, 11*pi/6]
/// denotes the same arc as [-5*pi/6, -pi/6].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    /// Membership on the circle.
    bool contains(double theta) const;
    /// True when the arc intersects the open interior of `other` on the circle.
    bool intersects_interior(const Interval& other) const;
};

/// Wraps an angle into [-pi, pi).
double wrap_angle(double theta);

/// Scenario geometry and thresholds shared by synthesis and simulation.
struct EnvironmentSpec {
    std::vector<std::array<double, 2>> agent_positions;  // meters
    double client_direction = 0.0;                        // radians
    Interval adversary_free;                              // I_0, contains the client
    std::vector<Interval> adversary_intervals;            // I_1..I_L
    double carrier_frequency = 0.0;                       // Hz
    double propagation_speed = 3.0e8;                     // m/s
    double receiver_radius = 0.0;                         // meters, far-field circle
    double power_cap = 0.0;                               // watts per agent
    double gamma_client = 0.0;                            // client SINR threshold
    double gamma_adversary = 0.0;                         // adversary SINR threshold
    double noise_power = 0.0;                             // sigma_n^2, watts
    int block_length = 1;                                 // K
    int num_steps = 1;                                    // N = K * max(L, 1)

    int num_agents() const { return static_cast<int>(agent_positions.size()); }
    int num_adversaries() const { return static_cast<int>(adversary_intervals.size()); }
    double wavelength() const { return propagation_speed / carrier_frequency; }

    /// Checks every structural invariant; throws InvalidInput / InvalidGeometry.
    void validate() const;
};

struct ChannelVector {
    double direction = 0.0;
    std::vector<Complex> gains;  // unit modulus per entry

    int size() const { return static_cast<int>(gains.size()); }
};

/// Phase-only far-field channel h_i = exp(-j 2 pi d_i(theta) / lambda) where
/// d_i is the distance from agent i to the receiver point on the circle.
ChannelVector channel_vector(const EnvironmentSpec& env, double theta);

/// |h^H w|^2 / (h^H Sigma h + sigma_n^2). Throws InvalidInput unless Sigma is
/// PSD (tolerance 1e-9 relative) and sigma_n^2 > 0.
double sinr(const std::vector<Complex>& w, const HermitianMatrix& sigma,
            const ChannelVector& h, double noise_power);

/// Same quadratic forms evaluated against an arbitrary W (no PSD gate); used
/// on hot paths where Sigma was already validated.
double sinr_unchecked(const std::vector<Complex>& w, const HermitianMatrix& sigma,
                      const ChannelVector& h, double noise_power);

/// Uniform grid with closed endpoints; n = 1 degenerates to {lo}.
std::vector<double> make_grid(const Interval& interval, int points);

/// Per-direction SINR of one transmit step over an increasing grid.
std::vector<std::pair<double, double>> beampattern(const EnvironmentSpec& env,
                                                   const TransmitStep& step,
                                                   const std::vector<double>& grid);

}  // namespace secbeam

#endif
