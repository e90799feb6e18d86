// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mmimo {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

enum class Direction { uplink, downlink };

inline const char* to_string(Direction d) {
    return d == Direction::uplink ? "ul" : "dl";
}

/// Invalid configuration or argument contract violation.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Statistics too ill-conditioned to evaluate reliably.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// System-wide constants for one simulation: dimensions, frame structure,
/// powers, noise and per-user scheduling weights.
///
/// Conventions: powers and noise variances in mW, distances in km, angles in
/// radians. Weight arrays may be left empty, which means all-ones.
struct SystemConfig {
    int cells = 4;             // L, must be a perfect square (grid layout)
    int users_per_cell = 4;    // K
    int antennas = 32;         // M
    int coherence_block = 200; // tau_c, symbols
    int pilot_length = 4;      // tau_p, symbols, K <= tau_p <= K*L
    double gamma_ul = 0.5;     // uplink share of the data symbols
    double gamma_dl = 0.5;     // downlink share, gamma_ul + gamma_dl = 1
    double sigma2_ul = 2.5118864315095823e-10; // mW (-96 dBm)
    double sigma2_dl = 2.5118864315095823e-10; // mW (-96 dBm)
    double p_max_ul = 200.0;   // mW, per-user uplink budget
    double p_max_dl = 800.0;   // mW, per-BS downlink budget
    double corr_magnitude = 0.5; // mu of the exponential correlation model
    double area_km2 = 0.5;     // total coverage area
    double min_dist_km = 0.035;
    double shadow_std_db = 7.0;
    std::vector<std::vector<double>> w_ul; // [L][K]; empty = all-ones
    std::vector<std::vector<double>> w_dl; // [L][K]; empty = all-ones

    int total_users() const { return cells * users_per_cell; }
    int flat(int cell, int user) const { return cell * users_per_cell + user; }

    /// gamma_dir * (1 - tau_p / tau_c)
    double prelog(Direction d) const {
        double frac = 1.0 - static_cast<double>(pilot_length) / coherence_block;
        return (d == Direction::uplink ? gamma_ul : gamma_dl) * frac;
    }

    double weight(Direction d, int cell, int user) const {
        const auto& w = (d == Direction::uplink) ? w_ul : w_dl;
        if (w.empty()) return 1.0;
        return w.at(cell).at(user);
    }

    double network_side_km() const { return std::sqrt(area_km2); }
    double cell_side_km() const;

    /// Throws ConfigError if any invariant is violated.
    void validate() const;

    /// Desk-scale defaults for the given dimensions; p_max_dl is scaled to
    /// users_per_cell * p_max_ul and tau_p to users_per_cell.
    static SystemConfig desk_scale(int cells, int users_per_cell, int antennas);
};

/// Pilot index per user, in {1..tau_p}; distinct within each cell.
struct PilotAssignment {
    std::vector<std::vector<int>> pilot; // [L][K]

    bool copilot(int l1, int k1, int l2, int k2) const {
        return pilot[l1][k1] == pilot[l2][k2];
    }
    /// Throws ConfigError on range or within-cell distinctness violations.
    void validate(const SystemConfig& config) const;
};

/// Transmit data powers, mW. p_ul is per user, p_dl is per user with a
/// per-BS sum budget.
struct PowerAllocation {
    std::vector<std::vector<double>> p_ul; // [L][K]
    std::vector<std::vector<double>> p_dl; // [L][K]

    /// Full uplink power, equal downlink split -- the fixed-power baseline.
    static PowerAllocation fixed_initial(const SystemConfig& config);
    static PowerAllocation zeros(const SystemConfig& config);
    void validate(const SystemConfig& config) const;
};

/// Per-user weighted sum of spectral efficiencies, flat-indexed.
struct WeightSet {
    std::vector<double> ul; // [L*K]
    std::vector<double> dl; // [L*K]

    static WeightSet from_config(const SystemConfig& config);
    /// (1,0) for uplink-only, (0,1) for downlink-only.
    static WeightSet single_direction(const SystemConfig& config, Direction d);
};

/// Closed-form evaluation output for one assignment and power allocation.
struct SEReport {
    std::vector<std::vector<double>> sinr_ul, sinr_dl; // [L][K]
    std::vector<std::vector<double>> se_ul, se_dl;     // [L][K], b/s/Hz
    std::vector<std::vector<double>> f;                // weighted sum SE
    std::vector<std::vector<int>> pilot;               // assignment echo
    double min_f = 0.0;                                // network minimum of f
};

/// min over all users of report.f
double network_min(const SEReport& report);

/// f_{l,k} = w_ul * se_ul + w_dl * se_dl for one user.
double weighted_sum_se(int cell, int user, const SEReport& report);

} // namespace mmimo
