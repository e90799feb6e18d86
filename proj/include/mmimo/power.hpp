// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <ostream>

#include "mmimo/se.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

/// SINR needed so that weight * SE equals xi: 2^(xi / (w * prelog)) - 1.
double sinr_target(double xi, double weight, double prelog);

enum class FeasibilityStatus { feasible, infeasible, no_convergence };

struct FeasibilityResult {
    FeasibilityStatus status = FeasibilityStatus::infeasible;
    std::vector<double> powers; // [LK], minimal powers when feasible
    int sweeps = 0;
    double residual = 0.0; // last relative componentwise change
};

struct FixedPointOptions {
    int max_sweeps = 1000;
    double rel_tol = 1e-9;
};

/// Minimum-power feasibility of per-user SINR targets via the
/// standard-interference-function fixed point p <- I(p), iterated Jacobi
/// style from p = 0 (componentwise nondecreasing). Uplink caps are applied
/// inside the iteration; downlink per-BS budgets are certified on the
/// monotone iterates. Requesting a target at or above a user's saturation
/// SINR is immediately infeasible.
FeasibilityResult feasibility(const std::vector<double>& targets, Direction d,
                              const LinkGains& gains,
                              const SystemConfig& config, double sigma2,
                              const FixedPointOptions& options = {});

struct PowerControlResult {
    Direction direction = Direction::uplink;
    PowerAllocation powers;   // solved direction filled, other all-zero
    double xi_star = 0.0;     // b/s/Hz, achieved min of w * SE
    int iterations = 0;       // bisection probes
    double residual = 0.0;    // final bracket width
    int unresolved_probes = 0; // probes the fixed point could not certify
};

struct MaxMinOptions {
    double tol = 1e-4; // b/s/Hz, bisection bracket target
    FixedPointOptions fixed_point{20000, 1e-9};
};

/// Max-min weighted-SE data power control for one direction: bisection on
/// the objective xi over [0, xi_hi]; each probe converts xi to per-user SINR
/// targets and runs the feasibility fixed point. The feasible-xi set is a
/// downward-closed interval, so the returned xi_star is globally optimal up
/// to tol. Users with zero weight get zero power and are excluded from the
/// minimum; an empty targeted set is rejected.
PowerControlResult maxmin_power(Direction d, SeEvaluator& evaluator,
                                const PilotAssignment& assignment,
                                const WeightSet& weights,
                                const MaxMinOptions& options = {});

/// CSV row: `direction,xi_star,iterations,residual,p_<cell>_<user>...`.
void write_power_csv_header(const SystemConfig& config, std::ostream& out);
void write_power_csv_row(const PowerControlResult& result,
                         const SystemConfig& config, std::ostream& out);

} // namespace mmimo
