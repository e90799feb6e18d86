// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <utility>

#include "mmimo/se.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

/// One per-cell decision of the iterative reassignment.
struct TraceRecord {
    int iteration = 0;   // outer iteration n, 1-based
    int cell = 0;
    bool accepted = false;
    double h_star = 0.0;    // network-min weighted sum SE after the decision
    double variation = 0.0; // sum_l |h_l^(n) - h_l^(n-1)| of the iteration
};

struct AssignmentTrace {
    std::vector<TraceRecord> records;
    int iterations = 0;        // outer iterations executed
    bool converged = false;    // stopping criterion met before the cap
    double initial_objective = 0.0;
    double final_objective = 0.0;
};

struct JointOptions {
    double epsilon = 1e-3; // b/s/Hz, stopping accuracy
    int max_iters = 50;    // safety cap; hitting it signals a bug
};

/// Independent uniform permutation of {1..K} per cell. Requires tau_p == K.
PilotAssignment random_assignment(const SystemConfig& config, uint64_t seed);

/// Covariance-similarity benchmark: cell 1 keeps the identity; each later
/// cell assigns pilots user-by-user (descending tr(R) order) to minimize the
/// summed normalized trace inner product with already-assigned co-pilot
/// users, seen from the serving BS. Requires tau_p == K.
PilotAssignment greedy_assignment(const ChannelStatistics& stats,
                                  const SystemConfig& config);

/// One cell's reshuffle: the user ranked r in ascending weighted-sum-SE
/// order receives the pilot currently held by the user ranked r in ascending
/// NMSE order. Ties broken by user index. Other cells untouched.
PilotAssignment reassign_cell(int cell, const PilotAssignment& assignment,
                              const std::vector<double>& f_values,
                              const std::vector<double>& g_values,
                              const SystemConfig& config);

/// Iterative per-cell reassignment with backtracking: a cell's reshuffle is
/// kept only if the network-min weighted sum SE does not decrease, so the
/// accepted objective sequence is nondecreasing. Stops when the summed
/// per-cell variation between consecutive iterations falls to epsilon.
std::pair<PilotAssignment, AssignmentTrace>
joint_assignment(SeEvaluator& evaluator, const PilotAssignment& initial,
                 const PowerAllocation& powers, const WeightSet& weights,
                 const JointOptions& options = {});

/// joint_assignment with the weights forced to (1,0) or (0,1).
std::pair<PilotAssignment, AssignmentTrace>
single_direction_assignment(SeEvaluator& evaluator,
                            const PilotAssignment& initial,
                            const PowerAllocation& powers, Direction direction,
                            const JointOptions& options = {});

/// Number of assignments enumerated by exhaustive search, (K!)^(L-1).
double exhaustive_count(const SystemConfig& config);

/// Brute force over all pilot assignments with cell 1 fixed to the identity
/// (global pilot relabeling leaves every SINR unchanged). Refuses instances
/// with more than 10^4 candidates. Ties broken lexicographically.
std::pair<PilotAssignment, double>
exhaustive_assignment(SeEvaluator& evaluator, const PowerAllocation& powers,
                      const WeightSet& weights);

/// CSV export: header `n,cell,accepted,h_star,variation`.
void write_trace_csv(const AssignmentTrace& trace, std::ostream& out);

} // namespace mmimo
