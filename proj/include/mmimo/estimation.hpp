// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mmimo/correlation.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

/// MMSE estimation statistics for every user at its serving BS.
struct EstimationStats {
    std::vector<CMatrix> F;    // [L*K] pilot-signal covariance, Hermitian PD
    std::vector<CMatrix> Phi;  // [L*K] estimate covariance tau_p^2 R F^-1 R
    std::vector<double> nmse;  // [L*K] in [0, 1]
};

/// Pilot-signal covariance of user (cell, user) at its serving BS:
/// tau_p^2 * sum of co-pilot correlation matrices + sigma_ul^2 * tau_p * I.
/// Pilots are index-encoded: |psi_i^H psi_j|^2 is tau_p^2 when the indices
/// match and 0 otherwise, ||psi||^2 = tau_p.
CMatrix f_matrix(int cell, int user, const ChannelStatistics& stats,
                 const PilotAssignment& assignment, int tau_p);

/// Estimate covariance tau_p^2 * R F^-1 R. Throws NumericalError when F is
/// numerically singular (condition estimate above 1e12).
CMatrix estimate_covariance(int cell, int user, const ChannelStatistics& stats,
                            const PilotAssignment& assignment, int tau_p);

/// Normalized mean square estimation error:
/// 1 - tr(tau_p^2 R F^-1 R) / tr(R), in [0, 1].
double nmse(int cell, int user, const ChannelStatistics& stats,
            const PilotAssignment& assignment, int tau_p);

/// All per-user estimation statistics for one assignment.
EstimationStats compute_estimation_stats(const ChannelStatistics& stats,
                                         const PilotAssignment& assignment,
                                         int tau_p);

} // namespace mmimo
