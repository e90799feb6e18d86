// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <ostream>

#include "mmimo/correlation.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

/// Closed-form link gains for one pilot assignment, flat-indexed by
/// u = cell * K + user.
///
///   sinr_ul[u] = p_ul[u] * signal[u] / (d_ul.row(u) . p_ul + sigma2_ul)
///   sinr_dl[u] = p_dl[u] * signal[u] / (d_dl.row(u) . p_dl + sigma2_dl)
///
/// signal[u] is tau_p^2 tr(R F^-1 R); the interference tables fold the
/// coherent (co-pilot) and noncoherent terms of the effective-SINR formulas,
/// including each user's own noncoherent self term on the diagonal.
struct LinkGains {
    RVector signal;  // [LK]
    RMatrix d_ul;    // [LK victim][LK interferer]
    RMatrix d_dl;    // [LK victim][LK interferer]
    RVector nmse;    // [LK]
};

/// gamma_dir * (1 - tau_p/tau_c) * log2(1 + sinr), b/s/Hz.
double se_from_sinr(double sinr, Direction d, const SystemConfig& config);

/// Closed-form SE evaluation engine for one set of channel statistics.
///
/// Per-user estimation solves are cached keyed by the user's co-pilot set,
/// so revisiting an assignment (or an assignment differing in few cells) in
/// the reassignment loop reuses the factorizations. Not safe for concurrent
/// use; give each worker its own evaluator.
class SeEvaluator {
  public:
    SeEvaluator(const ChannelStatistics& stats, const SystemConfig& config);

    /// Gains for the given assignment. The reference stays valid until the
    /// next call on this evaluator.
    const LinkGains& gains(const PilotAssignment& assignment);

    SEReport evaluate(const PilotAssignment& assignment,
                      const PowerAllocation& powers);
    SEReport evaluate(const PilotAssignment& assignment,
                      const PowerAllocation& powers, const WeightSet& weights);

    /// Network minimum of the weighted sum SE; same as evaluate().min_f.
    double network_min_f(const PilotAssignment& assignment,
                         const PowerAllocation& powers,
                         const WeightSet& weights);

    const SystemConfig& config() const { return config_; }
    const ChannelStatistics& stats() const { return stats_; }

  private:
    struct UserBlock {
        double s = 0.0;    // tr(R F^-1 R), unscaled
        double nmse = 0.0;
        RVector ul_row;    // interference this user receives, per source
        RVector dl_col;    // interference this user causes, per victim
    };

    const UserBlock& user_block(int u, const std::vector<int>& copilots);

    const ChannelStatistics& stats_;
    SystemConfig config_;
    int n_users_;
    std::vector<std::map<std::vector<int>, UserBlock>> cache_; // per user
    LinkGains gains_;
    std::vector<std::vector<int>> last_assignment_;
    bool have_gains_ = false;
};

/// Effective uplink SINR of one user (Lemma-style closed form). Convenience
/// wrapper over a throwaway evaluator; use SeEvaluator directly in loops.
double ul_sinr(int cell, int user, const ChannelStatistics& stats,
               const SystemConfig& config, const PilotAssignment& assignment,
               const PowerAllocation& powers);
double dl_sinr(int cell, int user, const ChannelStatistics& stats,
               const SystemConfig& config, const PilotAssignment& assignment,
               const PowerAllocation& powers);

/// CSV export: header `cell,user,pilot,sinr_ul,sinr_dl,se_ul,se_dl,f`.
void write_se_report_csv(const SEReport& report, std::ostream& out);

} // namespace mmimo
