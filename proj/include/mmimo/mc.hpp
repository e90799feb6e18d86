// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "mmimo/correlation.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

/// Correlated Rayleigh channel sampler: h = A z with A A^H = R (Hermitian
/// eigendecomposition, negative eigenvalues clipped at zero within
/// 1e-10 * beta) and z standard complex Gaussian. Draw d of seed s is
/// deterministic and independent of any parallel schedule: every draw runs
/// on its own substream engine_for(s, d).
class ChannelSampler {
  public:
    explicit ChannelSampler(const ChannelStatistics& stats);

    struct Draw {
        std::vector<CVector> h;           // [(l*K+k)*L + j], channel per link
        std::vector<CVector> pilot_noise; // [L*K], CN(0, I_M) per user slot
    };

    void sample(uint64_t seed, uint64_t draw_index, Draw& out) const;
    Draw sample(uint64_t seed, uint64_t draw_index) const;

    const ChannelStatistics& stats() const { return stats_; }

  private:
    const ChannelStatistics& stats_;
    std::vector<CMatrix> factor_; // [links]
};

/// Per-draw MMSE estimates: y = tau_p * sum of co-pilot channels at the
/// serving BS + sqrt(sigma2_ul tau_p) * noise, h_hat = tau_p R F^-1 y.
class McEstimator {
  public:
    McEstimator(const ChannelStatistics& stats, const SystemConfig& config,
                const PilotAssignment& assignment);

    CVector estimate(int cell, int user, const ChannelSampler::Draw& draw) const;

  private:
    const ChannelStatistics& stats_;
    int cells_, users_per_cell_, tau_p_;
    double sigma2_ul_;
    std::vector<CMatrix> w_;                  // [LK] tau_p R F^-1
    std::vector<std::vector<int>> copilots_;  // [LK] flat co-pilot lists
};

struct TermRecord {
    std::string term;
    double closed_form = 0.0;
    double mc_estimate = 0.0;
    double rel_err = 0.0;    // |mc - cf| / |cf|; abs error when cf == 0
    double std_error = 0.0;  // standard error of the MC estimate
    uint64_t n_draws = 0;
};

struct McValidationReport {
    std::vector<TermRecord> terms;
    uint64_t n_draws = 0;
    double max_rel_err = 0.0;          // over terms with closed_form != 0
    double max_zero_term_sigmas = 0.0; // max |mc| / std_error over zero terms
    // SE agreement: closed form vs SE reassembled from MC moments.
    std::vector<double> se_ul_closed, se_ul_mc; // [LK]
    std::vector<double> se_dl_closed, se_dl_mc; // [LK]
    double max_se_rel_err = 0.0;
};

/// Estimates every expectation behind the effective-SINR formulas -- the
/// array-gain term E{||h_hat||^2}, coherent cross terms |E{h_hat^H h}|^2 and
/// noncoherent terms E{|h_hat^H h|^2}, uplink and downlink alike -- and
/// reports the relative error against the trace closed forms, plus the SE
/// values reassembled from the estimated moments.
McValidationReport
validate_sinr_terms(const ChannelStatistics& stats, const SystemConfig& config,
                    const PilotAssignment& assignment,
                    const PowerAllocation& powers, uint64_t n_draws,
                    uint64_t seed);

struct EstimationCheck {
    double cov_rel_err_fro = 0.0; // ||sample cov - Phi||_F / ||Phi||_F
    double nmse_mc = 0.0;
    double nmse_closed = 0.0;
    double orthogonality = 0.0;   // |corr(h_hat, h - h_hat)|
};

/// Empirical check of the estimate distribution for one user: sample
/// covariance vs Phi, empirical NMSE vs the closed form, and the MMSE
/// orthogonality correlation.
EstimationCheck check_estimation(const ChannelStatistics& stats,
                                 const SystemConfig& config,
                                 const PilotAssignment& assignment, int cell,
                                 int user, uint64_t n_draws, uint64_t seed);

/// CSV export: header `term,closed_form,mc_estimate,rel_err,n_draws`.
void write_validation_csv(const McValidationReport& report, std::ostream& out);

} // namespace mmimo
