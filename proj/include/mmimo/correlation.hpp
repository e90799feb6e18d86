// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mmimo/topology.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

/// Spatial correlation matrices of every user-BS link plus noise variances.
/// corr(l, k, j) is the M x M Hermitian PSD matrix of user k in cell l seen
/// from BS j; its diagonal equals the link's large-scale gain.
struct ChannelStatistics {
    int cells = 0;
    int users_per_cell = 0;
    int antennas = 0;
    double sigma2_ul = 0.0; // mW
    double sigma2_dl = 0.0; // mW
    std::vector<CMatrix> R; // [(l*K + k)*L + j]

    const CMatrix& corr(int cell, int user, int bs) const {
        return R[(static_cast<size_t>(cell) * users_per_cell + user) * cells + bs];
    }
    CMatrix& corr(int cell, int user, int bs) {
        return R[(static_cast<size_t>(cell) * users_per_cell + user) * cells + bs];
    }
    int total_users() const { return cells * users_per_cell; }
    void resize(int cells_, int users_per_cell_, int antennas_);
};

/// Exponential correlation model for a uniform linear array: entry (m,n) is
/// beta * (mu e^{j theta})^(m-n) for m >= n, conjugate-symmetric above the
/// diagonal. Requires mu in [0,1); mu = 1 degenerates to a rank-1 limit and
/// is rejected.
CMatrix exp_correlation(double beta, double mu, double theta, int antennas);

/// Assemble the full statistics of a scenario from the exponential model.
ChannelStatistics build_statistics(const NetworkScenario& scenario);

} // namespace mmimo
