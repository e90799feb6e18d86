// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>

#include "mmimo/pilot.hpp"
#include "mmimo/power.hpp"
#include "mmimo/types.hpp"

namespace mmimo {

enum class Assigner { random, greedy, ul_only, dl_only, joint, exhaustive };

const char* to_string(Assigner a);
Assigner assigner_from_string(const std::string& name);

struct ExperimentConfig {
    SystemConfig system;
    int n_drops = 1;
    uint64_t seeds = 1; // base seed; drop d runs on substream (seeds, d)
    std::vector<Assigner> assigners = {Assigner::random, Assigner::joint};
    bool power_control = false;
    bool mc_validation = false;
    uint64_t mc_draws = 100000;
    std::string output_dir = "out";
    std::vector<int> k_sweep;    // optional extra K values for the vs-K curve
    double epsilon = 1e-3;       // joint-assignment stopping accuracy
    int max_iters = 50;
    double power_tol = 1e-4;
    int alternation_rounds = 1;  // >1 alternates assignment and power control
    bool emit_reports = false;   // write per-drop SE reports and traces
    int workers = 0;             // 0 = hardware concurrency

    void validate() const;
};

struct AssignerRun {
    Assigner assigner = Assigner::random;
    SEReport report;              // final powers (optimized when PC is on)
    double min_f_fixed = 0.0;     // objective under the fixed initial powers
    AssignmentTrace trace;        // empty for one-shot assigners
    std::optional<PowerControlResult> pc_ul, pc_dl;
};

struct DropResult {
    int drop = 0;
    uint64_t seed = 0;
    std::vector<AssignerRun> runs; // one per enabled assigner, config order
};

struct KSweepPoint {
    int users_per_cell = 0;
    Assigner assigner = Assigner::joint;
    double mean_min_f = 0.0;
};

struct CampaignResult {
    ExperimentConfig config;
    std::vector<DropResult> drops;            // primary K
    std::map<std::string, double> mean_min_f; // per assigner, primary K
    std::vector<KSweepPoint> vs_k;            // includes the primary K
    std::optional<McValidationReport> mc_report;
};

/// Run every enabled assigner on every drop: build scenario and statistics,
/// fix the initial powers (uplink full power, downlink equal split), assign,
/// then optionally solve the max-min power control per direction. Drops run
/// in parallel; the aggregation order is fixed, so the result is
/// deterministic for a given config.
CampaignResult run_campaign(const ExperimentConfig& config);

/// Write convergence.csv, cdf.csv, vs_k.csv, summary.json (and power.csv,
/// mc_validation.csv, reports/ when enabled) under dir.
void emit_outputs(const CampaignResult& result, const std::string& dir);

} // namespace mmimo
