#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparselab/instances.hpp"

namespace sparselab {

enum class Scheme { l2_top2k, l2_topk, l1_multiscale, cs_pointwise, null_baseline };

const char* to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

struct SchemeParams {
    double epsilon = 0.25;
    uint64_t k = 1;
    double c1 = 5.0;  // rows multiplier: d = ceil(c1 * log2 n)
    double c3 = 1.0;  // multi-scale hash-size multiplier
    std::optional<uint64_t> sketch_width;  // cs_pointwise override
    std::optional<uint32_t> sketch_rows;
};

struct TrialReport {
    Scheme scheme = Scheme::l2_top2k;
    InstanceKind instance_kind = InstanceKind::exact_sparse;
    uint64_t n = 0;
    uint64_t k = 0;
    double epsilon = 0.0;
    uint64_t instance_seed = 0;
    uint64_t recovery_seed = 0;
    double ratio = 0.0;          // error vs the exact tail benchmark; absolute
                                 // error when the benchmark is zero
    bool success = false;
    bool zero_benchmark = false;
    uint64_t measurements = 0;
    double wall_time = 0.0;      // seconds, excluded from determinism
};

struct GridPoint {
    uint64_t n = 0;
    uint64_t k = 0;
    double epsilon = 0.0;
};

struct ExperimentConfig {
    Scheme scheme = Scheme::l2_top2k;
    InstanceSpec instance;              // n and k overridden per grid point
    std::vector<uint64_t> ns;
    std::vector<uint64_t> ks;
    std::vector<double> epsilons;
    uint32_t trials = 100;
    uint64_t master_seed = 0;
    double c1 = 5.0;
    double c3 = 1.0;
    uint32_t jobs = 0;                  // 0 = hardware concurrency

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

struct Aggregate {
    GridPoint point;
    uint32_t trials = 0;
    uint32_t successes = 0;
    double success_rate = 0.0;
    double wilson_low = 0.0;    // 95% interval on the success rate
    double wilson_high = 0.0;
    double ratio_p50 = 0.0;
    double ratio_p90 = 0.0;
    double ratio_p99 = 0.0;
    double mean_measurements = 0.0;
};

struct ExperimentReport {
    std::string schema = "v1";
    ExperimentConfig config;
    std::vector<TrialReport> trials;
    std::vector<Aggregate> aggregates;
};

// Generates the instance and runs the scheme; pure given
// (spec, params, trial_seed). instance and recovery seeds are derived
// sub-streams of the trial seed.
TrialReport run_trial(const InstanceSpec& spec, Scheme scheme, const SchemeParams& params,
                      uint64_t trial_seed);

// Cartesian sweep over (n, k, epsilon) with `trials` independent seeds per
// grid point. Trials run on a worker pool; results are ordered by trial
// index so the report is deterministic.
ExperimentReport run_experiment(const ExperimentConfig& config);

// one row per trial, stable column order, LF line endings
std::string report_to_csv(const ExperimentReport& report, bool mask_wall_time);
nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

// 95% Wilson score interval for s successes out of t trials
std::pair<double, double> wilson_interval(uint32_t successes, uint32_t trials);

}  // namespace sparselab
