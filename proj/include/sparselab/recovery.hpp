#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "sparselab/countsketch.hpp"

namespace sparselab {

// l_p distance from x to its best k-sparse approximation: the norm of x
// with the k largest-magnitude entries removed (ties to the lowest index).
// p must be 1 or 2. k >= dim(x) gives 0.
double tail_err(const SignalVector& x, uint64_t k, int p);

// indices of the t largest magnitudes, ties to the lowest index,
// returned sorted ascending; size is min(t, dim(x))
std::vector<uint64_t> top_t_support(const SignalVector& x, uint64_t t);

struct LevelSelection {
    uint32_t level = 0;
    double sample_probability = 1.0;      // 2^-level
    std::vector<uint64_t> selected;       // sorted ascending
    uint64_t measurements = 0;
};

struct RecoveryOutput {
    SignalVector estimate;                // dense, support-bounded
    std::vector<uint64_t> support;        // sorted ascending
    std::vector<LevelSelection> per_level;  // empty for single-sketch schemes
    uint64_t total_measurements = 0;
    uint64_t master_seed = 0;

    nlohmann::json to_json(const nlohmann::json& params = nlohmann::json::object()) const;
};

// Single Count-Sketch with w = ceil(2k/epsilon) buckets and default rows;
// keeps the estimates on the 2k largest estimated coordinates.
RecoveryOutput recover_l2_top2k(const SignalVector& x, uint64_t k, double epsilon,
                                uint64_t master_seed);

// Same sketch, but keeps only the top k estimates. Exists as the sparse
// -output baseline for comparisons.
RecoveryOutput recover_l2_topk(const SignalVector& x, uint64_t k, double epsilon,
                               uint64_t master_seed);

// Indices kept independently with probability 2^-level, decided by a pure
// hash of (master_seed, level, index). level 0 keeps everything.
std::vector<uint64_t> subsample_mask(uint64_t n, uint32_t level, uint64_t master_seed);

struct SubsampledEstimate {
    std::vector<uint64_t> sample;   // the kept indices, ascending
    SignalVector estimates;         // aligned with sample
    uint64_t measurements = 0;
    uint64_t sketch_seed = 0;
};

// Sketches x restricted to the level's subsample with 2q buckets and d rows
// (sketch seed derived per level so levels never share randomness), then
// estimates every kept coordinate.
SubsampledEstimate recover_subsampled(const SignalVector& x, uint32_t level, uint64_t q,
                                      uint32_t d, uint64_t master_seed);

struct L1Params {
    uint64_t k = 1;
    double epsilon = 0.25;
    double f = 0.5;                 // sqrt(epsilon)
    uint32_t levels = 2;            // r = ceil(2*log2(1/f))
    double c = 4.0;                 // c3 * max(1, r^2)
    uint64_t level_hash_size = 8;   // q = ceil(c*k/f); sketches use 2q buckets
    uint32_t rows = 1;              // d per level sketch
    uint64_t master_seed = 0;

    static L1Params make(uint64_t k, double epsilon, uint64_t n, uint64_t master_seed,
                         double c3 = 1.0, double c1 = 5.0);
    nlohmann::json to_json() const;
};

// Multi-scale recovery: for levels j = 0..r, estimate the subsample kept
// with probability 2^-j and select the ceil(2^{j/2} k) largest new
// coordinates; a coordinate keeps the estimate from the level that first
// selected it. Selections across levels are disjoint.
RecoveryOutput recover_l1_multiscale(const SignalVector& x, const L1Params& params);

}  // namespace sparselab
