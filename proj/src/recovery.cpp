#include "sparselab/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sparselab/prng.hpp"

namespace sparselab {

namespace {

constexpr uint64_t kSubsampleStream = stream_tag("subsample");
constexpr uint64_t kLevelStream = stream_tag("level");

// magnitude descending, index ascending on ties
bool magnitude_before(const SignalVector& x, uint64_t a, uint64_t b) {
    const double ma = std::fabs(x[a]);
    const double mb = std::fabs(x[b]);
    if (ma != mb) return ma > mb;
    return a < b;
}

}  // namespace

double tail_err(const SignalVector& x, uint64_t k, int p) {
    if (p != 1 && p != 2) throw std::invalid_argument("tail_err: p must be 1 or 2");
    const uint64_t n = x.size();
    if (k >= n) return 0.0;
    std::vector<double> mags(n);
    for (uint64_t i = 0; i < n; ++i) mags[i] = std::fabs(x[i]);
    std::nth_element(mags.begin(), mags.begin() + (n - k - 1), mags.end());
    // mags[0 .. n-k-1] now hold the n-k smallest magnitudes
    std::sort(mags.begin(), mags.begin() + (n - k));
    double acc = 0.0;
    if (p == 1) {
        for (uint64_t i = 0; i < n - k; ++i) acc += mags[i];
        return acc;
    }
    for (uint64_t i = 0; i < n - k; ++i) acc += mags[i] * mags[i];
    return std::sqrt(acc);
}

std::vector<uint64_t> top_t_support(const SignalVector& x, uint64_t t) {
    const uint64_t n = x.size();
    const uint64_t take = std::min(t, n);
    std::vector<uint64_t> idx(n);
    std::iota(idx.begin(), idx.end(), uint64_t{0});
    std::partial_sort(idx.begin(), idx.begin() + take, idx.end(),
                      [&x](uint64_t a, uint64_t b) { return magnitude_before(x, a, b); });
    idx.resize(take);
    std::sort(idx.begin(), idx.end());
    return idx;
}

nlohmann::json RecoveryOutput::to_json(const nlohmann::json& params) const {
    nlohmann::json sparse = nlohmann::json::array();
    for (uint64_t i : support) sparse.push_back({i, estimate[i]});
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& lv : per_level) {
        levels.push_back({{"level", lv.level},
                          {"sample_probability", lv.sample_probability},
                          {"selected", lv.selected},
                          {"measurements", lv.measurements}});
    }
    return nlohmann::json{{"estimate_sparse", std::move(sparse)},
                          {"support", support},
                          {"per_level", std::move(levels)},
                          {"total_measurements", total_measurements},
                          {"seed", master_seed},
                          {"params", params}};
}

namespace {

RecoveryOutput recover_l2_threshold(const SignalVector& x, uint64_t k, double epsilon,
                                    uint64_t master_seed, uint64_t select) {
    const uint64_t n = x.size();
    if (k < 1) throw std::invalid_argument("recover_l2: k must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("recover_l2: epsilon must be in (0,1)");
    if (2 * k > n) throw std::invalid_argument("recover_l2: need 2k <= n");

    SketchConfig cfg;
    cfg.n = n;
    cfg.buckets = static_cast<uint64_t>(std::ceil(2.0 * static_cast<double>(k) / epsilon));
    cfg.rows = SketchConfig::default_rows(n);
    cfg.master_seed = master_seed;

    const CountSketch sk = CountSketch::from_vector(cfg, x);
    const SignalVector est = sk.estimate_all();

    RecoveryOutput out;
    out.master_seed = master_seed;
    out.total_measurements = cfg.measurement_count();
    out.support = top_t_support(est, select);
    out.estimate.assign(n, 0.0);
    for (uint64_t i : out.support) out.estimate[i] = est[i];
    return out;
}

}  // namespace

RecoveryOutput recover_l2_top2k(const SignalVector& x, uint64_t k, double epsilon,
                                uint64_t master_seed) {
    return recover_l2_threshold(x, k, epsilon, master_seed, 2 * k);
}

RecoveryOutput recover_l2_topk(const SignalVector& x, uint64_t k, double epsilon,
                               uint64_t master_seed) {
    return recover_l2_threshold(x, k, epsilon, master_seed, k);
}

std::vector<uint64_t> subsample_mask(uint64_t n, uint32_t level, uint64_t master_seed) {
    if (level > 63) throw std::invalid_argument("subsample_mask: level must be <= 63");
    std::vector<uint64_t> kept;
    if (level == 0) {
        kept.resize(n);
        std::iota(kept.begin(), kept.end(), uint64_t{0});
        return kept;
    }
    kept.reserve(static_cast<size_t>(static_cast<double>(n) * std::exp2(-double(level)) * 1.2) + 16);
    for (uint64_t i = 0; i < n; ++i) {
        if ((derive64(master_seed, kSubsampleStream, level, i) >> (64 - level)) == 0)
            kept.push_back(i);
    }
    return kept;
}

SubsampledEstimate recover_subsampled(const SignalVector& x, uint32_t level, uint64_t q,
                                      uint32_t d, uint64_t master_seed) {
    if (q < 1) throw std::invalid_argument("recover_subsampled: q must be >= 1");
    if (d < 1) throw std::invalid_argument("recover_subsampled: d must be >= 1");

    SubsampledEstimate out;
    out.sample = subsample_mask(x.size(), level, master_seed);
    out.sketch_seed = derive64(master_seed, kLevelStream, level, 0);

    SketchConfig cfg;
    cfg.n = x.size();
    cfg.buckets = 2 * q;
    cfg.rows = d;
    cfg.master_seed = out.sketch_seed;
    out.measurements = cfg.measurement_count();

    CountSketch sk(cfg);
    for (uint64_t i : out.sample) {
        if (x[i] != 0.0) sk.update(i, x[i]);
    }
    out.estimates.resize(out.sample.size());
    for (size_t t = 0; t < out.sample.size(); ++t)
        out.estimates[t] = sk.estimate_coord(out.sample[t]);
    return out;
}

L1Params L1Params::make(uint64_t k, double epsilon, uint64_t n, uint64_t master_seed,
                        double c3, double c1) {
    if (k < 1) throw std::invalid_argument("L1Params: k must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("L1Params: epsilon must be in (0,1)");
    if (c3 <= 0.0) throw std::invalid_argument("L1Params: c3 must be positive");
    L1Params p;
    p.k = k;
    p.epsilon = epsilon;
    p.f = std::sqrt(epsilon);
    p.levels = static_cast<uint32_t>(std::ceil(2.0 * std::log2(1.0 / p.f)));
    p.c = c3 * std::max(1.0, static_cast<double>(p.levels) * p.levels);
    p.level_hash_size = static_cast<uint64_t>(std::ceil(p.c * static_cast<double>(k) / p.f));
    p.rows = SketchConfig::default_rows(n, c1);
    p.master_seed = master_seed;
    return p;
}

nlohmann::json L1Params::to_json() const {
    return nlohmann::json{{"k", k},           {"epsilon", epsilon},
                          {"f", f},           {"levels", levels},
                          {"c", c},           {"level_hash_size", level_hash_size},
                          {"rows", rows},     {"seed", master_seed}};
}

RecoveryOutput recover_l1_multiscale(const SignalVector& x, const L1Params& params) {
    const uint64_t n = x.size();
    const uint32_t r = params.levels;
    if (params.k < 1) throw std::invalid_argument("recover_l1_multiscale: k must be >= 1");
    const double max_select = static_cast<double>(params.k) * std::exp2(0.5 * r);
    if (max_select > static_cast<double>(n))
        throw std::invalid_argument("recover_l1_multiscale: k * 2^(r/2) must be <= n");

    RecoveryOutput out;
    out.master_seed = params.master_seed;
    out.estimate.assign(n, 0.0);
    std::vector<char> found(n, 0);

    for (uint32_t j = 0; j <= r; ++j) {
        const SubsampledEstimate lvl =
            recover_subsampled(x, j, params.level_hash_size, params.rows, params.master_seed);
        out.total_measurements += lvl.measurements;

        // candidates not claimed by an earlier level, ranked by estimate
        // magnitude (ties to the lowest index)
        std::vector<size_t> cand;
        cand.reserve(lvl.sample.size());
        for (size_t t = 0; t < lvl.sample.size(); ++t) {
            if (!found[lvl.sample[t]]) cand.push_back(t);
        }
        const uint64_t want =
            static_cast<uint64_t>(std::ceil(static_cast<double>(params.k) * std::exp2(0.5 * j)));
        const size_t take = std::min<size_t>(want, cand.size());
        std::partial_sort(cand.begin(), cand.begin() + take, cand.end(),
                          [&lvl](size_t a, size_t b) {
                              const double ma = std::fabs(lvl.estimates[a]);
                              const double mb = std::fabs(lvl.estimates[b]);
                              if (ma != mb) return ma > mb;
                              return lvl.sample[a] < lvl.sample[b];
                          });

        LevelSelection sel;
        sel.level = j;
        sel.sample_probability = std::exp2(-double(j));
        sel.measurements = lvl.measurements;
        sel.selected.reserve(take);
        for (size_t t = 0; t < take; ++t) {
            const uint64_t idx = lvl.sample[cand[t]];
            sel.selected.push_back(idx);
            out.estimate[idx] = lvl.estimates[cand[t]];
            found[idx] = 1;
        }
        std::sort(sel.selected.begin(), sel.selected.end());
        out.support.insert(out.support.end(), sel.selected.begin(), sel.selected.end());
        out.per_level.push_back(std::move(sel));
    }
    std::sort(out.support.begin(), out.support.end());
    return out;
}

}  // namespace sparselab
