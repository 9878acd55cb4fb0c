#include "sparselab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "sparselab/prng.hpp"
#include "sparselab/recovery.hpp"

namespace sparselab {

namespace {

constexpr uint64_t kInstanceStream = stream_tag("instance");
constexpr uint64_t kRecoveryStream = stream_tag("recovery");
constexpr uint64_t kTrialStream = stream_tag("trial");
constexpr double kZeroBenchmarkTol = 1e-9;

double norm_p(const SignalVector& x, int p) {
    double acc = 0.0;
    if (p == 1) {
        for (double v : x) acc += std::fabs(v);
        return acc;
    }
    for (double v : x) acc += v * v;
    return std::sqrt(acc);
}

double err_p(const SignalVector& a, const SignalVector& b, int p) {
    double acc = 0.0;
    if (p == 1) {
        for (size_t i = 0; i < a.size(); ++i) acc += std::fabs(a[i] - b[i]);
        return acc;
    }
    for (size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(acc);
}

uint32_t worker_count(uint32_t jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("SPARSELAB_JOBS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<uint32_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

double nearest_rank(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const size_t rank = static_cast<size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

// ratio + success against the exact tail benchmark, with the zero-benchmark
// convention: success means the absolute error stays below a relative
// tolerance of the signal norm
void score(TrialReport& rep, const SignalVector& x, const SignalVector& estimate, int p,
           double threshold, uint64_t k) {
    const double bench = tail_err(x, k, p);
    const double err = err_p(estimate, x, p);
    if (bench == 0.0) {
        rep.zero_benchmark = true;
        rep.ratio = err;
        rep.success = err <= kZeroBenchmarkTol * norm_p(x, p);
    } else {
        rep.ratio = err / bench;
        rep.success = rep.ratio <= threshold;
    }
}

}  // namespace

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::l2_top2k: return "l2_top2k";
        case Scheme::l2_topk: return "l2_topk";
        case Scheme::l1_multiscale: return "l1_multiscale";
        case Scheme::cs_pointwise: return "cs_pointwise";
        case Scheme::null_baseline: return "null";
    }
    return "unknown";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "l2_top2k") return Scheme::l2_top2k;
    if (name == "l2_topk") return Scheme::l2_topk;
    if (name == "l1_multiscale") return Scheme::l1_multiscale;
    if (name == "cs_pointwise") return Scheme::cs_pointwise;
    if (name == "null") return Scheme::null_baseline;
    throw std::invalid_argument("unknown scheme: " + name);
}

TrialReport run_trial(const InstanceSpec& spec, Scheme scheme, const SchemeParams& params,
                      uint64_t trial_seed) {
    if (params.k < 1) throw std::invalid_argument("run_trial: k must be >= 1");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
        throw std::invalid_argument("run_trial: epsilon must be in (0,1)");

    InstanceSpec local = spec;
    local.k = params.k;

    TrialReport rep;
    rep.scheme = scheme;
    rep.instance_kind = spec.kind;
    rep.n = local.n;
    rep.k = params.k;
    rep.epsilon = params.epsilon;
    rep.instance_seed = derive64(trial_seed, kInstanceStream, 0, 0);
    rep.recovery_seed = derive64(trial_seed, kRecoveryStream, 0, 0);

    const Instance inst = make_instance(local, rep.instance_seed);
    const SignalVector& x = inst.signal;

    const auto started = std::chrono::steady_clock::now();
    switch (scheme) {
        case Scheme::l2_top2k:
        case Scheme::l2_topk: {
            const RecoveryOutput out =
                scheme == Scheme::l2_top2k
                    ? recover_l2_top2k(x, params.k, params.epsilon, rep.recovery_seed)
                    : recover_l2_topk(x, params.k, params.epsilon, rep.recovery_seed);
            rep.measurements = out.total_measurements;
            score(rep, x, out.estimate, 2, 1.0 + params.epsilon, params.k);
            break;
        }
        case Scheme::l1_multiscale: {
            const L1Params lp = L1Params::make(params.k, params.epsilon, local.n,
                                               rep.recovery_seed, params.c3, params.c1);
            const RecoveryOutput out = recover_l1_multiscale(x, lp);
            rep.measurements = out.total_measurements;
            score(rep, x, out.estimate, 1, 1.0 + params.epsilon, params.k);
            break;
        }
        case Scheme::cs_pointwise: {
            SketchConfig cfg;
            cfg.n = local.n;
            cfg.buckets = params.sketch_width.value_or(static_cast<uint64_t>(
                std::ceil(2.0 * static_cast<double>(params.k) / params.epsilon)));
            cfg.rows = params.sketch_rows.value_or(SketchConfig::default_rows(local.n, params.c1));
            cfg.master_seed = rep.recovery_seed;
            const CountSketch sk = CountSketch::from_vector(cfg, x);
            const SignalVector est = sk.estimate_all();
            double worst_sq = 0.0;
            for (uint64_t i = 0; i < local.n; ++i) {
                const double e = est[i] - x[i];
                worst_sq = std::max(worst_sq, e * e);
            }
            const double bench = tail_err(x, cfg.buckets, 2);
            rep.measurements = cfg.measurement_count();
            if (bench == 0.0) {
                rep.zero_benchmark = true;
                rep.ratio = std::sqrt(worst_sq);
                rep.success = rep.ratio <= kZeroBenchmarkTol * norm_p(x, 2);
            } else {
                rep.ratio = worst_sq / (bench * bench / static_cast<double>(cfg.buckets));
                rep.success = rep.ratio <= 1.0;
            }
            break;
        }
        case Scheme::null_baseline: {
            const SignalVector zero(local.n, 0.0);
            rep.measurements = 0;
            score(rep, x, zero, 1, 1.0 + params.epsilon, params.k);
            break;
        }
    }
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
    if (config.ns.empty() || config.ks.empty() || config.epsilons.empty())
        throw std::invalid_argument("run_experiment: empty sweep grid");

    std::vector<GridPoint> grid;
    for (uint64_t n : config.ns)
        for (uint64_t k : config.ks)
            for (double eps : config.epsilons) grid.push_back(GridPoint{n, k, eps});

    ExperimentReport report;
    report.config = config;
    report.trials.resize(grid.size() * config.trials);

    const uint32_t workers =
        std::min<uint32_t>(worker_count(config.jobs),
                           static_cast<uint32_t>(std::min<size_t>(report.trials.size(), 1u << 16)));
    std::atomic<size_t> next{0};
    auto run_range = [&]() {
        while (true) {
            const size_t task = next.fetch_add(1);
            if (task >= report.trials.size()) break;
            const size_t g = task / config.trials;
            const uint32_t t = static_cast<uint32_t>(task % config.trials);
            InstanceSpec spec = config.instance;
            spec.n = grid[g].n;
            SchemeParams params;
            params.epsilon = grid[g].epsilon;
            params.k = grid[g].k;
            params.c1 = config.c1;
            params.c3 = config.c3;
            const uint64_t trial_seed = derive64(config.master_seed, kTrialStream, g, t);
            report.trials[task] = run_trial(spec, config.scheme, params, trial_seed);
        }
    };
    if (workers <= 1) {
        run_range();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (uint32_t i = 0; i < workers; ++i) pool.emplace_back(run_range);
        for (auto& th : pool) th.join();
    }

    for (size_t g = 0; g < grid.size(); ++g) {
        Aggregate agg;
        agg.point = grid[g];
        agg.trials = config.trials;
        std::vector<double> ratios;
        ratios.reserve(config.trials);
        double meas = 0.0;
        for (uint32_t t = 0; t < config.trials; ++t) {
            const TrialReport& rep = report.trials[g * config.trials + t];
            if (rep.success) ++agg.successes;
            ratios.push_back(rep.ratio);
            meas += static_cast<double>(rep.measurements);
        }
        std::sort(ratios.begin(), ratios.end());
        agg.success_rate = static_cast<double>(agg.successes) / config.trials;
        std::tie(agg.wilson_low, agg.wilson_high) = wilson_interval(agg.successes, agg.trials);
        agg.ratio_p50 = nearest_rank(ratios, 0.50);
        agg.ratio_p90 = nearest_rank(ratios, 0.90);
        agg.ratio_p99 = nearest_rank(ratios, 0.99);
        agg.mean_measurements = meas / config.trials;
        report.aggregates.push_back(agg);
    }
    return report;
}

std::pair<double, double> wilson_interval(uint32_t successes, uint32_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double nt = trials;
    const double p = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = p + z2 / (2.0 * nt);
    const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
    const double low = successes == 0 ? 0.0 : std::max(0.0, (center - half) / denom);
    const double high = successes == trials ? 1.0 : std::min(1.0, (center + half) / denom);
    return {low, high};
}

std::string report_to_csv(const ExperimentReport& report, bool mask_wall_time) {
    std::string out =
        "scheme,n,k,epsilon,instance_kind,instance_seed,recovery_seed,ratio,success,"
        "measurements,wall_time\n";
    char buf[256];
    for (const TrialReport& t : report.trials) {
        std::snprintf(buf, sizeof(buf), "%s,%llu,%llu,%.17g,%s,%llu,%llu,%.17g,%d,%llu,%.6f\n",
                      to_string(t.scheme), static_cast<unsigned long long>(t.n),
                      static_cast<unsigned long long>(t.k), t.epsilon,
                      to_string(t.instance_kind),
                      static_cast<unsigned long long>(t.instance_seed),
                      static_cast<unsigned long long>(t.recovery_seed), t.ratio,
                      t.success ? 1 : 0, static_cast<unsigned long long>(t.measurements),
                      mask_wall_time ? 0.0 : t.wall_time);
        out += buf;
    }
    return out;
}

nlohmann::json ExperimentConfig::to_json() const {
    return nlohmann::json{{"scheme", std::string(sparselab::to_string(scheme))},
                          {"instance", instance.to_json()},
                          {"ns", ns},
                          {"ks", ks},
                          {"epsilons", epsilons},
                          {"trials", trials},
                          {"master_seed", master_seed},
                          {"c1", c1},
                          {"c3", c3},
                          {"jobs", jobs}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    c.instance = InstanceSpec::from_json(j.at("instance"));
    c.ns = j.at("ns").get<std::vector<uint64_t>>();
    c.ks = j.at("ks").get<std::vector<uint64_t>>();
    c.epsilons = j.at("epsilons").get<std::vector<double>>();
    c.trials = j.at("trials").get<uint32_t>();
    c.master_seed = j.at("master_seed").get<uint64_t>();
    c.c1 = j.value("c1", 5.0);
    c.c3 = j.value("c3", 1.0);
    c.jobs = j.value("jobs", 0u);
    return c;
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json trials = nlohmann::json::array();
    for (const TrialReport& t : report.trials) {
        trials.push_back({{"scheme", std::string(to_string(t.scheme))},
                          {"instance_kind", std::string(to_string(t.instance_kind))},
                          {"n", t.n},
                          {"k", t.k},
                          {"epsilon", t.epsilon},
                          {"instance_seed", t.instance_seed},
                          {"recovery_seed", t.recovery_seed},
                          {"ratio", t.ratio},
                          {"success", t.success},
                          {"zero_benchmark", t.zero_benchmark},
                          {"measurements", t.measurements},
                          {"wall_time", t.wall_time}});
    }
    nlohmann::json aggs = nlohmann::json::array();
    for (const Aggregate& a : report.aggregates) {
        aggs.push_back({{"n", a.point.n},
                        {"k", a.point.k},
                        {"epsilon", a.point.epsilon},
                        {"trials", a.trials},
                        {"successes", a.successes},
                        {"success_rate", a.success_rate},
                        {"wilson_low", a.wilson_low},
                        {"wilson_high", a.wilson_high},
                        {"ratio_p50", a.ratio_p50},
                        {"ratio_p90", a.ratio_p90},
                        {"ratio_p99", a.ratio_p99},
                        {"mean_measurements", a.mean_measurements}});
    }
    return nlohmann::json{{"schema", report.schema},
                          {"config", report.config.to_json()},
                          {"trials", std::move(trials)},
                          {"aggregates", std::move(aggs)}};
}

ExperimentReport report_from_json(const nlohmann::json& j) {
    ExperimentReport r;
    r.schema = j.at("schema").get<std::string>();
    r.config = ExperimentConfig::from_json(j.at("config"));
    for (const auto& t : j.at("trials")) {
        TrialReport rep;
        rep.scheme = scheme_from_string(t.at("scheme").get<std::string>());
        rep.instance_kind = instance_kind_from_string(t.at("instance_kind").get<std::string>());
        rep.n = t.at("n").get<uint64_t>();
        rep.k = t.at("k").get<uint64_t>();
        rep.epsilon = t.at("epsilon").get<double>();
        rep.instance_seed = t.at("instance_seed").get<uint64_t>();
        rep.recovery_seed = t.at("recovery_seed").get<uint64_t>();
        rep.ratio = t.at("ratio").get<double>();
        rep.success = t.at("success").get<bool>();
        rep.zero_benchmark = t.at("zero_benchmark").get<bool>();
        rep.measurements = t.at("measurements").get<uint64_t>();
        rep.wall_time = t.at("wall_time").get<double>();
        r.trials.push_back(rep);
    }
    for (const auto& a : j.at("aggregates")) {
        Aggregate agg;
        agg.point.n = a.at("n").get<uint64_t>();
        agg.point.k = a.at("k").get<uint64_t>();
        agg.point.epsilon = a.at("epsilon").get<double>();
        agg.trials = a.at("trials").get<uint32_t>();
        agg.successes = a.at("successes").get<uint32_t>();
        agg.success_rate = a.at("success_rate").get<double>();
        agg.wilson_low = a.at("wilson_low").get<double>();
        agg.wilson_high = a.at("wilson_high").get<double>();
        agg.ratio_p50 = a.at("ratio_p50").get<double>();
        agg.ratio_p90 = a.at("ratio_p90").get<double>();
        agg.ratio_p99 = a.at("ratio_p99").get<double>();
        agg.mean_measurements = a.at("mean_measurements").get<double>();
        r.aggregates.push_back(agg);
    }
    return r;
}

}  // namespace sparselab
