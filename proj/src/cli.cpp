#include "sparselab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparselab/harness.hpp"
#include "sparselab/prng.hpp"
#include "sparselab/recovery.hpp"

namespace sparselab {

namespace {

bool write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    return static_cast<bool>(out);
}

bool read_file(const std::string& path, std::string& contents) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    contents = ss.str();
    return true;
}

int cmd_gen(const InstanceSpec& spec, uint64_t seed, const std::string& out_path) {
    Instance inst;
    try {
        inst = make_instance(spec, seed);
    } catch (const std::exception& e) {
        std::cerr << "gen: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "config: instance=" << to_string(spec.kind) << " n=" << spec.n
              << " k=" << spec.k << " seed=" << seed << "\n";
    std::cout << "tail_err_1=" << inst.tail_err_1 << " tail_err_2=" << inst.tail_err_2 << "\n";
    if (!out_path.empty()) {
        if (!write_file(out_path, instance_to_json(inst).dump(2) + "\n")) {
            std::cerr << "gen: cannot write " << out_path << "\n";
            return kExitIo;
        }
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int load_instance(const std::string& path, Instance& inst) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "cannot read " << path << "\n";
        return kExitIo;
    }
    try {
        inst = instance_from_json(nlohmann::json::parse(text));
    } catch (const std::exception& e) {
        std::cerr << "bad instance file " << path << ": " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_sketch(const std::string& in_path, uint32_t rows, uint64_t buckets, double c1,
               uint64_t seed, const std::string& out_path, const std::string& json_path) {
    Instance inst;
    if (int rc = load_instance(in_path, inst); rc != kExitOk) return rc;

    SketchConfig cfg;
    cfg.n = inst.signal.size();
    cfg.rows = rows > 0 ? rows : SketchConfig::default_rows(cfg.n, c1);
    cfg.buckets = buckets;
    cfg.master_seed = seed;
    CountSketch sk = CountSketch::from_vector(cfg, inst.signal);
    std::cout << "config: n=" << cfg.n << " rows=" << cfg.rows << " buckets=" << cfg.buckets
              << " seed=" << seed << " c1=" << c1 << "\n";
    std::cout << "measurements=" << cfg.measurement_count() << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (out) sk.write_binary(out);
        if (!out) {
            std::cerr << "sketch: cannot write " << out_path << "\n";
            return kExitIo;
        }
        std::cout << "wrote " << out_path << "\n";
    }
    if (!json_path.empty()) {
        if (!write_file(json_path, sk.debug_json().dump(2) + "\n")) {
            std::cerr << "sketch: cannot write " << json_path << "\n";
            return kExitIo;
        }
        std::cout << "wrote " << json_path << "\n";
    }
    return kExitOk;
}

int cmd_recover(const std::string& in_path, const std::string& scheme_name, uint64_t k,
                double epsilon, double c1, double c3, uint64_t seed,
                const std::string& out_path) {
    Instance inst;
    if (int rc = load_instance(in_path, inst); rc != kExitOk) return rc;
    const SignalVector& x = inst.signal;

    Scheme scheme;
    try {
        scheme = scheme_from_string(scheme_name);
    } catch (const std::exception& e) {
        std::cerr << "recover: " << e.what() << "\n";
        return kExitUsage;
    }

    std::cout << "config: scheme=" << scheme_name << " n=" << x.size() << " k=" << k
              << " epsilon=" << epsilon << " seed=" << seed << " c1=" << c1 << " c3=" << c3
              << "\n";

    RecoveryOutput out;
    nlohmann::json params;
    int p = 2;
    try {
        switch (scheme) {
            case Scheme::l2_top2k:
                out = recover_l2_top2k(x, k, epsilon, seed);
                params = {{"k", k}, {"epsilon", epsilon}, {"c1", c1}};
                break;
            case Scheme::l2_topk:
                out = recover_l2_topk(x, k, epsilon, seed);
                params = {{"k", k}, {"epsilon", epsilon}, {"c1", c1}};
                break;
            case Scheme::l1_multiscale: {
                const L1Params lp = L1Params::make(k, epsilon, x.size(), seed, c3, c1);
                out = recover_l1_multiscale(x, lp);
                params = lp.to_json();
                p = 1;
                break;
            }
            default:
                std::cerr << "recover: scheme " << scheme_name << " is not a recovery scheme\n";
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "recover: " << e.what() << "\n";
        return kExitUsage;
    }

    double err = 0.0;
    for (uint64_t i = 0; i < x.size(); ++i) {
        const double d = out.estimate[i] - x[i];
        err += (p == 1) ? std::fabs(d) : d * d;
    }
    if (p == 2) err = std::sqrt(err);
    const double bench = tail_err(x, k, p);
    std::cout << "support=" << out.support.size() << " measurements=" << out.total_measurements
              << " error_l" << p << "=" << err << " tail_err=" << bench;
    if (bench > 0.0) std::cout << " ratio=" << err / bench;
    std::cout << "\n";

    if (!out_path.empty()) {
        if (!write_file(out_path, out.to_json(params).dump(2) + "\n")) {
            std::cerr << "recover: cannot write " << out_path << "\n";
            return kExitIo;
        }
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_bench(ExperimentConfig config, const std::string& out_path, const std::string& format,
              bool mask_wall_time) {
    std::cout << "config: scheme=" << to_string(config.scheme)
              << " instance=" << to_string(config.instance.kind);
    std::cout << " n=";
    for (size_t i = 0; i < config.ns.size(); ++i) std::cout << (i ? "," : "") << config.ns[i];
    std::cout << " k=";
    for (size_t i = 0; i < config.ks.size(); ++i) std::cout << (i ? "," : "") << config.ks[i];
    std::cout << " epsilon=";
    for (size_t i = 0; i < config.epsilons.size(); ++i)
        std::cout << (i ? "," : "") << config.epsilons[i];
    std::cout << " trials=" << config.trials << " seed=" << config.master_seed
              << " c1=" << config.c1 << " c3=" << config.c3 << " jobs=" << config.jobs
              << " format=" << format << "\n";

    ExperimentReport report;
    try {
        report = run_experiment(config);
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << "\n";
        return kExitUsage;
    }

    std::printf("%8s %6s %8s | %9s %19s | %8s %8s %12s\n", "n", "k", "epsilon", "success",
                "wilson95", "p50", "p99", "measurements");
    for (const Aggregate& a : report.aggregates) {
        std::printf("%8llu %6llu %8.4g | %4u/%-4u [%.3f, %.3f] | %8.4g %8.4g %12.0f\n",
                    static_cast<unsigned long long>(a.point.n),
                    static_cast<unsigned long long>(a.point.k), a.point.epsilon, a.successes,
                    a.trials, a.wilson_low, a.wilson_high, a.ratio_p50, a.ratio_p99,
                    a.mean_measurements);
    }

    if (!out_path.empty()) {
        const std::string payload = (format == "json")
                                        ? report_to_json(report).dump(2) + "\n"
                                        : report_to_csv(report, mask_wall_time);
        if (!write_file(out_path, payload)) {
            std::cerr << "bench: cannot write " << out_path << "\n";
            return kExitIo;
        }
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

// ---- selfcheck ---------------------------------------------------------

bool check_golden(const std::string& path, std::string& detail) {
    std::ifstream in(path);
    if (!in) {
        detail = "cannot open " + path;
        return false;
    }
    std::string line;
    if (!std::getline(in, line) || line != "seed,row,index,bucket,sign") {
        detail = "golden-hash mismatch: bad header in " + path;
        return false;
    }
    uint64_t checked = 0;
    uint64_t cached_seed = 0;
    bool have_family = false;
    std::unique_ptr<HashFamily> family;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        unsigned long long seed, row, index, bucket;
        long long sign;
        if (std::sscanf(line.c_str(), "%llu,%llu,%llu,%llu,%lld", &seed, &row, &index, &bucket,
                        &sign) != 5) {
            detail = "golden-hash mismatch: unparsable row '" + line + "'";
            return false;
        }
        if (!have_family || cached_seed != seed) {
            family = std::make_unique<HashFamily>(seed, 4, 64);
            cached_seed = seed;
            have_family = true;
        }
        const uint64_t got_bucket = family->bucket_of(static_cast<uint32_t>(row), index);
        const int got_sign = family->sign_of(static_cast<uint32_t>(row), index);
        if (got_bucket != bucket || got_sign != sign) {
            std::ostringstream ss;
            ss << "golden-hash mismatch at seed=" << seed << " row=" << row << " index=" << index
               << ": got (" << got_bucket << "," << got_sign << ") want (" << bucket << ","
               << sign << ")";
            detail = ss.str();
            return false;
        }
        ++checked;
    }
    if (checked != 256) {
        detail = "golden-hash mismatch: expected 256 rows, found " + std::to_string(checked);
        return false;
    }
    return true;
}

bool check_linearity(std::string& detail) {
    const uint64_t n = 1024;
    for (uint64_t seed = 0; seed < 5; ++seed) {
        SignalVector x(n), y(n), sum(n);
        for (uint64_t i = 0; i < n; ++i) {
            x[i] = static_cast<double>(static_cast<int64_t>(derive64(seed, 11, i, 0) % 41) - 20);
            y[i] = static_cast<double>(static_cast<int64_t>(derive64(seed, 13, i, 0) % 41) - 20);
            sum[i] = x[i] + y[i];
        }
        const SketchConfig cfg{n, 20, 64, seed};
        const CountSketch merged = merge(CountSketch::from_vector(cfg, x),
                                         CountSketch::from_vector(cfg, y));
        const CountSketch direct = CountSketch::from_vector(cfg, sum);
        const auto ta = merged.tables();
        const auto tb = direct.tables();
        for (size_t i = 0; i < ta.size(); ++i) {
            if (ta[i] != tb[i]) {
                detail = "merged sketch differs from sketch of the sum at seed " +
                         std::to_string(seed);
                return false;
            }
        }
    }
    return true;
}

bool check_estimate_oracle(std::string& detail) {
    const uint64_t n = 256;
    for (uint64_t seed = 100; seed < 105; ++seed) {
        SignalVector x(n);
        for (uint64_t i = 0; i < n; ++i)
            x[i] = (derive64(seed, 17, i, 0) & 1) ? 1.0 : -1.0;
        const SketchConfig cfg{n, 40, 64, seed};
        const CountSketch sk = CountSketch::from_vector(cfg, x);
        const SignalVector est = sk.estimate_all();
        for (uint64_t i = 0; i < n; ++i) {
            std::vector<double> reads;
            for (uint32_t r = 0; r < cfg.rows; ++r)
                reads.push_back(sk.family().sign_of(r, i) *
                                sk.table_at(r, sk.family().bucket_of(r, i)));
            std::sort(reads.begin(), reads.end());
            const double med = (reads[19] + reads[20]) / 2.0;
            if (est[i] != med || est[i] != sk.estimate_coord(i)) {
                detail = "estimate mismatch vs per-row median at seed " + std::to_string(seed) +
                         " index " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool check_tail_brute(std::string& detail) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const uint64_t n = 4 + derive64(seed, 19, 0, 0) % 9;  // 4..12
        SignalVector x(n);
        for (uint64_t i = 0; i < n; ++i)
            x[i] = static_cast<double>(static_cast<int64_t>(derive64(seed, 23, i, 0) % 19) - 9);
        for (uint64_t k = 0; k <= std::min<uint64_t>(4, n); ++k) {
            for (int p : {1, 2}) {
                // best k-subset by exhaustive enumeration
                double best = -1.0;
                for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                    if (static_cast<uint64_t>(__builtin_popcountll(mask)) != std::min(k, n))
                        continue;
                    double acc = 0.0;
                    for (uint64_t i = 0; i < n; ++i) {
                        if (mask & (uint64_t{1} << i)) continue;
                        acc += (p == 1) ? std::fabs(x[i]) : x[i] * x[i];
                    }
                    if (p == 2) acc = std::sqrt(acc);
                    if (best < 0.0 || acc < best) best = acc;
                }
                if (tail_err(x, k, p) != best) {
                    detail = "tail_err disagrees with brute force at seed " +
                             std::to_string(seed) + " k=" + std::to_string(k) +
                             " p=" + std::to_string(p);
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_merge_estimates(std::string& detail) {
    const uint64_t n = 64;
    SignalVector x(n, 0.0), y(n, 0.0), sum(n, 0.0);
    for (uint64_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>((i * 7) % 11) - 5.0;
        y[i] = static_cast<double>((i * 13) % 9) - 4.0;
        sum[i] = x[i] + y[i];
    }
    const SketchConfig cfg{n, 15, 32, 12345};
    const CountSketch m = merge(CountSketch::from_vector(cfg, x), CountSketch::from_vector(cfg, y));
    const CountSketch d = CountSketch::from_vector(cfg, sum);
    for (uint64_t i = 0; i < n; ++i) {
        if (m.estimate_coord(i) != d.estimate_coord(i)) {
            detail = "merged estimates differ from sketch of the sum";
            return false;
        }
    }
    return true;
}

bool check_pointwise_bound(std::string& detail) {
    const uint64_t n = 256;
    const uint64_t w = 64;
    uint32_t pass = 0;
    for (uint64_t seed = 0; seed < 30; ++seed) {
        SignalVector x(n);
        for (uint64_t i = 0; i < n; ++i) x[i] = (derive64(seed, 29, i, 0) & 1) ? 1.0 : -1.0;
        const SketchConfig cfg{n, SketchConfig::default_rows(n), w, seed};
        const SignalVector est = CountSketch::from_vector(cfg, x).estimate_all();
        double worst = 0.0;
        for (uint64_t i = 0; i < n; ++i)
            worst = std::max(worst, (est[i] - x[i]) * (est[i] - x[i]));
        const double bench = tail_err(x, w, 2);
        if (worst <= bench * bench / static_cast<double>(w)) ++pass;
    }
    if (pass < 27) {
        detail = "pointwise estimate bound held in only " + std::to_string(pass) + "/30 runs";
        return false;
    }
    return true;
}

bool check_sparse_recovery(std::string& detail) {
    uint32_t pass = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const SignalVector x = gen_exact_sparse(256, 4, 10.0, derive64(seed, 31, 0, 0));
        const RecoveryOutput out = recover_l2_top2k(x, 4, 0.5, derive64(seed, 37, 0, 0));
        double err = 0.0;
        for (uint64_t i = 0; i < x.size(); ++i)
            err += (out.estimate[i] - x[i]) * (out.estimate[i] - x[i]);
        if (std::sqrt(err) <= 1e-9) ++pass;
    }
    if (pass < 19) {
        detail = "exact sparse recovery succeeded in only " + std::to_string(pass) + "/20 runs";
        return false;
    }
    return true;
}

int cmd_selfcheck(bool fast, const std::string& golden_path) {
    std::string detail;

    if (!std::ifstream(golden_path)) {
        std::cerr << "selfcheck: cannot open golden file " << golden_path << "\n";
        return kExitIo;
    }
    bool ok = true;
    auto report = [&](const char* name, bool passed, const std::string& why) {
        if (passed) {
            std::cout << "ok " << name << "\n";
        } else {
            std::cout << "FAIL " << name << ": " << why << "\n";
            ok = false;
        }
    };

    report("golden-hash", check_golden(golden_path, detail), detail);
    report("linearity", check_linearity(detail), detail);
    report("estimate-all-oracle", check_estimate_oracle(detail), detail);
    report("tail-err-brute-force", check_tail_brute(detail), detail);
    report("merge-estimates", check_merge_estimates(detail), detail);
    if (!fast) {
        report("pointwise-bound", check_pointwise_bound(detail), detail);
        report("exact-sparse-recovery", check_sparse_recovery(detail), detail);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"sparselab: sketch-based sparse recovery toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a test instance file");
    std::string gen_kind = "exact_sparse";
    InstanceSpec spec;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--instance", gen_kind, "spike_flat|gaussian_channel|exact_sparse|zipf_noise");
    gen->add_option("--n", spec.n, "dimension")->required();
    gen->add_option("--k", spec.k, "sparsity (metadata for tail errors)");
    gen->add_option("--f", spec.f, "spike_flat decay parameter");
    gen->add_option("--c-exp", spec.c_exponent, "spike_flat tail exponent in [0,2]");
    gen->add_option("--alpha", spec.alpha, "gaussian_channel noise energy");
    gen->add_option("--zipf-exponent", spec.zipf_exponent, "zipf_noise exponent");
    gen->add_option("--value-scale", spec.value_scale, "exact_sparse magnitude bound");
    gen->add_flag("--permute", spec.permute, "spread support uniformly at random");
    gen->add_option("--seed", gen_seed, "instance seed")->required();
    gen->add_option("--out", gen_out, "output instance JSON path");

    // sketch
    auto* sketch = app.add_subcommand("sketch", "sketch an instance file");
    std::string sketch_in, sketch_out, sketch_json;
    uint32_t sketch_rows = 0;
    uint64_t sketch_buckets = 0;
    uint64_t sketch_seed = 0;
    double sketch_c1 = 5.0;
    sketch->add_option("--in", sketch_in, "instance JSON path")->required();
    sketch->add_option("--rows", sketch_rows, "rows (default ceil(c1 log2 n))");
    sketch->add_option("--buckets", sketch_buckets, "buckets per row")->required();
    sketch->add_option("--seed", sketch_seed, "sketch seed")->required();
    sketch->add_option("--c1", sketch_c1, "rows multiplier");
    sketch->add_option("--out", sketch_out, "binary sketch output path");
    sketch->add_option("--json-out", sketch_json, "debug JSON output path");

    // recover
    auto* recover = app.add_subcommand("recover", "run a recovery scheme on an instance file");
    std::string rec_in, rec_scheme = "l2_top2k", rec_out;
    uint64_t rec_k = 1, rec_seed = 0;
    double rec_eps = 0.25, rec_c1 = 5.0, rec_c3 = 1.0;
    recover->add_option("--in", rec_in, "instance JSON path")->required();
    recover->add_option("--scheme", rec_scheme, "l2_top2k|l2_topk|l1_multiscale");
    recover->add_option("--k", rec_k, "sparsity")->required();
    recover->add_option("--epsilon", rec_eps, "accuracy target")->required();
    recover->add_option("--seed", rec_seed, "recovery seed")->required();
    recover->add_option("--c1", rec_c1, "rows multiplier");
    recover->add_option("--c3", rec_c3, "multi-scale hash multiplier");
    recover->add_option("--out", rec_out, "recovery output JSON path");

    // bench
    auto* bench = app.add_subcommand("bench", "Monte-Carlo sweep");
    ExperimentConfig config;
    std::string bench_scheme = "l2_top2k";
    std::string bench_kind = "zipf_noise", bench_out, bench_format = "csv", params_file;
    bool mask_wall_time = false;
    bool bench_permute = false;
    bench->add_option("--scheme", bench_scheme, "l2_top2k|l2_topk|l1_multiscale|cs_pointwise|null");
    bench->add_option("--instance", bench_kind, "instance kind");
    bench->add_option("--n", config.ns, "dimensions (repeatable)");
    bench->add_option("--k", config.ks, "sparsities (repeatable)");
    bench->add_option("--epsilon", config.epsilons, "accuracy targets (repeatable)");
    bench->add_option("--trials", config.trials, "trials per grid point");
    auto* seed_opt = bench->add_option("--seed", config.master_seed, "master seed (required)");
    bench->add_option("--c1", config.c1, "rows multiplier");
    bench->add_option("--c3", config.c3, "multi-scale hash multiplier");
    bench->add_option("--jobs", config.jobs, "worker threads (default SPARSELAB_JOBS or cores)");
    bench->add_option("--f", config.instance.f, "spike_flat decay parameter");
    bench->add_option("--c-exp", config.instance.c_exponent, "spike_flat tail exponent");
    bench->add_option("--alpha", config.instance.alpha, "gaussian_channel noise energy");
    bench->add_option("--zipf-exponent", config.instance.zipf_exponent, "zipf_noise exponent");
    bench->add_option("--value-scale", config.instance.value_scale, "exact_sparse magnitudes");
    bench->add_flag("--permute", bench_permute, "spread instance support randomly");
    bench->add_option("--out", bench_out, "report output path");
    bench->add_option("--format", bench_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_flag("--mask-wall-time", mask_wall_time, "write wall_time as 0 in CSV output");
    bench->add_option("--params-file", params_file, "JSON experiment config (overrides flags)");

    // selfcheck
    auto* selfcheck = app.add_subcommand("selfcheck", "run the fast invariant suite");
    bool fast = false;
    std::string golden_path = "tests/data/golden_hashes.csv";
    selfcheck->add_flag("--fast", fast, "skip Monte-Carlo checks");
    selfcheck->add_option("--golden", golden_path, "golden hash CSV path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            spec.kind = instance_kind_from_string(gen_kind);
            return cmd_gen(spec, gen_seed, gen_out);
        }
        if (sketch->parsed())
            return cmd_sketch(sketch_in, sketch_rows, sketch_buckets, sketch_c1, sketch_seed,
                              sketch_out, sketch_json);
        if (recover->parsed())
            return cmd_recover(rec_in, rec_scheme, rec_k, rec_eps, rec_c1, rec_c3, rec_seed,
                               rec_out);
        if (bench->parsed()) {
            bool have_seed = seed_opt->count() > 0;
            if (!params_file.empty()) {
                std::string text;
                if (!read_file(params_file, text)) {
                    std::cerr << "bench: cannot read " << params_file << "\n";
                    return kExitIo;
                }
                config = ExperimentConfig::from_json(nlohmann::json::parse(text));
                have_seed = true;
            } else {
                config.scheme = scheme_from_string(bench_scheme);
                config.instance.kind = instance_kind_from_string(bench_kind);
                config.instance.permute = bench_permute;
                if (config.ns.empty()) config.ns.push_back(4096);
                if (config.ks.empty()) config.ks.push_back(10);
                if (config.epsilons.empty()) config.epsilons.push_back(0.25);
            }
            if (!have_seed) {
                std::cerr << "bench: --seed is required (no silent nondeterminism)\n";
                return kExitUsage;
            }
            return cmd_bench(config, bench_out, bench_format, mask_wall_time);
        }
        if (selfcheck->parsed()) return cmd_selfcheck(fast, golden_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args);
}

}  // namespace sparselab
