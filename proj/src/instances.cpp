#include "sparselab/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sparselab/prng.hpp"
#include "sparselab/recovery.hpp"

namespace sparselab {

namespace {

constexpr uint64_t kSpikeSignStream = stream_tag("spike-sign");
constexpr uint64_t kPermuteStream = stream_tag("permute");
constexpr uint64_t kSupportStream = stream_tag("support");
constexpr uint64_t kValueStream = stream_tag("value");
constexpr uint64_t kNoiseStream = stream_tag("noise");
constexpr uint64_t kZipfStream = stream_tag("zipf-sign");

double pm_one(uint64_t seed, uint64_t stream, uint64_t counter) {
    return (derive64(seed, stream, counter, 0) & 1) ? 1.0 : -1.0;
}

// in-place Fisher-Yates driven by the counter stream
void permute_values(SignalVector& x, uint64_t seed, uint64_t stream) {
    const uint64_t n = x.size();
    for (uint64_t i = n; i > 1; --i) {
        const uint64_t j = derive64(seed, stream, i, 0) % i;
        std::swap(x[i - 1], x[j]);
    }
}

// k distinct positions drawn by a partial shuffle of [0, n)
std::vector<uint64_t> random_support(uint64_t n, uint64_t k, uint64_t seed) {
    std::vector<uint64_t> idx(n);
    std::iota(idx.begin(), idx.end(), uint64_t{0});
    for (uint64_t i = 0; i < k; ++i) {
        const uint64_t j = i + derive64(seed, kSupportStream, i, 0) % (n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace

const char* to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::spike_flat: return "spike_flat";
        case InstanceKind::gaussian_channel: return "gaussian_channel";
        case InstanceKind::exact_sparse: return "exact_sparse";
        case InstanceKind::zipf_noise: return "zipf_noise";
    }
    return "unknown";
}

InstanceKind instance_kind_from_string(const std::string& name) {
    if (name == "spike_flat") return InstanceKind::spike_flat;
    if (name == "gaussian_channel") return InstanceKind::gaussian_channel;
    if (name == "exact_sparse") return InstanceKind::exact_sparse;
    if (name == "zipf_noise") return InstanceKind::zipf_noise;
    throw std::invalid_argument("unknown instance kind: " + name);
}

SignalVector gen_spike_flat(double f, double c_exponent, uint64_t n, bool permute,
                            uint64_t seed) {
    if (!(f < 1.0) || f < 0x1p-6)
        throw std::invalid_argument("gen_spike_flat: f must be in [2^-6, 1)");
    if (!(c_exponent >= 0.0 && c_exponent <= 2.0))
        throw std::invalid_argument("gen_spike_flat: c_exponent must be in [0, 2]");
    const double spike = std::pow(1.0 / f, 9.0);
    const uint64_t flat = static_cast<uint64_t>(std::ceil(std::pow(1.0 / f, 1.0 + c_exponent)));
    if (n < 1 + flat)
        throw std::invalid_argument("gen_spike_flat: n too small for 1 + ceil(1/f^(1+c)) entries");

    SignalVector x(n, 0.0);
    x[0] = spike;
    for (uint64_t i = 1; i <= flat; ++i) x[i] = pm_one(seed, kSpikeSignStream, i);
    if (permute) permute_values(x, seed, kPermuteStream);
    return x;
}

GaussianChannel gen_gaussian_channel(uint64_t n, uint64_t k, double alpha, uint64_t seed) {
    if (k > n) throw std::invalid_argument("gen_gaussian_channel: k must be <= n");
    if (!(alpha > 0.0)) throw std::invalid_argument("gen_gaussian_channel: alpha must be positive");
    GaussianChannel out;
    out.signal.assign(n, 0.0);
    for (uint64_t i : random_support(n, k, seed))
        out.signal[i] = pm_one(seed, kValueStream, i);
    const double sigma = std::sqrt(alpha * static_cast<double>(k) / static_cast<double>(n));
    out.noise.resize(n);
    for (uint64_t i = 0; i < n; ++i) out.noise[i] = sigma * normal_draw(seed, kNoiseStream, i);
    return out;
}

SignalVector gen_exact_sparse(uint64_t n, uint64_t k, double value_scale, uint64_t seed) {
    if (k > n) throw std::invalid_argument("gen_exact_sparse: k must be <= n");
    if (!(value_scale >= 1.0))
        throw std::invalid_argument("gen_exact_sparse: value_scale must be >= 1");
    SignalVector x(n, 0.0);
    for (uint64_t i : random_support(n, k, seed)) {
        const double mag = 1.0 + (value_scale - 1.0) * to_unit(derive64(seed, kValueStream, i, 1));
        x[i] = pm_one(seed, kValueStream, i) * mag;
    }
    return x;
}

SignalVector gen_zipf_noise(uint64_t n, uint64_t /*k*/, double exponent, uint64_t seed) {
    if (!(exponent > 0.0)) throw std::invalid_argument("gen_zipf_noise: exponent must be positive");
    SignalVector x(n);
    for (uint64_t i = 0; i < n; ++i)
        x[i] = pm_one(seed, kZipfStream, i) * std::pow(static_cast<double>(i + 1), -exponent);
    permute_values(x, seed, kPermuteStream);
    return x;
}

Instance make_instance(const InstanceSpec& spec, uint64_t seed) {
    Instance inst;
    inst.spec = spec;
    inst.seed = seed;
    switch (spec.kind) {
        case InstanceKind::spike_flat:
            inst.signal = gen_spike_flat(spec.f, spec.c_exponent, spec.n, spec.permute, seed);
            break;
        case InstanceKind::gaussian_channel: {
            GaussianChannel ch = gen_gaussian_channel(spec.n, spec.k, spec.alpha, seed);
            inst.signal = std::move(ch.signal);
            for (uint64_t i = 0; i < spec.n; ++i) inst.signal[i] += ch.noise[i];
            break;
        }
        case InstanceKind::exact_sparse:
            inst.signal = gen_exact_sparse(spec.n, spec.k, spec.value_scale, seed);
            break;
        case InstanceKind::zipf_noise:
            inst.signal = gen_zipf_noise(spec.n, spec.k, spec.zipf_exponent, seed);
            break;
    }
    inst.tail_err_1 = tail_err(inst.signal, spec.k, 1);
    inst.tail_err_2 = tail_err(inst.signal, spec.k, 2);
    return inst;
}

nlohmann::json InstanceSpec::to_json() const {
    return nlohmann::json{{"kind", std::string(sparselab::to_string(kind))},
                          {"n", n},
                          {"k", k},
                          {"f", f},
                          {"c_exponent", c_exponent},
                          {"alpha", alpha},
                          {"zipf_exponent", zipf_exponent},
                          {"value_scale", value_scale},
                          {"permute", permute}};
}

InstanceSpec InstanceSpec::from_json(const nlohmann::json& j) {
    InstanceSpec s;
    s.kind = instance_kind_from_string(j.at("kind").get<std::string>());
    s.n = j.at("n").get<uint64_t>();
    s.k = j.at("k").get<uint64_t>();
    s.f = j.value("f", 0.5);
    s.c_exponent = j.value("c_exponent", 1.0);
    s.alpha = j.value("alpha", 1.0);
    s.zipf_exponent = j.value("zipf_exponent", 1.0);
    s.value_scale = j.value("value_scale", 10.0);
    s.permute = j.value("permute", false);
    return s;
}

nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json nz = nlohmann::json::array();
    for (uint64_t i = 0; i < inst.signal.size(); ++i) {
        if (inst.signal[i] != 0.0) nz.push_back({i, inst.signal[i]});
    }
    return nlohmann::json{{"spec", inst.spec.to_json()},
                          {"seed", inst.seed},
                          {"nonzeros", std::move(nz)},
                          {"tail_err_1", inst.tail_err_1},
                          {"tail_err_2", inst.tail_err_2}};
}

Instance instance_from_json(const nlohmann::json& j) {
    Instance inst;
    inst.spec = InstanceSpec::from_json(j.at("spec"));
    inst.seed = j.at("seed").get<uint64_t>();
    inst.signal.assign(inst.spec.n, 0.0);
    for (const auto& pair : j.at("nonzeros")) {
        const uint64_t idx = pair.at(0).get<uint64_t>();
        if (idx >= inst.spec.n) throw std::runtime_error("instance file: index out of range");
        inst.signal[idx] = pair.at(1).get<double>();
    }
    inst.tail_err_1 = j.at("tail_err_1").get<double>();
    inst.tail_err_2 = j.at("tail_err_2").get<double>();
    return inst;
}

}  // namespace sparselab
