#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sparselab/countsketch.hpp"

namespace sparselab {

enum class InstanceKind { spike_flat, gaussian_channel, exact_sparse, zipf_noise };

const char* to_string(InstanceKind kind);
InstanceKind instance_kind_from_string(const std::string& name);

struct InstanceSpec {
    InstanceKind kind = InstanceKind::exact_sparse;
    uint64_t n = 0;
    uint64_t k = 1;
    double f = 0.5;              // spike_flat
    double c_exponent = 1.0;     // spike_flat
    double alpha = 1.0;          // gaussian_channel noise energy: E||w||^2 = alpha*k
    double zipf_exponent = 1.0;  // zipf_noise
    double value_scale = 10.0;   // exact_sparse magnitudes in [1, value_scale]
    bool permute = false;

    nlohmann::json to_json() const;
    static InstanceSpec from_json(const nlohmann::json& j);
};

// One spike of value (1/f)^9 plus ceil(1/f^{1+c}) entries of random sign
// and unit magnitude; positions lead the vector unless permute is set.
// The best 1-sparse l1 error is exactly the unit-entry count.
SignalVector gen_spike_flat(double f, double c_exponent, uint64_t n, bool permute,
                            uint64_t seed);

struct GaussianChannel {
    SignalVector signal;  // k random +-1 entries
    SignalVector noise;   // i.i.d. normal, per-coordinate variance alpha*k/n
};

GaussianChannel gen_gaussian_channel(uint64_t n, uint64_t k, double alpha, uint64_t seed);

// k random positions, magnitudes uniform in [1, value_scale], random signs
SignalVector gen_exact_sparse(uint64_t n, uint64_t k, double value_scale, uint64_t seed);

// sorted magnitudes i^-exponent (i = 1..n) at random positions with random
// signs; k is carried only for downstream tail metadata
SignalVector gen_zipf_noise(uint64_t n, uint64_t k, double exponent, uint64_t seed);

struct Instance {
    InstanceSpec spec;
    uint64_t seed = 0;
    SignalVector signal;   // gaussian_channel stores signal + noise combined
    double tail_err_1 = 0.0;  // at spec.k
    double tail_err_2 = 0.0;
};

Instance make_instance(const InstanceSpec& spec, uint64_t seed);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

}  // namespace sparselab
