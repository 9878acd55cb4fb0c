#include "sparselab/countsketch.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace sparselab {

namespace {

constexpr char kMagic[4] = {'C', 'S', 'K', '1'};
constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& out, uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("sketch deserialize: truncated input");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
}

uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("sketch deserialize: truncated input");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

uint64_t double_bits(double d) {
    uint64_t u;
    std::memcpy(&u, &d, sizeof(u));
    return u;
}

double bits_double(uint64_t u) {
    double d;
    std::memcpy(&d, &u, sizeof(d));
    return d;
}

}  // namespace

void SketchConfig::validate() const {
    if (n == 0) throw std::invalid_argument("SketchConfig: n must be >= 1");
    if (rows == 0) throw std::invalid_argument("SketchConfig: rows must be >= 1");
    if (buckets == 0) throw std::invalid_argument("SketchConfig: buckets must be >= 1");
}

uint32_t SketchConfig::default_rows(uint64_t n, double c1) {
    const double d = std::ceil(c1 * std::log2(static_cast<double>(n)));
    return d < 1.0 ? 1u : static_cast<uint32_t>(d);
}

CountSketch::CountSketch(const SketchConfig& config)
    : config_((config.validate(), config)),
      family_(config.master_seed, config.rows, config.buckets),
      tables_(static_cast<size_t>(config.rows) * config.buckets, 0.0) {}

CountSketch CountSketch::from_vector(const SketchConfig& config, const SignalVector& x) {
    CountSketch sk(config);
    sk.add_vector(x);
    return sk;
}

void CountSketch::update(uint64_t index, double delta) {
    if (index >= config_.n) throw std::out_of_range("CountSketch::update: index >= n");
    if (!std::isfinite(delta)) throw std::invalid_argument("CountSketch::update: delta must be finite");
    for (uint32_t r = 0; r < config_.rows; ++r) {
        const uint64_t b = family_.bucket_of(r, index);
        tables_[static_cast<size_t>(r) * config_.buckets + b] +=
            static_cast<double>(family_.sign_of(r, index)) * delta;
    }
}

void CountSketch::add_vector(const SignalVector& x) {
    if (x.size() != config_.n) throw std::invalid_argument("CountSketch::add_vector: dimension mismatch");
    for (uint64_t i = 0; i < config_.n; ++i) {
        if (x[i] != 0.0) update(i, x[i]);
    }
}

double median_inplace(std::span<double> scratch) {
    const size_t n = scratch.size();
    const size_t mid = n / 2;
    std::nth_element(scratch.begin(), scratch.begin() + mid, scratch.end());
    const double hi = scratch[mid];
    if (n % 2 == 1) return hi;
    const double lo = *std::max_element(scratch.begin(), scratch.begin() + mid);
    return (lo + hi) / 2.0;
}

double CountSketch::estimate_coord(uint64_t index) const {
    if (index >= config_.n) throw std::out_of_range("CountSketch::estimate_coord: index >= n");
    std::vector<double> reads(config_.rows);
    for (uint32_t r = 0; r < config_.rows; ++r) {
        const uint64_t b = family_.bucket_of(r, index);
        reads[r] = static_cast<double>(family_.sign_of(r, index)) *
                   tables_[static_cast<size_t>(r) * config_.buckets + b];
    }
    return median_inplace(reads);
}

SignalVector CountSketch::estimate_all() const {
    SignalVector out(config_.n);
    std::vector<double> reads(config_.rows);
    for (uint64_t i = 0; i < config_.n; ++i) {
        for (uint32_t r = 0; r < config_.rows; ++r) {
            const uint64_t b = family_.bucket_of(r, i);
            reads[r] = static_cast<double>(family_.sign_of(r, i)) *
                       tables_[static_cast<size_t>(r) * config_.buckets + b];
        }
        out[i] = median_inplace(reads);
    }
    return out;
}

double CountSketch::table_at(uint32_t row, uint64_t bucket) const {
    if (row >= config_.rows || bucket >= config_.buckets)
        throw std::out_of_range("CountSketch::table_at");
    return tables_[static_cast<size_t>(row) * config_.buckets + bucket];
}

CountSketch merge(const CountSketch& a, const CountSketch& b) {
    if (!(a.config() == b.config()))
        throw std::runtime_error("merge: sketch configs are incompatible");
    CountSketch out(a.config());
    for (size_t i = 0; i < out.tables_.size(); ++i) out.tables_[i] = a.tables_[i] + b.tables_[i];
    return out;
}

void CountSketch::write_binary(std::ostream& out) const {
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u64(out, config_.n);
    put_u32(out, config_.rows);
    put_u64(out, config_.buckets);
    put_u64(out, config_.master_seed);
    for (double v : tables_) put_u64(out, double_bits(v));
}

CountSketch CountSketch::read_binary(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("sketch deserialize: bad magic");
    if (get_u32(in) != kVersion) throw std::runtime_error("sketch deserialize: unsupported version");
    SketchConfig cfg;
    cfg.n = get_u64(in);
    cfg.rows = get_u32(in);
    cfg.buckets = get_u64(in);
    cfg.master_seed = get_u64(in);
    CountSketch sk(cfg);
    for (double& v : sk.tables_) {
        v = bits_double(get_u64(in));
        if (!std::isfinite(v)) throw std::runtime_error("sketch deserialize: non-finite table entry");
    }
    return sk;
}

nlohmann::json CountSketch::debug_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (uint32_t r = 0; r < config_.rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (uint64_t b = 0; b < config_.buckets; ++b)
            row.push_back(tables_[static_cast<size_t>(r) * config_.buckets + b]);
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", config_.n},
                          {"rows", config_.rows},
                          {"buckets", config_.buckets},
                          {"seed", config_.master_seed},
                          {"tables", std::move(rows)}};
}

}  // namespace sparselab
