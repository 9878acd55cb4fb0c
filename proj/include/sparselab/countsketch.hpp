#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "sparselab/hashing.hpp"

namespace sparselab {

using SignalVector = std::vector<double>;

struct SketchConfig {
    uint64_t n = 0;            // ambient dimension
    uint32_t rows = 0;         // hash tables (d)
    uint64_t buckets = 0;      // width per table (w)
    uint64_t master_seed = 0;

    uint64_t measurement_count() const { return static_cast<uint64_t>(rows) * buckets; }
    void validate() const;
    bool operator==(const SketchConfig&) const = default;

    // d = ceil(c1 * log2(n)), at least 1
    static uint32_t default_rows(uint64_t n, double c1 = 5.0);
};

// Signed-sum sketch: rows x buckets accumulators, one bucket hash and one
// sign hash per row. Linear in the input, so sketches with identical
// configs merge by entrywise addition. Point estimates take the median of
// the per-row signed reads (mean of the two middle reads for even rows).
class CountSketch {
public:
    explicit CountSketch(const SketchConfig& config);

    static CountSketch from_vector(const SketchConfig& config, const SignalVector& x);

    void update(uint64_t index, double delta);
    void add_vector(const SignalVector& x);  // updates in index order

    double estimate_coord(uint64_t index) const;
    SignalVector estimate_all() const;

    const SketchConfig& config() const { return config_; }
    const HashFamily& family() const { return family_; }
    std::span<const double> tables() const { return tables_; }  // row-major
    double table_at(uint32_t row, uint64_t bucket) const;

    // versioned little-endian binary layout; round-trips bit-exactly
    void write_binary(std::ostream& out) const;
    static CountSketch read_binary(std::istream& in);
    nlohmann::json debug_json() const;

private:
    friend CountSketch merge(const CountSketch& a, const CountSketch& b);

    SketchConfig config_;
    HashFamily family_;
    std::vector<double> tables_;
};

// Entrywise sum of tables, left operand first. Configs (including seed)
// must match.
CountSketch merge(const CountSketch& a, const CountSketch& b);

// median with the even-count convention used by estimate_coord;
// scratch is reordered
double median_inplace(std::span<double> scratch);

}  // namespace sparselab
