#pragma once

#include <cstdint>
#include <vector>

namespace sparselab {

// Per-row pairwise-independent hashing of 64-bit coordinate indices into
// buckets and random signs. Each row evaluates a degree-1 polynomial over
// the field GF(2^61 - 1); row parameters are derived deterministically from
// the master seed, so a family is a pure value: same (seed, rows, range)
// gives identical outputs on every platform.
//
// Bucket and sign streams use distinct derivation tags and therefore never
// share randomness. Immutable after construction; safe for concurrent reads.
class HashFamily {
public:
    HashFamily(uint64_t master_seed, uint32_t rows, uint64_t range);

    // bucket in [0, range)
    uint64_t bucket_of(uint32_t row, uint64_t index) const;

    // strictly -1 or +1
    int sign_of(uint32_t row, uint64_t index) const;

    uint32_t rows() const { return rows_; }
    uint64_t range() const { return range_; }
    uint64_t master_seed() const { return master_seed_; }

private:
    struct RowParams {
        uint64_t mul;  // in [1, p-1]
        uint64_t add;  // in [0, p-1]
    };

    uint64_t eval_row(const RowParams& rp, uint64_t index) const;
    void check_row(uint32_t row) const;

    uint64_t master_seed_;
    uint32_t rows_;
    uint64_t range_;
    std::vector<RowParams> bucket_params_;
    std::vector<RowParams> sign_params_;
};

}  // namespace sparselab
