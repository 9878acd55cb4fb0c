#include "sparselab/hashing.hpp"

#include <stdexcept>

#include "sparselab/prng.hpp"

namespace sparselab {

namespace {

constexpr uint64_t kMersenne61 = (1ULL << 61) - 1;
constexpr uint64_t kBucketStream = stream_tag("bucket");
constexpr uint64_t kSignStream = stream_tag("sign");

uint64_t mulmod61(uint64_t a, uint64_t b) {
    const __uint128_t t = static_cast<__uint128_t>(a) * b;
    uint64_t lo = static_cast<uint64_t>(t & kMersenne61);
    uint64_t hi = static_cast<uint64_t>(t >> 61);
    uint64_t s = lo + hi;
    while (s >= kMersenne61) s -= kMersenne61;
    return s;
}

}  // namespace

HashFamily::HashFamily(uint64_t master_seed, uint32_t rows, uint64_t range)
    : master_seed_(master_seed), rows_(rows), range_(range) {
    if (rows == 0) throw std::invalid_argument("HashFamily: rows must be >= 1");
    if (range == 0) throw std::invalid_argument("HashFamily: range must be >= 1");
    bucket_params_.reserve(rows);
    sign_params_.reserve(rows);
    for (uint32_t r = 0; r < rows; ++r) {
        bucket_params_.push_back(RowParams{
            1 + derive64(master_seed, kBucketStream, r, 0) % (kMersenne61 - 1),
            derive64(master_seed, kBucketStream, r, 1) % kMersenne61});
        sign_params_.push_back(RowParams{
            1 + derive64(master_seed, kSignStream, r, 0) % (kMersenne61 - 1),
            derive64(master_seed, kSignStream, r, 1) % kMersenne61});
    }
}

uint64_t HashFamily::eval_row(const RowParams& rp, uint64_t index) const {
    uint64_t x = index % kMersenne61;
    uint64_t h = mulmod61(rp.mul, x) + rp.add;
    if (h >= kMersenne61) h -= kMersenne61;
    return h;
}

void HashFamily::check_row(uint32_t row) const {
    if (row >= rows_) throw std::out_of_range("HashFamily: row out of range");
}

uint64_t HashFamily::bucket_of(uint32_t row, uint64_t index) const {
    check_row(row);
    return eval_row(bucket_params_[row], index) % range_;
}

int HashFamily::sign_of(uint32_t row, uint64_t index) const {
    check_row(row);
    return (eval_row(sign_params_[row], index) & 1) ? 1 : -1;
}

}  // namespace sparselab
