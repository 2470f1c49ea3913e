#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace fakenews {

// splitmix64 (Steele, Lea, Flood 2014). Used for seed whitening and for
// deriving stream keys, so that per-stream seeding never depends on the
// order in which streams are created.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Key for a logical random stream. Identical (master_seed, stream_id)
// pairs always yield identical draw sequences regardless of thread
// scheduling; distinct ids give statistically independent streams.
inline std::uint64_t derive_stream_key(std::uint64_t master_seed, std::uint64_t stream_id) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(stream_id + 0x61C8864680B583EBULL));
}

// xoshiro256++ engine seeded from a 64-bit key via splitmix64. The engine
// is self-contained so draw sequences are identical on every platform.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : key_(derive_stream_key(master_seed, stream_id)) {
        std::uint64_t s = key_;
        for (auto& word : state_) {
            s = splitmix64(s);
            word = s;
        }
        has_spare_ = false;
        spare_ = 0.0;
    }

    // Child stream keyed off this stream's identity, not its current state,
    // so substreams can be created in any order.
    RngStream substream(std::uint64_t id) const { return RngStream(key_, id); }

    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via the Marsaglia polar method; the spare value is
    // cached, so a stream's gaussian sequence is a pure function of its key.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    // Exponential with the given rate; rate must be positive.
    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t key_;
    std::array<std::uint64_t, 4> state_;
    double spare_;
    bool has_spare_;
};

// Unit double derived from a key without constructing a stream; used for
// per-voter tie-break coins.
inline double unit_hash(std::uint64_t key, std::uint64_t index) {
    return static_cast<double>(derive_stream_key(key, index) >> 11) * 0x1.0p-53;
}

} // namespace fakenews
