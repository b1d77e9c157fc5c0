#pragma once

#include <cmath>
#include <cstdint>

namespace wos {

// Counter-based stream: the n-th output is a fixed bit-mix of
// (master seed, stream index, n).  Draws depend only on those indices,
// never on thread scheduling, so runs replay bit-for-bit.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(derive_key(seed, stream)) {}

    std::uint64_t next_u64() noexcept {
        return mix64(key_ + (counter_++) * kGamma);
    }

    // uniform in [0, 1)
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]
    double uniform_pos() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // standard Gaussian, Box-Muller (fixed two-uniform consumption per pair)
    double normal() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    static std::uint64_t mix64(std::uint64_t x) noexcept {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) noexcept {
        return mix64(mix64(seed + kGamma) ^ mix64(stream * 0xd6e8feb86659fd93ULL + 1));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable derivation of per-node seed families (grid nodes, probe rows).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return RngStream::mix64(RngStream::mix64(seed ^ 0xa0761d6478bd642fULL) + index * 0xe7037ed1a0b428dbULL);
}

}  // namespace wos
