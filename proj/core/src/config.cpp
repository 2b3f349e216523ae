#include "ofdmim/config.hpp"

#include <bit>
#include <limits>
#include <string>

#include "ofdmim/errors.hpp"

namespace ofdmim {

namespace {

constexpr int kMaxSubcarriers = 32;
constexpr int kMaxPskOrder = 64;
constexpr int kMaxTotalBits = 63;  // labels are 64-bit values

bool is_pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }

int ilog2(int v) { return std::bit_width(static_cast<unsigned>(v)) - 1; }

}  // namespace

std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw ConfigError("binom: need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n - k + i) stays exact, then divides evenly by i.
        std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > std::numeric_limits<std::uint64_t>::max() / factor)
            throw ConfigError("binom(" + std::to_string(n) + "," + std::to_string(k) +
                              ") overflows 64-bit arithmetic");
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

void SystemConfig::validate() const {
    if (n_subcarriers < 1 || n_subcarriers > kMaxSubcarriers)
        throw ConfigError("n_subcarriers must be in [1, " +
                          std::to_string(kMaxSubcarriers) + "]");
    if (n_active < 1 || n_active > n_subcarriers)
        throw ConfigError("n_active must satisfy 1 <= K <= N");
    if (psk_order < 2 || psk_order > kMaxPskOrder || !is_pow2(psk_order))
        throw ConfigError("psk_order must be a power of two in [2, " +
                          std::to_string(kMaxPskOrder) + "]");
    if (!(mean_channel_gain > 0.0))
        throw ConfigError("mean_channel_gain must be positive");
    if (total_bits() > kMaxTotalBits)
        throw ConfigError("total bits B = " + std::to_string(total_bits()) +
                          " exceeds the supported maximum of " +
                          std::to_string(kMaxTotalBits));
}

int SystemConfig::index_bits() const {
    std::uint64_t c = binom(n_subcarriers, n_active);
    return std::bit_width(c) - 1;  // floor(log2(c)), c >= 1
}

int SystemConfig::bits_per_symbol() const { return ilog2(psk_order); }

int SystemConfig::total_bits() const {
    return index_bits() + n_active * bits_per_symbol();
}

std::uint64_t SystemConfig::block_count() const {
    return std::uint64_t{1} << total_bits();
}

}  // namespace ofdmim
