#pragma once

#include <cstdint>

namespace ofdmim {

// Mapping from pairwise distance to the per-subcarrier fading parameter tau.
// Standard uses the exact ML divisor 4K (analytics match the simulator);
// PaperLiteral uses divisor 2K, reproducing the published PEP chain verbatim.
enum class PepConvention { Standard, PaperLiteral };

// Single source of truth for one experiment: N subcarriers per group, K of
// them active, M-PSK on the active ones, Rayleigh power gain with mean mu.
struct SystemConfig {
    int n_subcarriers = 4;       // N
    int n_active = 2;            // K
    int psk_order = 2;           // M, power of two
    double mean_channel_gain = 1.0;  // mu
    PepConvention pep_convention = PepConvention::Standard;

    // Throws ConfigError when any field is out of the supported range.
    void validate() const;

    // Number of index bits p = floor(log2(C(N, K))).
    int index_bits() const;

    // log2(M).
    int bits_per_symbol() const;

    // Total bits per block, B = p + K log2(M).
    int total_bits() const;

    // Number of legitimate blocks, X = 2^p M^K = 2^B.
    std::uint64_t block_count() const;
};

// C(n, k) in exact 64-bit arithmetic; throws ConfigError on overflow.
std::uint64_t binom(int n, int k);

}  // namespace ofdmim
