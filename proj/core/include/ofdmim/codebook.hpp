#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ofdmim/bitstring.hpp"
#include "ofdmim/config.hpp"

namespace ofdmim {

// Subcarrier activation pattern: K distinct indices from {1..N}, ascending.
struct Sap {
    std::vector<int> active;

    friend bool operator==(const Sap&, const Sap&) = default;
};

// One legitimate block: which subcarriers are active, the unit-modulus PSK
// symbol on each (ascending subcarrier order), the B-bit label and its
// numeric value sigma. `dense` is the length-N frequency-domain vector.
struct Block {
    Sap sap;
    std::vector<std::complex<double>> symbols;
    BitString label;
    std::uint64_t ordinal = 0;
    std::vector<std::complex<double>> dense;
};

// All X legitimate blocks, ordered by label value. blocks[b].ordinal == b.
struct Codebook {
    SystemConfig config;
    std::vector<Block> blocks;

    std::uint64_t size() const { return blocks.size(); }
    const Block& block_of_bits(const BitString& bits) const;
};

// All C(n, k) k-subsets of {1..n} in lexicographic order.
std::vector<Sap> enumerate_saps(int n, int k);

// rank-th (0-based) element of the lexicographic enumeration, built directly.
Sap sap_unrank(std::uint64_t rank, int n, int k);

// Lexicographic rank of a pattern; inverse of sap_unrank.
std::uint64_t sap_rank(const Sap& sap, int n);

// Index bits (width p, MSB first, value r) select the r-th SAP.
Sap map_index_bits(const BitString& bits, int n, int k);

// Gray-labelled M-PSK point for one symbol-bit group: exp(i 2 pi m / M)
// where m is the Gray decode of the bits. M = 2 yields {+1, -1}.
std::complex<double> psk_point(const BitString& symbol_bits, int m);

// Enumerates all 2^B labels in ascending numeric order. Layout per label:
// p index bits first, then K groups of log2(M) symbol bits assigned to
// active subcarriers in ascending index order.
Codebook build_codebook(const SystemConfig& config);

// Content-level inverse of block construction: recovers the label from the
// pattern and symbols alone (SAP rank + Gray re-encode of each symbol).
BitString label_of_block(const Sap& sap,
                         const std::vector<std::complex<double>>& symbols,
                         const SystemConfig& config);

}  // namespace ofdmim
