#include "ofdmim/codebook.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "ofdmim/errors.hpp"

namespace ofdmim {

namespace {

void check_nk(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw ConfigError("subset enumeration needs 1 <= K <= N, got N=" +
                          std::to_string(n) + " K=" + std::to_string(k));
}

}  // namespace

std::vector<Sap> enumerate_saps(int n, int k) {
    check_nk(n, k);
    std::vector<Sap> out;
    out.reserve(binom(n, k));
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(Sap{c});
        // advance to the next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Sap sap_unrank(std::uint64_t rank, int n, int k) {
    check_nk(n, k);
    if (rank >= binom(n, k))
        throw ContractViolation("SAP rank out of range");
    Sap sap;
    sap.active.reserve(static_cast<std::size_t>(k));
    int next = 1;
    for (int remaining = k; remaining >= 1; --remaining) {
        // count combinations that keep `next` as the smallest member
        for (int c = next;; ++c) {
            std::uint64_t with_c = binom(n - c, remaining - 1);
            if (rank < with_c) {
                sap.active.push_back(c);
                next = c + 1;
                break;
            }
            rank -= with_c;
        }
    }
    return sap;
}

std::uint64_t sap_rank(const Sap& sap, int n) {
    const int k = static_cast<int>(sap.active.size());
    check_nk(n, k);
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        int c = sap.active[static_cast<std::size_t>(i)];
        if (c <= prev || c > n)
            throw ContractViolation("SAP indices must be strictly increasing in [1, N]");
        for (int skipped = prev + 1; skipped < c; ++skipped)
            rank += binom(n - skipped, k - i - 1);
        prev = c;
    }
    return rank;
}

Sap map_index_bits(const BitString& bits, int n, int k) {
    check_nk(n, k);
    const int p = std::bit_width(binom(n, k)) - 1;
    if (bits.width != p)
        throw ContractViolation("index bit field must have width p = " +
                                std::to_string(p));
    return sap_unrank(bits.value, n, k);
}

std::complex<double> psk_point(const BitString& symbol_bits, int m) {
    if (m < 2 || (m & (m - 1)) != 0)
        throw ConfigError("PSK order must be a power of two >= 2");
    const int bits_per_symbol = std::bit_width(static_cast<unsigned>(m)) - 1;
    if (symbol_bits.width != bits_per_symbol)
        throw ContractViolation("symbol bit group must have width log2(M)");
    const std::uint64_t phase_index = gray_decode(symbol_bits.value);
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(phase_index) / m;
    return {std::cos(angle), std::sin(angle)};
}

Codebook build_codebook(const SystemConfig& config) {
    config.validate();
    const int n = config.n_subcarriers;
    const int k = config.n_active;
    const int p = config.index_bits();
    const int bps = config.bits_per_symbol();
    const int b = config.total_bits();
    const std::uint64_t x = config.block_count();

    Codebook cb;
    cb.config = config;
    cb.blocks.reserve(x);
    for (std::uint64_t v = 0; v < x; ++v) {
        Block block;
        block.label = BitString{v, b};
        block.ordinal = v;
        block.sap = sap_unrank(block.label.slice(0, p).value, n, k);
        block.symbols.reserve(static_cast<std::size_t>(k));
        block.dense.assign(static_cast<std::size_t>(n), {0.0, 0.0});
        for (int i = 0; i < k; ++i) {
            auto sym = psk_point(block.label.slice(p + i * bps, bps), config.psk_order);
            block.symbols.push_back(sym);
            block.dense[static_cast<std::size_t>(block.sap.active[static_cast<std::size_t>(i)] - 1)] = sym;
        }
        cb.blocks.push_back(std::move(block));
    }
    return cb;
}

const Block& Codebook::block_of_bits(const BitString& bits) const {
    if (bits.width != config.total_bits())
        throw ContractViolation("label width does not match the codebook");
    return blocks[bits.value];
}

BitString label_of_block(const Sap& sap,
                         const std::vector<std::complex<double>>& symbols,
                         const SystemConfig& config) {
    config.validate();
    const int p = config.index_bits();
    const int bps = config.bits_per_symbol();
    const int m = config.psk_order;
    if (static_cast<int>(symbols.size()) != config.n_active)
        throw ContractViolation("symbol count does not match K");

    const std::uint64_t rank = sap_rank(sap, config.n_subcarriers);
    if (rank >= (std::uint64_t{1} << p))
        throw ContractViolation("SAP is not reachable by any index bit pattern");

    std::uint64_t value = rank;
    for (const auto& sym : symbols) {
        double angle = std::atan2(sym.imag(), sym.real());
        if (angle < 0) angle += 2.0 * std::numbers::pi;
        auto phase_index = static_cast<std::uint64_t>(
            std::llround(angle * m / (2.0 * std::numbers::pi))) % static_cast<std::uint64_t>(m);
        value = (value << bps) | gray_encode(phase_index);
    }
    return {value, config.total_bits()};
}

}  // namespace ofdmim
