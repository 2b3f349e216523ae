#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ofdmim/codebook.hpp"
#include "ofdmim/config.hpp"
#include "ofdmim/numerics.hpp"

namespace ofdmim {

// One point on the transmit-power-to-noise-power axis.
struct SnrPoint {
    double db = 0.0;

    static SnrPoint from_db(double db) { return {db}; }
    static SnrPoint from_linear(double rho) { return {10.0 * std::log10(rho)}; }

    double linear() const { return std::pow(10.0, db / 10.0); }
};

enum class PepMethod { CraigClosedForm, CraigQuadrature, ExponentialApprox };

// Average pairwise error probability. A pairwise ML error probability never
// exceeds 1/2.
struct PepValue {
    double value = 0.0;
    PepMethod method = PepMethod::CraigClosedForm;
};

// Which PEP engine the union bound aggregates.
enum class BoundMethod { Craig, Exponential };

// Squared per-subcarrier distance between two blocks' dense vectors.
std::vector<double> pair_deltas(const Block& a, const Block& b);

// Per-pair profile: distances and the bit cost of confusing the two labels.
struct PairProfile {
    std::uint64_t from_ordinal = 0;
    std::uint64_t to_ordinal = 0;
    std::vector<double> deltas;
    int bit_errors = 0;
};

PairProfile pair_profile(const Block& a, const Block& b);

// Effective fading parameters for one pair: zero-distance subcarriers are
// dropped (their averaged factor is exactly 1) and the rest map to
// tau = rho * mu * delta / (c K), c = 4 (Standard) or 2 (PaperLiteral).
std::vector<double> taus_of_pair(std::span<const double> deltas,
                                 const SystemConfig& config, SnrPoint snr);

// Exact average PEP, closed form over distinct poles; transparently falls
// back to quadrature when poles coincide.
PepValue pep_craig(std::span<const double> taus);

// Exact average PEP by direct integration of the product of averaged
// factors over (0, pi/2]; the independent reference for pep_craig.
PepValue pep_quadrature(std::span<const double> taus, QuadratureSpec spec = {});

// Conventional two-exponential approximation of the average PEP.
PepValue pep_exponential(std::span<const double> taus);

// Hamming distance between two distinct blocks' labels.
int bit_errors(const Block& a, const Block& b);

// Union-bound average block error rate, (1/X) sum over ordered pairs.
// Reported unclamped; it may exceed 1 at low SNR.
double union_bler(const Codebook& cb, SnrPoint snr, BoundMethod method);
double union_bler(std::span<const Block> blocks, const SystemConfig& config,
                  SnrPoint snr, BoundMethod method);

// Union-bound average bit error rate: pair terms weighted by bit errors / B.
double union_ber(const Codebook& cb, SnrPoint snr, BoundMethod method);
double union_ber(std::span<const Block> blocks, const SystemConfig& config,
                 SnrPoint snr, BoundMethod method);

}  // namespace ofdmim
