#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "ofdmim/errors.hpp"

namespace ofdmim {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_depth = 50;
};

// Compensated (Neumaier) accumulator. Partition-independent to ~1e-12 for
// the magnitudes that occur in the union-bound sums.
struct NeumaierSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            compensation += (sum - t) + v;
        else
            compensation += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + compensation; }
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelEstimate {
    double kronrod;
    double error;
};

template <class F>
PanelEstimate gauss_kronrod_panel(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double k15 = 0.0;
    double g7 = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[static_cast<std::size_t>(i)];
        const double pair = f(mid - dx) + f(mid + dx);
        k15 += kKronrodWeights[static_cast<std::size_t>(i)] * pair;
        if (i % 2 == 1) g7 += kGaussWeights[static_cast<std::size_t>(i / 2)] * pair;
    }
    const double fmid = f(mid);
    k15 += kKronrodWeights[7] * fmid;
    g7 += kGaussWeights[3] * fmid;
    k15 *= half;
    g7 *= half;
    return {k15, std::abs(k15 - g7)};
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. Panels are bisected
// until each local error fits its share of abs_tol. Throws
// NonConvergenceError (carrying the best estimate) if max_depth is reached
// with the tolerance still unmet.
template <class F>
double integrate(F&& f, double a, double b, QuadratureSpec spec = {}) {
    if (!(a < b)) throw ContractViolation("integrate requires a < b");
    if (!(spec.abs_tol > 0.0) || spec.max_depth < 1)
        throw ContractViolation("invalid QuadratureSpec");

    struct Panel {
        double a, b;
        int depth;
    };

    const double total_width = b - a;
    std::vector<Panel> stack{{a, b, 0}};
    NeumaierSum accepted;
    bool converged = true;

    while (!stack.empty()) {
        const Panel panel = stack.back();
        stack.pop_back();
        const auto est = detail::gauss_kronrod_panel(f, panel.a, panel.b);
        const double local_tol = spec.abs_tol * (panel.b - panel.a) / total_width;
        if (est.error <= local_tol) {
            accepted.add(est.kronrod);
        } else if (panel.depth >= spec.max_depth) {
            accepted.add(est.kronrod);
            converged = false;
        } else {
            const double mid = 0.5 * (panel.a + panel.b);
            stack.push_back({mid, panel.b, panel.depth + 1});
            stack.push_back({panel.a, mid, panel.depth + 1});
        }
    }
    if (!converged)
        throw NonConvergenceError("quadrature did not reach the requested tolerance",
                                  accepted.value());
    return accepted.value();
}

// Sum over all i-element subsets of the product of the chosen values.
// i = 0 gives the empty-product 1.
double elem_sym_poly(std::span<const double> values, int i);

// Partial-fraction weights: one coefficient per pole, summing to 1.
struct AlphaSet {
    std::vector<double> values;

    double sum() const {
        NeumaierSum s;
        for (double v : values) s.add(v);
        return s.value();
    }
};

// True when all entries are pairwise separated by more than rel_gap
// (relative to the larger of each pair).
bool pairwise_distinct(std::span<const double> taus, double rel_gap = 1e-9);

// Solves the coefficient equation set (first row: sum = 1; rows i >= 2 built
// from elementary symmetric polynomials of the poles excluding one) by
// Gaussian elimination. Poles are rescaled by their geometric mean first,
// which leaves the coefficients unchanged but keeps the matrix well scaled.
// Throws DegeneratePoleError for duplicate or nearly duplicate poles.
AlphaSet solve_alpha_linear(std::span<const double> taus);

// Residue route to the same coefficients: alpha_n = prod_{m != n}
// tau_n / (tau_n - tau_m). Same degeneracy policy as solve_alpha_linear.
AlphaSet alpha_product(std::span<const double> taus);

}  // namespace ofdmim
