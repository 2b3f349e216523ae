#include "ofdmim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace ofdmim {

double elem_sym_poly(std::span<const double> values, int i) {
    const int n = static_cast<int>(values.size());
    if (i < 0 || i > n)
        throw ContractViolation("elem_sym_poly degree out of range");
    std::vector<double> e(static_cast<std::size_t>(i) + 1, 0.0);
    e[0] = 1.0;
    for (double v : values)
        for (int d = i; d >= 1; --d)
            e[static_cast<std::size_t>(d)] += v * e[static_cast<std::size_t>(d - 1)];
    return e[static_cast<std::size_t>(i)];
}

bool pairwise_distinct(std::span<const double> taus, double rel_gap) {
    for (std::size_t i = 0; i < taus.size(); ++i)
        for (std::size_t j = i + 1; j < taus.size(); ++j)
            if (std::abs(taus[i] - taus[j]) <=
                rel_gap * std::max(std::abs(taus[i]), std::abs(taus[j])))
                return false;
    return true;
}

namespace {

void check_poles(std::span<const double> taus) {
    if (taus.empty())
        throw ContractViolation("at least one pole is required");
    for (double t : taus)
        if (!(t > 0.0))
            throw ContractViolation("poles must be positive");
    if (!pairwise_distinct(taus))
        throw DegeneratePoleError(
            "duplicate or nearly duplicate poles; no partial-fraction "
            "decomposition with simple poles exists (integrate instead)");
}

// Elementary symmetric polynomial of `values` with index `skip` left out.
double esp_excluding(std::span<const double> values, std::size_t skip, int degree) {
    std::vector<double> e(static_cast<std::size_t>(degree) + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t m = 0; m < values.size(); ++m) {
        if (m == skip) continue;
        for (int d = degree; d >= 1; --d)
            e[static_cast<std::size_t>(d)] +=
                values[m] * e[static_cast<std::size_t>(d - 1)];
    }
    return e[static_cast<std::size_t>(degree)];
}

}  // namespace

AlphaSet solve_alpha_linear(std::span<const double> taus) {
    check_poles(taus);
    const std::size_t n = taus.size();
    if (n == 1) return {{1.0}};

    // Rescale to geometric mean 1; the alpha coefficients are invariant
    // under a common scaling of the poles.
    double log_mean = 0.0;
    for (double t : taus) log_mean += std::log(t);
    const double scale = std::exp(-log_mean / static_cast<double>(n));
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = taus[i] * scale;

    // First row: sum of coefficients is 1. Row i (0-based, i >= 1): the
    // degree-i elementary symmetric polynomial of the poles excluding the
    // column's pole, one equation per power of csc^2(theta).
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> rhs(n, 0.0);
    rhs[0] = 1.0;
    for (std::size_t j = 0; j < n; ++j) a[0][j] = 1.0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = esp_excluding(t, j, static_cast<int>(i));

    // Gaussian elimination with scaled partial pivoting.
    std::vector<std::size_t> perm(n);
    std::vector<double> row_scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s = std::max(s, std::abs(a[i][j]));
        row_scale[i] = s;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = -1.0;
        for (std::size_t r = col; r < n; ++r) {
            const double candidate = std::abs(a[perm[r]][col]) / row_scale[perm[r]];
            if (candidate > best) {
                best = candidate;
                pivot = r;
            }
        }
        std::swap(perm[col], perm[pivot]);
        const std::size_t pr = perm[col];
        if (a[pr][col] == 0.0)
            throw DegeneratePoleError("coefficient matrix is singular");
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::size_t rr = perm[r];
            const double factor = a[rr][col] / a[pr][col];
            if (factor == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[rr][j] -= factor * a[pr][j];
            rhs[rr] -= factor * rhs[pr];
        }
    }

    AlphaSet result;
    result.values.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        const std::size_t rr = perm[ri];
        double v = rhs[rr];
        for (std::size_t j = ri + 1; j < n; ++j) v -= a[rr][j] * result.values[j];
        result.values[ri] = v / a[rr][ri];
    }
    return result;
}

AlphaSet alpha_product(std::span<const double> taus) {
    check_poles(taus);
    AlphaSet result;
    result.values.reserve(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < taus.size(); ++j)
            if (j != i) p *= taus[i] / (taus[i] - taus[j]);
        result.values.push_back(p);
    }
    return result;
}

}  // namespace ofdmim
