#include "sierp/finite_diff.hpp"

#include <array>
#include <cmath>

namespace sierp {

namespace {

constexpr int kLevels = 4;

DiffResult extrapolate(const std::array<double, kLevels + 1>& first_column, double target) {
    // Richardson table over step halving: errors are even powers of h.
    std::array<std::array<double, kLevels + 1>, kLevels + 1> tab{};
    tab[0] = {};
    for (int i = 0; i <= kLevels; ++i) tab[i][0] = first_column[i];
    double factor = 1.0;
    for (int j = 1; j <= kLevels; ++j) {
        factor *= 4.0;
        for (int i = j; i <= kLevels; ++i)
            tab[i][j] = (factor * tab[i][j - 1] - tab[i - 1][j - 1]) / (factor - 1.0);
    }
    DiffResult out;
    out.value = tab[kLevels][kLevels];
    const double scale = std::max(std::fabs(out.value), 1.0);
    out.change = std::fabs(tab[kLevels][kLevels] - tab[kLevels - 1][kLevels - 1]) / scale;
    out.converged = out.change <= target;
    return out;
}

} // namespace

DiffResult richardson_derivative(const RealFn& f, double t, double h0, double target) {
    std::array<double, kLevels + 1> d{};
    double h = h0;
    for (int i = 0; i <= kLevels; ++i, h *= 0.5) d[i] = (f(t + h) - f(t - h)) / (2.0 * h);
    return extrapolate(d, target);
}

DiffResult richardson_second_derivative(const RealFn& f, double t, double h0, double target) {
    std::array<double, kLevels + 1> d{};
    double h = h0;
    const double ft = f(t);
    for (int i = 0; i <= kLevels; ++i, h *= 0.5) d[i] = (f(t + h) - 2.0 * ft + f(t - h)) / (h * h);
    return extrapolate(d, target);
}

} // namespace sierp
