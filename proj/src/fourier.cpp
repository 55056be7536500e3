#include "sierp/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sierp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
} // namespace

double basis_c(int n, double y) {
    if (n < 0) throw std::invalid_argument("basis_c: negative index");
    if (n == 0) return kInvSqrt2;
    return std::cos(n * kPi * y);
}

double basis_s(int n, double y) {
    if (n < 0) throw std::invalid_argument("basis_s: negative index");
    if (n == 0) return 0.0;
    return std::sin(n * kPi * y);
}

double basis_on_S(int n, const SierpinskiPoint& x, BasisKind kind) {
    const double y = inverse(x).to_double();
    return kind == BasisKind::C ? basis_c(n, y) : basis_s(n, y);
}

CsvTable FourierSeries::to_csv() const {
    CsvTable t;
    t.header = {"n", "cos_coeff", "sin_coeff"};
    for (int n = 0; n <= n_terms; ++n)
        t.rows.push_back({std::to_string(n), format_double(cos_coeff(n)), format_double(n == 0 ? 0.0 : sin_coeff(n))});
    return t;
}

FourierSeries FourierSeries::from_csv(const CsvTable& table) {
    FourierSeries s;
    s.n_terms = static_cast<int>(table.rows.size()) - 1;
    if (s.n_terms < 0) throw std::invalid_argument("FourierSeries::from_csv: no coefficient rows");
    for (const auto& row : table.rows) {
        if (row.size() != 3) throw std::invalid_argument("FourierSeries::from_csv: bad row");
        s.cos_coeffs.push_back(std::stod(row[1]));
        if (row[0] != "0") s.sin_coeffs.push_back(std::stod(row[2]));
    }
    return s;
}

double scalar_product(const PullbackSR& g1, const PullbackSR& g2, const SierpinskiPoint& T, double tol) {
    const double t = inverse(T).to_double();
    std::vector<double> knots = g1.breakpoints;
    knots.insert(knots.end(), g2.breakpoints.begin(), g2.breakpoints.end());
    const RealFn f1 = g1.value;
    const RealFn f2 = g2.value;
    return adaptive_simpson([&](double x) { return f1(x) * f2(x); }, -t, t, tol, 40, knots);
}

FourierSeries analyze(const PullbackSR& A, int n_terms, const SierpinskiPoint& T,
                      const std::vector<double>& breakpoints, double tol) {
    if (n_terms < 0) throw std::invalid_argument("analyze: negative term count");
    const double t = inverse(T).to_double();
    std::vector<double> knots = A.breakpoints;
    knots.insert(knots.end(), breakpoints.begin(), breakpoints.end());

    FourierSeries s;
    s.horizon = inverse(T);
    s.n_terms = n_terms;
    const RealFn a = A.value;
    for (int n = 0; n <= n_terms; ++n) {
        s.cos_coeffs.push_back(
            adaptive_simpson([&, n](double x) { return basis_c(n, x) * a(x); }, -t, t, tol, 40, knots));
        if (n > 0)
            s.sin_coeffs.push_back(
                adaptive_simpson([&, n](double x) { return basis_s(n, x) * a(x); }, -t, t, tol, 40, knots));
    }
    return s;
}

double reconstruct(const FourierSeries& series, const SierpinskiPoint& x) {
    return reconstruct_at(series, inverse(x).to_double());
}

double reconstruct_at(const FourierSeries& series, double y) {
    double sum = 0.0;
    for (int n = 0; n <= series.n_terms; ++n) {
        sum += series.cos_coeff(n) * basis_c(n, y);
        if (n > 0) sum += series.sin_coeff(n) * basis_s(n, y);
    }
    return sum;
}

} // namespace sierp
