#pragma once

#include "sierp/calculus.hpp"
#include "sierp/csv.hpp"
#include "sierp/sierpinski.hpp"

#include <vector>

namespace sierp {

enum class BasisKind { C, S };

/// Trigonometric basis on [-1, 1]: c_n(y) = cos(n pi y), s_n(y) = sin(n pi y)
/// for n > 0, with c_0 = 1/sqrt(2) and s_0 = 0.
double basis_c(int n, double y);
double basis_s(int n, double y);

/// Basis composed through the bijection: C_n(x) = c_n(f_S(x)), S_n likewise.
double basis_on_S(int n, const SierpinskiPoint& x, BasisKind kind);

/// Truncated sine/cosine expansion over the horizon T (f_X(T) = 1 in the
/// step-function example). cos_coeffs has n_terms+1 entries (n = 0..N),
/// sin_coeffs has n_terms entries (n = 1..N).
struct FourierSeries {
    Rational horizon = Rational(1); // f_X(T)
    int n_terms = 0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    double cos_coeff(int n) const { return cos_coeffs.at(static_cast<std::size_t>(n)); }
    double sin_coeff(int n) const { return sin_coeffs.at(static_cast<std::size_t>(n - 1)); }

    /// Rows "n,cos_coeff,sin_coeff" for n = 0..N (sin at n = 0 is 0).
    CsvTable to_csv() const;
    static FourierSeries from_csv(const CsvTable& table);
};

/// <G1|G2> = integral over [ominus T, T] of G1 (.) G2, which reduces to the
/// ordinary inner product of the pullbacks on [-f(T), f(T)].
double scalar_product(const PullbackSR& g1, const PullbackSR& g2, const SierpinskiPoint& T, double tol = 1e-8);

/// Fourier coefficients of A by quadrature against the basis.
FourierSeries analyze(const PullbackSR& A, int n_terms, const SierpinskiPoint& T,
                      const std::vector<double>& breakpoints = {}, double tol = 1e-8);

/// Partial sum sum_n C_n(x) <C_n|A> + S_n(x) <S_n|A> at a point of S.
double reconstruct(const FourierSeries& series, const SierpinskiPoint& x);

/// Same partial sum parameterized directly by y = f_S(x).
double reconstruct_at(const FourierSeries& series, double y);

} // namespace sierp
