// sierpcalc: map reals onto the double-covered Sierpinski set, compute in
// its induced arithmetic and calculus, and reproduce the figure data files.

#include "sierp/arithmetic.hpp"
#include "sierp/calculus.hpp"
#include "sierp/csv.hpp"
#include "sierp/digits.hpp"
#include "sierp/errors.hpp"
#include "sierp/fourier.hpp"
#include "sierp/pullbacks.hpp"
#include "sierp/sierpinski.hpp"
#include "sierp/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sierp;

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::string point_text(const SierpinskiPoint& p, int digits) {
    if (digits < 0) return p.str();
    return "(" + p.a().decimal(digits) + ", " + p.b().decimal(digits) + ")" + std::string(1, side_char(p.side()));
}

// expression grammar for `arith`: literal ((+)|(-)|(*)|(/)) literal ...,
// evaluated left to right, every literal embedded as n' = f^{-1}(n)
SierpinskiPoint eval_arith(const std::string& expr) {
    std::vector<std::string> tokens;
    std::istringstream in(expr);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.size() % 2 == 0)
        throw std::invalid_argument("arith: expected 'value op value ...' with ops (+) (-) (*) (/)");
    const auto& S = sierpinski_context();
    SierpinskiPoint acc = forward(Rational::parse(tokens[0]));
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        const SierpinskiPoint rhs = forward(Rational::parse(tokens[i + 1]));
        const std::string& op = tokens[i];
        if (op == "(+)")
            acc = oplus(S, acc, rhs);
        else if (op == "(-)")
            acc = ominus(S, acc, rhs);
        else if (op == "(*)")
            acc = odot(S, acc, rhs);
        else if (op == "(/)")
            acc = oslash(S, acc, rhs);
        else
            throw std::invalid_argument("arith: unknown operator '" + op + "'");
    }
    return acc;
}

struct FunctionSpec {
    std::optional<Polynomial> poly;
    std::optional<PiecewiseConstant> piecewise;
};

FunctionSpec parse_function(const std::string& spec) {
    FunctionSpec f;
    if (spec == "step") {
        f.piecewise = step_function();
    } else if (spec.find(':') != std::string::npos) {
        f.piecewise = PiecewiseConstant::parse(spec);
    } else {
        f.poly = Polynomial::parse(spec);
    }
    return f;
}

struct ReconSample {
    Rational y;
    SierpinskiPoint point;
    double fn_value;
    double recon;
};

int run(int argc, char** argv) {
    CLI::App app{"non-Diophantine calculus on the double-covered Sierpinski set"};
    app.require_subcommand(1);

    // map
    auto* map_cmd = app.add_subcommand("map", "map a rational onto S (or back with --inverse)");
    std::string map_value;
    bool map_inverse = false;
    int map_digits = -1;
    map_cmd->add_option("value", map_value, "rational literal, or point text with --inverse")->required();
    map_cmd->add_flag("--inverse", map_inverse, "interpret the argument as a point '(a, b)[+|-|0]'");
    map_cmd->add_option("--digits", map_digits, "print coordinates as decimals with this many digits");

    // arith
    auto* arith_cmd = app.add_subcommand("arith", "evaluate an expression in the arithmetic of S");
    std::string arith_expr;
    int arith_digits = -1;
    arith_cmd->add_option("expr", arith_expr, "e.g. \"3 (+) 4\"")->required();
    arith_cmd->add_option("--digits", arith_digits, "decimal display depth");

    // deriv
    auto* deriv_cmd = app.add_subcommand("deriv", "derivative DA/Dx at a point");
    std::string deriv_fn, deriv_at, deriv_mode = "exact", deriv_codomain = "S";
    double deriv_h0 = 0.1;
    deriv_cmd->add_option("function", deriv_fn, "polynomial in t, e.g. \"t^2\"")->required();
    deriv_cmd->add_option("point", deriv_at, "evaluation point, rational literal (embedded via ')")->required();
    deriv_cmd->add_option("--mode", deriv_mode, "exact|numeric")->check(CLI::IsMember({"exact", "numeric"}));
    deriv_cmd->add_option("--h0", deriv_h0, "initial step for numeric mode");
    deriv_cmd->add_option("--codomain", deriv_codomain, "S|R")->check(CLI::IsMember({"S", "R"}));

    // integrate
    auto* int_cmd = app.add_subcommand("integrate", "integral over [lo, hi] in X = S");
    std::string int_fn, int_lo, int_hi, int_mode = "auto", int_codomain = "R";
    double int_tol = 1e-8;
    int_cmd->add_option("function", int_fn, "polynomial in t, 'step', or piecewise 'lo,hi:v;...'")->required();
    int_cmd->add_option("lo", int_lo)->required();
    int_cmd->add_option("hi", int_hi)->required();
    int_cmd->add_option("--mode", int_mode, "exact|quad|auto")->check(CLI::IsMember({"exact", "quad", "auto"}));
    int_cmd->add_option("--tol", int_tol, "quadrature tolerance");
    int_cmd->add_option("--codomain", int_codomain, "S|R")->check(CLI::IsMember({"S", "R"}));

    // fourier
    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficients and reconstruction files");
    std::string fourier_fn = "step", fourier_out = "fourier", fourier_format = "csv", fourier_side = "pos";
    int fourier_terms = 50, fourier_samples = 513;
    double fourier_tol = 1e-8;
    bool fourier_set_view = false;
    fourier_cmd->add_option("function", fourier_fn, "'step' or piecewise 'lo,hi:v;...'");
    fourier_cmd->add_option("--terms", fourier_terms, "number of Fourier terms N")->check(CLI::NonNegativeNumber);
    fourier_cmd->add_option("--samples", fourier_samples, "reconstruction sample count");
    fourier_cmd->add_option("--tol", fourier_tol, "coefficient quadrature tolerance");
    fourier_cmd->add_option("--out", fourier_out, "output path prefix");
    fourier_cmd->add_option("--format", fourier_format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));
    fourier_cmd->add_option("--side", fourier_side, "pos|both: keep or drop minus-side samples")
        ->check(CLI::IsMember({"pos", "both"}));
    fourier_cmd->add_flag("--set-view", fourier_set_view, "also write the (a, b, value) scatter CSV");

    // fig1
    auto* fig1_cmd = app.add_subcommand("fig1", "cells of f^{-1}([0,1)) at resolution 2^-k");
    int fig1_k = 7;
    std::string fig1_out, fig1_format = "csv";
    fig1_cmd->add_option("--resolution", fig1_k, "ternary prefix depth k (1..14)");
    fig1_cmd->add_option("--out", fig1_out, "output path");
    fig1_cmd->add_option("--format", fig1_format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));

    // fig2
    auto* fig2_cmd = app.add_subcommand("fig2", "images of the naturals 1..200 under f^{-1}");
    std::string fig2_out, fig2_format = "csv";
    fig2_cmd->add_option("--out", fig2_out, "output path");
    fig2_cmd->add_option("--format", fig2_format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));

    CLI11_PARSE(app, argc, argv);

    if (map_cmd->parsed()) {
        if (map_inverse) {
            std::cout << inverse(SierpinskiPoint::parse(map_value)).str() << "\n";
        } else {
            std::cout << point_text(forward(Rational::parse(map_value)), map_digits) << "\n";
        }
        return 0;
    }

    if (arith_cmd->parsed()) {
        std::cout << point_text(eval_arith(arith_expr), arith_digits) << "\n";
        return 0;
    }

    if (deriv_cmd->parsed()) {
        const SierpinskiPoint at = forward(Rational::parse(deriv_at));
        const Polynomial p = Polynomial::parse(deriv_fn);
        const DerivMode mode = deriv_mode == "exact" ? DerivMode::exact : DerivMode::numeric;
        if (deriv_codomain == "S") {
            std::cout << derivative(polynomial_on_S(p), at, mode, deriv_h0).str() << "\n";
        } else {
            std::cout << derivative(polynomial_S_to_R(p), at, mode, deriv_h0).str() << "\n";
        }
        return 0;
    }

    if (int_cmd->parsed()) {
        const SierpinskiPoint lo = forward(Rational::parse(int_lo));
        const SierpinskiPoint hi = forward(Rational::parse(int_hi));
        const FunctionSpec spec = parse_function(int_fn);
        const PullbackSR F = spec.poly ? polynomial_S_to_R(*spec.poly) : piecewise_S_to_R(*spec.piecewise);
        IntMode mode = IntMode::quadrature;
        if (int_mode == "exact" || (int_mode == "auto" && F.exact_antiderivative)) mode = IntMode::exact;
        if (int_codomain == "S") {
            PullbackSS G;
            G.ctx_x = F.ctx_x;
            G.ctx_y = sierpinski_context();
            G.value = F.value;
            G.exact = F.exact;
            G.exact_antiderivative = F.exact_antiderivative;
            G.breakpoints = F.breakpoints;
            std::cout << integrate(G, lo, hi, mode, int_tol).str() << "\n";
        } else {
            const Rational r = integrate(F, lo, hi, mode, int_tol);
            std::cout << (mode == IntMode::exact ? r.str() : format_double(r.to_double())) << "\n";
        }
        return 0;
    }

    if (fourier_cmd->parsed()) {
        if (fourier_samples < 2) throw std::invalid_argument("fourier: --samples must be at least 2");
        const FunctionSpec spec = parse_function(fourier_fn);
        if (!spec.piecewise) throw std::invalid_argument("fourier: function must be 'step' or a piecewise spec");
        const PullbackSR A = piecewise_S_to_R(*spec.piecewise);
        const SierpinskiPoint T = forward(Rational(1));
        const FourierSeries series = analyze(A, fourier_terms, T, {}, fourier_tol);
        series.to_csv().write(fourier_out + "_coeffs.csv");

        std::vector<ReconSample> samples;
        samples.reserve(fourier_samples);
        for (int i = 0; i < fourier_samples; ++i) {
            const Rational y = Rational(-1) + Rational(2L * i, fourier_samples - 1);
            const SierpinskiPoint x = forward(y);
            if (fourier_side == "pos" && x.side() == Side::minus) continue;
            samples.push_back({y, x, (*spec.piecewise)(y).to_double(), reconstruct(series, x)});
        }

        CsvTable recon;
        recon.header = {"y", "a", "reconstruction", "side"};
        for (const auto& s : samples)
            recon.rows.push_back(
                {s.y.str(), format_double(s.fn_value), format_double(s.recon), std::string(1, side_char(s.point.side()))});
        recon.write(fourier_out + "_recon.csv");

        if (fourier_set_view) {
            CsvTable view;
            view.header = {"a", "b", "value"};
            for (const auto& s : samples)
                view.rows.push_back({format_double(s.point.a().to_double()), format_double(s.point.b().to_double()),
                                     format_double(s.recon)});
            view.write(fourier_out + "_set.csv");
        }

        if (fourier_format == "svg") {
            std::vector<double> xs;
            std::vector<double> fn_curve, recon_curve;
            for (const auto& s : samples) {
                xs.push_back(s.y.to_double());
                fn_curve.push_back(s.fn_value);
                recon_curve.push_back(s.recon);
            }
            write_text(fourier_out + "_recon.svg", svg_curves(xs, {fn_curve, recon_curve}));
        }
        return 0;
    }

    if (fig1_cmd->parsed()) {
        if (fig1_k < 1 || fig1_k > 14)
            throw InvalidResolution("fig1: resolution must be in [1, 14], got " + std::to_string(fig1_k));
        const auto cells = sample_cells(Rational(0), Rational(1), fig1_k);
        if (fig1_out.empty()) fig1_out = fig1_format == "svg" ? "fig1.svg" : "fig1.csv";
        if (fig1_format == "svg") {
            write_text(fig1_out, svg_cell_grid(cells, fig1_k));
        } else {
            CsvTable t;
            t.header = {"k", "cell_x", "cell_y"};
            for (const auto& [cx, cy] : cells)
                t.rows.push_back({std::to_string(fig1_k), std::to_string(cx), std::to_string(cy)});
            t.write(fig1_out);
        }
        return 0;
    }

    if (fig2_cmd->parsed()) {
        std::vector<SierpinskiPoint> points;
        points.reserve(200);
        const auto& S = sierpinski_context();
        for (long n = 1; n <= 200; ++n) points.push_back(embed_natural(S, n));
        if (fig2_out.empty()) fig2_out = fig2_format == "svg" ? "fig2.svg" : "fig2.csv";
        if (fig2_format == "svg") {
            std::vector<std::pair<double, double>> pts;
            pts.reserve(points.size());
            for (long n = 0; n < 200; ++n)
                pts.emplace_back(points[n].a().to_double(), points[n].b().to_double());
            write_text(fig2_out, svg_scatter(pts));
        } else {
            CsvTable t;
            t.header = {"n", "a", "b", "side"};
            for (long n = 0; n < 200; ++n)
                t.rows.push_back({std::to_string(n + 1), points[n].a().str(), points[n].b().str(),
                                  std::string(1, side_char(points[n].side()))});
            t.write(fig2_out);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
