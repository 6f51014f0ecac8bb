#include "ptrig/polysolve.hpp"

#include <algorithm>
#include <cmath>

#include "ptrig/gentrig.hpp"
#include "ptrig/hyperseries.hpp"
#include "ptrig/numerics.hpp"
#include "ptrig/special_core.hpp"

namespace ptrig {

namespace {

using cd = std::complex<double>;

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kBringResidualGate = 1e-12;

double quintic_eval(double p, double lambda, double x) {
    const double x2 = x * x;
    return x2 * x2 * x + p * x + lambda;
}

void polish_real(std::span<const double> coeffs, std::span<const double> dcoeffs,
                 double& x, int steps = 2) {
    for (int i = 0; i < steps; ++i) {
        const double d = poly_eval(dcoeffs, x);
        if (d == 0.0) return;
        x -= poly_eval(coeffs, x) / d;
    }
}

void polish_complex(std::span<const double> coeffs, std::span<const double> dcoeffs,
                    cd& z, int steps = 2) {
    for (int i = 0; i < steps; ++i) {
        const cd d = poly_eval(dcoeffs, z);
        if (d == cd(0.0)) return;
        z -= poly_eval(coeffs, z) / d;
    }
}

// Stable roots of x^2 + B x + G; a negative discriminant yields an exact
// conjugate pair.
std::pair<cd, cd> quadratic_roots(double B, double G) {
    const double d = B * B - 4.0 * G;
    if (d >= 0.0) {
        const double s = std::sqrt(d);
        const double q = -0.5 * (B + std::copysign(s, B));
        const double r1 = q;
        const double r2 = (q != 0.0) ? G / q : -B - q;
        return {cd(r1), cd(r2)};
    }
    const double re = -0.5 * B;
    const double im = 0.5 * std::sqrt(-d);
    return {cd(re, im), cd(re, -im)};
}

RootSet assemble(std::span<const double> coeffs, std::vector<cd> roots,
                 std::vector<RootMethod> methods) {
    RootSet rs;
    rs.roots = std::move(roots);
    rs.methods = std::move(methods);
    rs.residuals.reserve(rs.roots.size());
    for (const cd& r : rs.roots) rs.residuals.push_back(relative_residual(coeffs, r));
    return rs;
}

bool lex_less(const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

const char* root_method_name(RootMethod method) {
    switch (method) {
        case RootMethod::closed_form: return "closed_form";
        case RootMethod::series: return "series";
        case RootMethod::newton: return "newton";
        case RootMethod::simultaneous_iteration: return "simultaneous_iteration";
    }
    return "unknown";
}

CubicReduction reduce_cubic(const CubicEquation& eq) {
    CubicReduction red;
    red.shift = -eq.a / 3.0;
    const double disc3 = 3.0 * eq.b - eq.a * eq.a;
    if (disc3 > 0.0) {
        red.p_scale = disc3 / 9.0;
        const double num = 27.0 * eq.c + 2.0 * eq.a * eq.a * eq.a - 9.0 * eq.a * eq.b;
        red.phi_equiv = (num / std::sqrt(disc3 * disc3 * disc3) + 4.0) / 3.0;
    }
    if (eq.b > 0.0) {
        const double tb = 3.0 * eq.b;
        red.beta = (27.0 * eq.c / std::sqrt(tb * tb * tb) + 4.0) / 3.0;
    }
    return red;
}

RootSet solve_cubic(const CubicEquation& eq, const ToleranceConfig& cfg) {
    cfg.validate();
    const std::vector<double> coeffs = {eq.c, eq.b, eq.a, 1.0};
    const std::vector<double> dcoeffs = poly_derivative(coeffs);

    const double disc3 = 3.0 * eq.b - eq.a * eq.a;
    const double shift = -eq.a / 3.0;
    // depressed constant: x = y + shift gives y^3 + (disc3/3) y + Q
    const double Q = (2.0 * eq.a * eq.a * eq.a - 9.0 * eq.a * eq.b + 27.0 * eq.c) / 27.0;

    double x1;
    if (std::abs(disc3) <= 1e-12 * std::max({1.0, eq.a * eq.a, std::abs(eq.b)})) {
        // near-degenerate: sqrt((3b-a^2)^3) would cancel catastrophically
        x1 = std::cbrt(-Q) + shift;
    } else if (disc3 > 0.0) {
        const CubicReduction red = reduce_cubic(eq);
        x1 = std::sqrt(disc3) / 3.0 * cos_p(*red.phi_equiv) + shift;
    } else {
        // y = s w maps the depressed cubic onto w^3 - 3w = v
        const double s = std::sqrt(-disc3) / 3.0;
        const double v = -Q / (s * s * s);
        double w;
        if (std::abs(v) <= 2.0) {
            const double theta = std::acos(0.5 * v);
            w = 0.0; // pick the cosine branch of largest magnitude: best deflation pivot
            for (int k = 0; k < 3; ++k) {
                const double wk = 2.0 * std::cos((theta - kTwoPi * k) / 3.0);
                if (std::abs(wk) > std::abs(w)) w = wk;
            }
        } else {
            w = std::copysign(2.0 * std::cosh(std::acosh(0.5 * std::abs(v)) / 3.0), v);
        }
        x1 = s * w + shift;
    }
    polish_real(coeffs, dcoeffs, x1);

    // remaining roots from Vieta: x2 x3 = -c/x1, x2 + x3 = -(a + x1)
    std::pair<cd, cd> pair = (x1 != 0.0)
                                 ? quadratic_roots(eq.a + x1, -eq.c / x1)
                                 : quadratic_roots(eq.a, eq.b);
    if (pair.first.imag() != 0.0) {
        polish_complex(coeffs, dcoeffs, pair.first);
        pair.second = std::conj(pair.first); // keep the pair exact
    } else {
        double r2 = pair.first.real(), r3 = pair.second.real();
        polish_real(coeffs, dcoeffs, r2);
        polish_real(coeffs, dcoeffs, r3);
        pair = {cd(r2), cd(r3)};
    }

    std::vector<cd> roots = {cd(x1), pair.first, pair.second};
    if (lex_less(roots[2], roots[1])) std::swap(roots[1], roots[2]);
    return assemble(coeffs, std::move(roots),
                    {RootMethod::closed_form, RootMethod::closed_form,
                     RootMethod::closed_form});
}

namespace detail {

std::pair<double, RootMethod> bring_root_tagged(double t, const ToleranceConfig& cfg) {
    cfg.validate();
    const double t_star = 4.0 * std::pow(5.0, -1.25);
    const double r5 = std::pow(5.0, -0.25); // fold abscissa of w^5 - w

    auto f = [&](double w) {
        const double w2 = w * w;
        return w2 * w2 * w - w + t;
    };
    auto df = [](double w) {
        const double w2 = w * w;
        return 5.0 * w2 * w2 - 1.0;
    };

    double w = 0.0;
    RootMethod tag = RootMethod::newton;
    bool have_seed = false;
    if (std::abs(t) < 0.53499) {
        try {
            w = bring_series(t, cfg).value.real();
            tag = RootMethod::series;
            have_seed = true;
        } catch (const NoConvergence&) {
            // slow series near the fold: drop to the bracketed path
        }
    }
    if (!have_seed) {
        if (std::abs(t) < t_star) {
            // three real roots; the continuation of w(0)=0 is the middle one
            w = bisect_then_newton(f, df, Interval(-r5, r5), cfg);
        } else if (t > 0.0) {
            w = bisect_then_newton(f, df, Interval(-1.0 - t, -r5), cfg);
        } else {
            w = bisect_then_newton(f, df, Interval(r5, 1.0 - t), cfg);
        }
    }

    const double gate = kBringResidualGate * std::max(1.0, std::abs(t));
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double fw = f(w);
        if (std::abs(fw) <= gate) return {w, tag};
        const double d = df(w);
        if (d == 0.0) break;
        w -= fw / d;
    }
    if (std::abs(f(w)) <= gate) return {w, tag};
    throw NoConvergence("bring_root: Newton polish missed the residual gate");
}

} // namespace detail

double bring_root(double t, const ToleranceConfig& cfg) {
    return detail::bring_root_tagged(t, cfg).first;
}

RootSet solve_quintic_trinomial(const QuinticTrinomial& eq, const ToleranceConfig& cfg) {
    cfg.validate();
    const std::vector<double> coeffs = {eq.lambda, eq.p, 0.0, 0.0, 0.0, 1.0};
    const std::vector<double> dcoeffs = poly_derivative(coeffs);

    if (eq.p == 0.0 && eq.lambda == 0.0) {
        return assemble(coeffs, std::vector<cd>(5, cd(0.0)),
                        std::vector<RootMethod>(5, RootMethod::closed_form));
    }

    if (eq.p == 0.0) {
        // x^5 = -lambda: the real fifth root and its four rotations
        const double r = std::copysign(std::pow(std::abs(eq.lambda), 0.2), -eq.lambda);
        std::vector<cd> roots = {cd(r)};
        for (int k = 1; k <= 2; ++k) {
            cd z = r * std::polar(1.0, kTwoPi * k / 5.0);
            polish_complex(coeffs, dcoeffs, z);
            roots.push_back(z);
            roots.push_back(std::conj(z));
        }
        std::sort(roots.begin() + 1, roots.end(), lex_less);
        return assemble(coeffs, std::move(roots),
                        std::vector<RootMethod>(5, RootMethod::closed_form));
    }

    // certified first root
    double x1;
    RootMethod tag1 = RootMethod::closed_form;
    if (eq.lambda == 0.0) {
        x1 = 0.0;
    } else if (eq.p > 0.0) {
        // x = s psi turns the quintic into 3 psi^5 + 5 psi + theta = 0,
        // theta = 3 lambda / s^5
        const double s = std::pow(0.6 * eq.p, 0.25);
        const double theta = 3.0 * eq.lambda / std::pow(s, 5.0);
        const double phi = (theta + 8.0) / 5.0;
        x1 = s * cos_m(phi, cfg);
    } else {
        // x = s w turns the quintic into w^5 - w + t = 0, t = lambda / s^5
        const double s = std::pow(-eq.p, 0.25);
        const double t = eq.lambda / std::pow(s, 5.0);
        const auto [w, tag] = detail::bring_root_tagged(t, cfg);
        x1 = s * w;
        tag1 = tag;
    }
    polish_real(coeffs, dcoeffs, x1);

    // synthetic division by (x - x1); for x^5 + p x + lambda the quartic is
    // x^4 + x1 x^3 + x1^2 x^2 + x1^3 x + (p + x1^4)
    const double x1_2 = x1 * x1;
    const std::vector<double> quartic = {eq.p + x1_2 * x1_2, x1_2 * x1, x1_2, x1, 1.0};
    std::vector<cd> others = all_roots(quartic, cfg);
    for (cd& z : others) polish_complex(coeffs, dcoeffs, z);

    // real-root count from the derivative 5x^4 + p
    int expected_real = 1;
    if (eq.p < 0.0) {
        const double r = std::pow(-eq.p / 5.0, 0.25);
        const double f_at_max = quintic_eval(eq.p, eq.lambda, -r);
        const double f_at_min = quintic_eval(eq.p, eq.lambda, r);
        if (f_at_max >= 0.0 && f_at_min <= 0.0) expected_real = 3;
    }
    const int realify = expected_real - 1;

    std::sort(others.begin(), others.end(),
              [](const cd& a, const cd& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    std::vector<cd> fixed;
    auto realify_root = [&](double r) {
        polish_real(coeffs, dcoeffs, r);
        fixed.push_back(cd(r));
    };
    for (int i = 0; i < realify; ++i) realify_root(others[static_cast<size_t>(i)].real());

    // the rest pair up as exact conjugates: match upper-half roots against
    // lower-half ones only, so a root can never pick its own mirror twin
    std::vector<cd> upper, lower;
    for (size_t i = static_cast<size_t>(realify); i < others.size(); ++i) {
        const cd& z = others[i];
        if (z.imag() > 0.0)
            upper.push_back(z);
        else if (z.imag() < 0.0)
            lower.push_back(z);
        else
            realify_root(z.real());
    }
    auto drop_flattest = [&](std::vector<cd>& pool) {
        size_t k = 0;
        for (size_t j = 1; j < pool.size(); ++j)
            if (std::abs(pool[j].imag()) < std::abs(pool[k].imag())) k = j;
        realify_root(pool[k].real());
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    };
    while (upper.size() > lower.size()) drop_flattest(upper);
    while (lower.size() > upper.size()) drop_flattest(lower);

    for (const cd& z0 : upper) {
        size_t best = 0;
        for (size_t j = 1; j < lower.size(); ++j)
            if (std::abs(std::conj(z0) - lower[j]) < std::abs(std::conj(z0) - lower[best]))
                best = j;
        // both halves were already polished on the quintic; averaging keeps
        // that accuracy while making the pair bit-exact conjugates
        const cd z = 0.5 * (z0 + std::conj(lower[best]));
        lower.erase(lower.begin() + static_cast<std::ptrdiff_t>(best));
        fixed.push_back(z);
        fixed.push_back(std::conj(z));
    }

    std::sort(fixed.begin(), fixed.end(), lex_less);
    std::vector<cd> roots = {cd(x1)};
    roots.insert(roots.end(), fixed.begin(), fixed.end());
    std::vector<RootMethod> methods = {tag1};
    methods.insert(methods.end(), 4, RootMethod::simultaneous_iteration);
    return assemble(coeffs, std::move(roots), std::move(methods));
}

std::pair<std::complex<double>, std::complex<double>>
cubic_remaining_roots_secant_form(double b, double c) {
    if (!(b > 0.0))
        throw DomainError("cubic_remaining_roots_secant_form: requires b > 0");
    const double tb = 3.0 * b;
    const double beta = (27.0 * c / std::sqrt(tb * tb * tb) + 4.0) / 3.0;
    const double cp = cos_p(beta);
    const cd inner = std::sqrt(cd(cp * cp * cp * cp / (4.0 * c * c) - 1.0));
    const double front = 0.5 * std::sqrt(3.0 / b) / cp;
    const cd base = cd(b / 3.0 * cp * cp);
    return {front * (base + 2.0 * c * inner), front * (base - 2.0 * c * inner)};
}

} // namespace ptrig
