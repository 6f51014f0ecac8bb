#include "ptrig/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace ptrig {

namespace {

constexpr int kMaxDepth = 40;

double simpson(double h, double fa, double fm, double fb) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic recursive adaptive Simpson with the /15 Richardson acceptance.
double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth >= kMaxDepth)
        throw DepthExceeded("adaptive_quad: recursion depth > 40");
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double simpson_adaptive(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return simpson_rec(f, a, b, fa, fm, fb, simpson(b - a, fa, fm, fb), tol, 0);
}

} // namespace

double adaptive_quad(const std::function<double(double)>& f, Interval iv, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_quad: tol must be > 0");
    const double w = iv.hi - iv.lo;

    // Panel edges: a geometric ladder (ratio 1/2) into each endpoint, one
    // plain panel in the middle. 46 rungs leave terminal stubs of ~4e-15*w,
    // whose contribution is integrated by a single non-adaptive Simpson rule;
    // for a bounded integrand the stub error is far below any tol we accept.
    constexpr int kRungs = 46;
    std::vector<double> edges;
    edges.reserve(2 * kRungs + 3);
    double d = 0.25 * w;
    edges.push_back(iv.lo + d); // middle panel runs between the two quarter points
    for (int k = 0; k < kRungs; ++k) {
        d *= 0.5;
        edges.push_back(iv.lo + d);
    }
    std::vector<double> right_edges;
    d = 0.25 * w;
    right_edges.push_back(iv.hi - d);
    for (int k = 0; k < kRungs; ++k) {
        d *= 0.5;
        right_edges.push_back(iv.hi - d);
    }

    double total = 0.0;

    // terminal stubs
    {
        const double a = iv.lo, b = edges.back();
        total += simpson(b - a, f(a), f(0.5 * (a + b)), f(b));
        const double a2 = right_edges.back(), b2 = iv.hi;
        total += simpson(b2 - a2, f(a2), f(0.5 * (a2 + b2)), f(b2));
    }

    // ladders, tolerance shared proportionally to panel width
    for (int k = static_cast<int>(edges.size()) - 1; k > 0; --k) {
        const double a = edges[static_cast<size_t>(k)];
        const double b = edges[static_cast<size_t>(k) - 1];
        total += simpson_adaptive(f, a, b, tol * (b - a) / w);
    }
    for (int k = static_cast<int>(right_edges.size()) - 1; k > 0; --k) {
        const double a = right_edges[static_cast<size_t>(k) - 1];
        const double b = right_edges[static_cast<size_t>(k)];
        total += simpson_adaptive(f, a, b, tol * (b - a) / w);
    }

    // middle panel
    total += simpson_adaptive(f, edges.front(), right_edges.front(), 0.5 * tol);
    return total;
}

double bisect_then_newton(const std::function<double(double)>& f,
                          const std::function<double(double)>& df,
                          Interval iv, const ToleranceConfig& cfg) {
    cfg.validate();
    double lo = iv.lo, hi = iv.hi;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw DomainError("bisect_then_newton: no sign change over the interval");

    // coarse bisection
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int it = 0; it < cfg.max_iter; ++it) {
        if (std::abs(fx) <= cfg.eps_residual * std::max(1.0, std::abs(x)))
            return x;
        // keep the bracket current
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        const double d = df(x);
        double xn = (d != 0.0) ? x - fx / d : lo - 1.0; // force fallback when flat
        double fn = (xn > lo && xn < hi) ? f(xn) : 0.0;
        if (!(xn > lo && xn < hi) || !(std::abs(fn) < std::abs(fx))) {
            xn = 0.5 * (lo + hi); // non-contracting Newton step: bisect instead
            fn = f(xn);
        }
        if (xn == x) return x; // interval exhausted at machine resolution
        x = xn;
        fx = fn;
    }
    throw NoConvergence("bisect_then_newton: max_iter reached");
}

namespace {

using cd = std::complex<double>;

void eval_with_derivative(std::span<const double> c, cd x, cd& p, cd& dp) {
    p = cd(c.back());
    dp = cd(0.0);
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        dp = dp * x + p;
        p = p * x + c[static_cast<size_t>(i)];
    }
}

bool aberth_pass(std::span<const double> coeffs, std::vector<cd>& z, int max_iter) {
    const int n = static_cast<int>(z.size());
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cd p, dp;
            eval_with_derivative(coeffs, z[static_cast<size_t>(i)], p, dp);
            if (p == cd(0.0)) continue;
            if (dp == cd(0.0)) dp = cd(1e-300);
            const cd w = p / dp;
            cd s(0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            const cd denom = 1.0 - w * s;
            const cd step = (denom == cd(0.0)) ? w : w / denom;
            z[static_cast<size_t>(i)] -= step;
            worst = std::max(worst,
                             std::abs(step) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst <= 1e-14) return true;
    }
    return false;
}

} // namespace

std::vector<std::complex<double>> all_roots(std::span<const double> coeffs,
                                            const ToleranceConfig& cfg) {
    cfg.validate();
    if (coeffs.size() < 2) throw std::invalid_argument("all_roots: degree must be >= 1");
    if (coeffs.back() == 0.0) throw std::invalid_argument("all_roots: leading coefficient is zero");
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n > 16) throw std::invalid_argument("all_roots: degree > 16 unsupported");

    double maxc = 0.0;
    for (size_t i = 0; i + 1 < coeffs.size(); ++i) maxc = std::max(maxc, std::abs(coeffs[i]));
    const double radius = 1.0 + maxc / std::abs(coeffs.back());

    auto seed = [&](double offset) {
        std::vector<cd> z(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double ang = 2.0 * M_PI * k / n + offset;
            z[static_cast<size_t>(k)] = radius * cd(std::cos(ang), std::sin(ang));
        }
        return z;
    };

    std::vector<cd> z = seed(0.4);
    if (!aberth_pass(coeffs, z, cfg.max_iter)) {
        z = seed(0.4 + 0.9); // one rotated retry
        if (!aberth_pass(coeffs, z, cfg.max_iter))
            throw NoConvergence("all_roots: Aberth iteration failed twice");
    }

    // Newton polish, two steps each
    for (auto& r : z) {
        for (int s = 0; s < 2; ++s) {
            cd p, dp;
            eval_with_derivative(coeffs, r, p, dp);
            if (dp != cd(0.0)) r -= p / dp;
        }
    }
    return z;
}

std::complex<double> poly_eval(std::span<const double> coeffs, std::complex<double> x) {
    cd p(0.0);
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        p = p * x + coeffs[static_cast<size_t>(i)];
    return p;
}

double poly_eval(std::span<const double> coeffs, double x) {
    double p = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        p = p * x + coeffs[static_cast<size_t>(i)];
    return p;
}

std::vector<double> poly_derivative(std::span<const double> coeffs) {
    std::vector<double> d;
    if (coeffs.size() <= 1) return {0.0};
    d.resize(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs[i];
    return d;
}

double residual_scale(std::span<const double> coeffs, std::complex<double> x) {
    const double ax = std::abs(x);
    double s = 0.0, xp = 1.0;
    for (const double c : coeffs) {
        s += std::abs(c) * xp;
        xp *= ax;
    }
    return std::max(1.0, s);
}

double relative_residual(std::span<const double> coeffs, std::complex<double> x) {
    return std::abs(poly_eval(coeffs, x)) / residual_scale(coeffs, x);
}

} // namespace ptrig
