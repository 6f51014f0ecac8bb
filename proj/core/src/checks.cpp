#include "ptrig/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "ptrig/gentrig.hpp"
#include "ptrig/hyperseries.hpp"
#include "ptrig/numerics.hpp"
#include "ptrig/polysolve.hpp"
#include "ptrig/special_core.hpp"

namespace ptrig::checks {

namespace {

using cd = std::complex<double>;

CheckResult line(std::string suite, std::string name, double max_error, double threshold) {
    return {std::move(suite), std::move(name), max_error, threshold,
            max_error <= threshold};
}

// Worst-case multiset distance between two root sets: greedy nearest match.
double multiset_distance(std::vector<cd> a, std::vector<cd> b) {
    double worst = 0.0;
    for (const cd& x : a) {
        size_t best = 0;
        double bd = std::abs(x - b[0]);
        for (size_t j = 1; j < b.size(); ++j) {
            const double d = std::abs(x - b[j]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        worst = std::max(worst, bd);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

} // namespace

std::vector<CheckResult> identities_suite(const ToleranceConfig& cfg) {
    std::vector<CheckResult> out;

    // ptf identity, cubic residual, monotonicity on 1e3 grid points of [-10,10]
    double worst_id = 0.0, worst_cubic = 0.0, worst_mono = -1e308, worst_fd = 0.0;
    const int n = 1000;
    double prev_c = 0.0;
    for (int i = 0; i < n; ++i) {
        const double phi = -10.0 + 20.0 * i / (n - 1);
        const double c = cos_p(phi), s = sin_p(phi);
        worst_id = std::max(worst_id, std::abs(c * c + s - 1.0));
        worst_cubic = std::max(worst_cubic, std::abs(c * c * c + 3.0 * c + 3.0 * phi - 4.0));
        if (i > 0) worst_mono = std::max(worst_mono, c - prev_c);
        prev_c = c;
        const auto d = ptf_derivatives(phi);
        const double h = 1e-5;
        worst_fd = std::max({worst_fd,
                             std::abs(d.dc - (cos_p(phi + h) - cos_p(phi - h)) / (2 * h)),
                             std::abs(d.ds - (sin_p(phi + h) - sin_p(phi - h)) / (2 * h))});
    }
    out.push_back(line("identities", "ptf_fundamental_identity", worst_id, 1e-12));
    out.push_back(line("identities", "ptf_defining_cubic_residual", worst_cubic, 1e-10));
    out.push_back(line("identities", "cos_p_strictly_decreasing", worst_mono, -1e-300));
    out.push_back(line("identities", "ptf_derivatives_vs_fd", worst_fd, 1e-6));

    // radical residual on 1e4 random points of the complex disc |a| <= 10
    std::mt19937_64 rng(20240801u);
    std::uniform_real_distribution<double> uang(0.0, 2.0 * M_PI), urad(0.0, 10.0);
    double worst_rad = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const cd a = std::polar(urad(rng), uang(rng));
        const cd r = chebyshev_radical(a);
        worst_rad = std::max(worst_rad,
                             std::abs(r * r * r - 3.0 * r - a) / std::max(1.0, std::abs(a)));
    }
    out.push_back(line("identities", "chebyshev_radical_residual", worst_rad, 1e-9));

    // hyper-parabolic branches and the nested-radical cross-check
    double worst_hps = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double phi = -1.0 + 2.0 * i / 200.0;
        for (const double s : hyper_parabolic_sin_all(phi))
            worst_hps = std::max(worst_hps, std::abs(7.0 / 3.0 * s * s * s - s - phi));
    }
    out.push_back(line("identities", "hyper_parabolic_residual", worst_hps, cfg.eps_residual));

    double worst_nest = 0.0, worst_match = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double v = -10.0 + 20.0 * i / 100.0;
        double x;
        try {
            x = nested_radical({v, 3.0, 3}, cfg);
        } catch (const NoConvergence&) {
            continue; // repelling fixed point: nothing to certify
        }
        worst_nest = std::max(worst_nest, std::abs(x * x * x - 3.0 * x - v) /
                                              std::max(1.0, std::abs(v)));
        if (v > 0.0) {
            const cd r = chebyshev_radical(cd(v));
            worst_match = std::max(worst_match, std::abs(r - cd(x)));
        }
    }
    out.push_back(line("identities", "nested_radical_residual", worst_nest, 1e-9));
    out.push_back(line("identities", "nested_vs_radical_positive_axis", worst_match, 1e-9));
    return out;
}

std::vector<CheckResult> series_suite(const ToleranceConfig& cfg) {
    std::vector<CheckResult> out;
    ToleranceConfig wide = cfg;
    wide.max_terms = std::max(cfg.max_terms, 50000);

    double worst_binom = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double tau = -1.9 + (2.0 + 1.9) * i / 99.0;
        const cd series = binomial_c13_series(cd(tau), wide).value;
        worst_binom = std::max(worst_binom, std::abs(series - chebyshev_radical(cd(tau))));
    }
    out.push_back(line("series", "binomial_series_vs_radical", worst_binom, 1e-8));

    const double lo = (4.0 - 2.0 * std::sqrt(3.0)) / 3.0 + 1e-2;
    const double hi = (4.0 + 2.0 * std::sqrt(3.0)) / 3.0 - 1e-2;
    double worst_cp = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double phi = lo + (hi - lo) * i / 99.0;
        worst_cp = std::max(worst_cp,
                            std::abs(cos_p_series(phi, wide).value.real() - cos_p(phi)));
    }
    out.push_back(line("series", "cos_p_series_vs_closed_form", worst_cp, 1e-8));

    // term-ratio engine vs direct Pochhammer products at random orders; the
    // direct side forms full long double products and divides once, so the
    // rounding paths differ
    std::mt19937_64 rng(77001u);
    std::uniform_int_distribution<int> upick(1, 24);
    const std::vector<double> as = {0.2, 0.4, 0.6, 0.8};
    const std::vector<double> bs = {0.5, 0.75, 1.25};
    const double z = -0.6;
    double worst_term = 0.0;
    double term = 1.0;
    std::vector<double> terms = {term};
    for (int k = 0; k < 30; ++k) {
        double r = 1.0;
        for (double a : as) r *= (a + k);
        for (double b : bs) r /= (b + k);
        term *= r * z / (k + 1);
        terms.push_back(term);
    }
    for (int pick = 0; pick < 5; ++pick) {
        const int k = upick(rng);
        long double num = 1.0L, den = 1.0L, zpow = 1.0L, fact = 1.0L;
        for (int j = 0; j < k; ++j) {
            for (double a : as) num *= (static_cast<long double>(a) + j);
            for (double b : bs) den *= (static_cast<long double>(b) + j);
            zpow *= z;
            fact *= (j + 1);
        }
        const double direct = static_cast<double>(num * zpow / (den * fact));
        worst_term = std::max(worst_term, std::abs(direct - terms[static_cast<size_t>(k)]) /
                                              std::abs(direct));
    }
    out.push_back(line("series", "term_recurrence_vs_pochhammer", worst_term, 1e-12));

    double worst_bring = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t = -0.5 + 1.0 * i / 49.0;
        const double w = bring_series(t, wide).value.real();
        const double w2 = w * w;
        worst_bring = std::max(worst_bring, std::abs(w2 * w2 * w - w + t));
    }
    out.push_back(line("series", "bring_series_residual", worst_bring, 1e-9));

    double worst_cm = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double theta = -3.0 + 6.0 * i / 49.0;
        const double phi = (theta + 8.0) / 5.0;
        const double v = cos_m_series(phi, wide).value.real();
        const double v2 = v * v;
        worst_cm = std::max(worst_cm, std::abs(3.0 * v2 * v2 * v + 5.0 * v + theta));
    }
    out.push_back(line("series", "cos_m_series_residual", worst_cm, 1e-9));

    double worst_cheb = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double x = -1.95 + (2.0 + 1.95) * i / 59.0;
        const double f = chebyshev_2f1(1.0 / 3.0, x, wide);
        worst_cheb = std::max(worst_cheb,
                              std::abs(f - std::cos(std::acos(0.5 * x) / 3.0)));
    }
    out.push_back(line("series", "chebyshev_2f1_vs_cos_form", worst_cheb, 1e-8));
    return out;
}

std::vector<CheckResult> quadrature_suite(const ToleranceConfig& cfg) {
    std::vector<CheckResult> out;

    struct Case {
        double (*f)(double);
        double lo, hi, exact, tol;
    };
    const Case cases[] = {
        {[](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0, 1e-12},
        {[](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0, M_PI / 2.0, 1e-10},
        {[](double x) { return 1.0 - x * x; }, 0.0, 1.0, 2.0 / 3.0, 1e-12},
        {[](double x) { return 1.0 - x * x * x * x; }, -1.0, 1.0, 8.0 / 5.0, 1e-12},
        {[](double x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0) - 1.0, 1e-12},
        {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0, 1e-10},
    };
    double worst = 0.0;
    for (const Case& c : cases)
        worst = std::max(worst,
                         std::abs(adaptive_quad(c.f, Interval(c.lo, c.hi), c.tol) - c.exact) /
                             c.tol);
    out.push_back(line("quadrature", "closed_form_integrals_rel_to_tol", worst, 1.0));

    const GenTrigParams families[] = {{2, 2}, {2, 1}, {4, 1}};
    double worst_area = 0.0;
    for (const auto& fam : families) {
        const double phi_max = gen_phi_max(fam, cfg);
        for (int i = 1; i < 50; ++i) {
            const double phi = phi_max * i / 50.0;
            const GenTrigPoint pt = gen_point(fam, phi, cfg);
            auto f = [&](double xi) {
                double t = 1.0;
                for (int k = 0; k < fam.p; ++k) t *= xi;
                t = 1.0 - t;
                if (fam.q == 1) return t;
                if (fam.q == 2) return std::sqrt(std::max(t, 0.0));
                return std::copysign(std::pow(std::abs(t), 1.0 / fam.q), t);
            };
            const double integral =
                pt.c < 1.0 ? adaptive_quad(f, Interval(pt.c, 1.0), cfg.eps_quad) : 0.0;
            worst_area = std::max(worst_area,
                                  std::abs(0.5 * pt.c * pt.s + integral - 0.5 * phi));
        }
    }
    out.push_back(line("quadrature", "area_definition_residual", worst_area, 1e-8));

    double worst_circ = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const double phi = M_PI * i / 50.0;
        worst_circ = std::max(worst_circ,
                              std::abs(gen_point({2, 2}, phi, cfg).c - std::cos(phi)));
    }
    out.push_back(line("quadrature", "circular_reduction", worst_circ, 1e-8));

    double worst_par = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const double phi = (8.0 / 3.0) * i / 50.0;
        const GenTrigPoint pt = gen_point({2, 1}, phi, cfg);
        worst_par = std::max({worst_par, std::abs(pt.c - cos_p(phi)),
                              std::abs(pt.s - sin_p(phi))});
    }
    out.push_back(line("quadrature", "parabolic_reduction", worst_par, 1e-9));

    double worst_qu = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const double phi = (16.0 / 5.0) * i / 50.0;
        const double c = gen_point({4, 1}, phi, cfg).c;
        const double c2 = c * c;
        worst_qu = std::max(worst_qu,
                            std::abs(3.0 * c2 * c2 * c + 5.0 * c + 5.0 * phi - 8.0));
    }
    out.push_back(line("quadrature", "quintic_reduction_residual", worst_qu, 1e-9));
    return out;
}

std::vector<CheckResult> solvers_suite(const ToleranceConfig& cfg) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(515201u);
    std::uniform_real_distribution<double> u(-10.0, 10.0);

    double worst_res = 0.0, worst_vieta = 0.0, worst_match = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CubicEquation eq{u(rng), u(rng), u(rng)};
        const RootSet rs = solve_cubic(eq, cfg);
        const double scale = std::max({1.0, std::abs(eq.a), std::abs(eq.b), std::abs(eq.c)});
        const std::vector<double> coeffs = {eq.c, eq.b, eq.a, 1.0};
        for (const cd& r : rs.roots)
            worst_res = std::max(worst_res, std::abs(poly_eval(coeffs, r)) / scale);
        const cd sum = rs.roots[0] + rs.roots[1] + rs.roots[2];
        const cd pairsum = rs.roots[0] * rs.roots[1] + rs.roots[0] * rs.roots[2] +
                           rs.roots[1] * rs.roots[2];
        const cd prod = rs.roots[0] * rs.roots[1] * rs.roots[2];
        worst_vieta = std::max({worst_vieta, std::abs(sum + eq.a) / scale,
                                std::abs(pairsum - eq.b) / scale,
                                std::abs(prod + eq.c) / scale});
        worst_match = std::max(worst_match, multiset_distance(rs.roots, all_roots(coeffs, cfg)));
    }
    out.push_back(line("solvers", "cubic_corpus_residual", worst_res, 1e-8));
    out.push_back(line("solvers", "cubic_corpus_vieta", worst_vieta, 1e-7));
    out.push_back(line("solvers", "cubic_corpus_vs_all_roots", worst_match, 1e-7));

    double worst_q = 0.0, worst_qmatch = 0.0;
    bool real_count_ok = true;
    for (int i = 0; i < 1000; ++i) {
        const QuinticTrinomial eq{u(rng), u(rng)};
        const RootSet rs = solve_quintic_trinomial(eq, cfg);
        const std::vector<double> coeffs = {eq.lambda, eq.p, 0.0, 0.0, 0.0, 1.0};
        for (const cd& r : rs.roots)
            worst_q = std::max(worst_q, relative_residual(coeffs, r));
        if (eq.p > 0.0) {
            int reals = 0;
            for (const cd& r : rs.roots) reals += (r.imag() == 0.0);
            real_count_ok = real_count_ok && (reals == 1);
        }
        worst_qmatch = std::max(worst_qmatch,
                                multiset_distance(rs.roots, all_roots(coeffs, cfg)));
    }
    out.push_back(line("solvers", "quintic_corpus_residual", worst_q, 1e-7));
    out.push_back(line("solvers", "quintic_corpus_vs_all_roots", worst_qmatch, 1e-7));
    out.push_back({"solvers", "quintic_positive_p_one_real_root", real_count_ok ? 0.0 : 1.0,
                   0.5, real_count_ok});

    ToleranceConfig wide = cfg;
    wide.max_terms = std::max(cfg.max_terms, 50000);
    double worst_bring = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const double t = -0.5 + 1.0 * i / 50.0;
        worst_bring = std::max(worst_bring,
                               std::abs(bring_root(t, wide) - bring_series(t, wide).value.real()));
    }
    out.push_back(line("solvers", "bring_root_vs_bring_series", worst_bring, 1e-9));
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const ToleranceConfig& cfg) {
    if (name == "identities") return identities_suite(cfg);
    if (name == "series") return series_suite(cfg);
    if (name == "quadrature") return quadrature_suite(cfg);
    if (name == "solvers") return solvers_suite(cfg);
    if (name == "all") {
        std::vector<CheckResult> out = identities_suite(cfg);
        auto append = [&out](std::vector<CheckResult> more) {
            out.insert(out.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
        };
        append(series_suite(cfg));
        append(quadrature_suite(cfg));
        append(solvers_suite(cfg));
        return out;
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace ptrig::checks
