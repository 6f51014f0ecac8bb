#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ptrig/gentrig.hpp"
#include "ptrig/hyperseries.hpp"
#include "ptrig/numerics.hpp"
#include "ptrig/special_core.hpp"
#include "oracles.hpp"

using namespace ptrig;

namespace {

double pow_i(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Quadrature oracle for the area half of the defining system.
double area_residual(const GenTrigPoint& pt, double quad_tol = 1e-10) {
    auto f = [&](double xi) {
        const double t = 1.0 - pow_i(xi, pt.params.p);
        if (pt.params.q == 1) return t;
        if (pt.params.q == 2) return std::sqrt(std::max(t, 0.0));
        return std::copysign(std::pow(std::abs(t), 1.0 / pt.params.q), t);
    };
    const double integral =
        pt.c < 1.0 ? adaptive_quad(f, Interval(pt.c, 1.0), quad_tol) : 0.0;
    return std::abs(0.5 * pt.c * pt.s + integral - 0.5 * pt.phi);
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate_params({2, 2}));
    CHECK_NOTHROW(validate_params({2, 1}));
    CHECK_NOTHROW(validate_params({4, 1}));
    CHECK_NOTHROW(validate_params({3, 2}));
    CHECK_THROWS_AS(validate_params({4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params({3, -1}), std::invalid_argument);
}

TEST_CASE("gen_phi_max: closed values") {
    ToleranceConfig cfg;
    CHECK(gen_phi_max({2, 2}, cfg) == doctest::Approx(M_PI).epsilon(1e-9));
    CHECK(gen_phi_max({2, 1}, cfg) == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
    CHECK(gen_phi_max({4, 1}, cfg) == doctest::Approx(16.0 / 5.0).epsilon(1e-10));
}

TEST_CASE("gen_point: anchors") {
    ToleranceConfig cfg;
    const auto p0 = gen_point({2, 2}, 0.0, cfg);
    CHECK(p0.c == doctest::Approx(1.0));
    CHECK(p0.s == doctest::Approx(0.0));

    const auto p1 = gen_point({2, 2}, M_PI / 3.0, cfg);
    CHECK(p1.c == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(p1.s == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-8));

    const auto p2 = gen_point({2, 1}, 4.0 / 3.0, cfg);
    CHECK(std::abs(p2.c) < 1e-9);
    CHECK(p2.s == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gen_point: both defining equations hold along each branch") {
    ToleranceConfig cfg;
    for (const GenTrigParams fam : {GenTrigParams{2, 2}, GenTrigParams{2, 1},
                                    GenTrigParams{4, 1}}) {
        const double phi_max = gen_phi_max(fam, cfg);
        double prev_c = 2.0;
        for (int i = 0; i <= 50; ++i) {
            const double phi = phi_max * i / 50.0;
            const auto pt = gen_point(fam, phi, cfg);
            CHECK(std::abs(pow_i(pt.c, fam.p) + pow_i(pt.s, fam.q) - 1.0) <= 1e-10);
            CHECK(area_residual(pt) <= 1e-8);
            CHECK(pt.c < prev_c + 1e-12); // strictly decreasing up to solver fuzz
            prev_c = pt.c;
        }
    }
}

TEST_CASE("gen_point: circular, parabolic and quintic reductions") {
    ToleranceConfig cfg;
    for (int i = 0; i <= 50; ++i) {
        const double phi = M_PI * i / 50.0;
        CHECK(std::abs(gen_point({2, 2}, phi, cfg).c - std::cos(phi)) <= 1e-8);
    }
    for (int i = 0; i <= 50; ++i) {
        const double phi = (8.0 / 3.0) * i / 50.0;
        const auto pt = gen_point({2, 1}, phi, cfg);
        CHECK(std::abs(pt.c - cos_p(phi)) <= 1e-9);
        CHECK(std::abs(pt.s - sin_p(phi)) <= 1e-9);
    }
    for (int i = 0; i <= 50; ++i) {
        const double phi = (16.0 / 5.0) * i / 50.0;
        const double c = gen_point({4, 1}, phi, cfg).c;
        CHECK(std::abs(3.0 * pow_i(c, 5) + 5.0 * c + 5.0 * phi - 8.0) <= 1e-9);
    }
}

TEST_CASE("gen_point: q=1 extends off the geometric branch, q=2 does not") {
    ToleranceConfig cfg;
    const auto beyond = gen_point({2, 1}, 4.0, cfg);
    CHECK(std::abs(beyond.c - cos_p(4.0)) < 1e-9);
    CHECK(beyond.s == doctest::Approx(1.0 - beyond.c * beyond.c));
    const auto before = gen_point({2, 1}, -2.0, cfg);
    CHECK(std::abs(before.c - cos_p(-2.0)) < 1e-9);
    CHECK_THROWS_AS(gen_point({2, 2}, 3.5, cfg), DomainError);
    CHECK_THROWS_AS(gen_point({2, 2}, -0.2, cfg), DomainError);
}

TEST_CASE("dual evaluation: implicit quadrature solve vs RK4 on the derivative system") {
    ToleranceConfig cfg;
    for (const GenTrigParams fam : {GenTrigParams{2, 2}, GenTrigParams{2, 1},
                                    GenTrigParams{4, 1}}) {
        const double phi_max = gen_phi_max(fam, cfg);
        auto rhs = [&](const oracles::PlanarState& y) {
            const double den = fam.q * pow_i(y.s, fam.q) + fam.p * pow_i(y.c, fam.p);
            return oracles::PlanarState{-fam.q * pow_i(y.s, fam.q - 1) / den,
                                        fam.p * pow_i(y.c, fam.p - 1) / den};
        };
        for (int i = 1; i < 50; ++i) {
            // stop slightly short of the far end, where the ODE itself is fine
            // but RK4's truncation degrades in the last few steps
            const double phi = 0.98 * phi_max * i / 50.0;
            const auto ode = oracles::rk4_advance(rhs, {1.0, 0.0}, phi, 4000);
            const auto pt = gen_point(fam, phi, cfg);
            CHECK(std::abs(pt.c - ode.c) <= 1e-7);
            CHECK(std::abs(pt.s - ode.s) <= 1e-7);
        }
    }
}

TEST_CASE("gen_derivatives: anchors, finite differences, singularities") {
    ToleranceConfig cfg;
    const auto d22 = gen_derivatives(gen_point({2, 2}, 0.0, cfg));
    CHECK(d22.dc == doctest::Approx(0.0));
    CHECK(d22.ds == doctest::Approx(1.0));
    const auto d21 = gen_derivatives(gen_point({2, 1}, 0.0, cfg));
    CHECK(d21.dc == doctest::Approx(-0.5));
    CHECK(d21.ds == doctest::Approx(1.0));
    const auto d41 = gen_derivatives(gen_point({4, 1}, 0.0, cfg));
    CHECK(d41.dc == doctest::Approx(-0.25));
    CHECK(d41.ds == doctest::Approx(1.0));

    for (const GenTrigParams fam : {GenTrigParams{2, 2}, GenTrigParams{2, 1},
                                    GenTrigParams{4, 1}}) {
        const double phi_max = gen_phi_max(fam, cfg);
        for (int i = 2; i < 48; ++i) {
            const double phi = 0.98 * phi_max * i / 50.0;
            const auto d = gen_derivatives(gen_point(fam, phi, cfg));
            auto cval = [&](double ph) { return gen_point(fam, ph, cfg).c; };
            auto sval = [&](double ph) { return gen_point(fam, ph, cfg).s; };
            CHECK(std::abs(d.dc - oracles::central_diff(cval, phi)) < 1e-6);
            CHECK(std::abs(d.ds - oracles::central_diff(sval, phi)) < 1e-6);
        }
    }

    CHECK_THROWS_AS(gen_derivatives(GenTrigPoint{{2, 1}, 0.0, 0.0, 0.0}), SingularPoint);
}

TEST_CASE("gen_tan: value, derivative property, singularity") {
    ToleranceConfig cfg;
    CHECK(gen_tan(gen_point({2, 2}, M_PI / 4.0, cfg)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(gen_tan(gen_point({2, 2}, 0.0, cfg)) == doctest::Approx(0.0));
    CHECK(gen_tan(gen_point({4, 1}, 0.0, cfg)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(gen_tan(gen_point({2, 1}, 4.0 / 3.0, cfg)), SingularPoint);

    for (const GenTrigParams fam : {GenTrigParams{2, 2}, GenTrigParams{2, 1},
                                    GenTrigParams{4, 1}}) {
        const double phi_max = gen_phi_max(fam, cfg);
        auto tval = [&](double ph) { return gen_tan(gen_point(fam, ph, cfg)); };
        for (int i = 1; i < 50; ++i) {
            const double phi = 0.9 * phi_max * i / 50.0;
            const auto pt = gen_point(fam, phi, cfg);
            if (std::abs(pt.c) <= 0.1) continue;
            CHECK(std::abs(oracles::central_diff(tval, phi) - 1.0 / (pt.c * pt.c)) < 1e-6);
        }
    }
}

TEST_CASE("q1_polynomial: coefficient anchors and root consistency") {
    SUBCASE("p = 2 reproduces the parabolic cubic") {
        const auto c = q1_polynomial(2, 0.0);
        REQUIRE(c.size() == 4);
        CHECK(c[0] == -4.0);
        CHECK(c[1] == 3.0);
        CHECK(c[2] == 0.0);
        CHECK(c[3] == 1.0);
    }
    SUBCASE("p = 4 reproduces the quintic of cos m") {
        const auto c = q1_polynomial(4, 0.0);
        REQUIRE(c.size() == 6);
        CHECK(c[0] == -8.0);
        CHECK(c[1] == 5.0);
        CHECK(c[5] == 3.0);
        // real root at psi = 1
        CHECK(poly_eval(c, 1.0) == doctest::Approx(0.0));
    }
    SUBCASE("p = 4, phi = 16/5 has the real root -1") {
        const auto c = q1_polynomial(4, 16.0 / 5.0);
        CHECK(std::abs(poly_eval(c, -1.0)) < 1e-12);
    }
    SUBCASE("matches gen_point on the shared domain") {
        ToleranceConfig cfg;
        for (int p : {2, 4}) {
            const GenTrigParams fam{p, 1};
            const double phi_max = gen_phi_max(fam, cfg);
            for (int i = 0; i <= 20; ++i) {
                const double phi = phi_max * i / 20.0;
                const auto poly = q1_polynomial(p, phi);
                CHECK(std::abs(poly_eval(poly, gen_point(fam, phi, cfg).c)) < 1e-8);
            }
        }
    }
    CHECK_THROWS_AS(q1_polynomial(1, 0.0), std::invalid_argument);
}

TEST_CASE("cos_m / sin_m: anchors, residual, series agreement") {
    ToleranceConfig cfg;
    CHECK(cos_m(0.0, cfg) == doctest::Approx(1.0));
    CHECK(sin_m(0.0, cfg) == doctest::Approx(0.0));
    CHECK(std::abs(cos_m(8.0 / 5.0, cfg)) < 1e-12);
    CHECK(sin_m(8.0 / 5.0, cfg) == doctest::Approx(1.0));
    CHECK(cos_m(16.0 / 5.0, cfg) == doctest::Approx(-1.0));
    CHECK(std::abs(sin_m(16.0 / 5.0, cfg)) < 1e-12);

    ToleranceConfig wide = cfg;
    wide.max_terms = 100000;
    for (int i = 0; i <= 60; ++i) {
        const double phi = -3.0 + 9.0 * i / 60.0;
        const double c = cos_m(phi, cfg);
        const double theta = 5.0 * phi - 8.0;
        CHECK(std::abs(3.0 * pow_i(c, 5) + 5.0 * c + theta) <=
              cfg.eps_residual * std::max(1.0, std::abs(theta)));
        // cos_m^4 + sin_m = 1 exactly by construction
        CHECK(pow_i(c, 4) + sin_m(phi, cfg) == 1.0);
        if (std::abs(theta) < 3.0)
            CHECK(std::abs(c - cos_m_series(phi, wide).value.real()) < 1e-8);
    }
}
