#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptrig/checks.hpp"
#include "ptrig/gentrig.hpp"
#include "ptrig/hyperseries.hpp"
#include "ptrig/numerics.hpp"
#include "ptrig/polysolve.hpp"
#include "ptrig/special_core.hpp"

namespace ptrig_cli {

namespace {

using namespace ptrig;
using cd = std::complex<double>;

// thrown after the failing record has been printed with status = "failed"
struct ResidualGateFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// A flat record: ordered fields, each already rendered for JSON. CSV reuses
// the same rendering minus the quotes.
struct Record {
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<bool> quoted;

    void add_num(const std::string& k, double v) {
        fields.emplace_back(k, fmt17(v));
        quoted.push_back(false);
    }
    void add_int(const std::string& k, long long v) {
        fields.emplace_back(k, std::to_string(v));
        quoted.push_back(false);
    }
    void add_str(const std::string& k, const std::string& v) {
        fields.emplace_back(k, v);
        quoted.push_back(true);
    }
    void add_raw(const std::string& k, const std::string& v) {
        fields.emplace_back(k, v);
        quoted.push_back(false);
    }
};

struct Emitter {
    std::ostream& out;
    bool csv = false;
    bool header_done = false;

    void emit(const Record& r) {
        if (csv) {
            if (!header_done) {
                for (size_t i = 0; i < r.fields.size(); ++i)
                    out << (i ? "," : "") << r.fields[i].first;
                out << "\n";
                header_done = true;
            }
            for (size_t i = 0; i < r.fields.size(); ++i)
                out << (i ? "," : "") << r.fields[i].second;
            out << "\n";
            return;
        }
        out << "{";
        for (size_t i = 0; i < r.fields.size(); ++i) {
            if (i) out << ",";
            out << '"' << r.fields[i].first << "\":";
            if (r.quoted[i])
                out << '"' << json_escape(r.fields[i].second) << '"';
            else
                out << r.fields[i].second;
        }
        out << "}\n";
    }
};

struct Options {
    ToleranceConfig cfg;
    bool csv = false;
    bool use_series = false;
};

long long elapsed_us(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// ----- eval -----------------------------------------------------------

struct EvalOut {
    std::vector<double> values;
    std::vector<double> residuals; // one per value, already scale-aware
    const char* method = "closed_form";
    int terms_used = -1; // >= 0 only on series paths
};

double ptf_cubic_residual(double phi, double c) {
    const std::vector<double> poly = {3.0 * phi - 4.0, 3.0, 0.0, 1.0};
    return relative_residual(poly, cd(c));
}

double cosm_quintic_residual(double phi, double c) {
    const std::vector<double> poly = {5.0 * phi - 8.0, 5.0, 0.0, 0.0, 0.0, 3.0};
    return relative_residual(poly, cd(c));
}

double gen_area_residual(const GenTrigPoint& pt, double quad_tol) {
    auto f = [&](double xi) {
        double t = 1.0;
        for (int k = 0; k < pt.params.p; ++k) t *= xi;
        t = 1.0 - t;
        if (pt.params.q == 1) return t;
        if (pt.params.q == 2) return std::sqrt(std::max(t, 0.0));
        return std::copysign(std::pow(std::abs(t), 1.0 / pt.params.q), t);
    };
    const double integral =
        pt.c < 1.0 ? adaptive_quad(f, Interval(pt.c, 1.0), quad_tol) : 0.0;
    return std::abs(0.5 * pt.c * pt.s + integral - 0.5 * pt.phi);
}

double pow_int(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

EvalOut eval_fn(const std::string& fn, double phi, int p, int q,
                const std::string& branch, const Options& opt) {
    const ToleranceConfig& cfg = opt.cfg;
    EvalOut r;
    if (fn == "cosp") {
        double c;
        if (opt.use_series) {
            const SeriesResult s = cos_p_series(phi, cfg);
            c = s.value.real();
            r.method = "series";
            r.terms_used = s.terms_used;
        } else {
            c = cos_p(phi);
        }
        r.values = {c};
        r.residuals = {ptf_cubic_residual(phi, c)};
    } else if (fn == "sinp") {
        const double c = cos_p(phi), s = sin_p(phi);
        r.values = {s};
        r.residuals = {std::abs(c * c + s - 1.0)};
    } else if (fn == "cosm") {
        double c;
        if (opt.use_series) {
            const SeriesResult s = cos_m_series(phi, cfg);
            c = s.value.real();
            r.method = "series";
            r.terms_used = s.terms_used;
        } else {
            c = cos_m(phi, cfg);
        }
        r.values = {c};
        r.residuals = {cosm_quintic_residual(phi, c)};
    } else if (fn == "sinm") {
        const double c = cos_m(phi, cfg), s = sin_m(phi, cfg);
        r.values = {s};
        r.residuals = {cosm_quintic_residual(phi, c) + std::abs(c * c * c * c + s - 1.0)};
    } else if (fn == "hps") {
        std::vector<double> roots;
        if (branch == "all")
            roots = hyper_parabolic_sin_all(phi);
        else if (branch == "largest")
            roots = {hyper_parabolic_sin(phi, HpsBranch::largest)};
        else
            roots = {hyper_parabolic_sin(phi, HpsBranch::principal)};
        for (double s : roots) {
            r.values.push_back(s);
            r.residuals.push_back(std::abs(7.0 / 3.0 * s * s * s - s - phi) /
                                  std::max(1.0, std::abs(phi)));
        }
    } else if (fn == "cheb") {
        const cd v = chebyshev_radical(cd(phi));
        r.values = {v.real(), v.imag()};
        const double res =
            std::abs(v * v * v - 3.0 * v - cd(phi)) / std::max(1.0, std::abs(phi));
        r.residuals = {res, res};
    } else if (fn == "genc" || fn == "gens" || fn == "gent") {
        const GenTrigPoint pt = gen_point({p, q}, phi, cfg);
        const double identity =
            std::abs(pow_int(pt.c, p) + pow_int(pt.s, q) - 1.0);
        const double phi_max = gen_phi_max({p, q}, cfg);
        double res = identity;
        if (phi >= 0.0 && phi <= phi_max)
            res = std::max(res, gen_area_residual(pt, cfg.eps_quad));
        if (q == 1)
            res = std::max(res, relative_residual(q1_polynomial(p, phi), cd(pt.c)));
        if (fn == "genc")
            r.values = {pt.c};
        else if (fn == "gens")
            r.values = {pt.s};
        else
            r.values = {gen_tan(pt)};
        r.residuals = {res};
        r.method = "bracketed_newton";
    } else {
        throw CLI::ValidationError("--fn", "unknown function '" + fn + "'");
    }
    return r;
}

double eval_gate(const std::string& fn, const Options& opt) {
    if (fn == "genc" || fn == "gens" || fn == "gent")
        return std::max(opt.cfg.eps_residual, std::max(100.0 * opt.cfg.eps_quad, 1e-8));
    return opt.cfg.eps_residual;
}

int cmd_eval(const std::string& fn, double phi, int p, int q, const std::string& branch,
             const Options& opt, Emitter& em) {
    const auto t0 = std::chrono::steady_clock::now();
    const EvalOut r = eval_fn(fn, phi, p, q, branch, opt);
    const double gate = eval_gate(fn, opt);
    bool ok = true;
    for (double res : r.residuals) ok = ok && (res <= gate);

    Record rec;
    rec.add_str("cmd", "eval");
    rec.add_str("fn", fn);
    rec.add_num("phi", phi);
    if (fn.rfind("gen", 0) == 0) {
        rec.add_int("p", p);
        rec.add_int("q", q);
    }
    if (fn == "hps") rec.add_str("branch", branch);
    if (r.values.size() == 1) {
        rec.add_num("value", r.values[0]);
        rec.add_num("residual", r.residuals[0]);
    } else {
        std::string vals = "[", ress = "[";
        for (size_t i = 0; i < r.values.size(); ++i) {
            if (i) {
                vals += ",";
                ress += ",";
            }
            vals += fmt17(r.values[i]);
            ress += fmt17(r.residuals[i]);
        }
        rec.add_raw("values", vals + "]");
        rec.add_raw("residuals", ress + "]");
    }
    rec.add_str("method", r.method);
    if (r.terms_used >= 0) rec.add_int("terms_used", r.terms_used);
    rec.add_int("elapsed_us", elapsed_us(t0));
    rec.add_str("status", ok ? "ok" : "failed");
    em.emit(rec);
    if (!ok) throw ResidualGateFailure("eval: residual gate failed");
    return kOk;
}

// ----- solve ----------------------------------------------------------

int cmd_solve(const std::string& kind, double a, double b, double c, double qp,
              double lambda, const Options& opt, Emitter& em) {
    const auto t0 = std::chrono::steady_clock::now();
    RootSet rs;
    if (kind == "cubic")
        rs = solve_cubic({a, b, c}, opt.cfg);
    else
        rs = solve_quintic_trinomial({qp, lambda}, opt.cfg);

    bool ok = true;
    for (double res : rs.residuals) ok = ok && (res <= opt.cfg.eps_residual);
    const long long us = elapsed_us(t0);

    if (em.csv) {
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            Record rec;
            rec.add_str("cmd", "solve");
            rec.add_str("kind", kind);
            if (kind == "cubic") {
                rec.add_num("a", a);
                rec.add_num("b", b);
                rec.add_num("c", c);
            } else {
                rec.add_num("p", qp);
                rec.add_num("lambda", lambda);
            }
            rec.add_int("index", static_cast<long long>(i));
            rec.add_num("re", rs.roots[i].real());
            rec.add_num("im", rs.roots[i].imag());
            rec.add_num("residual", rs.residuals[i]);
            rec.add_str("method", root_method_name(rs.methods[i]));
            rec.add_int("elapsed_us", us);
            rec.add_str("status", ok ? "ok" : "failed");
            em.emit(rec);
        }
    } else {
        Record rec;
        rec.add_str("cmd", "solve");
        rec.add_str("kind", kind);
        if (kind == "cubic") {
            rec.add_num("a", a);
            rec.add_num("b", b);
            rec.add_num("c", c);
        } else {
            rec.add_num("p", qp);
            rec.add_num("lambda", lambda);
        }
        std::string roots = "[";
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            if (i) roots += ",";
            roots += "{\"re\":" + fmt17(rs.roots[i].real()) +
                     ",\"im\":" + fmt17(rs.roots[i].imag()) +
                     ",\"residual\":" + fmt17(rs.residuals[i]) + ",\"method\":\"" +
                     root_method_name(rs.methods[i]) + "\"}";
        }
        rec.add_raw("roots", roots + "]");
        rec.add_int("elapsed_us", us);
        rec.add_str("status", ok ? "ok" : "failed");
        em.emit(rec);
    }
    if (!ok) throw ResidualGateFailure("solve: residual gate failed");
    return kOk;
}

// ----- table ----------------------------------------------------------

int cmd_table(const std::string& fn, double from, double to, int steps, int p, int q,
              const std::string& branch, const Options& opt, Emitter& em) {
    if (steps < 2) throw CLI::ValidationError("--steps", "needs steps >= 2");
    if (!(from < to)) throw CLI::ValidationError("--from", "needs from < to");
    bool all_ok = true;
    for (int i = 0; i < steps; ++i) {
        const double phi = from + (to - from) * i / (steps - 1);
        const auto t0 = std::chrono::steady_clock::now();
        const EvalOut r = eval_fn(fn, phi, p, q, branch, opt);
        const double gate = eval_gate(fn, opt);
        bool ok = true;
        for (double res : r.residuals) ok = ok && (res <= gate);
        all_ok = all_ok && ok;

        Record rec;
        rec.add_int("row", i);
        rec.add_num("phi", phi);
        if (fn == "cosp" || fn == "sinp") {
            // the locus (cos p, sin p) on the parabola y = 1 - x^2
            const double cc = cos_p(phi);
            rec.add_num("c", cc);
            rec.add_num("s", sin_p(phi));
            rec.add_num("residual", r.residuals[0]);
        } else if (fn == "cosm" || fn == "sinm") {
            const double cc = cos_m(phi, opt.cfg);
            rec.add_num("c", cc);
            rec.add_num("s", sin_m(phi, opt.cfg));
            rec.add_num("residual", r.residuals[0]);
        } else if (fn == "genc" || fn == "gens" || fn == "gent") {
            const GenTrigPoint pt = gen_point({p, q}, phi, opt.cfg);
            rec.add_num("c", pt.c);
            rec.add_num("s", pt.s);
            if (fn == "gent") rec.add_num("t", r.values[0]);
            rec.add_num("residual", r.residuals[0]);
        } else if (r.values.size() == 1) {
            rec.add_num("value", r.values[0]);
            rec.add_num("residual", r.residuals[0]);
        } else {
            std::string vals = "[", ress = "[";
            for (size_t k = 0; k < r.values.size(); ++k) {
                if (k) {
                    vals += ",";
                    ress += ",";
                }
                vals += fmt17(r.values[k]);
                ress += fmt17(r.residuals[k]);
            }
            rec.add_raw("values", vals + "]");
            rec.add_raw("residuals", ress + "]");
        }
        rec.add_int("elapsed_us", elapsed_us(t0));
        rec.add_str("status", ok ? "ok" : "failed");
        em.emit(rec);
    }
    if (!all_ok) throw ResidualGateFailure("table: residual gate failed");
    return kOk;
}

// ----- check ----------------------------------------------------------

int cmd_check(const std::string& suite, const Options& opt, Emitter& em) {
    const auto results = checks::run_suite(suite, opt.cfg);
    for (const auto& r : results) {
        Record rec;
        rec.add_str("suite", r.suite);
        rec.add_str("name", r.name);
        rec.add_num("max_error", r.max_error);
        rec.add_num("threshold", r.threshold);
        rec.add_str("status", r.pass ? "pass" : "fail");
        em.emit(rec);
    }
    if (!checks::all_pass(results)) throw ResidualGateFailure("check: suite failed");
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"parabolic/generalized trigonometric functions, Chebyshev radicals, "
                 "and residual-certified cubic/quintic solvers"};
    app.require_subcommand(1);

    Options opt;
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--tol", opt.cfg.eps_residual, "residual gate tolerance")
        ->envname("PTRIG_TOL");
    app.add_option("--max-terms", opt.cfg.max_terms, "series term cap");
    app.add_option("--max-iter", opt.cfg.max_iter, "iteration cap");
    app.add_option("--quad-tol", opt.cfg.eps_quad, "adaptive quadrature tolerance");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    std::string fn, branch = "principal";
    double phi = 0.0;
    int gp = 2, gq = 1;
    eval->add_option("--fn", fn, "cosp|sinp|cosm|sinm|hps|genc|gens|gent|cheb")
        ->required()
        ->check(CLI::IsMember({"cosp", "sinp", "cosm", "sinm", "hps", "genc", "gens",
                               "gent", "cheb"}));
    eval->add_option("--phi", phi, "argument (the radical argument for cheb)")->required();
    eval->add_option("--p", gp, "family exponent p (genc/gens/gent)");
    eval->add_option("--q", gq, "family exponent q (genc/gens/gent)");
    eval->add_option("--branch", branch, "hps branch")
        ->check(CLI::IsMember({"principal", "largest", "all"}));
    eval->add_flag("--use-series", opt.use_series,
                   "evaluate cosp/cosm through their series (debugging aid)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve a cubic or trinomial quintic");
    std::string kind;
    double ca = 0.0, cb = 0.0, cc = 0.0, qp = 0.0, lambda = 0.0;
    solve->add_option("kind", kind, "cubic|quintic")
        ->required()
        ->check(CLI::IsMember({"cubic", "quintic"}));
    solve->add_option("--a", ca, "x^2 coefficient");
    solve->add_option("--b", cb, "x coefficient");
    solve->add_option("--c", cc, "constant");
    solve->add_option("--p", qp, "quintic x coefficient");
    solve->add_option("--lambda", lambda, "quintic constant");

    // table
    auto* table = app.add_subcommand("table", "evaluate a function over a grid");
    std::string tfn, tbranch = "all";
    double from = 0.0, to = 1.0;
    int steps = 2, tp = 2, tq = 1;
    table->add_option("--fn", tfn, "function")->required()->check(
        CLI::IsMember({"cosp", "sinp", "cosm", "sinm", "hps", "genc", "gens", "gent",
                       "cheb"}));
    table->add_option("--from", from, "grid start")->required();
    table->add_option("--to", to, "grid end")->required();
    table->add_option("--steps", steps, "row count (>= 2)")->required();
    table->add_option("--p", tp, "family exponent p");
    table->add_option("--q", tq, "family exponent q");
    table->add_option("--branch", tbranch, "hps branch")
        ->check(CLI::IsMember({"principal", "largest", "all"}));

    // check
    auto* check = app.add_subcommand("check", "run the self-check suites");
    std::string suite = "all";
    check->add_option("--suite", suite, "identities|series|quadrature|solvers|all")
        ->check(CLI::IsMember({"identities", "series", "quadrature", "solvers", "all"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Emitter em{out, format == "csv"};
    try {
        opt.cfg.validate();
        opt.csv = em.csv;
        if (eval->parsed()) {
            if (fn.rfind("gen", 0) == 0 &&
                (eval->count("--p") == 0 || eval->count("--q") == 0))
                throw CLI::ValidationError("--fn", fn + " requires both --p and --q");
            return cmd_eval(fn, phi, gp, gq, branch, opt, em);
        }
        if (solve->parsed()) return cmd_solve(kind, ca, cb, cc, qp, lambda, opt, em);
        if (table->parsed())
            return cmd_table(tfn, from, to, steps, tp, tq, tbranch, opt, em);
        if (check->parsed()) return cmd_check(suite, opt, em);
        err << "error: no subcommand\n";
        return kUsage;
    } catch (const ResidualGateFailure& e) {
        err << "error: " << e.what() << "\n";
        return kResidualGate;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const DepthExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SingularPoint& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace ptrig_cli
