// Reproduction checks against the published tables and the exact anchors.
// One PASS/FAIL line per criterion. Criteria listed in kKnown fail for reasons
// written up in the README; they do not affect the exit status unless --strict.

#include "gns/bounds.hpp"
#include "gns/format.hpp"
#include "gns/profiles.hpp"
#include "gns/quadrature.hpp"
#include "gns/radial.hpp"
#include "gns/special.hpp"
#include "gns/tables.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace gns;

namespace {

const std::set<int> kKnown = {3, 4};

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string fmt(const char* f, auto... xs) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, xs...);
    return buf;
}

Scalar ex(const std::string& s) { return parse_number(s); }

// 1: Table I via the r = inf closed forms; printed values are truncated
Outcome table_one() {
    Outcome o;
    int ok = 0, total = 0;
    std::set<int> lines;
    for (const auto& r : table1_reference()) {
        const Scalar j = ex(r.j), n = ex(r.n);
        const auto v = sharp_linf(j.value, n.value, r.d);
        const Rational th = *j.exact / *n.exact + Rational(r.d, 2) / *n.exact;
        auto match = [](const std::string& printed, double x) {
            if (printed == "1") return std::abs(x - 1.0) < 1e-12;
            if (printed == "1/2") return std::abs(x - 0.5) < 1e-12;
            return table_text(x, "down") == printed;
        };
        const bool good = th.str() == r.theta && match(r.S, v.S) && match(r.G, v.G);
        ok += good;
        ++total;
        lines.insert(r.line);
        if (!good)
            o.detail.push_back(fmt("d=%d (%s,%s): theta %s S %.6f G %.6f, printed %s %s %s", r.d, r.j.c_str(),
                                   r.n.c_str(), th.str().c_str(), v.S, v.G, r.theta.c_str(), r.S.c_str(), r.G.c_str()));
    }
    o.pass = ok == total && lines.size() == 12;
    o.summary = fmt("%d/%d entries on %zu lines match", ok, total, lines.size());
    return o;
}

// 2: G+ and G++ columns, rounded up
Outcome table_three_upper() {
    Outcome o;
    int ok = 0, total = 0;
    for (const auto& r : table3_reference()) {
        const double j = ex(r.j).value, n = ex(r.n).value, th = ex(r.theta).value;
        const std::string gp = table_text(upper_plus(j, n, th, r.d).G, "up");
        const std::string gpp = table_text(upper_plusplus(j, n, th, r.d).G, "up");
        ok += (gp == r.g_plus) + (gpp == r.g_plusplus);
        total += 2;
        if (gp != r.g_plus || gpp != r.g_plusplus)
            o.detail.push_back(fmt("d=%d (%s,%s) theta=%s: %s %s vs printed %s %s", r.d, r.j.c_str(), r.n.c_str(),
                                   r.theta.c_str(), gp.c_str(), gpp.c_str(), r.g_plus.c_str(), r.g_plusplus.c_str()));
    }
    o.pass = ok == total && total == 36;
    o.summary = fmt("%d/%d entries match under round-up", ok, total);
    return o;
}

// 3: G-- column, rounded down, +-0.001
Outcome table_three_minusminus() {
    Outcome o;
    int ok = 0, total = 0;
    for (const auto& r : table3_reference()) {
        if (!r.g_minusminus) continue;
        const double j = ex(r.j).value, n = ex(r.n).value, th = ex(r.theta).value;
        const double g = lower_minusminus(j, n, th, r.d).G;
        const double shown = table_round(g, "down");
        const double printed = std::stod(*r.g_minusminus);
        const bool good = std::abs(shown - printed) <= 0.001 + 1e-12;
        ok += good;
        ++total;
        if (!good)
            o.detail.push_back(fmt("d=%d (%s,%s) theta=%s: %.6f (%s) vs printed %s", r.d, r.j.c_str(), r.n.c_str(),
                                   r.theta.c_str(), g, table_text(g, "down").c_str(), r.g_minusminus->c_str()));
    }
    o.pass = ok == total && total == 10;
    o.summary = fmt("%d/%d defined entries within 0.001 under round-down", ok, total);
    return o;
}

// 4: G- column over the default eps grid
Outcome table_three_minus() {
    Outcome o;
    int exact = 0, bracketed = 0, total = 0;
    const EpsGrid grid;
    for (const auto& r : table3_reference()) {
        const double j = ex(r.j).value, n = ex(r.n).value, th = ex(r.theta).value;
        const auto m = lower_minus(j, n, th, r.d, {}, grid);
        const double upper = std::min(upper_plus(j, n, th, r.d).G, upper_plusplus(j, n, th, r.d).G);
        const double printed = std::stod(r.g_minus);
        const std::string mine = table_text(m.G, "down");
        const bool in = m.G >= printed - 0.002 && m.G <= upper + 1e-9;
        bracketed += in;
        exact += mine == r.g_minus;
        ++total;
        o.detail.push_back(fmt("d=%d (%s,%s) theta=%s: %.6f at eps %.2f (%s) printed %s, upper %.6f%s", r.d,
                               r.j.c_str(), r.n.c_str(), r.theta.c_str(), m.G, m.eps, mine.c_str(), r.g_minus.c_str(),
                               upper, in ? "" : "  OUT OF RANGE"));
    }
    o.pass = bracketed == total && exact >= 15 && total == 18;
    o.summary = fmt("%d/%d within [printed - 0.002, best upper]; %d/%d equal to the printed value (15 required); "
                    "grid [%.2f, %.2f] step %.2f",
                    bracketed, total, exact, total, grid.lo, grid.hi, grid.step);
    return o;
}

// 5: Table II
Outcome table_two() {
    Outcome o;
    int elem_ok = 0, elem_total = 0, spec_ok = 0, spec_total = 0, agree_ok = 0, agree_total = 0;
    double worst = 0.0;
    const QuadratureConfig cfg;
    for (const auto& r : table2_reference()) {
        const double j = ex(r.j).value, n = ex(r.n).value;
        const ProfileAB p = linf_profile(j, n, r.d);
        const auto g = g_spec_for_profile(p, r.N, r.M);
        bool sok = std::abs(g.prefactor - r.prefactor) <= 1e-12 * r.prefactor;
        auto same = [](const std::vector<double>& mine, const std::vector<std::string>& printed) {
            if (mine.size() != printed.size()) return false;
            for (std::size_t i = 0; i < mine.size(); ++i)
                if (format_fraction(mine[i]) != printed[i]) return false;
            return true;
        };
        if (r.a) sok = sok && same(g.spec.a, *r.a) && same(g.spec.b, *r.b) && same(g.spec.b_star, *r.b_star);
        if (r.elementary) {
            ++elem_total;
            bool eok = true;
            for (int k = 0; k < 50; ++k) {
                const double rho = 10.0 * k / 49.0;
                const double d = std::abs(profile_ab(p, rho, Method::meijer_g, cfg) - r.elementary(rho));
                eok = eok && d <= 1e-8;
            }
            elem_ok += eok;
            if (!eok) o.detail.push_back(fmt("elementary d=%d (%s,%s) off", r.d, r.j.c_str(), r.n.c_str()));
        }
        ++spec_total;
        spec_ok += sok;
        if (!sok) o.detail.push_back(fmt("spec d=%d (%s,%s): %s", r.d, r.j.c_str(), r.n.c_str(), g.to_string().c_str()));
        for (double rho : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            const double vg = profile_ab(p, rho, Method::meijer_g, cfg);
            const double vh = profile_ab(p, rho, Method::fox_h, cfg);
            const double vq = profile_ab(p, rho, Method::quadrature, cfg);
            const double dev = std::max({std::abs(vg - vh), std::abs(vg - vq), std::abs(vh - vq)});
            worst = std::max(worst, dev);
            ++agree_total;
            agree_ok += dev <= 1e-6;
        }
    }
    o.pass = elem_ok == 3 && elem_total == 3 && spec_ok == 9 && agree_ok == agree_total;
    o.summary = fmt("elementary %d/%d, specs %d/%d, method agreement %d/%d (max deviation %.1e)", elem_ok, elem_total,
                    spec_ok, spec_total, agree_ok, agree_total, worst);
    return o;
}

// 6: exact anchors over a 30-point sweep
Outcome anchors() {
    Outcome o;
    int ok = 0, total = 0;
    double worst = 0.0;
    auto check = [&](const std::string& what, double got, double want, double tol) {
        const double e = rel(got, want);
        worst = std::max(worst, e / tol * 1e-10);
        ++total;
        if (e <= tol) ++ok;
        else o.detail.push_back(fmt("%s: %.15g vs %.15g (rel %.1e)", what.c_str(), got, want, e));
    };
    int points = 0;
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k < 10; ++k, ++points) {
            const double h = 0.5 * d;
            const double j = 0.25 * (k % 5);
            // n above j + d/2 for the r = inf anchors
            const double n = j + h + 0.3 + 0.4 * k;
            const double th0 = j / n + h / n;
            const auto sl = sharp_linf(j, n, d);
            check(fmt("S++ at theta0 d=%d (%g,%g)", d, j, n), upper_plusplus(j, n, th0, d).S, sl.S, 1e-10);
            check(fmt("S-- at theta0 d=%d (%g,%g)", d, j, n), lower_minusminus(j, n, th0, d).S, sl.S, 1e-7);
            check(fmt("S-- at theta=0 d=%d n=%g", d, n), lower_minusminus(0, n, 0.0, d).S, 1.0, 1e-7);
            // n below j + d/2 for theta = 1
            const double n1 = j + h * (0.1 + 0.08 * k);
            check(fmt("G+ at theta=1 d=%d (%g,%g)", d, j, n1), upper_plus(j, n1, 1.0, d).G, sharp_theta1(j, n1, d).G,
                  1e-10);
            const double th = 0.1 + 0.08 * k;
            check(fmt("G+ at j=theta n d=%d n=%g", d, n), upper_plus(th * n, n, th, d).G, 1.0, 1e-10);
            const double nz = h * (0.05 + 0.09 * k);
            check(fmt("Z N at d=%d n=%g", d, nz), riesz_constant(nz, d) * hls_constant(nz, d),
                  sharp_theta1(0, nz, d).G, 1e-10);
        }
    o.pass = ok == total && points == 30;
    o.summary = fmt("%d/%d anchor checks over %d parameter points", ok, total, points);
    return o;
}

// 7: oracles and ordering
Outcome oracles() {
    Outcome o;
    const QuadratureConfig cfg;
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int beta_ok = 0;
    for (int k = 0; k < 30; ++k) {
        const double b = 0.5 + 2.5 * U(rng);
        const double a = b * (0.05 + 0.9 * U(rng));
        const double u = 0.3 + 4.0 * U(rng);
        auto f = [=](double x) { return std::pow(x, 2 * a * u - 1) / std::pow(1 + std::pow(x, 2 * b), u); };
        const double q = quad::positive_axis(f, 1.0, 0.0, 1e-12).value;
        const bool good = rel(beta_integral(a, b, u), q) <= 1e-8;
        beta_ok += good;
        if (!good) o.detail.push_back(fmt("beta (%g,%g,%g): %.12g vs %.12g", a, b, u, beta_integral(a, b, u), q));
    }
    int mac_ok = 0;
    struct M {
        double mu, sigma;
        int d;
    };
    for (auto p : {M{0, 0, 3}, M{0.5, 0.5, 2}, M{1, 1, 3}}) {
        RadialProfile g;
        g.eval = [p](double x) { return bessel_k(p.mu, x) / std::pow(x, p.sigma); };
        g.decay = DecayClass::exponential(1.0);
        for (double rho : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            const double want = macdonald_transform(p.mu, p.sigma, p.d, rho);
            const double got = hankel_inverse_ft(g, p.d, rho, cfg);
            const bool good = rel(got, want) <= 1e-7;
            mac_ok += good;
            if (!good) o.detail.push_back(fmt("macdonald (%g,%g,%d) rho=%g: %.12g vs %.12g", p.mu, p.sigma, p.d, rho, got, want));
        }
    }
    RadialProfile shell;
    const double e = 1e-3;
    shell.eval = [e](double x) { return x >= 1 && x <= 1 + e ? 1.0 : 0.0; };
    shell.support = std::make_pair(1.0, 1.0 + e);
    const double q = rayleigh_quotients(shell, 1, 2, 0.5, 2).gn_ratio;

    // ordering: every lower bound <= every upper bound; a coarse eps grid still gives valid lower bounds
    BoundsOptions opt;
    opt.grid.lo = 0.05;
    opt.grid.hi = 4.0;
    opt.grid.step = 0.25;
    int ord_ok = 0, ord_total = 0;
    double slack = kInfinity;
    const char* thetas[] = {"1/10", "1/5", "1/3", "2/5", "1/2", "3/5", "2/3", "4/5", "9/10", "1"};
    struct JN {
        int d;
        const char *j, *n;
    };
    const JN jns[] = {{1, "0", "1"}, {1, "1", "2"},   {1, "1/2", "3/2"}, {2, "0", "2"}, {2, "1", "3"},
                      {2, "1/2", "1"}, {3, "0", "2"}, {3, "1", "3"}, {3, "0", "3/2"}, {3, "2", "3"},
                      {1, "9", "10"}, {2, "9", "10"}, {3, "9", "10"}, {1, "5", "10"}};
    // stop at 60 valid points
    for (const auto& p : jns)
        for (const char* t : thetas) {
            if (ord_total == 60) break;
            GnsParams gp{p.d, ex(p.j), ex(p.n), ex(t)};
            try {
                classify(gp);
            } catch (const ParameterError&) {
                continue;
            }
            const auto rep = best_bounds(gp, cfg, opt);
            std::vector<double> lo, up;
            for (auto v : {rep.g_minus, rep.g_minusminus}) if (v) lo.push_back(*v);
            for (auto v : {rep.g_plus, rep.g_plusplus}) if (v) up.push_back(*v);
            if (rep.exact_g) {
                lo.push_back(*rep.exact_g);
                up.push_back(*rep.exact_g);
            }
            bool good = true;
            for (double l : lo)
                for (double u : up) {
                    slack = std::min(slack, u - l);
                    good = good && l <= u + 1e-9;
                }
            ++ord_total;
            ord_ok += good;
            if (!good) o.detail.push_back(fmt("ordering d=%d (%s,%s) theta=%s", p.d, p.j, p.n, t));
        }
    o.pass = beta_ok == 30 && mac_ok == 15 && q >= 0.999 && ord_ok == ord_total && ord_total == 60;
    o.summary = fmt("beta %d/30, macdonald %d/15, shell quotient %.8f, ordering %d/%d (min slack %.2e)", beta_ok,
                    mac_ok, q, ord_ok, ord_total, slack);
    return o;
}

// 8: the r = inf maximizer attains S for the d = 1 rows
Outcome sharpness() {
    Outcome o;
    int ok = 0;
    double worst = 0.0;
    struct P {
        double j, n;
    };
    for (auto p : {P{0, 1}, P{0, 1.5}, P{0, 2}, P{4, 10}}) {
        const auto s = sharp_linf(p.j, p.n, 1);
        const auto r = rayleigh_quotients(fourier_profile(linf_profile(p.j, p.n, 1)), p.j, p.n, s.theta, 1);
        const double e = rel(r.sobolev_ratio, s.S);
        worst = std::max(worst, e);
        ok += e <= 1e-6;
        if (e > 1e-6) o.detail.push_back(fmt("(%g,%g): %.12g vs %.12g", p.j, p.n, r.sobolev_ratio, s.S));
    }
    o.pass = ok == 4;
    o.summary = fmt("%d/4 rows, max relative deviation %.1e", ok, worst);
    return o;
}

} // namespace

int main(int argc, char** argv) {
    bool strict = false, verbose = false;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--strict")) strict = true;
        else if (!std::strcmp(argv[i], "--verbose")) verbose = true;
        else only.insert(std::atoi(argv[i]));
    }
    struct C {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<C> all = {
        {1, "table I closed forms", 1.0, table_one},
        {2, "table III G+ and G++", 1.0, table_three_upper},
        {3, "table III G--", 60.0, table_three_minusminus},
        {4, "table III G- on the default eps grid", 1800.0, table_three_minus},
        {5, "table II specs, closed forms, methods", 300.0, table_two},
        {6, "exactness anchors", 60.0, anchors},
        {7, "oracles and ordering", 600.0, oracles},
        {8, "maximizer attains S", 60.0, sharpness},
    };
    int unexpected = 0, failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = o.pass && in_time;
        std::string note;
        if (!in_time) note += fmt(" [over the %.0f s limit]", c.limit_s);
        if (!pass && kKnown.count(c.id)) note += " [known deviation, see README]";
        std::printf("%s criterion %d (%s): %s; %.2f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str(), secs,
                    note.c_str());
        if (!pass || verbose)
            for (const auto& d : o.detail) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        failed += !pass;
        unexpected += !pass && !kKnown.count(c.id);
    }
    std::printf("%d failing, %d unexpected\n", failed, unexpected);
    return (strict ? failed : unexpected) ? 1 : 0;
}
