#pragma once

// Low-level quadrature rules shared by the radial and contour modules.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace gns::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
    bool converged = true;

    Result& operator+=(const Result& o) {
        value += o.value;
        error += o.error;
        evals += o.evals;
        converged = converged && o.converged;
        return *this;
    }
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600490335225, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

} // namespace detail

template <class V>
struct PanelT {
    double a, b;
    V value;
    double error;
    bool operator<(const PanelT& o) const { return error < o.error; }
};
using Panel = PanelT<double>;

template <class F>
auto gk21(F&& f, double a, double b) {
    using V = decltype(f(a));
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    V rk = f(c) * detail::wgk[10];
    V rg{};
    for (int k = 0; k < 10; ++k) {
        const double dx = h * detail::xgk[k];
        const V fs = f(c - dx) + f(c + dx);
        rk += detail::wgk[k] * fs;
        if (k % 2 == 1) rg += detail::wg[k / 2] * fs;
    }
    const V value = rk * h;
    double err = std::abs((rk - rg) * h);
    if (!std::isfinite(std::abs(value))) err = std::numeric_limits<double>::infinity();
    return PanelT<V>{a, b, value, err};
}

template <class V>
struct BasicResult {
    V value{};
    double error = 0.0;
    long evals = 0;
    bool converged = true;
};

// Globally adaptive Gauss-Kronrod on a finite interval; works for real or complex f.
template <class F>
auto adaptive_any(F&& f, double a, double b, double abs_tol, double rel_tol, int max_intervals = 200) {
    using V = decltype(f(a));
    BasicResult<V> res;
    if (a == b) return res;
    std::priority_queue<PanelT<V>> heap;
    auto p = gk21(f, a, b);
    res.evals = 21;
    V total = p.value;
    double err = p.error;
    heap.push(p);
    int n = 1;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (n >= max_intervals) {
            res.converged = false;
            break;
        }
        auto w = heap.top();
        heap.pop();
        const double m = 0.5 * (w.a + w.b);
        if (m <= w.a || m >= w.b) {  // interval exhausted
            res.converged = false;
            heap.push(w);
            break;
        }
        auto l = gk21(f, w.a, m);
        auto r = gk21(f, m, w.b);
        res.evals += 42;
        total += l.value + r.value - w.value;
        err += l.error + r.error - w.error;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    // resum to avoid drift from incremental updates
    total = V{};
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error = err;
    if (!std::isfinite(std::abs(total))) res.converged = false;
    return res;
}

template <class F>
Result adaptive(F&& f, double a, double b, double abs_tol, double rel_tol, int max_intervals = 200) {
    auto r = adaptive_any(f, a, b, abs_tol, rel_tol, max_intervals);
    return Result{r.value, r.error, r.evals, r.converged};
}

// Integral over (0, upper) through xi = scale * e^u, summing unit-width panels in u
// outward from u = 0 until the geometric tail estimate is negligible on both sides.
// Suitable for integrable power-law behaviour at 0 and power or exponential decay at inf.
template <class F>
Result positive_axis(F&& f, double scale, double abs_tol, double rel_tol, int max_panels = 2000,
                     double width = 1.0, double upper = std::numeric_limits<double>::infinity()) {
    if (scale > upper) scale = upper;
    const double u_max = std::isfinite(upper) ? std::log(upper / scale) : std::numeric_limits<double>::infinity();
    auto g = [&](double u) {
        const double x = scale * std::exp(u);
        if (x == 0.0 || !std::isfinite(x)) return 0.0;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v * x;
    };
    Result res;
    double total = 0.0;
    const double panel_tol_abs = abs_tol * 0.05, panel_tol_rel = rel_tol * 0.05;
    auto sweep = [&](int dir) {
        double prev = std::numeric_limits<double>::infinity();
        int quiet = 0;
        for (int k = 0; k < max_panels; ++k) {
            const double u0 = dir > 0 ? k * width : -(k + 1) * width;
            const double u1 = dir > 0 ? std::min(u0 + width, u_max) : u0 + width;
            if (dir < 0 && scale * std::exp(u1) < 1e-300) return;
            if (dir > 0 && (u0 > 700.0 || u0 >= u_max)) return;
            // panels far out only need to be accurate relative to what is already summed
            const double pabs = std::max(panel_tol_abs, panel_tol_rel * std::abs(total));
            Result p = adaptive(g, u0, u1, pabs, panel_tol_rel, 100);
            res += Result{0.0, p.error, p.evals, p.converged};
            total += p.value;
            const double mag = std::abs(p.value);
            const double tol = std::max(abs_tol, rel_tol * std::abs(total));
            // geometric tail bound from the ratio of successive panels
            if (mag < prev && std::isfinite(prev) && prev > 0.0) {
                const double q = mag / prev;
                const double tail = q < 0.95 ? mag * q / (1.0 - q) : std::numeric_limits<double>::infinity();
                if (tail < 0.1 * tol && mag < tol) {
                    if (++quiet >= 2) return;
                } else {
                    quiet = 0;
                }
            } else if (mag == 0.0 && prev == 0.0) {
                if (++quiet >= 3) return;
            } else {
                quiet = 0;
            }
            prev = mag;
        }
        res.converged = false;
    };
    sweep(+1);
    sweep(-1);
    res.value = total;
    return res;
}

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the last
// entry of the highest even column; *err receives its distance to the previous estimate.
inline double wynn_epsilon(const std::vector<double>& s, double* err = nullptr) {
    const std::size_t n = s.size();
    if (n < 3) {
        if (err) *err = n == 2 ? std::abs(s[1] - s[0]) : std::numeric_limits<double>::infinity();
        return n == 0 ? 0.0 : s.back();
    }
    std::vector<double> em1(n + 1, 0.0), e0(s.begin(), s.end());
    double best = s.back(), prev_best = s[n - 2];
    for (int k = 1; e0.size() > 1; ++k) {
        std::vector<double> e1(e0.size() - 1);
        for (std::size_t i = 0; i + 1 < e0.size(); ++i) {
            const double diff = e0[i + 1] - e0[i];
            if (diff == 0.0 || !std::isfinite(diff)) {
                if (err) *err = std::abs(best - prev_best);
                return best;
            }
            e1[i] = em1[i + 1] + 1.0 / diff;
        }
        if (k % 2 == 0) {
            prev_best = e1.size() >= 2 ? e1[e1.size() - 2] : best;
            best = e1.back();
        }
        em1 = std::move(e0);
        e0 = std::move(e1);
    }
    if (err) *err = std::abs(best - prev_best);
    return best;
}

} // namespace gns::quad
