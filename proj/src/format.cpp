#include "gns/format.hpp"

#include <cmath>
#include <numbers>
#include <cstdio>
#include <stdexcept>

namespace gns {

std::string format_fraction(double x, long max_den) {
    for (long q = 1; q <= max_den; ++q) {
        const double p = std::round(x * q);
        if (std::abs(p / q - x) < 1e-11 * std::max(1.0, std::abs(x))) {
            char buf[64];
            if (q == 1)
                std::snprintf(buf, sizeof buf, "%ld", static_cast<long>(p));
            else
                std::snprintf(buf, sizeof buf, "%ld/%ld", static_cast<long>(p), q);
            return buf;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double round_to(double x, int digits, const std::string& mode) {
    const double s = std::pow(10.0, digits);
    // guard against representation noise like 0.8730000000000001
    const double y = x * s;
    const double fuzz = 1e-9;
    if (mode == "up") return std::ceil(y - fuzz) / s;
    if (mode == "down") return std::floor(y + fuzz) / s;
    if (mode == "nearest") return std::round(y) / s;
    throw std::invalid_argument("round_to: unknown mode " + mode);
}

double round_sig(double x, int sig, const std::string& mode) {
    if (x == 0.0) return 0.0;
    const int e = static_cast<int>(std::floor(std::log10(std::abs(x))));
    return round_to(x, sig - 1 - e, mode);
}

double table_round(double x, const std::string& mode) {
    if (x != 0.0 && std::abs(x) < 0.01) return round_sig(x, 3, mode);
    return round_to(x, 3, mode);
}

std::string table_text(double x, const std::string& mode) {
    const double v = table_round(x, mode);
    int digits = 3;
    if (v != 0.0 && std::abs(v) < 0.01) digits = 2 - static_cast<int>(std::floor(std::log10(std::abs(v))));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string format_constant(double x) {
    for (int k = 0; k <= 1; ++k) {
        for (int m : {1, 2, 3, 5, 6}) {
            const double y = x * std::pow(std::numbers::pi, k) * std::sqrt(static_cast<double>(m));
            for (long q = 1; q <= 100; ++q) {
                const double p = std::round(y * q);
                if (p == 0.0 || std::abs(p / q - y) > 1e-11 * std::abs(y)) continue;
                if (k == 0 && m == 1) return format_fraction(x);
                std::string den;
                if (q > 1) den += std::to_string(q);
                if (m > 1) den += (den.empty() ? "" : " ") + std::string("sqrt(") + std::to_string(m) + ")";
                if (k == 1) den += (den.empty() ? "" : " ") + std::string("pi");
                const bool bare = q == 1 && (m == 1) != (k == 0);
                return std::to_string(static_cast<long>(p)) + "/" + (bare ? den : "(" + den + ")");
            }
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

} // namespace gns
