#include "gns/tables.hpp"

#include <cmath>
#include <numbers>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> L(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

} // namespace

const std::vector<Table1Ref>& table1_reference() {
    static const std::vector<Table1Ref> t = {
        {1, 1, "0", "1", "1/2", "0.707", "1"},
        {2, 1, "0", "3/2", "1/3", "0.620", "0.852"},
        {2, 1, "1/2", "3/2", "2/3", "0.620", "0.852"},
        {3, 1, "0", "2", "1/4", "0.594", "0.787"},
        {3, 1, "1", "2", "3/4", "0.594", "0.787"},
        {4, 1, "4", "10", "9/20", "0.224", "0.317"},
        {4, 1, "5", "10", "11/20", "0.224", "0.317"},
        {5, 2, "0", "3/2", "2/3", "0.438", "0.603"},
        {6, 2, "0", "2", "1/2", "0.353", "1/2"},
        {7, 2, "0", "5/2", "2/5", "0.324", "0.453"},
        {7, 2, "1/2", "5/2", "3/5", "0.324", "0.453"},
        {8, 2, "0", "3", "1/3", "0.310", "0.426"},
        {8, 2, "1", "3", "2/3", "0.310", "0.426"},
        {9, 3, "0", "2", "3/4", "0.237", "0.314"},
        {10, 3, "0", "5/2", "3/5", "0.182", "0.256"},
        {11, 3, "0", "3", "1/2", "0.162", "0.230"},
        {12, 3, "1", "3", "5/6", "0.230", "0.288"},
    };
    return t;
}

const std::vector<Table2Ref>& table2_reference() {
    static const std::vector<Table2Ref> t = [] {
        const double s2 = std::numbers::sqrt2;
        std::vector<Table2Ref> v;
        v.push_back({1, "0", "1", 1, 1, std::nullopt, std::nullopt, std::nullopt, 1.0 / s2, "1/sqrt(2)",
                     [](double r) { return std::sqrt(kPi / 2.0) * std::exp(-r); }, "sqrt(pi/2) e^-rho"});
        // printed with (cos - sin); the transform has (cos + sin)
        v.push_back({1, "0", "2", 2, 1, std::nullopt, std::nullopt, std::nullopt, 0.5, "1/2",
                     [s2](double r) {
                         const double u = r / s2;
                         return 0.5 * std::sqrt(kPi) * (std::cos(u) + std::sin(u)) * (std::cosh(u) - std::sinh(u));
                     },
                     "(sqrt(pi)/2) (cos(rho/sqrt2) + sin(rho/sqrt2)) (cosh(rho/sqrt2) - sinh(rho/sqrt2))"});
        v.push_back({1, "1", "2", 2, 1, L({"1/2"}), L({"0", "1/2", "1/2"}), L({"1/4", "3/4"}), 0.5, "1/2", {}, ""});
        v.push_back({2, "0", "3/2", 3, 2, L({"1/6"}), L({"0", "1/6", "1/3", "2/3", "2/3"}), L({"0", "1/3"}),
                     1.0 / (6.0 * kPi), "1/(6 pi)", {}, ""});
        v.push_back({2, "0", "2", 2, 1, L({}), L({"0", "1/2", "1/2"}), L({"0"}), 0.25, "1/4", {}, ""});
        v.push_back({2, "1", "3", 3, 1, L({"1/2"}), L({"0", "1/3", "1/2", "2/3"}), L({"0", "1/3", "2/3"}), 1.0 / 6.0,
                     "1/6", {}, ""});
        v.push_back({3, "0", "2", 2, 1, std::nullopt, std::nullopt, std::nullopt, 0.125, "1/8",
                     [s2](double r) {
                         if (r == 0.0) return std::sqrt(kPi / 2.0) / s2;
                         return std::sqrt(kPi / 2.0) * std::exp(-r / s2) * std::sin(r / s2) / r;
                     },
                     "sqrt(pi/2) e^(-rho/sqrt2) sin(rho/sqrt2) / rho"});
        v.push_back({3, "0", "3", 3, 1, L({}), L({"0", "1/3", "1/2", "2/3"}), L({"-1/6", "1/6"}),
                     1.0 / (6.0 * std::sqrt(6.0)), "1/(6 sqrt(6))", {}, ""});
        v.push_back({3, "1", "3", 3, 1, L({"1/3"}), L({"0", "1/3", "1/3", "2/3"}), L({"-1/6", "1/6", "1/2"}),
                     1.0 / (6.0 * std::sqrt(6.0)), "1/(6 sqrt(6))", {}, ""});
        return v;
    }();
    return t;
}

const std::vector<Table3Ref>& table3_reference() {
    static const std::vector<Table3Ref> t = {
        {1, "0", "1", "1/3", "6", "0.849", "0.832", "1.204", "0.873", true, false},
        {1, "3/4", "1", "9/10", "20/7", "0.867", std::nullopt, "1.030", "0.944", true, false},
        {1, "3/4", "1", "99/100", "50/13", "0.950", std::nullopt, "1.078", "1.564", true, true},
        {1, "1", "2", "5/8", "4", "0.608", "0.633", "1.087", "0.711", false, false},
        {1, "5", "10", "21/40", "4", "0.080", "0.421", "1.087", "0.471", false, false},
        {1, "9", "10", "37/40", "4", "0.317", "0.00894", "1.087", "0.592", true, false},
        {2, "0", "2", "1/3", "6", "0.504", "0.498", "0.741", "0.511", true, false},
        {2, "0", "3", "1/6", "4", "0.533", "0.547", "0.752", "0.554", false, false},
        {2, "1/2", "1", "3/4", "8/3", "0.766", std::nullopt, "0.848", "0.782", true, false},
        {2, "1/2", "1", "9/10", "10/3", "0.714", std::nullopt, "0.781", "0.795", true, true},
        {2, "1", "3", "5/9", "6", "0.387", "0.414", "0.741", "0.436", false, false},
        {2, "9", "10", "19/20", "4", "0.359", std::nullopt, "0.752", "0.504", true, false},
        {3, "0", "2", "3/8", "4", "0.389", "0.359", "0.494", "0.394", true, false},
        {3, "0", "3", "1/3", "6", "0.273", "0.278", "0.428", "0.284", false, false},
        {3, "1", "3", "2/3", "6", "0.264", "0.250", "0.428", "0.284", true, false},
        {3, "2", "3", "95/100", "60/13", "0.385", std::nullopt, "0.461", "0.453", true, false},
        {3, "2", "3", "99/100", "300/53", "0.396", std::nullopt, "0.433", "0.677", true, true},
        {3, "9", "10", "19/20", "3", "0.321", std::nullopt, "0.609", "0.469", true, false},
    };
    return t;
}

} // namespace gns
