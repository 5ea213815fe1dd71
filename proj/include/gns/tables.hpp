#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gns {

// Reference values as printed in the published tables.

struct Table1Ref {
    int line;  // 1..12; pairs sharing a line have equal S, G up to theta <-> 1 - theta
    int d;
    std::string j, n;
    std::string theta;  // exact
    std::string S, G;   // printed, truncated to 3 decimals ("1" and "1/2" are exact)
};
const std::vector<Table1Ref>& table1_reference();

struct Table2Ref {
    int d;
    std::string j, n;
    int N, M;  // n = N/M
    // printed G parameter lists; empty optional for the elementary rows
    std::optional<std::vector<std::string>> a, b, b_star;
    double prefactor = 0.0;
    std::string prefactor_text;
    // closed form for the elementary rows
    std::function<double(double)> elementary;
    std::string elementary_text;
};
const std::vector<Table2Ref>& table2_reference();

struct Table3Ref {
    int d;
    std::string j, n, theta, r;
    std::string g_minus;
    std::optional<std::string> g_minusminus;
    std::string g_plus, g_plusplus;
    bool lower_is_minus;  // bold lower bound: G- (else G--)
    bool upper_is_plus;   // bold upper bound: G+ (else G++)
};
const std::vector<Table3Ref>& table3_reference();

} // namespace gns
