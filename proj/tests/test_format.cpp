#include "gns/format.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace gns;

TEST_SUITE("format") {

TEST_CASE("fractions") {
    CHECK(format_fraction(1.0 / 3) == "1/3");
    CHECK(format_fraction(-1.0 / 6) == "-1/6");
    CHECK(format_fraction(2.0) == "2");
    CHECK(format_fraction(std::numbers::pi, 10) == "3.141592654");
}

TEST_CASE("rounding") {
    CHECK(round_to(1.2031, 3, "up") == doctest::Approx(1.204));
    CHECK(round_to(0.8499, 3, "down") == doctest::Approx(0.849));
    CHECK(round_to(0.5, 0, "nearest") == doctest::Approx(1.0));
    CHECK(round_to(0.873, 3, "up") == doctest::Approx(0.873));
    CHECK(round_sig(0.0089412, 3, "down") == doctest::Approx(0.00894));
    CHECK(table_text(0.0089412, "down") == "0.00894");
    CHECK(table_text(1.20301, "up") == "1.204");
    CHECK(table_text(0.0800, "down") == "0.080");
}

TEST_CASE("constants") {
    CHECK(format_constant(0.5) == "1/2");
    CHECK(format_constant(1 / (6 * std::sqrt(6.0))) == "1/(6 sqrt(6))");
    CHECK(format_constant(1 / (6 * std::numbers::pi)) == "1/(6 pi)");
    CHECK(format_constant(1 / std::sqrt(2.0)) == "1/sqrt(2)");
}

}
