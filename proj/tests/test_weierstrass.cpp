#include <doctest.h>

#include "tafverify/weierstrass.hpp"

using namespace tafverify;

TEST_CASE("level-2 and level-3 curves give the displayed discriminants")
{
    polynomial q2 = polynomial::variable(2, 0), q4 = polynomial::variable(2, 1);
    auto inv2 = curve_invariants(level2_curve());
    CHECK(inv2.delta == q4.pow(2) * (q2.pow(2) * rational(16) - q4 * rational(64)));

    polynomial a1 = polynomial::variable(2, 0), a3 = polynomial::variable(2, 1);
    auto inv3 = curve_invariants(level3_curve());
    CHECK(inv3.delta == a1.pow(3) * a3.pow(3) - a3.pow(4) * rational(27));
}

TEST_CASE("degenerate curve")
{
    polynomial z(1);
    auto inv = curve_invariants({{z, z, z, z, z}});
    CHECK(inv.delta.is_zero());
    CHECK(inv.c4.is_zero());
}

TEST_CASE("generic curve")
{
    auto inv = curve_invariants(generic_coeffs());
    std::vector<long> w = {1, 2, 3, 4, 6};
    CHECK(inv.b8.weight(w) == 8);
    CHECK(inv.delta.weight(w) == 12);
    /* y^2 = x^3 - x: Delta = 64, c4 = 48 */
    polynomial z(1), one = polynomial::constant(1, 1);
    auto e = curve_invariants({{z, z, z, -one, z}});
    CHECK(e.delta == polynomial::constant(1, 64));
    CHECK(e.c4 == polynomial::constant(1, 48));
}

TEST_CASE("eisenstein coefficients")
{
    auto e4 = eisenstein(4, 10), e6 = eisenstein(6, 10);
    CHECK(e4[0] == 1);
    CHECK(e6[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    CHECK(e6[2] == -16632);
    CHECK(divisor_sigma(5, 2) == 33);
    CHECK_THROWS_AS(eisenstein(8, 10), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(4, 0), std::invalid_argument);
}

TEST_CASE("Ramanujan tau")
{
    auto d = delta_qseries(12);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[4] == -1472);
    CHECK(d[5] == 4830);
    CHECK(d[11] == 534612);
    /* multiplicativity: tau(6) = tau(2) tau(3) */
    auto d7 = delta_qseries(7);
    CHECK(d7[6] == d[2] * d[3]);
}

TEST_CASE("two pipelines for Delta")
{
    CHECK(delta_qseries(200) == delta_from_eisenstein(200));
    CHECK(delta_qseries(1) == delta_from_eisenstein(1));
}

TEST_CASE("series arithmetic truncates at the smaller precision")
{
    qseries a(std::vector<integer>{1, 1, 1}), b(std::vector<integer>{1, -1});
    CHECK((a * b).precision() == 2);
    CHECK((a * b)[1] == 0);
    CHECK_THROWS_AS(a.divided_by(2), std::domain_error);
}
