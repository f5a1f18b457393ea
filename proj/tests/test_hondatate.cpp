#include <doctest.h>

#include "tafverify/hondatate.hpp"

using namespace tafverify;

namespace {

std::size_t count_case(std::vector<f_linear_class> const & cs, surface_case c)
{
    std::size_t k = 0;
    for (auto const & x : cs)
        k += x.tag == c;
    return k;
}

} // namespace

TEST_CASE("validate_type examples")
{
    padic_type ss = places_over(cm_field::rationals(), 5);
    ss.eta("p") = rational(1, 2);
    CHECK(validate_type(ss).empty());

    padic_type ord = places_over(cm_field::im_quad(11), 5);
    ord.eta("u") = 1;
    CHECK(validate_type(ord).empty());

    ord.eta("ub") = 1;
    CHECK_FALSE(validate_type(ord).empty());

    padic_type neg = places_over(cm_field::im_quad(1), 5);
    neg.eta("u") = 2;
    neg.eta("ub") = -1;
    CHECK(validate_type(neg).size() >= 1);
}

TEST_CASE("places over p")
{
    CHECK(places_over(cm_field::im_quad(1), 5).places.size() == 2);
    CHECK(places_over(cm_field::im_quad(1), 3).places.at(0).f == 2);
    CHECK(places_over(cm_field::im_quad(1), 2).places.at(0).e == 2);
    CHECK(places_over(cm_field::biquad(1, 11), 5).places.size() == 4);
    /* 7 is inert in Q(i) */
    CHECK_THROWS_AS(places_over(cm_field::biquad(1, 6), 7), std::invalid_argument);
    CHECK_THROWS_AS(cm_field::biquad(2, 2), std::invalid_argument);
}

TEST_CASE("minimality examples")
{
    cm_field L = cm_field::biquad(1, 11), F = cm_field::im_quad(1);
    padic_type t = places_over(L, 5);
    t.eta("v") = 1;
    t.eta("scv") = 1;
    REQUIRE(validate_type(t).empty());
    CHECK(minimality_check(t, F));
    CHECK_FALSE(minimality_check(t, cm_field::rationals()));
    auto down = inducing_type(t, cm_field::im_quad(11));
    REQUIRE(down);
    CHECK(down->eta("u") == 1);
    CHECK(down->eta("ub") == 0);
    CHECK(induce(*down, L).places.size() == 4);
    for (auto const & x : induce(*down, L).places)
        CHECK(x.eta == t.eta(x.id));

    padic_type half = places_over(F, 5);
    half.eta("u") = rational(1, 2);
    half.eta("ub") = rational(1, 2);
    CHECK_FALSE(minimality_check(half, cm_field::rationals()));
    CHECK(minimality_check(half, F));

    padic_type flat = places_over(L, 5);
    for (auto & x : flat.places)
        x.eta = rational(1, 2);
    CHECK_FALSE(minimality_check(flat, F));

    CHECK_THROWS_AS(minimality_check(t, cm_field::im_quad(2)), std::invalid_argument);
}

TEST_CASE("classification for N = 1, p = 5")
{
    auto cs = classify_surfaces(1, 5, {11});
    CHECK(cs.size() == 3);
    CHECK(count_case(cs, surface_case::case1a) == 1);
    CHECK(count_case(cs, surface_case::case1b) == 1);
    CHECK(count_case(cs, surface_case::case2) == 1);
    for (auto const & c : cs) {
        CHECK(c.dim == 2);
        CHECK(c.dim_at_u == 1);
        if (c.tag == surface_case::case1b) {
            CHECK(c.t == 2);
            CHECK(c.brauer_invariants.at("u") == rational(1, 2));
            CHECK(c.brauer_invariants.at("ub") == rational(1, 2));
            CHECK(c.source.supersingular);
            REQUIRE(c.slopes_at_u.size() == 1);
            CHECK(c.slopes_at_u[0].slope == rational(1, 2));
            CHECK(c.slopes_at_u[0].height == 2);
        }
        if (c.tag == surface_case::case1a) {
            auto const & t = c.types.at(0);
            CHECK(t.eta("v") == 1);
            CHECK(t.eta("cv") == 0);
            CHECK(t.eta("sv") == 0);
            CHECK(t.eta("scv") == 1);
            CHECK(c.source == elliptic_class{false, 11});
        }
        if (c.tag == surface_case::case2)
            CHECK(c.source == elliptic_class{false, 1});
    }
}

TEST_CASE("classification without auxiliary fields")
{
    auto cs = classify_surfaces(2, 11, {});
    CHECK(cs.size() == 2);
    CHECK(bijection_check(2, 11, {}));
}

TEST_CASE("bijection and preconditions")
{
    CHECK(bijection_check(1, 5, {11, 19}));
    CHECK(bijection_check(3, 7, default_aux_fields(3, 7, 3)));
    CHECK_THROWS_AS(classify_surfaces(1, 5, {11, 11}), std::invalid_argument);
    CHECK_THROWS_AS(classify_surfaces(1, 7, {}), std::invalid_argument);
    CHECK_THROWS_AS(classify_surfaces(1, 5, {1}), std::invalid_argument);
    CHECK_THROWS_AS(classify_surfaces(1, 5, {3}), std::invalid_argument);
    CHECK_THROWS_AS(classify_surfaces(4, 5, {}), std::invalid_argument);
}

TEST_CASE("splitting in the biquadratic field")
{
    /* p splits completely iff it splits in both imaginary quadratic subfields */
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L})
        for (long n : {1L, 2L, 3L, 5L})
            for (long m : {6L, 7L, 10L, 11L, 19L}) {
                if (n == m)
                    continue;
                bool both = kronecker(n == 3 ? -3 : -4 * n, p) == 1;
                long dm = positive_mod(-m, 4) == 1 ? -m : -4 * m;
                both = both && kronecker(dm, p) == 1;
                CHECK(splits_completely(n, m, p) == both);
            }
}
