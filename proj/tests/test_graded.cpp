#include <doctest.h>

#include <random>

#include "tafverify/graded.hpp"

using namespace tafverify;

namespace {

rational evaluate(polynomial const & p, std::vector<rational> const & at)
{
    rational s = 0;
    for (auto const & [m, c] : p.terms()) {
        rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k)
                t *= at[i];
        s += t;
    }
    return s;
}

std::vector<rational> random_point(std::size_t n, std::mt19937 & rng)
{
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<rational> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(make_rational(d(rng), 1 + std::abs(d(rng))));
    return v;
}

} // namespace

TEST_CASE("polynomial arithmetic matches evaluation")
{
    std::mt19937 rng(77);
    polynomial x = polynomial::variable(2, 0), y = polynomial::variable(2, 1);
    polynomial f = x * x * rational(3) - y + polynomial::constant(2, 2);
    polynomial g = x * y - y.pow(3) * rational(1, 2);
    for (int t = 0; t < 20; ++t) {
        auto pt = random_point(2, rng);
        CHECK(evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt));
        CHECK(evaluate(f + g, pt) == evaluate(f, pt) + evaluate(g, pt));
        CHECK(evaluate(f.pow(3), pt) == evaluate(f, pt) * evaluate(f, pt) * evaluate(f, pt));
    }
    CHECK((f - f).is_zero());
    CHECK(exact_divide(f * g, g) == f);
    CHECK_FALSE(exact_divide(f * g + x, g));
}

TEST_CASE("apply on the three levels")
{
    auto L1 = level1_ring();
    CHECK(L1.ring.apply(L1.ring.identity_map(), L1.ring.gen(0)) == L1.ring.gen(0));

    auto L2 = level2_ring();
    polynomial q2 = L2.ring.gen(0), q4 = L2.ring.gen(1);
    CHECK(L2.ring.apply(L2.ring.identity_map(), q2 * q2 * q4) == q2 * q2 * q4);
    CHECK(L2.ring.apply(L2.tstar, q2) == q2 * rational(-2));

    auto L3 = level3_ring();
    CHECK(L3.ring.apply(L3.tstar, L3.ring.gen(0)) == L3.ring.gen(0) * rational(-3));
    CHECK_THROWS_AS(apply(L3.ring, algebra_map{{L3.ring.gen(0)}}, L3.ring.gen(1)), std::invalid_argument);
}

TEST_CASE("t squared")
{
    auto L2 = level2_ring();
    CHECK(check_t_squared(L2.ring, L2.tstar, 2));
    CHECK(L2.ring.apply(L2.tstar, L2.ring.apply(L2.tstar, L2.ring.gen(1))) == L2.ring.gen(1) * rational(16));
    auto L3 = level3_ring();
    CHECK(check_t_squared(L3.ring, L3.tstar, 3));
    CHECK(L3.ring.apply(L3.tstar, L3.ring.apply(L3.tstar, L3.ring.gen(1))) == L3.ring.gen(1) * rational(81));
    CHECK(check_t_squared(L2.ring, L2.ring.identity_map(), 1));
    CHECK_FALSE(check_t_squared(L2.ring, L2.tstar, 3));
}

TEST_CASE("fricke involutions reproduce the displayed formulas")
{
    auto L2 = level2_ring();
    polynomial q2 = L2.ring.gen(0), q4 = L2.ring.gen(1);
    CHECK(L2.w.images[1] == q2.pow(2) * rational(1, 4) - q4);
    polynomial r4 = q4 * rational(8) - q2.pow(2);
    CHECK(L2.ring.apply(L2.w, r4) == -r4);
    CHECK(is_involution(L2.ring, L2.w));

    auto L3 = level3_ring();
    CHECK(L3.w.images[0] == L3.ring.gen(0));
    CHECK(is_involution(L3.ring, L3.w));
    CHECK(respects_relations(L3.ring, L3.w));

    auto L1 = level1_ring();
    CHECK(L1.w.images[1] == -L1.ring.gen(1));

    CHECK_THROWS_AS(graded_ring({"x"}, {3}), std::invalid_argument);
}

TEST_CASE("fricke rescaling agrees with evaluation at random points")
{
    /* w(g)(P) = t(g)(P) / (-N)^(k/2) for each generator */
    std::mt19937 rng(4242);
    auto L3 = level3_ring();
    for (int t = 0; t < 10; ++t) {
        auto pt = random_point(3, rng);
        rational scale[3] = {rational(-1, 3), rational(1, 9), rational(-1, 27)};
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(evaluate(L3.w.images[i], pt) == evaluate(L3.tstar.images[i], pt) * scale[i]);
    }
}

TEST_CASE("identities")
{
    auto L2 = level2_ring();
    auto const & R = L2.ring;
    polynomial q2 = R.gen(0), q4 = R.gen(1);
    polynomial r4 = q4 * rational(8) - q2.pow(2);
    CHECK(verify_identity(R, L2.delta * R.apply(L2.w, L2.delta), (q2.pow(4) - r4.pow(2)).pow(3) * rational(1, 64)));
    CHECK_THROWS_AS(verify_identity(R, q2, q4), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(R, q2 + q4, q2 + q4), std::invalid_argument);

    auto L3 = level3_ring();
    auto const & S = L3.ring;
    integer s;
    mpz_ui_pow_ui(s.get_mpz_t(), 3, 18);
    s *= 256;
    CHECK(verify_identity(S, L3.delta * S.apply(L3.w, L3.delta) * rational(s), L3.unit.pow(4)));
    /* in a1, a3: D = 108 a3 (a1^3 - 27 a3) */
    polynomial a1 = polynomial::variable(2, 0), a3 = polynomial::variable(2, 1);
    CHECK(S.embed(L3.unit) == a3 * (a1.pow(3) - a3 * rational(27)) * rational(108));
}

TEST_CASE("invariant subspaces")
{
    auto L2 = level2_ring();
    graded_action w2 = make_action({L2.w}, 1);
    auto b4 = invariant_subspace(L2.ring, w2, 4, 0);
    REQUIRE(b4.dimension() == 1);
    CHECK(b4.numerators[0] == L2.ring.gen(0).pow(2));
    auto b8 = invariant_subspace(L2.ring, w2, 8, 0);
    CHECK(b8.dimension() == 2);

    auto L1 = level1_ring();
    CHECK(invariant_subspace(L1.ring, L1.action, 10, 0).dimension() == 0);

    auto L3 = level3_ring();
    auto b6 = invariant_subspace(L3.ring, L3.action, 6, 0);
    CHECK(b6.dimension() == 2);
    /* the span contains a1^6 and D */
    rat_matrix rows;
    auto basis = L3.ring.monomials_of_weight(6);
    auto coords = [&](polynomial const & p) {
        rat_vector v;
        for (auto const & m : basis)
            v.push_back(p.coeff(m));
        return v;
    };
    for (auto const & x : b6.numerators)
        rows.push_back(coords(x));
    rows.push_back(coords(L3.ring.gen(0).pow(3)));
    rows.push_back(coords(L3.unit));
    CHECK(rank(rows) == 2);
}

TEST_CASE("generation")
{
    auto L2 = level2_ring();
    CHECK(check_generation(L2.ring, L2.action, L2.claimed, 24, 2).ok);
    auto dropped = check_generation(L2.ring, L2.action, {L2.claimed[1]}, 24, 2);
    CHECK_FALSE(dropped.ok);
    CHECK(dropped.failed_weight == 2);

    auto L1 = level1_ring();
    CHECK(check_generation(L1.ring, L1.action, L1.claimed, 24, 2).ok);
    CHECK(check_generation(L1.ring, level1_character_action(3), level1_character_generators(L1, 3), 24, 2).ok);
    CHECK(check_generation(L1.ring, level1_character_action(2), level1_character_generators(L1, 2), 24, 2).ok);
    CHECK_THROWS_AS(check_generation(L1.ring, L1.action, {{L1.ring.gen(1), false}}, 24, 2), std::invalid_argument);

    auto L3 = level3_ring();
    CHECK(check_generation(L3.ring, L3.action, L3.claimed, 24, 2).ok);
    CHECK_THROWS_AS(make_action({}, 5), std::invalid_argument);
}

TEST_CASE("p-integrality")
{
    auto L2 = level2_ring();
    std::vector<polynomial> gens;
    for (auto const & c : L2.claimed)
        gens.push_back(c.value);
    CHECK(p_integrality(gens, 11));
    CHECK_FALSE(p_integrality({L2.w.images[1]}, 2));
    auto L3 = level3_ring();
    gens.clear();
    for (auto const & c : L3.claimed)
        gens.push_back(c.value);
    CHECK(p_integrality(gens, 7));
}

TEST_CASE("units divide powers of the discriminant and conversely")
{
    for (long level : {2L, 3L}) {
        auto L = level_ring_for(level);
        CHECK(divides_power(L.ring, L.delta, L.unit));
        CHECK(divides_power(L.ring, L.unit, L.delta));
    }
    auto L2 = level2_ring();
    CHECK_FALSE(divides_power(L2.ring, L2.ring.gen(0), L2.delta));
}
