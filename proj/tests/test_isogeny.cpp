#include <doctest.h>

#include <random>

#include "tafverify/isogeny.hpp"

using namespace tafverify;

namespace {

/* a + b sqrt(n): q and q^v both realized as sqrt(n), so q^v q = n */
struct surd {
    rational a, b;
    bool operator==(surd const & o) const { return a == o.a && b == o.b; }
};

using surd_matrix = std::vector<std::vector<surd>>;

surd realize(formal_hom const & h)
{
    if (h.is_isogeny_type())
        return {0, h.coeff()};
    return {h.coeff(), 0};
}

surd_matrix realize(formal_matrix const & m)
{
    surd_matrix r(m.nrows(), std::vector<surd>(m.ncols()));
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j)
            r[i][j] = realize(m.entry(i, j));
    return r;
}

surd_matrix mul(surd_matrix const & x, surd_matrix const & y, long n)
{
    surd_matrix r(x.size(), std::vector<surd>(y[0].size(), surd{0, 0}));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y[0].size(); ++j)
            for (std::size_t k = 0; k < y.size(); ++k) {
                surd const &u = x[i][k], &v = y[k][j];
                r[i][j].a += u.a * v.a + n * u.b * v.b;
                r[i][j].b += u.a * v.b + u.b * v.a;
            }
    return r;
}

surd_matrix transpose(surd_matrix const & x)
{
    surd_matrix r(x[0].size(), std::vector<surd>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[0].size(); ++j)
            r[j][i] = x[i][j];
    return r;
}

formal_matrix random_end(long n, std::mt19937 & rng)
{
    std::uniform_int_distribution<int> d(-4, 4);
    return formal_matrix::end_e_ebar(n, {{make_rational(d(rng), 2), d(rng)}, {d(rng), make_rational(d(rng), 3)}});
}

} // namespace

TEST_CASE("hom composition rules")
{
    long n = 7;
    formal_hom q = formal_hom::q(n), qv = formal_hom::q_dual(n);
    CHECK(qv.after(q) == formal_hom::id(n, formal_object::E, 7));
    CHECK(q.after(qv) == formal_hom::id(n, formal_object::Ebar, 7));
    CHECK(q.dual() == qv);
    CHECK(q.degree() == 7);
    CHECK(formal_hom::q(n, 3).degree() == 63);
    CHECK_THROWS(q.after(q));
    CHECK_THROWS(q + qv);
}

TEST_CASE("formal algebra agrees with the scalar realization")
{
    std::mt19937 rng(31337);
    for (long n : {1L, 2L, 3L, 5L, 7L, 11L}) {
        for (int t = 0; t < 20; ++t) {
            formal_matrix x = random_end(n, rng), y = random_end(n, rng);
            CHECK(realize(x * y) == mul(realize(x), realize(y), n));
            CHECK(realize(dagger(x)) == transpose(realize(x)));
            CHECK(dagger(x * y) == dagger(y) * dagger(x));
            CHECK(dagger(dagger(x)) == x);
        }
    }
}

TEST_CASE("case I complex multiplication")
{
    for (long n = 1; n <= 50; ++n) {
        if (!is_squarefree(n) || positive_mod(n, 4) == 3)
            continue;
        auto r = cm_case1(n);
        CHECK(r.square_is_minus_n);
        CHECK(r.dagger_is_minus_x);
        /* independent: the realization of x squares to -n */
        auto s = mul(realize(r.x), realize(r.x), n);
        CHECK(s[0][0] == surd{-n, 0});
        CHECK(s[0][1] == surd{0, 0});
    }
    CHECK_THROWS_AS(cm_case1(3), std::invalid_argument);
}

TEST_CASE("case II complex multiplication")
{
    for (long n = 3; n <= 50; n += 4) {
        if (!is_squarefree(n))
            continue;
        auto r = cm_case2(n);
        CHECK(r.minimal_polynomial);
        CHECK(r.conjugate_commutes);
        CHECK(r.a_symmetric);
        CHECK(r.y_matches_transport);
        CHECK_FALSE(r.printed_sign_satisfies_relations);
        /* realization: y^2 + y + (n+1)/4 = 0 */
        auto y = realize(r.y);
        auto y2 = mul(y, y, n);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                rational c = (i == j) ? make_rational(n + 1, 4) : rational(0);
                CHECK(y2[i][j].a + y[i][j].a + c == 0);
                CHECK(y2[i][j].b + y[i][j].b == 0);
            }
    }
    CHECK_THROWS_AS(cm_case2(5), std::invalid_argument);
}

TEST_CASE("polarization positivity")
{
    for (long n = 3; n <= 50; n += 4) {
        if (!is_squarefree(n))
            continue;
        binary_quadratic f = polarization_positivity(n);
        CHECK(f.alpha == make_rational(n + 1, 2));
        CHECK(-f.discriminant() == 4 * n);
    }
    CHECK_THROWS_AS(check_positivity(formal_matrix::identity(3).scaled(-1)), std::domain_error);
}

TEST_CASE("automorphism orders")
{
    CHECK(automorphism_group_order(1) == 4);
    CHECK(automorphism_group_order(3) == 6);
    CHECK(automorphism_group_order(2) == 2);
    for (long n = 1; n <= 50; ++n) {
        if (!is_squarefree(n))
            continue;
        CHECK(automorphism_group_order(n) == unit_group_order(quad_field(n)));
        if (positive_mod(n, 4) == 3) {
            auto br = case2_degree_branches(n);
            CHECK(br.at({2, 2}) == 0);
            long total = 0;
            for (auto const & [k, v] : br) {
                CHECK(k.first + k.second == 4);
                total += v;
            }
            CHECK(total == automorphism_group_order(n));
        }
    }
    CHECK(tensor_automorphism_order(2, quad_field(3)) == 6);
    CHECK(tensor_automorphism_order(4, quad_field(1)) == 8);
    CHECK_THROWS(tensor_automorphism_order(3, quad_field(1)));
}
