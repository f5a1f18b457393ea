#include <doctest.h>

#include <random>

#include "tafverify/hermitian.hpp"

using namespace tafverify;

namespace {

field_element rnd(quad_field const & K, std::mt19937 & rng)
{
    std::uniform_int_distribution<int> d(-5, 5);
    return field_element(K, d(rng), d(rng));
}

} // namespace

TEST_CASE("the pairing is alternating and F-sesquilinear")
{
    std::mt19937 rng(11);
    for (long n : {1L, 2L, 3L, 7L}) {
        quad_field K(n);
        for (int t = 0; t < 30; ++t) {
            herm_vector v{rnd(K, rng), rnd(K, rng)}, w{rnd(K, rng), rnd(K, rng)};
            field_element a = rnd(K, rng);
            CHECK(pairing(v, v) == 0);
            CHECK(pairing(v, w) == -pairing(w, v));
            CHECK(pairing({a * v.x1, a * v.x2}, w) == pairing(v, {a.conj() * w.x1, a.conj() * w.x2}));
        }
    }
}

TEST_CASE("iota is the adjoint of the pairing")
{
    std::mt19937 rng(5);
    quad_field K(5);
    for (int t = 0; t < 30; ++t) {
        f_matrix g = f_matrix::identity(K);
        for (auto & row : g.m)
            for (auto & x : row)
                x = rnd(K, rng);
        herm_vector v{rnd(K, rng), rnd(K, rng)}, w{rnd(K, rng), rnd(K, rng)};
        CHECK(pairing(g * v, w) == pairing(v, iota(g) * w));
    }
}

TEST_CASE("similitude norms")
{
    quad_field K(2);
    field_element z(K, 1, 1);
    CHECK(similitude_norm(f_matrix::scalar(z)) == 3);
    f_matrix s = f_matrix::identity(K);
    s.m[0][1] = field_element(K, 2);
    s.m[1][0] = field_element(K, 1);
    s.m[1][1] = field_element(K, 3);
    CHECK(similitude_norm(s) == 1); /* det of a rational matrix */
    f_matrix bad = f_matrix::identity(K);
    bad.m[0][1] = field_element(K, 0, 1);
    CHECK_THROWS_AS(similitude_norm(bad), not_a_similitude);
}

TEST_CASE("self-dual lattice and the dual of O_F^2")
{
    for (long n = 1; n <= 30; ++n) {
        if (!is_squarefree(n))
            continue;
        quad_field K(n);
        of_lattice L = self_dual_lattice(K);
        CHECK(dual_lattice(L) == L);
        frac_ideal O = frac_ideal::unit(K), dinv = different(K).inverse();
        of_lattice O2 = of_lattice::direct_sum(O, O);
        CHECK(dual_lattice(O2) == of_lattice::direct_sum(dinv, dinv));
        CHECK(dual_lattice(O2) != O2);
        /* covolume of a self-dual lattice is 1 in pairing terms: det(Gram on L) = +-1 */
        CHECK(L.as_lattice().covolume() * L.as_lattice().covolume() * determinant(pairing_gram(K)) == 1);
    }
}

TEST_CASE("non O_F-stable generators are rejected")
{
    quad_field K(5);
    field_element one(K, 1), zero(K, 0), d(K, 0, 1);
    CHECK_THROWS_AS(of_lattice::from_generators(K, {{one, zero}, {zero, one}, {d + d, zero}, {zero, d}}),
                    std::domain_error);
}

TEST_CASE("class number of the unitary group")
{
    for (long n = 1; n <= 50; ++n) {
        if (!is_squarefree(n))
            continue;
        auto r = class_number_gu(quad_field(n));
        CHECK(r.h_gu == static_cast<long>(r.h_f));
        CHECK(static_cast<long>(r.ambiguous_forms) == (1L << (r.u - 1)));
    }
    auto r5 = class_number_gu(quad_field(5));
    CHECK(r5.u == 2);
    CHECK(r5.index_c_c0 == 1);
    CHECK(r5.index_e_f == 2);
    auto r1 = class_number_gu(quad_field(1));
    CHECK(r1.h_gu == 1);
    CHECK(r1.h_gu_literal == 2);
}
