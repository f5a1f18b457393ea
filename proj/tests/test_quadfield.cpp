#include <doctest.h>

#include <cstdlib>
#include <random>

#include "tafverify/quadfield.hpp"

using namespace tafverify;

namespace {

/* Dirichlet: h(d) = w/(2|d|) |sum_{a<|d|} (d/a) a| for d < 0 */
long dirichlet_class_number(long d)
{
    long w = d == -4 ? 4 : d == -3 ? 6 : 2;
    long s = 0;
    for (long a = 1; a < -d; ++a)
        s += kronecker(d, a) * a;
    return w * std::labs(s) / (2 * -d);
}

field_element random_element(quad_field const & K, std::mt19937 & rng)
{
    std::uniform_int_distribution<int> d(-7, 7);
    return field_element(K, make_rational(d(rng), 1 + std::abs(d(rng)) % 3), make_rational(d(rng), 1 + std::abs(d(rng)) % 2));
}

} // namespace

TEST_CASE("discriminants and integral basis")
{
    CHECK(quad_field(1).disc() == -4);
    CHECK(quad_field(2).disc() == -8);
    CHECK(quad_field(3).disc() == -3);
    CHECK(quad_field(5).disc() == -20);
    CHECK(quad_field(7).disc() == -7);
    CHECK(quad_field(3).half_integral_basis());
    CHECK_THROWS_AS(quad_field(4), std::invalid_argument);
    CHECK_THROWS_AS(quad_field(0), std::invalid_argument);
}

TEST_CASE("class numbers agree with the analytic formula")
{
    for (long n = 1; n <= 60; ++n) {
        if (!is_squarefree(n))
            continue;
        quad_field K(n);
        class_group_data G = class_group(K);
        CAPTURE(n);
        CHECK(static_cast<long>(G.h()) == dirichlet_class_number(K.disc()));
    }
    CHECK(class_group(quad_field(5)).h() == 2);
    CHECK(class_group(quad_field(14)).h() == 4);
    CHECK(class_group(quad_field(23)).h() == 3);
}

TEST_CASE("reduced forms for d = -20")
{
    auto f = reduced_forms(-20);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == binary_form{1, 0, 5});
    CHECK(f[1] == binary_form{2, 2, 3});
    CHECK(f[1].is_ambiguous());
}

TEST_CASE("form and ideal correspondences round trip")
{
    for (long n : {1L, 2L, 3L, 5L, 6L, 14L, 23L, 26L, 47L}) {
        quad_field K(n);
        class_group_data G = class_group(K);
        for (std::size_t i = 0; i < G.h(); ++i) {
            frac_ideal I = form_to_ideal(K, G.forms[i]);
            CHECK(ideal_to_form(I) == G.forms[i]);
            CHECK(I.norm() == rational(G.forms[i].a));
            /* scaling by a field element does not change the class */
            CHECK(G.class_of(I.scaled(field_element(K, 3, 1))) == i);
        }
    }
}

TEST_CASE("norms are multiplicative and principal ideals multiply")
{
    std::mt19937 rng(2024);
    for (long n : {1L, 2L, 3L, 5L, 15L, 21L}) {
        quad_field K(n);
        for (int t = 0; t < 25; ++t) {
            field_element a = random_element(K, rng), b = random_element(K, rng);
            if (a.is_zero() || b.is_zero())
                continue;
            CHECK((a * b).norm() == a.norm() * b.norm());
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(a * a.inverse() == field_element(K, 1));
            frac_ideal A = frac_ideal::generated_by(K, {a}), B = frac_ideal::generated_by(K, {b});
            CHECK(A * B == frac_ideal::generated_by(K, {a * b}));
            CHECK(A.norm() == (a.norm() < 0 ? -a.norm() : a.norm()));
            CHECK(A * A.inverse() == frac_ideal::unit(K));
        }
    }
}

TEST_CASE("trace dual equals conj(I)^{-1} times the inverse different")
{
    for (long n = 1; n <= 30; ++n) {
        if (!is_squarefree(n))
            continue;
        quad_field K(n);
        class_group_data G = class_group(K);
        frac_ideal dinv = different(K).inverse();
        CHECK(trace_dual(frac_ideal::unit(K)) == dinv);
        for (auto const & I : G.representatives)
            CHECK(trace_dual(I) == I.conj().inverse() * dinv);
        /* N(d) = |disc| */
        CHECK(different(K).norm() == rational(-K.disc()));
    }
}

TEST_CASE("splitting of primes")
{
    quad_field K(1);
    CHECK(split_prime(K, 5) == splitting::split);
    CHECK(split_prime(K, 3) == splitting::inert);
    CHECK(split_prime(K, 2) == splitting::ramified);
    CHECK(split_prime(quad_field(7), 2) == splitting::split);
    CHECK(split_prime(quad_field(3), 2) == splitting::inert);
    CHECK_THROWS_AS(split_prime(K, 15), std::invalid_argument);
}

TEST_CASE("ideal representatives contained in their duals")
{
    for (long n : {1L, 2L, 5L, 6L, 10L, 14L, 21L, 30L}) {
        quad_field K(n);
        long p = 0;
        for (long q = 5;; ++q)
            if (is_prime(q) && split_prime(K, q) == splitting::split) {
                p = q;
                break;
            }
        class_group_data G = class_group(K);
        for (std::size_t i = 0; i < G.h(); ++i) {
            auto r = lemma_representative(K, i, p);
            CAPTURE(n);
            CHECK(G.class_of(r.ideal) == i);
            CHECK(trace_dual(r.ideal).contains(r.ideal));
            CHECK(r.ideal.as_lattice().is_p_locally_standard(p));
            CHECK(trace_dual(r.ideal).as_lattice().is_p_locally_standard(p));
        }
    }
}
