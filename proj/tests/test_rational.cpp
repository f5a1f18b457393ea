#include <doctest.h>

#include <random>

#include "tafverify/rational.hpp"

using namespace tafverify;

TEST_CASE("primes and squarefree")
{
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(prime_divisors(-60) == std::vector<long>{2, 3, 5});
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes")
{
    for (long p : {3L, 5L, 7L, 11L, 13L, 101L})
        for (long a = -30; a <= 30; ++a) {
            long r = positive_mod(a, p);
            long e = 1;
            for (long i = 0; i < (p - 1) / 2; ++i)
                e = e * r % p;
            int expect = r == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(kronecker(a, p) == expect);
        }
    /* (d/2) by d mod 8 */
    CHECK(kronecker(-7, 2) == 1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(-4, 2) == 0);
}

TEST_CASE("p-integrality")
{
    CHECK(is_p_integral(make_rational(3, 4), 5));
    CHECK_FALSE(is_p_integral(make_rational(3, 4), 2));
    CHECK(is_integral(make_rational(8, 4)));
}

TEST_CASE("inverse and determinant on random matrices")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        rat_matrix a(4, rat_vector(4));
        for (auto & row : a)
            for (auto & x : row)
                x = d(rng);
        if (determinant(a) == 0) {
            CHECK_THROWS_AS(inverse(a), std::domain_error);
            continue;
        }
        CHECK(multiply(a, inverse(a)) == identity_matrix(4));
        CHECK(determinant(transpose(a)) == determinant(a));
        CHECK(determinant(inverse(a)) * determinant(a) == 1);
    }
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        rat_matrix a(3, rat_vector(5));
        for (auto & row : a)
            for (auto & x : row)
                x = d(rng);
        auto k = kernel(a, 5);
        CHECK(k.size() + rank(a) == 5);
        for (auto const & v : k)
            for (auto const & row : a) {
                rational s = 0;
                for (std::size_t j = 0; j < 5; ++j)
                    s += row[j] * v[j];
                CHECK(s == 0);
            }
    }
}
