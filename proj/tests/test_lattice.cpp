#include <doctest.h>

#include <random>

#include "tafverify/lattice.hpp"

using namespace tafverify;

TEST_CASE("hnf is canonical under unimodular changes")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<rat_vector> gens(3, rat_vector(3));
        for (auto & g : gens)
            for (auto & x : g)
                x = make_rational(d(rng), 1 + (trial % 3));
        for (auto & x : gens)
            x[0] += 1; /* avoid the all-zero column most of the time */
        lattice L;
        try {
            L = lattice::from_generators(gens, 3);
        } catch (std::exception const &) {
            continue;
        }
        /* add multiples of one generator to another and permute */
        auto mixed = gens;
        for (std::size_t j = 0; j < 3; ++j)
            mixed[1][j] += 3 * gens[0][j];
        std::swap(mixed[0], mixed[2]);
        CHECK(lattice::from_generators(mixed, 3) == L);
        for (auto const & g : gens)
            CHECK(L.contains(g));
    }
}

TEST_CASE("dual of the standard lattice under a diagonal gram")
{
    lattice Z2 = lattice::from_generators({{1, 0}, {0, 1}}, 2);
    rat_matrix g = {{2, 0}, {0, 3}};
    lattice D = Z2.dual(g);
    CHECK(D == lattice::from_generators({{rational(1, 2), 0}, {0, rational(1, 3)}}, 2));
    CHECK(D.dual(g) == Z2);
    CHECK(D.covolume() == rational(1, 6));
}

TEST_CASE("rank deficiency is rejected")
{
    CHECK_THROWS(lattice::from_generators({{1, 2}, {2, 4}}, 2));
}

TEST_CASE("local standardness at p")
{
    lattice L = lattice::from_generators({{1, 0}, {0, 5}}, 2);
    CHECK(L.is_p_locally_standard(3));
    CHECK_FALSE(L.is_p_locally_standard(5));
}
