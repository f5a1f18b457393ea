#ifndef TAFVERIFY_LATTICE_HPP
#define TAFVERIFY_LATTICE_HPP

#include <string>
#include <vector>

#include "tafverify/rational.hpp"

namespace tafverify {

/*
 * Full-rank lattice in Q^n.
 *
 * The canonical form is (1/denom) * H where denom is the least positive
 * integer making the lattice integral and H is the row-style Hermite normal
 * form of denom * L: upper triangular, positive pivots, entries above each
 * pivot reduced into [0, pivot). Two lattices are equal iff their canonical
 * forms agree, so operator== is a plain comparison.
 */
class lattice {
    std::size_t dim_ = 0;
    integer denom_ = 1;
    int_matrix hnf_;

  public:
    lattice() = default;

    /* any number of generators; throws std::domain_error unless they span Q^n */
    static lattice from_generators(std::vector<rat_vector> const & gens, std::size_t n);

    std::size_t dim() const { return dim_; }
    integer const & denom() const { return denom_; }
    int_matrix const & hnf() const { return hnf_; }

    /* basis rows as rationals */
    rat_matrix basis() const;

    /* |det| of the basis, i.e. the covolume relative to Z^n */
    rational covolume() const;

    bool contains(rat_vector const & v) const;
    bool contains(lattice const & other) const;

    lattice scaled(rational const & s) const;
    lattice sum(lattice const & other) const;

    /*
     * {x : x^T G b in Z for every basis row b}, i.e. the dual with respect
     * to the bilinear form whose Gram matrix in standard coordinates is G.
     * Throws std::domain_error when G restricted to the lattice is degenerate.
     */
    lattice dual(rat_matrix const & gram) const;

    /* basis matrix lies in GL_n(Z_(p)), i.e. L_(p) = Z_(p)^n */
    bool is_p_locally_standard(long p) const;

    bool operator==(lattice const & o) const
    {
        return dim_ == o.dim_ && denom_ == o.denom_ && hnf_ == o.hnf_;
    }
    bool operator!=(lattice const & o) const { return !(*this == o); }

    std::string to_string() const;
};

/* row HNF of an integer matrix whose rows span a rank-n sublattice of Z^n */
int_matrix hermite_normal_form(int_matrix rows, std::size_t n);

} // namespace tafverify

#endif
