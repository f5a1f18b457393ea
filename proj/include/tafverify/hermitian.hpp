#ifndef TAFVERIFY_HERMITIAN_HPP
#define TAFVERIFY_HERMITIAN_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "tafverify/lattice.hpp"
#include "tafverify/quadfield.hpp"

namespace tafverify {

struct herm_vector {
    field_element x1, x2;
};

/* 2x2 matrix over F acting on column vectors of V = F^2 */
struct f_matrix {
    std::array<std::array<field_element, 2>, 2> m;

    static f_matrix identity(quad_field const & K);
    static f_matrix scalar(field_element const & z);

    f_matrix operator*(f_matrix const & o) const;
    herm_vector operator*(herm_vector const & v) const;
    bool operator==(f_matrix const & o) const { return m == o.m; }
    bool operator!=(f_matrix const & o) const { return !(*this == o); }
};

class not_a_similitude : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/* Tr(x1 * (-conj(w2)) + x2 * conj(w1)): Q-bilinear, alternating, Hermitian */
rational pairing(herm_vector const & v, herm_vector const & w);

/* adjoint for the pairing: pairing(g v, w) = pairing(v, iota(g) w) */
f_matrix iota(f_matrix const & g);

/* nu in Q^x with iota(g) g = nu Id; throws not_a_similitude otherwise */
rational similitude_norm(f_matrix const & g);

/*
 * Rank-4 lattice in V = F^2, coordinates (x1 in {1,omega}, x2 in {1,omega}).
 * Canonical form is inherited from lattice, so equality is syntactic.
 */
class of_lattice {
    quad_field K_;
    lattice lat_;

    of_lattice(quad_field const & K, lattice L) : K_(K), lat_(std::move(L)) {}

  public:
    /* rejects non-full-rank generator sets and lattices not stable under omega */
    static of_lattice from_generators(quad_field const & K, std::vector<herm_vector> const & gens);
    static of_lattice direct_sum(frac_ideal const & first, frac_ideal const & second);

    quad_field const & field() const { return K_; }
    lattice const & as_lattice() const { return lat_; }
    std::vector<herm_vector> basis() const;

    bool operator==(of_lattice const & o) const { return K_ == o.K_ && lat_ == o.lat_; }
    bool operator!=(of_lattice const & o) const { return !(*this == o); }
};

/* Gram matrix of the pairing in lattice coordinates */
rat_matrix pairing_gram(quad_field const & K);

/* {x in V : pairing(x, l) in Z for all l in L} */
of_lattice dual_lattice(of_lattice const & L);

/* O_F + d^{-1} */
of_lattice self_dual_lattice(quad_field const & K);

struct class_number_gu_result {
    int u = 0;
    std::size_t h_f = 0;
    std::size_t ambiguous_forms = 0;
    long index_c_c0 = 0;
    /* 2^u / |O_F^x / (O_F^x)^2| */
    long index_e_f = 0;
    long h_gu = 0;
    /* the reading [E : f(O_F^x)] = 2 taken literally */
    long index_e_f_literal = 2;
    long h_gu_literal = 0;
};

/*
 * h(GU) = h(Q) [C : C0] [E : f(O_F^x)] with [C : C0] = h(F)/2^{u-1}.
 * Throws std::logic_error if h(F)/2^{u-1} is not integral or disagrees with
 * the ambiguous-form count.
 */
class_number_gu_result class_number_gu(quad_field const & K);

} // namespace tafverify

#endif
