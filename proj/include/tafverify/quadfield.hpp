#ifndef TAFVERIFY_QUADFIELD_HPP
#define TAFVERIFY_QUADFIELD_HPP

#include <string>
#include <vector>

#include "tafverify/lattice.hpp"
#include "tafverify/rational.hpp"

namespace tafverify {

/*
 * F = Q(delta) with delta^2 = -n, n positive squarefree.
 * The integral basis is {1, omega} with omega = delta when -n = 2,3 mod 4
 * and omega = (1 + delta)/2 when -n = 1 mod 4.
 */
class quad_field {
    long n_ = 1;
    long disc_ = -4;

  public:
    explicit quad_field(long n);

    long n() const { return n_; }
    long disc() const { return disc_; }
    bool half_integral_basis() const { return disc_ % 4 != 0; }

    /* number of distinct primes dividing disc */
    int ramified_prime_count() const;

    bool operator==(quad_field const & o) const { return n_ == o.n_; }
};

/* a + b delta */
class field_element {
    long n_ = 1;
    rational a_, b_;

  public:
    field_element() = default;
    field_element(quad_field const & K, rational a, rational b = 0);

    long n() const { return n_; }
    rational const & a() const { return a_; }
    rational const & b() const { return b_; }

    /* coordinates in the integral basis {1, omega} */
    rat_vector coords() const;
    static field_element from_coords(quad_field const & K, rational x, rational y);

    field_element conj() const;
    rational norm() const { return a_ * a_ + n_ * b_ * b_; }
    rational trace() const { return 2 * a_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    field_element operator+(field_element const & o) const;
    field_element operator-(field_element const & o) const;
    field_element operator-() const;
    field_element operator*(field_element const & o) const;
    field_element operator/(field_element const & o) const;
    field_element inverse() const;

    bool operator==(field_element const & o) const
    {
        return n_ == o.n_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(field_element const & o) const { return !(*this == o); }

    std::string to_string() const;
};

/* Tr(z * conj(w)) */
rational trace_pairing(field_element const & z, field_element const & w);

/*
 * Nonzero fractional ideal, stored as a rank-2 lattice in integral-basis
 * coordinates, in canonical HNF (see lattice). Equality is representation
 * equality.
 */
class frac_ideal {
    quad_field K_;
    lattice lat_;

    frac_ideal(quad_field const & K, lattice L) : K_(K), lat_(std::move(L)) {}

  public:
    /* O_F-module generated by the given elements */
    static frac_ideal generated_by(quad_field const & K, std::vector<field_element> const & gens);
    static frac_ideal unit(quad_field const & K);
    /* rejects lattices not stable under omega */
    static frac_ideal from_lattice(quad_field const & K, lattice L);

    quad_field const & field() const { return K_; }
    lattice const & as_lattice() const { return lat_; }
    std::vector<field_element> basis() const;

    rational norm() const;
    bool contains(field_element const & z) const;
    bool contains(frac_ideal const & o) const { return lat_.contains(o.lat_); }

    frac_ideal operator*(frac_ideal const & o) const;
    frac_ideal scaled(field_element const & a) const;
    frac_ideal conj() const;
    frac_ideal inverse() const;

    bool is_integral() const { return unit(K_).contains(*this); }

    bool operator==(frac_ideal const & o) const { return K_ == o.K_ && lat_ == o.lat_; }
    bool operator!=(frac_ideal const & o) const { return !(*this == o); }

    std::string to_string() const;
};

enum class splitting { split, inert, ramified };
std::string to_string(splitting s);

/* throws std::invalid_argument for non-prime p */
splitting split_prime(quad_field const & K, long p);

/* the different, computed as (sqrt(disc)) */
frac_ideal different(quad_field const & K);

/* {z : Tr(z conj(w)) in Z for all w in I} */
frac_ideal trace_dual(frac_ideal const & I);

/* primitive positive definite binary quadratic form a x^2 + b x y + c y^2 */
struct binary_form {
    integer a, b, c;

    integer disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool is_ambiguous() const;
    binary_form reduced() const;
    binary_form inverse() const { return {a, -b, c}; }

    bool operator==(binary_form const & o) const { return a == o.a && b == o.b && c == o.c; }
};

/* reduced primitive forms of discriminant d < 0, ordered by (a, b) */
std::vector<binary_form> reduced_forms(long d);

/* Z a + Z (-b + sqrt(disc))/2 */
frac_ideal form_to_ideal(quad_field const & K, binary_form const & f);

/* reduced form of the class of I (positively oriented basis) */
binary_form ideal_to_form(frac_ideal const & I);

struct class_group_data {
    quad_field field;
    std::vector<binary_form> forms;
    std::vector<frac_ideal> representatives;
    std::size_t ambiguous_count = 0;

    std::size_t h() const { return forms.size(); }
    /* index into forms of the class of I */
    std::size_t class_of(frac_ideal const & I) const;
};

class_group_data class_group(quad_field const & K);

struct lemma_representative_result {
    frac_ideal ideal;
    field_element multiplier;
    int search_radius = 0;
    bool contained_in_dual = false;
    bool p_locally_trivial = false;
    bool equals_dual = false;
};

/*
 * A representative I of the given class with I_(p) = (I^v)_(p) = O_(p) and
 * I in I^v, found by scanning multipliers b / p^k (b in O_F in a growing box,
 * radius capped at 10 n). Throws std::runtime_error when the cap is reached.
 */
lemma_representative_result lemma_representative(quad_field const & K, std::size_t class_index, long p);

} // namespace tafverify

#endif
