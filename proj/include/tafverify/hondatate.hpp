#ifndef TAFVERIFY_HONDATATE_HPP
#define TAFVERIFY_HONDATATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tafverify/rational.hpp"

namespace tafverify {

/*
 * CM fields of the three shapes needed for abelian surfaces with an
 * imaginary quadratic action: Q, Q(sqrt(-m)), and the biquadratic
 * Q(sqrt(-n), sqrt(-m)) with Galois group <c, sigma>, sigma fixing
 * Q(sqrt(-n)).
 */
enum class cm_shape { rationals, im_quad, real_quad, biquad };

struct cm_field {
    cm_shape shape = cm_shape::rationals;
    long n = 0; /* im_quad: the m of Q(sqrt(-m)); biquad: first field; real_quad: radicand */
    long m = 0; /* biquad only */

    static cm_field rationals() { return {}; }
    static cm_field im_quad(long k);
    static cm_field biquad(long n, long m);

    int degree() const;
    std::string name() const;
    bool operator==(cm_field const & o) const { return shape == o.shape && n == o.n && m == o.m; }
};

struct place {
    std::string id;
    long e = 1;
    long f = 1;
    rational eta;
};

struct padic_type {
    cm_field field;
    long p = 0;
    std::vector<place> places;
    std::map<std::string, std::string> conj;

    place const & at(std::string const & id) const;
    rational & eta(std::string const & id);
    rational const & eta(std::string const & id) const;
};

/*
 * Places of the field over p with their conjugation, all eta set to 0.
 * Biquadratic places are labelled v, cv, sv, scv; Q(sqrt(-k)) places u, ub
 * when p splits. Biquadratic fields require p to split completely.
 */
padic_type places_over(cm_field const & field, long p);

/* every violated relation, empty when the type is valid */
std::vector<std::string> validate_type(padic_type const & t);

/* CM subfields K of t.field with under in K, K != t.field */
std::vector<cm_field> intermediate_fields(cm_field const & field, cm_field const & under);

/* the type on K inducing t, when t is constant on the fibres of restriction */
std::optional<padic_type> inducing_type(padic_type const & t, cm_field const & sub);

/* push a type on a subfield up to the bigger field */
padic_type induce(padic_type const & t, cm_field const & big);

/* throws std::invalid_argument if under is not a subfield of t.field */
bool minimality_check(padic_type const & t, cm_field const & under);

/* isogeny class of elliptic curves over the algebraic closure of F_p */
struct elliptic_class {
    bool supersingular = false;
    long cm_n = 0; /* ordinary: CM by Q(sqrt(-cm_n)) */

    bool operator==(elliptic_class const & o) const
    {
        return supersingular == o.supersingular && cm_n == o.cm_n;
    }
    bool operator<(elliptic_class const & o) const
    {
        return supersingular != o.supersingular ? supersingular < o.supersingular : cm_n < o.cm_n;
    }
    std::string to_string() const;
};

/* elliptic curve corresponding to the minimal type a simple type is induced from */
elliptic_class elliptic_source(padic_type const & t);

enum class surface_case { case1a, case1b, case2 };
std::string to_string(surface_case c);

struct slope_datum {
    std::string place;
    rational slope;
    rational dimension;
    long height = 0;
};

struct f_linear_class {
    surface_case tag = surface_case::case1a;
    /* one type for simple classes, the two F-linear elliptic summands for case 2 */
    std::vector<padic_type> types;
    long t = 1;
    long dim = 0;
    std::vector<slope_datum> slopes_at_u;
    rational dim_at_u;
    std::map<std::string, rational> brauer_invariants;
    elliptic_class source;
};

/*
 * F-linear isogeny classes of abelian surfaces with dim A(u) = 1, found by
 * enumerating half-integral types on F and on each Q(sqrt(-n), sqrt(-m)),
 * m in aux, subject to the dimension formula. Throws std::invalid_argument
 * naming the failed precondition.
 */
std::vector<f_linear_class> classify_surfaces(long n, long p, std::vector<long> const & aux);

/* [E] -> [E (x) O_F] is a bijection from {CM by aux, CM by F, supersingular} onto the classes */
bool bijection_check(long n, long p, std::vector<long> const & aux);

/* product-of-characters test that p splits completely in Q(sqrt(-n), sqrt(-m)) */
bool splits_completely(long n, long m, long p);

/* smallest squarefree m != n with p split in Q(sqrt(-m)), up to count of them */
std::vector<long> default_aux_fields(long n, long p, std::size_t count);

} // namespace tafverify

#endif
