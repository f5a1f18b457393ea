#ifndef TAFVERIFY_GRADED_HPP
#define TAFVERIFY_GRADED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tafverify/rational.hpp"

namespace tafverify {

using monomial = std::vector<int>;

/* sparse multivariate polynomial over Q, no zero coefficients stored */
class polynomial {
    std::size_t nvars_ = 0;
    std::map<monomial, rational> terms_;

  public:
    polynomial() = default;
    explicit polynomial(std::size_t nvars) : nvars_(nvars) {}

    static polynomial constant(std::size_t nvars, rational c);
    static polynomial variable(std::size_t nvars, std::size_t i);
    static polynomial term(monomial m, rational c);

    std::size_t nvars() const { return nvars_; }
    std::map<monomial, rational> const & terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    rational coeff(monomial const & m) const;
    void add_term(monomial const & m, rational const & c);

    polynomial operator+(polynomial const & o) const;
    polynomial operator-(polynomial const & o) const;
    polynomial operator-() const;
    polynomial operator*(polynomial const & o) const;
    polynomial operator*(rational const & s) const;
    polynomial pow(unsigned k) const;

    /* weight when homogeneous, nullopt otherwise (and for zero) */
    std::optional<long> weight(std::vector<long> const & weights) const;

    /* lex-leading term; throws on zero */
    std::pair<monomial, rational> leading_term() const;

    bool operator==(polynomial const & o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(polynomial const & o) const { return !(*this == o); }

    std::string to_string(std::vector<std::string> const & names) const;
};

polynomial operator*(rational const & s, polynomial const & p);

/* q with p = q * d, when d divides p exactly */
std::optional<polynomial> exact_divide(polynomial p, polynomial const & d);

/* images of the generators; extends multiplicatively */
struct algebra_map {
    std::vector<polynomial> images;
};

/* substitute images for generators; no reduction */
polynomial substitute(algebra_map const & f, polynomial const & p);

/*
 * Weighted polynomial ring over Q, possibly presented with binomial
 * relations lhs -> rhs (monomials of equal weight), with a distinguished
 * homogeneous element D to be inverted. An optional embedding into a free
 * ring supports exact division.
 */
class graded_ring {
  public:
    struct rule {
        monomial lhs, rhs;
    };

  private:
    std::vector<std::string> names_;
    std::vector<long> weights_;
    std::vector<rule> rules_;
    polynomial distinguished_;
    std::optional<algebra_map> embedding_;
    std::vector<std::string> ambient_names_;

  public:
    graded_ring(std::vector<std::string> names, std::vector<long> weights, std::vector<rule> rules = {});

    std::size_t nvars() const { return names_.size(); }
    std::vector<std::string> const & names() const { return names_; }
    std::vector<long> const & weights() const { return weights_; }
    std::vector<rule> const & rules() const { return rules_; }

    polynomial gen(std::size_t i) const { return polynomial::variable(nvars(), i); }
    polynomial gen(std::string const & name) const;
    polynomial constant(rational c) const { return polynomial::constant(nvars(), std::move(c)); }

    void set_distinguished(polynomial d);
    polynomial const & distinguished() const { return distinguished_; }
    long distinguished_weight() const;

    void set_embedding(algebra_map e, std::vector<std::string> ambient_names);
    bool has_embedding() const { return embedding_.has_value(); }
    /* image in the free ambient ring (identity when the ring is free) */
    polynomial embed(polynomial const & p) const;
    std::vector<std::string> const & ambient_names() const { return ambient_names_; }

    /* normal form modulo the relations */
    polynomial reduce(polynomial const & p) const;
    bool is_normal(monomial const & m) const;

    /* normal monomials of weight k, in increasing lex order */
    std::vector<monomial> monomials_of_weight(long k) const;

    /* reduce(f applied to p) */
    polynomial apply(algebra_map const & f, polynomial const & p) const;
    algebra_map compose(algebra_map const & f, algebra_map const & g) const;
    algebra_map identity_map() const;

    /* throws std::invalid_argument if inhomogeneous or zero */
    long weight_of(polynomial const & p) const;

    std::string format(polynomial const & p) const { return reduce(p).to_string(names_); }
};

/* image weight equals generator weight and every relation is respected */
bool is_degree_preserving(graded_ring const & R, algebra_map const & f);
bool respects_relations(graded_ring const & R, algebra_map const & f);

/* throws std::invalid_argument when an image is missing */
polynomial apply(graded_ring const & R, algebra_map const & f, polynomial const & p);

/* t o t multiplies each weight-k generator by n^k */
bool check_t_squared(graded_ring const & R, algebra_map const & tstar, long n);

/* w(g) = t*(g) / (-N)^(k/2); throws std::invalid_argument on odd weights */
algebra_map fricke_from_t(graded_ring const & R, algebra_map const & tstar, long N);

bool is_involution(graded_ring const & R, algebra_map const & w);

/* throws std::invalid_argument if either side is inhomogeneous or weights differ */
bool verify_identity(graded_ring const & R, polynomial const & lhs, polynomial const & rhs);

/*
 * The group acting on pieces x / D^m: degree-preserving maps fixing D plus an
 * optional character of order n acting on weight k by zeta_{2n}^k.
 */
struct graded_action {
    std::vector<algebra_map> maps;
    long character_order = 1;
};

/* throws std::invalid_argument for character orders outside {1, 2, 3, 6} */
graded_action make_action(std::vector<algebra_map> maps, long character_order);

bool character_fixes_weight(graded_action const & g, long k);

struct piece_basis {
    long weight = 0;
    long denom = 0;
    /* numerators x with x / D^denom invariant; reduced echelon basis */
    std::vector<polynomial> numerators;
    std::size_t dimension() const { return numerators.size(); }
};

/* numerator weight is k + m wt(D); throws if some map does not fix D */
piece_basis invariant_subspace(graded_ring const & R, graded_action const & g, long k, long m);

struct claimed_generator {
    polynomial value;
    bool inverted = false;
};

struct generation_result {
    bool ok = true;
    long failed_weight = 0;
    long failed_denom = 0;
    std::size_t invariant_dim = 0;
    std::size_t generated_dim = 0;
    std::size_t pieces_scanned = 0;
};

/*
 * Compare span of claimed-generator monomials with the invariant subspace
 * on every piece (k, m), k <= max_weight, 0 <= m <= max_denom. Inverted
 * generators must be scalar multiples of D. Throws std::invalid_argument
 * for a non-invariant claimed generator.
 */
generation_result check_generation(graded_ring const & R, graded_action const & g,
                                   std::vector<claimed_generator> const & gens, long max_weight, long max_denom);

/* every coefficient has denominator prime to p */
bool p_integrality(std::vector<polynomial> const & polys, long p);

/* d^k is divisible by n for some k <= max_power, in the ambient free ring */
std::optional<unsigned> divides_power(graded_ring const & R, polynomial const & n, polynomial const & d,
                                      unsigned max_power = 8);

/* ------------------------------------------------------------------------
 * Presentations of the three levels.
 */
struct level_ring {
    long level = 1;
    graded_ring ring;
    algebra_map tstar;
    algebra_map w;
    /* the discriminant Delta of the universal curve */
    polynomial delta;
    /* the w-invariant unit used for pieces */
    polynomial unit;
    std::vector<claimed_generator> claimed;
    graded_action action;
    long default_prime = 5;
};

/* c4, c6; t* the identity, w: c6 -> -c6, D = Delta */
level_ring level1_ring();
/* q2, q4 */
level_ring level2_ring();
/* A = a1^2, B = a1 a3, C = a3^2, with B^2 = A C */
level_ring level3_ring();
level_ring level_ring_for(long level);

/* level-1 ring with the order-n character and no involution */
graded_action level1_character_action(long n);
std::vector<claimed_generator> level1_character_generators(level_ring const & L, long n);

} // namespace tafverify

#endif
