#ifndef TAFVERIFY_WEIERSTRASS_HPP
#define TAFVERIFY_WEIERSTRASS_HPP

#include <array>
#include <vector>

#include "tafverify/graded.hpp"
#include "tafverify/rational.hpp"

namespace tafverify {

/* a1, a2, a3, a4, a6 as polynomials in a common ring */
struct weierstrass_coeffs {
    std::array<polynomial, 5> a;
};

struct curve_invariant_set {
    polynomial b2, b4, b6, b8, c4, c6, delta;
};

/*
 * Tate's b2..b8, c4, c6, Delta. Throws std::logic_error if 4 b8 = b2 b6 - b4^2
 * or c4^3 - c6^2 = 1728 Delta fails.
 */
curve_invariant_set curve_invariants(weierstrass_coeffs const & c);

/* a1..a6 as the free variables of Q[a1, a2, a3, a4, a6] */
weierstrass_coeffs generic_coeffs();

/* y^2 = x^3 + q2 x^2 + q4 x over Q[q2, q4] */
weierstrass_coeffs level2_curve();
/* y^2 + a1 x y + a3 y = x^3 over Q[a1, a3] */
weierstrass_coeffs level3_curve();

/* power series truncated mod q^precision */
class qseries {
    std::vector<integer> c_;

  public:
    explicit qseries(std::size_t precision) : c_(precision, 0) {}
    explicit qseries(std::vector<integer> c) : c_(std::move(c)) {}

    std::size_t precision() const { return c_.size(); }
    integer const & operator[](std::size_t i) const { return c_.at(i); }
    integer & operator[](std::size_t i) { return c_.at(i); }
    std::vector<integer> const & coefficients() const { return c_; }

    qseries operator+(qseries const & o) const;
    qseries operator-(qseries const & o) const;
    qseries operator*(qseries const & o) const;
    qseries operator*(integer const & s) const;
    /* exact division of every coefficient; throws std::domain_error otherwise */
    qseries divided_by(integer const & s) const;

    bool operator==(qseries const & o) const { return c_ == o.c_; }
};

integer divisor_sigma(long k, long n);

/* E4 = 1 + 240 sum sigma3(n) q^n, E6 = 1 - 504 sum sigma5(n) q^n */
qseries eisenstein(int k, std::size_t precision);

/* q prod (1 - q^n)^24 */
qseries delta_qseries(std::size_t precision);

/* (E4^3 - E6^2) / 1728 */
qseries delta_from_eisenstein(std::size_t precision);

} // namespace tafverify

#endif
