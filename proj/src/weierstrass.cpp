#include "tafverify/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

namespace tafverify {

curve_invariant_set curve_invariants(weierstrass_coeffs const & c)
{
    auto const & [a1, a2, a3, a4, a6] = c.a;
    curve_invariant_set r;
    r.b2 = a1 * a1 + a2 * rational(4);
    r.b4 = a4 * rational(2) + a1 * a3;
    r.b6 = a3 * a3 + a6 * rational(4);
    r.b8 = a1 * a1 * a6 + a2 * a6 * rational(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - r.b4 * rational(24);
    r.c6 = -(r.b2.pow(3)) + r.b2 * r.b4 * rational(36) - r.b6 * rational(216);
    r.delta = -(r.b2 * r.b2 * r.b8) - r.b4.pow(3) * rational(8) - r.b6 * r.b6 * rational(27) +
              r.b2 * r.b4 * r.b6 * rational(9);
    if (r.b8 * rational(4) != r.b2 * r.b6 - r.b4 * r.b4)
        throw std::logic_error("4 b8 != b2 b6 - b4^2");
    if (r.c4.pow(3) - r.c6.pow(2) != r.delta * rational(1728))
        throw std::logic_error("c4^3 - c6^2 != 1728 Delta");
    return r;
}

weierstrass_coeffs generic_coeffs()
{
    weierstrass_coeffs c;
    for (std::size_t i = 0; i < 5; ++i)
        c.a[i] = polynomial::variable(5, i);
    return c;
}

weierstrass_coeffs level2_curve()
{
    polynomial zero(2);
    return {{zero, polynomial::variable(2, 0), zero, polynomial::variable(2, 1), zero}};
}

weierstrass_coeffs level3_curve()
{
    polynomial zero(2);
    return {{polynomial::variable(2, 0), zero, polynomial::variable(2, 1), zero, zero}};
}

/* ---------------------------------------------------------------------- */

qseries qseries::operator+(qseries const & o) const
{
    qseries r(std::min(precision(), o.precision()));
    for (std::size_t i = 0; i < r.precision(); ++i)
        r[i] = c_[i] + o.c_[i];
    return r;
}

qseries qseries::operator-(qseries const & o) const
{
    qseries r(std::min(precision(), o.precision()));
    for (std::size_t i = 0; i < r.precision(); ++i)
        r[i] = c_[i] - o.c_[i];
    return r;
}

qseries qseries::operator*(qseries const & o) const
{
    std::size_t n = std::min(precision(), o.precision());
    qseries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

qseries qseries::operator*(integer const & s) const
{
    qseries r = *this;
    for (auto & x : r.c_)
        x *= s;
    return r;
}

qseries qseries::divided_by(integer const & s) const
{
    qseries r = *this;
    for (auto & x : r.c_) {
        if (!mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t()))
            throw std::domain_error("q-series coefficient not divisible by " + s.get_str());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    }
    return r;
}

integer divisor_sigma(long k, long n)
{
    integer s = 0, t;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        mpz_ui_pow_ui(t.get_mpz_t(), d, k);
        s += t;
        if (d * d != n) {
            mpz_ui_pow_ui(t.get_mpz_t(), n / d, k);
            s += t;
        }
    }
    return s;
}

qseries eisenstein(int k, std::size_t precision)
{
    if (precision < 1)
        throw std::invalid_argument("eisenstein: precision must be at least 1");
    long scale;
    if (k == 4)
        scale = 240;
    else if (k == 6)
        scale = -504;
    else
        throw std::invalid_argument("eisenstein: weight must be 4 or 6");
    qseries e(precision);
    e[0] = 1;
    for (std::size_t n = 1; n < precision; ++n)
        e[n] = divisor_sigma(k - 1, static_cast<long>(n)) * scale;
    return e;
}

qseries delta_qseries(std::size_t precision)
{
    if (precision < 1)
        throw std::invalid_argument("delta_qseries: precision must be at least 1");
    /* prod (1 - q^n)^24 mod q^(precision - 1), then shift by q */
    std::vector<integer> p(precision, 0);
    p[0] = 1;
    for (std::size_t n = 1; n < precision; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (std::size_t i = precision - 1; i >= n; --i)
                p[i] -= p[i - n];
    qseries d(precision);
    for (std::size_t i = 1; i < precision; ++i)
        d[i] = p[i - 1];
    return d;
}

qseries delta_from_eisenstein(std::size_t precision)
{
    qseries e4 = eisenstein(4, precision), e6 = eisenstein(6, precision);
    return (e4 * e4 * e4 - e6 * e6).divided_by(1728);
}

} // namespace tafverify
