#ifndef TAFVERIFY_RATIONAL_HPP
#define TAFVERIFY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tafverify {

using integer = mpz_class;
using rational = mpq_class;

/* dense row-major matrices; small sizes only (at most a few dozen rows) */
using int_matrix = std::vector<std::vector<integer>>;
using rat_matrix = std::vector<std::vector<rational>>;
using rat_vector = std::vector<rational>;

rational make_rational(long num, long den = 1);
rational make_rational(integer const & num, integer const & den);

bool is_integral(rational const & x);

/* denominator prime to p */
bool is_p_integral(rational const & x, long p);

std::string to_string(rational const & x);
std::string to_string(integer const & x);

bool is_prime(long n);
bool is_squarefree(long n);

/* distinct prime divisors of |n| in increasing order */
std::vector<long> prime_divisors(long n);

/* Kronecker symbol (a/n) for n > 0 */
int kronecker(long a, long n);

long positive_mod(long a, long m);

rat_matrix identity_matrix(std::size_t n);
rat_matrix multiply(rat_matrix const & a, rat_matrix const & b);
rat_matrix transpose(rat_matrix const & a);

/* throws std::domain_error when singular */
rat_matrix inverse(rat_matrix const & a);
rational determinant(rat_matrix const & a);

/*
 * Basis of the right kernel {x : a x = 0}, one vector per row of the
 * result, in reduced echelon style (free variables set to unit vectors).
 */
std::vector<rat_vector> kernel(rat_matrix const & a, std::size_t ncols);

std::size_t rank(rat_matrix a);

} // namespace tafverify

#endif
