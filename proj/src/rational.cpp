#include "tafverify/rational.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace tafverify {

rational make_rational(integer const & num, integer const & den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    rational r(num, den);
    r.canonicalize();
    return r;
}

rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integral(rational const & x)
{
    return x.get_den() == 1;
}

bool is_p_integral(rational const & x, long p)
{
    return mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

std::string to_string(rational const & x)
{
    return x.get_str();
}

std::string to_string(integer const & x)
{
    return x.get_str();
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_squarefree(long n)
{
    if (n == 0)
        return false;
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0)
            return false;
    return true;
}

std::vector<long> prime_divisors(long n)
{
    std::vector<long> out;
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

long positive_mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

int kronecker(long a, long n)
{
    if (n <= 0)
        throw std::domain_error("kronecker: n must be positive");
    int result = 1;
    /* peel off factors of 2 in n */
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0)
            return 0;
        long r = positive_mod(a, 8);
        if (r == 3 || r == 5)
            result = -result;
    }
    /* Jacobi symbol (a/n), n odd */
    a = positive_mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

rat_matrix identity_matrix(std::size_t n)
{
    rat_matrix m(n, rat_vector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

rat_matrix multiply(rat_matrix const & a, rat_matrix const & b)
{
    if (a.empty() || b.empty())
        return {};
    if (a[0].size() != b.size())
        throw std::invalid_argument("matrix dimension mismatch");
    rat_matrix c(a.size(), rat_vector(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

rat_matrix transpose(rat_matrix const & a)
{
    if (a.empty())
        return {};
    rat_matrix t(a[0].size(), rat_vector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

rat_matrix inverse(rat_matrix const & a)
{
    std::size_t n = a.size();
    rat_matrix m = a;
    rat_matrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        rational s = 1 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            rational f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

rational determinant(rat_matrix const & a)
{
    std::size_t n = a.size();
    rat_matrix m = a;
    rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0)
                continue;
            rational f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

namespace {

/* in-place reduced row echelon form; returns pivot columns */
std::vector<std::size_t> rref(rat_matrix & m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[row]);
        rational s = 1 / m[row][col];
        for (std::size_t j = col; j < ncols; ++j)
            m[row][j] *= s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<rat_vector> kernel(rat_matrix const & a, std::size_t ncols)
{
    rat_matrix m = a;
    auto pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<rat_vector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        rat_vector v(ncols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(rat_matrix a)
{
    if (a.empty())
        return 0;
    return rref(a, a[0].size()).size();
}

} // namespace tafverify
