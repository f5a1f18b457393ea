#include "tafverify/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace tafverify {

int_matrix hermite_normal_form(int_matrix rows, std::size_t n)
{
    int_matrix out;
    std::size_t r0 = 0;
    for (std::size_t col = 0; col < n; ++col) {
        /* gcd-combine every remaining row into row r0 at this column */
        for (std::size_t i = r0 + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            integer a = rows[r0][col], b = rows[i][col];
            integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            integer ag = a / g, bg = b / g;
            for (std::size_t j = col; j < n; ++j) {
                integer x = rows[r0][j], y = rows[i][j];
                rows[r0][j] = s * x + t * y;
                rows[i][j] = ag * y - bg * x;
            }
        }
        if (r0 >= rows.size() || rows[r0][col] == 0)
            throw std::domain_error("lattice generators are not of full rank");
        if (rows[r0][col] < 0)
            for (std::size_t j = col; j < n; ++j)
                rows[r0][j] = -rows[r0][j];
        ++r0;
    }
    out.assign(rows.begin(), rows.begin() + static_cast<long>(n));
    /* reduce entries above pivots */
    for (std::size_t col = 0; col < n; ++col) {
        integer const piv = out[col][col];
        for (std::size_t i = 0; i < col; ++i) {
            integer q;
            mpz_fdiv_q(q.get_mpz_t(), out[i][col].get_mpz_t(), piv.get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                out[i][j] -= q * out[col][j];
        }
    }
    return out;
}

lattice lattice::from_generators(std::vector<rat_vector> const & gens, std::size_t n)
{
    if (gens.size() < n)
        throw std::domain_error("lattice needs at least n generators");
    integer d = 1;
    for (auto const & g : gens) {
        if (g.size() != n)
            throw std::invalid_argument("generator has wrong length");
        for (auto const & x : g)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    }
    int_matrix rows;
    rows.reserve(gens.size());
    for (auto const & g : gens) {
        std::vector<integer> row(n);
        for (std::size_t j = 0; j < n; ++j) {
            rational v = g[j] * d;
            row[j] = v.get_num();
        }
        rows.push_back(std::move(row));
    }
    int_matrix h = hermite_normal_form(std::move(rows), n);
    /* shrink the denominator to the least one: divide out content shared with d */
    integer c = d;
    for (auto const & row : h)
        for (auto const & x : row)
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    lattice L;
    L.dim_ = n;
    if (c != 1) {
        for (auto & row : h)
            for (auto & x : row)
                x /= c;
        d /= c;
    }
    L.denom_ = d;
    L.hnf_ = std::move(h);
    return L;
}

rat_matrix lattice::basis() const
{
    rat_matrix b(dim_, rat_vector(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            b[i][j] = make_rational(hnf_[i][j], denom_);
            b[i][j].canonicalize();
        }
    return b;
}

rational lattice::covolume() const
{
    rational det = 1;
    for (std::size_t i = 0; i < dim_; ++i)
        det *= make_rational(hnf_[i][i], denom_);
    det.canonicalize();
    return det;
}

bool lattice::contains(rat_vector const & v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("vector has wrong length");
    /* back-substitute in the upper-triangular basis */
    rat_vector rest = v;
    rat_matrix b = basis();
    for (std::size_t col = 0; col < dim_; ++col) {
        rational coef = rest[col] / b[col][col];
        if (!is_integral(coef))
            return false;
        if (coef == 0)
            continue;
        for (std::size_t j = col; j < dim_; ++j)
            rest[j] -= coef * b[col][j];
    }
    return true;
}

bool lattice::contains(lattice const & other) const
{
    for (auto const & row : other.basis())
        if (!contains(row))
            return false;
    return true;
}

lattice lattice::scaled(rational const & s) const
{
    if (s == 0)
        throw std::domain_error("scaling a lattice by zero");
    auto b = basis();
    for (auto & row : b)
        for (auto & x : row)
            x *= s;
    return from_generators(b, dim_);
}

lattice lattice::sum(lattice const & other) const
{
    auto b = basis();
    auto o = other.basis();
    b.insert(b.end(), o.begin(), o.end());
    return from_generators(b, dim_);
}

lattice lattice::dual(rat_matrix const & gram) const
{
    /* x G B^T in Z^n  <=>  x = z (G B^T)^{-1} */
    rat_matrix gb = multiply(gram, transpose(basis()));
    rat_matrix x = inverse(gb);
    return from_generators(x, dim_);
}

bool lattice::is_p_locally_standard(long p) const
{
    auto b = basis();
    for (auto const & row : b)
        for (auto const & x : row)
            if (!is_p_integral(x, p))
                return false;
    rational det = covolume();
    return is_p_integral(det, p) && is_p_integral(1 / det, p);
}

std::string lattice::to_string() const
{
    std::ostringstream os;
    os << "1/" << denom_.get_str() << " * [";
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < dim_; ++j)
            os << (j ? ", " : "") << hnf_[i][j].get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace tafverify
