#include "tafverify/quadfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tafverify {

quad_field::quad_field(long n) : n_(n)
{
    if (n <= 0 || !is_squarefree(n))
        throw std::invalid_argument("quad_field: n must be a positive squarefree integer, got " + std::to_string(n));
    disc_ = positive_mod(-n, 4) == 1 ? -n : -4 * n;
}

int quad_field::ramified_prime_count() const
{
    return static_cast<int>(prime_divisors(disc_).size());
}

field_element::field_element(quad_field const & K, rational a, rational b)
    : n_(K.n()), a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
}

rat_vector field_element::coords() const
{
    if (positive_mod(-n_, 4) == 1)
        return {a_ - b_, 2 * b_};
    return {a_, b_};
}

field_element field_element::from_coords(quad_field const & K, rational x, rational y)
{
    if (K.half_integral_basis())
        return field_element(K, x + y / 2, y / 2);
    return field_element(K, std::move(x), std::move(y));
}

field_element field_element::conj() const
{
    field_element r = *this;
    r.b_ = -b_;
    return r;
}

static void check_same(long n1, long n2)
{
    if (n1 != n2)
        throw std::invalid_argument("field elements from different fields");
}

field_element field_element::operator+(field_element const & o) const
{
    check_same(n_, o.n_);
    field_element r = *this;
    r.a_ += o.a_;
    r.b_ += o.b_;
    return r;
}

field_element field_element::operator-(field_element const & o) const
{
    check_same(n_, o.n_);
    field_element r = *this;
    r.a_ -= o.a_;
    r.b_ -= o.b_;
    return r;
}

field_element field_element::operator-() const
{
    field_element r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

field_element field_element::operator*(field_element const & o) const
{
    check_same(n_, o.n_);
    field_element r = *this;
    r.a_ = a_ * o.a_ - n_ * b_ * o.b_;
    r.b_ = a_ * o.b_ + b_ * o.a_;
    return r;
}

field_element field_element::inverse() const
{
    rational nm = norm();
    if (nm == 0)
        throw std::domain_error("inverse of zero field element");
    field_element r = conj();
    r.a_ /= nm;
    r.b_ /= nm;
    return r;
}

field_element field_element::operator/(field_element const & o) const
{
    return *this * o.inverse();
}

std::string field_element::to_string() const
{
    std::ostringstream os;
    os << a_.get_str();
    if (b_ >= 0)
        os << "+";
    os << b_.get_str() << "*d";
    return os.str();
}

rational trace_pairing(field_element const & z, field_element const & w)
{
    return (z * w.conj()).trace();
}

/* ---------------------------------------------------------------------- */

static field_element omega(quad_field const & K)
{
    return field_element::from_coords(K, 0, 1);
}

frac_ideal frac_ideal::generated_by(quad_field const & K, std::vector<field_element> const & gens)
{
    field_element w = omega(K);
    std::vector<rat_vector> zgens;
    for (auto const & g : gens) {
        if (g.n() != K.n())
            throw std::invalid_argument("generator from a different field");
        zgens.push_back(g.coords());
        zgens.push_back((g * w).coords());
    }
    return frac_ideal(K, lattice::from_generators(zgens, 2));
}

frac_ideal frac_ideal::unit(quad_field const & K)
{
    return generated_by(K, {field_element(K, 1)});
}

frac_ideal frac_ideal::from_lattice(quad_field const & K, lattice L)
{
    if (L.dim() != 2)
        throw std::invalid_argument("fractional ideal needs a rank-2 lattice");
    frac_ideal I(K, std::move(L));
    field_element w = omega(K);
    for (auto const & z : I.basis())
        if (!I.contains(z * w))
            throw std::domain_error("lattice is not an O_F-module");
    return I;
}

std::vector<field_element> frac_ideal::basis() const
{
    std::vector<field_element> out;
    for (auto const & row : lat_.basis())
        out.push_back(field_element::from_coords(K_, row[0], row[1]));
    return out;
}

rational frac_ideal::norm() const
{
    return lat_.covolume();
}

bool frac_ideal::contains(field_element const & z) const
{
    return lat_.contains(z.coords());
}

frac_ideal frac_ideal::operator*(frac_ideal const & o) const
{
    if (!(K_ == o.K_))
        throw std::invalid_argument("ideals from different fields");
    std::vector<rat_vector> gens;
    for (auto const & x : basis())
        for (auto const & y : o.basis())
            gens.push_back((x * y).coords());
    return frac_ideal(K_, lattice::from_generators(gens, 2));
}

frac_ideal frac_ideal::scaled(field_element const & a) const
{
    if (a.is_zero())
        throw std::domain_error("scaling an ideal by zero");
    std::vector<rat_vector> gens;
    for (auto const & x : basis())
        gens.push_back((x * a).coords());
    return frac_ideal(K_, lattice::from_generators(gens, 2));
}

frac_ideal frac_ideal::conj() const
{
    std::vector<rat_vector> gens;
    for (auto const & x : basis())
        gens.push_back(x.conj().coords());
    return frac_ideal(K_, lattice::from_generators(gens, 2));
}

frac_ideal frac_ideal::inverse() const
{
    /* I * conj(I) = (Norm I) */
    return conj().scaled(field_element(K_, 1 / norm()));
}

std::string frac_ideal::to_string() const
{
    std::ostringstream os;
    os << "(";
    auto b = basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? ", " : "") << b[i].to_string();
    os << ")";
    return os.str();
}

/* ---------------------------------------------------------------------- */

std::string to_string(splitting s)
{
    switch (s) {
    case splitting::split:
        return "split";
    case splitting::inert:
        return "inert";
    case splitting::ramified:
        return "ramified";
    }
    return "?";
}

splitting split_prime(quad_field const & K, long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("split_prime: " + std::to_string(p) + " is not prime");
    long d = K.disc();
    if (d % p == 0)
        return splitting::ramified;
    if (p == 2)
        return positive_mod(d, 8) == 1 ? splitting::split : splitting::inert;
    return kronecker(d, p) == 1 ? splitting::split : splitting::inert;
}

frac_ideal different(quad_field const & K)
{
    /* sqrt(disc) is delta or 2 delta */
    rational s = K.half_integral_basis() ? 1 : 2;
    return frac_ideal::generated_by(K, {field_element(K, 0, s)});
}

frac_ideal trace_dual(frac_ideal const & I)
{
    quad_field const & K = I.field();
    field_element e0 = field_element::from_coords(K, 1, 0);
    field_element e1 = field_element::from_coords(K, 0, 1);
    rat_matrix gram = {
        {trace_pairing(e0, e0), trace_pairing(e0, e1)},
        {trace_pairing(e1, e0), trace_pairing(e1, e1)},
    };
    return frac_ideal::from_lattice(K, I.as_lattice().dual(gram));
}

/* ---------------------------------------------------------------------- */

bool binary_form::is_reduced() const
{
    if (a <= 0)
        return false;
    if (!(-a < b && b <= a && a <= c))
        return false;
    if (a == c && b < 0)
        return false;
    return true;
}

bool binary_form::is_ambiguous() const
{
    return b == 0 || b == a || a == c;
}

binary_form binary_form::reduced() const
{
    if (a <= 0 || disc() >= 0)
        throw std::domain_error("reduction needs a positive definite form");
    binary_form f = *this;
    for (;;) {
        if (f.b <= -f.a || f.b > f.a) {
            integer k;
            integer num = f.a - f.b;
            integer den = 2 * f.a;
            mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            f.c = f.c + f.b * k + f.a * k * k;
            f.b = f.b + 2 * f.a * k;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        return f;
    }
}

std::vector<binary_form> reduced_forms(long d)
{
    if (d >= 0 || positive_mod(d, 4) > 1)
        throw std::invalid_argument("reduced_forms: need a negative discriminant = 0,1 mod 4");
    std::vector<binary_form> out;
    for (long a = 1; 3 * a * a <= -d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (positive_mod(b - d, 2) != 0)
                continue;
            long num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a || (a == c && b < 0))
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

frac_ideal form_to_ideal(quad_field const & K, binary_form const & f)
{
    if (f.disc() != K.disc())
        throw std::invalid_argument("form discriminant does not match the field");
    rational s = K.half_integral_basis() ? 1 : 2;
    field_element alpha(K, rational(f.a));
    field_element beta(K, make_rational(integer(-f.b), integer(2)), s / 2);
    std::vector<rat_vector> gens = {alpha.coords(), beta.coords()};
    return frac_ideal::from_lattice(K, lattice::from_generators(gens, 2));
}

binary_form ideal_to_form(frac_ideal const & I)
{
    auto b = I.basis();
    field_element alpha = b[0], beta = b[1];
    if ((beta * alpha.conj()).b() < 0)
        std::swap(alpha, beta);
    rational nm = I.norm();
    rational fa = alpha.norm() / nm;
    rational fb = -trace_pairing(alpha, beta) / nm;
    rational fc = beta.norm() / nm;
    if (!is_integral(fa) || !is_integral(fb) || !is_integral(fc))
        throw std::logic_error("ideal norm form is not integral");
    binary_form f{fa.get_num(), fb.get_num(), fc.get_num()};
    return f.reduced();
}

std::size_t class_group_data::class_of(frac_ideal const & I) const
{
    binary_form f = ideal_to_form(I);
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (forms[i] == f)
            return i;
    throw std::logic_error("ideal class not found among reduced forms");
}

class_group_data class_group(quad_field const & K)
{
    class_group_data G{K, reduced_forms(K.disc()), {}, 0};
    for (auto const & f : G.forms) {
        G.representatives.push_back(form_to_ideal(K, f));
        if (f.is_ambiguous())
            ++G.ambiguous_count;
    }
    return G;
}

/* ---------------------------------------------------------------------- */

namespace {

int p_valuation(integer x, long p)
{
    int v = 0;
    if (x == 0)
        return 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
        x /= p;
        ++v;
    }
    return v;
}

/* lattice points of the square shell max(|x|,|y|) = r, in a fixed order */
std::vector<std::pair<long, long>> shell(long r)
{
    std::vector<std::pair<long, long>> pts;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
            if (std::max(std::labs(x), std::labs(y)) == r)
                pts.emplace_back(x, y);
    std::stable_sort(pts.begin(), pts.end(), [](auto const & u, auto const & v) {
        long nu = u.first * u.first + u.second * u.second;
        long nv = v.first * v.first + v.second * v.second;
        return nu < nv;
    });
    return pts;
}

} // namespace

lemma_representative_result lemma_representative(quad_field const & K, std::size_t class_index, long p)
{
    if (split_prime(K, p) != splitting::split)
        throw std::invalid_argument("lemma_representative: p = " + std::to_string(p) + " does not split");
    class_group_data G = class_group(K);
    if (class_index >= G.h())
        throw std::out_of_range("lemma_representative: class index out of range");
    frac_ideal const & base = G.representatives[class_index];
    int kmax = p_valuation(base.norm().get_num(), p);
    long cap = 10 * K.n();
    integer pk = 1;
    for (long r = 1; r <= cap; ++r) {
        for (int k = 0; k <= kmax; ++k) {
            mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
            for (auto [x, y] : shell(r)) {
                field_element b = field_element::from_coords(K, x, y);
                field_element a = b * field_element(K, rational(1) / rational(pk));
                frac_ideal I = base.scaled(a);
                if (!I.as_lattice().is_p_locally_standard(p))
                    continue;
                frac_ideal D = trace_dual(I);
                if (!D.as_lattice().is_p_locally_standard(p))
                    continue;
                if (!D.contains(I))
                    continue;
                return {I, a, static_cast<int>(r), true, true, I == D};
            }
        }
    }
    throw std::runtime_error("lemma_representative: search cap " + std::to_string(cap) + " reached for n = " +
                             std::to_string(K.n()) + ", class " + std::to_string(class_index));
}

} // namespace tafverify
