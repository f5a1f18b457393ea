#include "tafverify/isogeny.hpp"

#include <sstream>
#include <stdexcept>

namespace tafverify {

std::string to_string(formal_object o)
{
    return o == formal_object::E ? "E" : "Ebar";
}

formal_hom::formal_hom(long n, formal_object src, formal_object dst, rational coeff)
    : n_(n), src_(src), dst_(dst), coeff_(std::move(coeff))
{
    if (n <= 0)
        throw std::invalid_argument("formal_hom: isogeny degree must be positive");
    coeff_.canonicalize();
}

std::string formal_hom::carrier() const
{
    if (src_ == dst_)
        return src_ == formal_object::E ? "id_E" : "id_Ebar";
    return src_ == formal_object::E ? "q" : "q^v";
}

formal_hom formal_hom::after(formal_hom const & other) const
{
    if (other.n_ != n_)
        throw std::invalid_argument("composing homs for different isogenies");
    if (other.dst_ != src_)
        throw std::invalid_argument("composition: objects do not match");
    rational c = coeff_ * other.coeff_;
    /* q^v q and q q^v are multiplication by n */
    if (is_isogeny_type() && other.is_isogeny_type())
        c *= n_;
    return {n_, other.src_, dst_, c};
}

formal_hom formal_hom::operator+(formal_hom const & o) const
{
    if (o.n_ != n_ || o.src_ != src_ || o.dst_ != dst_)
        throw std::invalid_argument("adding homs with different carriers");
    return {n_, src_, dst_, coeff_ + o.coeff_};
}

formal_hom formal_hom::operator-() const
{
    return {n_, src_, dst_, -coeff_};
}

formal_hom formal_hom::scaled(rational const & s) const
{
    return {n_, src_, dst_, coeff_ * s};
}

formal_hom formal_hom::dual() const
{
    return {n_, dst_, src_, coeff_};
}

rational formal_hom::degree() const
{
    return dual().after(*this).coeff();
}

std::string formal_hom::to_string() const
{
    return coeff_.get_str() + "*" + carrier();
}

/* ---------------------------------------------------------------------- */

formal_matrix::formal_matrix(long n, std::vector<formal_object> rows, std::vector<formal_object> cols)
    : n_(n), rows_(std::move(rows)), cols_(std::move(cols)),
      coeff_(rows_.size(), std::vector<rational>(cols_.size(), 0))
{
    if (n <= 0)
        throw std::invalid_argument("formal_matrix: isogeny degree must be positive");
}

formal_matrix formal_matrix::end_e_ebar(long n, std::vector<std::vector<rational>> const & coeffs)
{
    formal_matrix m(n, {formal_object::E, formal_object::Ebar}, {formal_object::E, formal_object::Ebar});
    if (coeffs.size() != 2 || coeffs[0].size() != 2 || coeffs[1].size() != 2)
        throw std::invalid_argument("end_e_ebar needs a 2x2 coefficient array");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m.coeff_[i][j] = coeffs[i][j];
            m.coeff_[i][j].canonicalize();
        }
    return m;
}

formal_matrix formal_matrix::identity(long n)
{
    return end_e_ebar(n, {{1, 0}, {0, 1}});
}

formal_matrix formal_matrix::zero(long n)
{
    return end_e_ebar(n, {{0, 0}, {0, 0}});
}

formal_hom formal_matrix::entry(std::size_t i, std::size_t j) const
{
    return {n_, cols_.at(j), rows_.at(i), coeff_[i][j]};
}

void formal_matrix::set(std::size_t i, std::size_t j, formal_hom const & h)
{
    if (h.n() != n_ || h.source() != cols_.at(j) || h.target() != rows_.at(i))
        throw std::invalid_argument("entry does not fit the row/column objects");
    coeff_[i][j] = h.coeff();
}

formal_matrix formal_matrix::operator*(formal_matrix const & o) const
{
    if (o.n_ != n_ || cols_ != o.rows_)
        throw std::invalid_argument("formal matrix product: objects do not match");
    formal_matrix r(n_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t k = 0; k < o.cols_.size(); ++k) {
            formal_hom acc(n_, o.cols_[k], rows_[i], 0);
            for (std::size_t j = 0; j < cols_.size(); ++j)
                acc = acc + entry(i, j).after(o.entry(j, k));
            r.coeff_[i][k] = acc.coeff();
        }
    return r;
}

formal_matrix formal_matrix::operator+(formal_matrix const & o) const
{
    if (o.n_ != n_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("formal matrix sum: objects do not match");
    formal_matrix r = *this;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_.size(); ++j)
            r.coeff_[i][j] += o.coeff_[i][j];
    return r;
}

formal_matrix formal_matrix::operator-(formal_matrix const & o) const
{
    return *this + o.scaled(-1);
}

formal_matrix formal_matrix::scaled(rational const & s) const
{
    formal_matrix r = *this;
    for (auto & row : r.coeff_)
        for (auto & c : row)
            c *= s;
    return r;
}

bool formal_matrix::is_zero() const
{
    for (auto const & row : coeff_)
        for (auto const & c : row)
            if (c != 0)
                return false;
    return true;
}

std::string formal_matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < cols_.size(); ++j)
            os << (j ? ", " : "") << entry(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

formal_matrix dagger(formal_matrix const & m)
{
    formal_matrix r(m.n(), m.col_objects(), m.row_objects());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j)
            r.set(j, i, m.entry(i, j).dual());
    return r;
}

/* ---------------------------------------------------------------------- */

namespace {

formal_matrix cm_x(long n)
{
    return formal_matrix::end_e_ebar(n, {{0, -1}, {1, 0}});
}

bool satisfies_case2_relations(formal_matrix const & y, formal_matrix const & a)
{
    long n = y.n();
    formal_matrix id = formal_matrix::identity(n);
    bool minpoly = (y * y + y + id.scaled(make_rational(n + 1, 4))).is_zero();
    bool conj = dagger(y) * a == a * (id.scaled(-1) - y);
    return minpoly && conj;
}

} // namespace

cm_case1_result cm_case1(long n)
{
    long r = positive_mod(n, 4);
    if (r != 1 && r != 2)
        throw std::invalid_argument("cm_case1 needs -n = 2,3 mod 4, got n = " + std::to_string(n));
    cm_case1_result res{cm_x(n)};
    formal_matrix id = formal_matrix::identity(n);
    res.square_is_minus_n = res.x * res.x == id.scaled(-n);
    res.dagger_is_minus_x = dagger(res.x) == res.x.scaled(-1);
    return res;
}

formal_matrix case2_isomorphism(long n)
{
    return formal_matrix::end_e_ebar(n, {{2, 0}, {-1, 1}});
}

cm_case2_result cm_case2(long n)
{
    if (positive_mod(n, 4) != 3)
        throw std::invalid_argument("cm_case2 needs -n = 1 mod 4, got n = " + std::to_string(n));
    cm_case2_result res;
    rational np1(n + 1), nm1(n - 1);
    res.y = formal_matrix::end_e_ebar(n, {{-np1 / 2, -1}, {np1 / 4, nm1 / 2}});
    res.a = formal_matrix::end_e_ebar(n, {{np1 / 2, 1}, {1, 2}});

    formal_matrix p = case2_isomorphism(n);
    formal_matrix p_inv = formal_matrix::end_e_ebar(n, {{rational(1, 2), 0}, {rational(1, 2), 1}});
    formal_matrix id = formal_matrix::identity(n);
    if (!(p * p_inv == id) || !(p_inv * p == id))
        throw std::logic_error("case2 isomorphism inverse is wrong");
    formal_matrix half_root = (id.scaled(-1) + cm_x(n)).scaled(rational(1, 2));
    res.y_transported = p * half_root * p_inv;
    res.y_matches_transport = res.y_transported == res.y;

    res.minimal_polynomial = (res.y * res.y + res.y + id.scaled(np1 / 4)).is_zero();
    res.conjugate_commutes = dagger(res.y) * res.a == res.a * (id.scaled(-1) - res.y);
    res.a_symmetric = dagger(res.a) == res.a;

    formal_matrix printed = formal_matrix::end_e_ebar(n, {{-np1 / 2, 1}, {np1 / 4, nm1 / 2}});
    res.printed_sign_satisfies_relations = satisfies_case2_relations(printed, res.a);
    return res;
}

binary_quadratic induced_form(formal_matrix const & polarization)
{
    long n = polarization.n();
    std::vector<formal_object> both = {formal_object::E, formal_object::Ebar};
    if (polarization.row_objects() != both || polarization.col_objects() != both)
        throw std::invalid_argument("polarization must be an endomorphism of E x Ebar");
    auto value = [&](rational c1, rational c2) {
        formal_matrix v(n, both, {formal_object::E});
        v.set(0, 0, formal_hom::id(n, formal_object::E, c1));
        v.set(1, 0, formal_hom::q(n, c2));
        formal_matrix s = dagger(v) * polarization * v;
        return s.entry(0, 0).coeff();
    };
    binary_quadratic f;
    f.alpha = value(1, 0);
    f.gamma = value(0, 1);
    f.beta = value(1, 1) - f.alpha - f.gamma;
    return f;
}

binary_quadratic check_positivity(formal_matrix const & polarization)
{
    binary_quadratic f = induced_form(polarization);
    if (!f.positive_definite())
        throw std::domain_error("polarization is not positive definite");
    return f;
}

binary_quadratic polarization_positivity(long n)
{
    return check_positivity(cm_case2(n).a);
}

/* ---------------------------------------------------------------------- */

automorphism_enumeration enumerate_automorphisms(long n)
{
    if (!is_squarefree(n) || n <= 0)
        throw std::invalid_argument("enumerate_automorphisms: n must be positive squarefree");
    bool half = positive_mod(n, 4) == 3;
    long scale = half ? 2 : 1;
    long target = scale * scale;
    automorphism_enumeration out;
    formal_matrix x = cm_x(n);
    formal_matrix id = formal_matrix::identity(n);
    for (long A = -scale; A <= scale; ++A)
        for (long B = -scale; B <= scale; ++B) {
            if (A * A + n * B * B != target)
                continue;
            rational a(A, scale), b(B, scale);
            a.canonicalize();
            b.canonicalize();
            formal_matrix f = formal_matrix::end_e_ebar(n, {{a, b}, {-b, a}});
            if (!(f * x == x * f) || !(dagger(f) * f == id))
                throw std::logic_error("enumerated automorphism fails its defining identities");
            out.solutions.emplace_back(a, b);
        }
    out.order = static_cast<long>(out.solutions.size()) * out.elliptic_automorphisms / 2;
    return out;
}

long automorphism_group_order(long n)
{
    return enumerate_automorphisms(n).order;
}

std::map<std::pair<long, long>, long> case2_degree_branches(long n)
{
    if (positive_mod(n, 4) != 3)
        throw std::invalid_argument("case2_degree_branches needs n = 3 mod 4");
    std::map<std::pair<long, long>, long> out;
    for (long deg_alpha = 0; deg_alpha <= 4; ++deg_alpha)
        out[{deg_alpha, 4 - deg_alpha}] = 0;
    /* 2a = A, 2b = B integers; deg(2 alpha) = A^2, deg(2 q beta) = n B^2 */
    for (long A = -2; A <= 2; ++A)
        for (long B = -2; B <= 2; ++B)
            if (A * A + n * B * B == 4)
                ++out[{A * A, n * B * B}];
    return out;
}

long unit_group_order(quad_field const & K)
{
    /* Norm(x + y omega) >= y^2 n / 4, so |y| <= 2 and then |x| <= 2 */
    long count = 0;
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            if (field_element::from_coords(K, x, y).norm() == 1)
                ++count;
    return count;
}

long tensor_automorphism_order(long aut_e, quad_field const & K)
{
    if (aut_e <= 0 || aut_e % 2 != 0)
        throw std::invalid_argument("tensor_automorphism_order: Aut(E) must have even order");
    return aut_e * unit_group_order(K) / 2;
}

} // namespace tafverify
