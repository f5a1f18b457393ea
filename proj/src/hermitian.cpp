#include "tafverify/hermitian.hpp"

namespace tafverify {

f_matrix f_matrix::identity(quad_field const & K)
{
    return scalar(field_element(K, 1));
}

f_matrix f_matrix::scalar(field_element const & z)
{
    field_element zero = z - z;
    return {{{{z, zero}, {zero, z}}}};
}

f_matrix f_matrix::operator*(f_matrix const & o) const
{
    f_matrix r = *this;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

herm_vector f_matrix::operator*(herm_vector const & v) const
{
    return {m[0][0] * v.x1 + m[0][1] * v.x2, m[1][0] * v.x1 + m[1][1] * v.x2};
}

rational pairing(herm_vector const & v, herm_vector const & w)
{
    return (v.x2 * w.x1.conj() - v.x1 * w.x2.conj()).trace();
}

f_matrix iota(f_matrix const & g)
{
    /* conjugate of the symplectic adjoint [[d,-b],[-c,a]] */
    f_matrix r = g;
    r.m[0][0] = g.m[1][1].conj();
    r.m[0][1] = -g.m[0][1].conj();
    r.m[1][0] = -g.m[1][0].conj();
    r.m[1][1] = g.m[0][0].conj();
    return r;
}

rational similitude_norm(f_matrix const & g)
{
    f_matrix p = iota(g) * g;
    if (!p.m[0][1].is_zero() || !p.m[1][0].is_zero() || p.m[0][0] != p.m[1][1])
        throw not_a_similitude("iota(g) g is not scalar");
    if (!p.m[0][0].is_rational() || p.m[0][0].is_zero())
        throw not_a_similitude("iota(g) g is not a nonzero rational scalar");
    return p.m[0][0].a();
}

/* ---------------------------------------------------------------------- */

static rat_vector flatten(herm_vector const & v)
{
    auto c1 = v.x1.coords();
    auto c2 = v.x2.coords();
    return {c1[0], c1[1], c2[0], c2[1]};
}

static herm_vector unflatten(quad_field const & K, rat_vector const & c)
{
    return {field_element::from_coords(K, c[0], c[1]), field_element::from_coords(K, c[2], c[3])};
}

of_lattice of_lattice::from_generators(quad_field const & K, std::vector<herm_vector> const & gens)
{
    std::vector<rat_vector> rows;
    for (auto const & g : gens)
        rows.push_back(flatten(g));
    of_lattice L(K, lattice::from_generators(rows, 4));
    field_element w = field_element::from_coords(K, 0, 1);
    for (auto const & b : L.basis())
        if (!L.lat_.contains(flatten({w * b.x1, w * b.x2})))
            throw std::domain_error("lattice is not an O_F-module");
    return L;
}

of_lattice of_lattice::direct_sum(frac_ideal const & first, frac_ideal const & second)
{
    quad_field const & K = first.field();
    field_element zero(K, 0);
    std::vector<herm_vector> gens;
    for (auto const & z : first.basis())
        gens.push_back({z, zero});
    for (auto const & z : second.basis())
        gens.push_back({zero, z});
    return from_generators(K, gens);
}

std::vector<herm_vector> of_lattice::basis() const
{
    std::vector<herm_vector> out;
    for (auto const & row : lat_.basis())
        out.push_back(unflatten(K_, row));
    return out;
}

rat_matrix pairing_gram(quad_field const & K)
{
    rat_matrix gram(4, rat_vector(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            rat_vector ei(4, 0), ej(4, 0);
            ei[i] = 1;
            ej[j] = 1;
            gram[i][j] = pairing(unflatten(K, ei), unflatten(K, ej));
        }
    return gram;
}

of_lattice dual_lattice(of_lattice const & L)
{
    quad_field const & K = L.field();
    lattice D = L.as_lattice().dual(pairing_gram(K));
    std::vector<herm_vector> gens;
    for (auto const & row : D.basis())
        gens.push_back(unflatten(K, row));
    return of_lattice::from_generators(K, gens);
}

of_lattice self_dual_lattice(quad_field const & K)
{
    return of_lattice::direct_sum(frac_ideal::unit(K), different(K).inverse());
}

/* ---------------------------------------------------------------------- */

class_number_gu_result class_number_gu(quad_field const & K)
{
    class_number_gu_result r;
    class_group_data G = class_group(K);
    r.u = K.ramified_prime_count();
    r.h_f = G.h();
    r.ambiguous_forms = G.ambiguous_count;
    long genus = 1L << (r.u - 1);
    if (static_cast<long>(r.ambiguous_forms) != genus)
        throw std::logic_error("ambiguous form count differs from 2^{u-1}");
    if (static_cast<long>(r.h_f) % genus != 0)
        throw std::logic_error("h(F)/2^{u-1} is not integral");
    r.index_c_c0 = static_cast<long>(r.h_f) / genus;
    /* every imaginary quadratic unit group has |O^x/(O^x)^2| = 2 */
    long units_mod_squares = 2;
    r.index_e_f = (1L << r.u) / units_mod_squares;
    long h_q = 1;
    r.h_gu = h_q * r.index_c_c0 * r.index_e_f;
    r.h_gu_literal = h_q * r.index_c_c0 * r.index_e_f_literal;
    return r;
}

} // namespace tafverify
