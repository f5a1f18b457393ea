#include "tafverify/hondatate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tafverify {

namespace {

long quad_disc(long d)
{
    /* discriminant of Q(sqrt(d)), d squarefree */
    return positive_mod(d, 4) == 1 ? d : 4 * d;
}

long real_radicand(long n, long m)
{
    long g = std::gcd(n, m);
    return (n / g) * (m / g);
}

void require(bool ok, std::string const & what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

cm_field cm_field::im_quad(long k)
{
    require(k > 0 && is_squarefree(k), "im_quad: k must be positive squarefree");
    return {cm_shape::im_quad, k, 0};
}

cm_field cm_field::biquad(long n, long m)
{
    require(n > 0 && is_squarefree(n) && m > 0 && is_squarefree(m), "biquad: n, m must be positive squarefree");
    require(n != m, "biquad: n and m must differ");
    return {cm_shape::biquad, n, m};
}

int cm_field::degree() const
{
    switch (shape) {
    case cm_shape::rationals:
        return 1;
    case cm_shape::im_quad:
    case cm_shape::real_quad:
        return 2;
    case cm_shape::biquad:
        return 4;
    }
    return 0;
}

std::string cm_field::name() const
{
    switch (shape) {
    case cm_shape::rationals:
        return "Q";
    case cm_shape::im_quad:
        return "Q(sqrt(-" + std::to_string(n) + "))";
    case cm_shape::real_quad:
        return "Q(sqrt(" + std::to_string(n) + "))";
    case cm_shape::biquad:
        return "Q(sqrt(-" + std::to_string(n) + "),sqrt(-" + std::to_string(m) + "))";
    }
    return "?";
}

place const & padic_type::at(std::string const & id) const
{
    for (auto const & x : places)
        if (x.id == id)
            return x;
    throw std::out_of_range("no place " + id);
}

rational & padic_type::eta(std::string const & id)
{
    for (auto & x : places)
        if (x.id == id)
            return x.eta;
    throw std::out_of_range("no place " + id);
}

rational const & padic_type::eta(std::string const & id) const
{
    return at(id).eta;
}

bool splits_completely(long n, long m, long p)
{
    long dn = quad_disc(-n), dm = quad_disc(-m), dr = quad_disc(real_radicand(n, m));
    int kn = kronecker(dn, p), km = kronecker(dm, p), kr = kronecker(dr, p);
    /* the quadratic characters multiply: chi_{-n} chi_{-m} = chi_{nm} away from ramification */
    if (kn != 0 && km != 0 && kr != 0 && kn * km != kr)
        throw std::logic_error("quadratic character product rule failed");
    return kn == 1 && km == 1 && kr == 1;
}

padic_type places_over(cm_field const & field, long p)
{
    require(is_prime(p), "places_over: p must be prime");
    padic_type t{field, p, {}, {}};
    auto quad = [&](long disc, bool imaginary) {
        int k = kronecker(disc, p);
        if (k == 1) {
            t.places = {{"u", 1, 1, 0}, {"ub", 1, 1, 0}};
            if (imaginary)
                t.conj = {{"u", "ub"}, {"ub", "u"}};
            else
                t.conj = {{"u", "u"}, {"ub", "ub"}};
        } else if (k == -1) {
            t.places = {{"u", 1, 2, 0}};
            t.conj = {{"u", "u"}};
        } else {
            t.places = {{"u", 2, 1, 0}};
            t.conj = {{"u", "u"}};
        }
    };
    switch (field.shape) {
    case cm_shape::rationals:
        t.places = {{"p", 1, 1, 0}};
        t.conj = {{"p", "p"}};
        break;
    case cm_shape::im_quad:
        quad(quad_disc(-field.n), true);
        break;
    case cm_shape::real_quad:
        quad(quad_disc(field.n), false);
        break;
    case cm_shape::biquad:
        require(splits_completely(field.n, field.m, p),
                "places_over: p must split completely in " + field.name());
        t.places = {{"v", 1, 1, 0}, {"cv", 1, 1, 0}, {"sv", 1, 1, 0}, {"scv", 1, 1, 0}};
        t.conj = {{"v", "cv"}, {"cv", "v"}, {"sv", "scv"}, {"scv", "sv"}};
        break;
    }
    return t;
}

std::vector<std::string> validate_type(padic_type const & t)
{
    std::vector<std::string> bad;
    if (!is_prime(t.p))
        bad.push_back("p is not prime");
    long sum = 0;
    std::set<std::string> ids;
    for (auto const & x : t.places) {
        sum += x.e * x.f;
        if (!ids.insert(x.id).second)
            bad.push_back("duplicate place " + x.id);
    }
    if (sum != t.field.degree())
        bad.push_back("sum of e*f is " + std::to_string(sum) + ", field degree is " +
                      std::to_string(t.field.degree()));
    for (auto const & x : t.places) {
        auto it = t.conj.find(x.id);
        if (it == t.conj.end() || !ids.count(it->second)) {
            bad.push_back("conjugation undefined at " + x.id);
            continue;
        }
        auto back = t.conj.find(it->second);
        if (back == t.conj.end() || back->second != x.id)
            bad.push_back("conjugation is not an involution at " + x.id);
        place const & cx = t.at(it->second);
        if (cx.e != x.e)
            bad.push_back("conjugate places have different e at " + x.id);
        if (x.eta + cx.eta != x.e)
            bad.push_back("eta_" + x.id + " + eta_" + cx.id + " = " + rational(x.eta + cx.eta).get_str() + " != e = " +
                          std::to_string(x.e));
        if (x.eta < 0 || x.eta > x.e)
            bad.push_back("slope eta/e outside [0,1] at " + x.id);
    }
    return bad;
}

namespace {

bool is_subfield(cm_field const & sub, cm_field const & big)
{
    if (sub == big || sub.shape == cm_shape::rationals)
        return true;
    if (big.shape != cm_shape::biquad)
        return false;
    if (sub.shape == cm_shape::im_quad)
        return sub.n == big.n || sub.n == big.m;
    if (sub.shape == cm_shape::real_quad)
        return sub.n == real_radicand(big.n, big.m);
    return false;
}

/* label of the place of sub below the place id of big */
std::string restrict_label(cm_field const & big, cm_field const & sub, std::string const & id)
{
    if (sub == big)
        return id;
    if (sub.shape == cm_shape::rationals)
        return "p";
    if (big.shape == cm_shape::biquad) {
        if (sub.shape == cm_shape::im_quad && sub.n == big.n)
            return (id == "v" || id == "sv") ? "u" : "ub";
        if (sub.shape == cm_shape::im_quad && sub.n == big.m)
            return (id == "v" || id == "scv") ? "u" : "ub";
        if (sub.shape == cm_shape::real_quad)
            return (id == "v" || id == "cv") ? "u" : "ub";
    }
    throw std::invalid_argument("restriction from " + big.name() + " to " + sub.name() + " is undefined");
}

} // namespace

std::vector<cm_field> intermediate_fields(cm_field const & field, cm_field const & under)
{
    if (!is_subfield(under, field))
        throw std::invalid_argument(under.name() + " is not a subfield of " + field.name());
    std::vector<cm_field> cands = {cm_field::rationals()};
    if (field.shape == cm_shape::biquad) {
        cands.push_back(cm_field::im_quad(field.n));
        cands.push_back(cm_field::im_quad(field.m));
        cands.push_back({cm_shape::real_quad, real_radicand(field.n, field.m), 0});
    }
    std::vector<cm_field> out;
    for (auto const & k : cands)
        if (!(k == field) && is_subfield(under, k))
            out.push_back(k);
    return out;
}

std::optional<padic_type> inducing_type(padic_type const & t, cm_field const & sub)
{
    if (!is_subfield(sub, t.field))
        throw std::invalid_argument(sub.name() + " is not a subfield of " + t.field.name());
    padic_type s = places_over(sub, t.p);
    std::map<std::string, bool> seen;
    for (auto const & x : t.places) {
        std::string y = restrict_label(t.field, sub, x.id);
        place const & py = s.at(y);
        if (x.e % py.e != 0)
            return std::nullopt;
        rational down = x.eta / rational(x.e / py.e);
        if (seen[y]) {
            if (s.eta(y) != down)
                return std::nullopt;
        } else {
            s.eta(y) = down;
            seen[y] = true;
        }
    }
    if (!validate_type(s).empty())
        return std::nullopt;
    return s;
}

padic_type induce(padic_type const & s, cm_field const & big)
{
    padic_type t = places_over(big, s.p);
    for (auto & x : t.places) {
        place const & y = s.at(restrict_label(big, s.field, x.id));
        x.eta = y.eta * rational(x.e / y.e);
    }
    return t;
}

bool minimality_check(padic_type const & t, cm_field const & under)
{
    for (auto const & k : intermediate_fields(t.field, under))
        if (inducing_type(t, k))
            return false;
    return true;
}

std::string elliptic_class::to_string() const
{
    if (supersingular)
        return "supersingular";
    return "ordinary CM by Q(sqrt(-" + std::to_string(cm_n) + "))";
}

elliptic_class elliptic_source(padic_type const & t)
{
    if (t.field.shape == cm_shape::rationals || inducing_type(t, cm_field::rationals()))
        return {true, 0};
    if (t.field.shape == cm_shape::im_quad)
        return {false, t.field.n};
    if (t.field.shape == cm_shape::biquad)
        for (long k : {t.field.n, t.field.m})
            if (inducing_type(t, cm_field::im_quad(k)))
                return {false, k};
    throw std::invalid_argument("type on " + t.field.name() + " does not come from an elliptic curve");
}

std::string to_string(surface_case c)
{
    switch (c) {
    case surface_case::case1a:
        return "Case1a";
    case surface_case::case1b:
        return "Case1b";
    case surface_case::case2:
        return "Case2";
    }
    return "?";
}

/* ---------------------------------------------------------------------- */

namespace {

/* every eta in {0, 1/2, 1}^places (places all have e = 1 here) */
std::vector<padic_type> half_integral_types(cm_field const & field, long p)
{
    padic_type base = places_over(field, p);
    std::vector<padic_type> out;
    std::size_t k = base.places.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        padic_type t = base;
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            t.places[i].eta = rational(static_cast<long>(c % 3) * t.places[i].e, 2);
            t.places[i].eta.canonicalize();
            c /= 3;
        }
        if (validate_type(t).empty())
            out.push_back(std::move(t));
    }
    return out;
}

/* places of t lying over the place u of F = Q(sqrt(-n)) */
std::vector<place> places_over_u(padic_type const & t, long n)
{
    std::vector<place> out;
    cm_field F = cm_field::im_quad(n);
    for (auto const & x : t.places)
        if (restrict_label(t.field, F, x.id) == "u")
            out.push_back(x);
    return out;
}

struct simple_data {
    bool integral_dims = true;
    rational dim_at_u;
    std::vector<slope_datum> slopes;
};

simple_data slope_data(padic_type const & t, long n, long tt, std::string const & prefix)
{
    simple_data d;
    for (auto const & x : t.places) {
        rational dim = x.eta * x.f * tt;
        if (!is_integral(dim))
            d.integral_dims = false;
    }
    for (auto const & x : places_over_u(t, n)) {
        rational dim = x.eta * x.f * tt;
        d.dim_at_u += dim;
        d.slopes.push_back({prefix + x.id, x.eta / x.e, dim, x.e * x.f * tt});
    }
    return d;
}

std::vector<rational> eta_vector(padic_type const & t)
{
    std::vector<rational> v;
    for (auto const & x : t.places)
        v.push_back(x.eta);
    return v;
}

/* image of a biquadratic type under sigma, the generator of Gal(L/F) */
padic_type apply_sigma(padic_type const & t)
{
    static std::map<std::string, std::string> const sigma = {
        {"v", "sv"}, {"sv", "v"}, {"cv", "scv"}, {"scv", "cv"}};
    padic_type r = t;
    for (auto & x : r.places)
        x.eta = t.eta(sigma.at(x.id));
    return r;
}

rational frac_part(rational const & x)
{
    integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    rational r = x - rational(fl);
    r.canonicalize();
    return r;
}

void check_classify_preconditions(long n, long p, std::vector<long> const & aux)
{
    require(n > 0 && is_squarefree(n), "n: must be positive squarefree");
    require(is_prime(p), "p: must be prime");
    require(kronecker(quad_disc(-n), p) == 1, "p: must split in Q(sqrt(-" + std::to_string(n) + "))");
    std::set<long> seen;
    for (long m : aux) {
        std::string tag = "aux " + std::to_string(m);
        require(m > 0 && is_squarefree(m), tag + ": must be positive squarefree");
        require(m != n, tag + ": must differ from n");
        require(seen.insert(m).second, tag + ": duplicate entry");
        require(kronecker(quad_disc(-m), p) == 1, tag + ": p must split in Q(sqrt(-" + std::to_string(m) + "))");
        require(splits_completely(n, m, p), tag + ": p must split completely in the compositum");
    }
}

} // namespace

std::vector<f_linear_class> classify_surfaces(long n, long p, std::vector<long> const & aux)
{
    check_classify_preconditions(n, p, aux);
    cm_field F = cm_field::im_quad(n);
    std::vector<f_linear_class> out;

    /* simple: a minimal type (L, eta) under F with dim = [L:Q] t / 2 = 2 */
    std::vector<cm_field> fields = {F};
    for (long m : aux)
        fields.push_back(cm_field::biquad(n, m));
    for (auto const & L : fields) {
        for (long tt : {1L, 2L}) {
            if (L.degree() * tt != 4)
                continue;
            std::set<std::vector<rational>> kept;
            for (auto const & t : half_integral_types(L, p)) {
                simple_data d = slope_data(t, n, tt, "");
                if (!d.integral_dims || d.dim_at_u != 1 || !minimality_check(t, F))
                    continue;
                /* Gal(L/F)-conjugate types give the same F-linear class */
                auto key = eta_vector(t);
                if (L.shape == cm_shape::biquad)
                    key = std::max(key, eta_vector(apply_sigma(t)));
                if (key != eta_vector(t) || !kept.insert(key).second)
                    continue;
                f_linear_class c;
                c.tag = L.shape == cm_shape::biquad ? surface_case::case1a : surface_case::case1b;
                c.types = {t};
                c.t = tt;
                c.dim = L.degree() * tt / 2;
                c.slopes_at_u = d.slopes;
                c.dim_at_u = d.dim_at_u;
                for (auto const & x : t.places)
                    c.brauer_invariants[x.id] = frac_part(x.eta * x.f);
                c.source = elliptic_source(t);
                out.push_back(std::move(c));
            }
        }
    }

    /* non-simple: two F-linear elliptic curves, i.e. types on F with t = 1 */
    std::vector<padic_type> curves;
    for (auto const & t : half_integral_types(F, p))
        if (slope_data(t, n, 1, "").integral_dims && minimality_check(t, F))
            curves.push_back(t);
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i; j < curves.size(); ++j) {
            simple_data a = slope_data(curves[i], n, 1, "A1.");
            simple_data b = slope_data(curves[j], n, 1, "A2.");
            if (a.dim_at_u + b.dim_at_u != 1)
                continue;
            f_linear_class c;
            c.tag = surface_case::case2;
            c.types = {curves[i], curves[j]};
            c.t = 1;
            c.dim = 2;
            c.slopes_at_u = a.slopes;
            c.slopes_at_u.insert(c.slopes_at_u.end(), b.slopes.begin(), b.slopes.end());
            c.dim_at_u = a.dim_at_u + b.dim_at_u;
            for (std::size_t k = 0; k < 2; ++k)
                for (auto const & x : c.types[k].places)
                    c.brauer_invariants["A" + std::to_string(k + 1) + "." + x.id] = frac_part(x.eta * x.f);
            elliptic_class s1 = elliptic_source(curves[i]), s2 = elliptic_source(curves[j]);
            if (!(s1 == s2))
                throw std::logic_error("case 2 summands come from different elliptic classes");
            c.source = s1;
            out.push_back(std::move(c));
        }
    return out;
}

bool bijection_check(long n, long p, std::vector<long> const & aux)
{
    auto classes = classify_surfaces(n, p, aux);
    std::vector<std::pair<elliptic_class, surface_case>> universe;
    for (long m : aux)
        universe.push_back({{false, m}, surface_case::case1a});
    universe.push_back({{true, 0}, surface_case::case1b});
    universe.push_back({{false, n}, surface_case::case2});

    std::vector<int> hits(classes.size(), 0);
    for (auto const & [e, tag] : universe) {
        int found = 0;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].source == e) {
                if (classes[i].tag != tag)
                    return false;
                ++hits[i];
                ++found;
            }
        if (found != 1)
            return false;
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::vector<long> default_aux_fields(long n, long p, std::size_t count)
{
    std::vector<long> out;
    for (long m = 1; out.size() < count && m < 1000; ++m) {
        if (m == n || !is_squarefree(m))
            continue;
        if (kronecker(quad_disc(-m), p) != 1)
            continue;
        if (!splits_completely(n, m, p))
            continue;
        out.push_back(m);
    }
    return out;
}

} // namespace tafverify
