#include "tafverify/graded.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tafverify {

polynomial polynomial::constant(std::size_t nvars, rational c)
{
    polynomial p(nvars);
    p.add_term(monomial(nvars, 0), c);
    return p;
}

polynomial polynomial::variable(std::size_t nvars, std::size_t i)
{
    if (i >= nvars)
        throw std::out_of_range("polynomial::variable: index out of range");
    monomial m(nvars, 0);
    m[i] = 1;
    return term(m, 1);
}

polynomial polynomial::term(monomial m, rational c)
{
    polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

rational polynomial::coeff(monomial const & m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? rational(0) : it->second;
}

void polynomial::add_term(monomial const & m, rational const & c)
{
    if (m.size() != nvars_)
        throw std::invalid_argument("polynomial: monomial has wrong length");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

polynomial polynomial::operator+(polynomial const & o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial: variable count mismatch");
    polynomial r = *this;
    for (auto const & [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

polynomial polynomial::operator-() const
{
    polynomial r = *this;
    for (auto & [m, c] : r.terms_)
        c = -c;
    return r;
}

polynomial polynomial::operator-(polynomial const & o) const
{
    return *this + (-o);
}

polynomial polynomial::operator*(polynomial const & o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial: variable count mismatch");
    polynomial r(nvars_);
    monomial m(nvars_);
    for (auto const & [ma, ca] : terms_)
        for (auto const & [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

polynomial polynomial::operator*(rational const & s) const
{
    polynomial r(nvars_);
    for (auto const & [m, c] : terms_)
        r.add_term(m, c * s);
    return r;
}

polynomial operator*(rational const & s, polynomial const & p)
{
    return p * s;
}

polynomial polynomial::pow(unsigned k) const
{
    polynomial r = constant(nvars_, 1), b = *this;
    for (; k; k >>= 1) {
        if (k & 1)
            r = r * b;
        if (k > 1)
            b = b * b;
    }
    return r;
}

std::optional<long> polynomial::weight(std::vector<long> const & weights) const
{
    if (weights.size() != nvars_)
        throw std::invalid_argument("polynomial::weight: weight vector has wrong length");
    std::optional<long> w;
    for (auto const & [m, c] : terms_) {
        long s = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            s += m[i] * weights[i];
        if (w && *w != s)
            return std::nullopt;
        w = s;
    }
    return w;
}

std::pair<monomial, rational> polynomial::leading_term() const
{
    if (terms_.empty())
        throw std::domain_error("leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::string polynomial::to_string(std::vector<std::string> const & names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    /* descending lex order reads naturally */
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        rational c = it->second;
        bool neg = c < 0;
        if (neg)
            c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (it->first[i] > 1)
                mono += "^" + std::to_string(it->first[i]);
        }
        if (mono.empty())
            os << c.get_str();
        else if (c == 1)
            os << mono;
        else
            os << c.get_str() << "*" << mono;
    }
    return os.str();
}

std::optional<polynomial> exact_divide(polynomial p, polynomial const & d)
{
    if (d.is_zero())
        throw std::domain_error("exact_divide: division by zero");
    polynomial q(p.nvars());
    auto [md, cd] = d.leading_term();
    while (!p.is_zero()) {
        auto [mp, cp] = p.leading_term();
        monomial m(p.nvars());
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = mp[i] - md[i];
            if (m[i] < 0)
                return std::nullopt;
        }
        polynomial t = polynomial::term(m, cp / cd);
        q = q + t;
        p = p - t * d;
    }
    return q;
}

polynomial substitute(algebra_map const & f, polynomial const & p)
{
    if (f.images.size() != p.nvars())
        throw std::invalid_argument("algebra map: missing generator image");
    if (f.images.empty())
        return p;
    std::size_t n = f.images.front().nvars();
    polynomial r(n);
    for (auto const & [m, c] : p.terms()) {
        polynomial t = polynomial::constant(n, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                t = t * f.images[i].pow(static_cast<unsigned>(m[i]));
        r = r + t;
    }
    return r;
}

/* ---------------------------------------------------------------------- */

graded_ring::graded_ring(std::vector<std::string> names, std::vector<long> weights, std::vector<rule> rules)
    : names_(std::move(names)), weights_(std::move(weights)), rules_(std::move(rules))
{
    if (names_.size() != weights_.size())
        throw std::invalid_argument("graded_ring: names and weights differ in length");
    for (long w : weights_)
        if (w <= 0 || w % 2 != 0)
            throw std::invalid_argument("graded_ring: weights must be positive and even");
    for (auto const & r : rules_) {
        if (r.lhs.size() != nvars() || r.rhs.size() != nvars())
            throw std::invalid_argument("graded_ring: relation has wrong length");
        long wl = 0, wr = 0;
        for (std::size_t i = 0; i < nvars(); ++i) {
            wl += r.lhs[i] * weights_[i];
            wr += r.rhs[i] * weights_[i];
        }
        if (wl != wr)
            throw std::invalid_argument("graded_ring: relation is not homogeneous");
    }
    distinguished_ = constant(1);
    ambient_names_ = names_;
}

polynomial graded_ring::gen(std::string const & name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw std::invalid_argument("graded_ring: no generator " + name);
    return gen(static_cast<std::size_t>(it - names_.begin()));
}

void graded_ring::set_distinguished(polynomial d)
{
    d = reduce(d);
    weight_of(d);
    distinguished_ = std::move(d);
}

long graded_ring::distinguished_weight() const
{
    return weight_of(distinguished_);
}

void graded_ring::set_embedding(algebra_map e, std::vector<std::string> ambient_names)
{
    if (e.images.size() != nvars())
        throw std::invalid_argument("graded_ring: embedding needs one image per generator");
    for (auto const & r : rules_)
        if (substitute(e, polynomial::term(r.lhs, 1)) != substitute(e, polynomial::term(r.rhs, 1)))
            throw std::invalid_argument("graded_ring: embedding does not respect the relations");
    embedding_ = std::move(e);
    ambient_names_ = std::move(ambient_names);
}

polynomial graded_ring::embed(polynomial const & p) const
{
    return embedding_ ? substitute(*embedding_, p) : p;
}

bool graded_ring::is_normal(monomial const & m) const
{
    for (auto const & r : rules_) {
        bool hit = true;
        for (std::size_t i = 0; i < m.size() && hit; ++i)
            hit = m[i] >= r.lhs[i];
        if (hit)
            return false;
    }
    return true;
}

polynomial graded_ring::reduce(polynomial const & p) const
{
    if (p.nvars() != nvars())
        throw std::invalid_argument("graded_ring: polynomial from another ring");
    if (rules_.empty())
        return p;
    polynomial r(nvars());
    for (auto const & [m0, c] : p.terms()) {
        monomial m = m0;
        for (bool changed = true; changed;) {
            changed = false;
            for (auto const & rl : rules_) {
                bool hit = true;
                for (std::size_t i = 0; i < m.size() && hit; ++i)
                    hit = m[i] >= rl.lhs[i];
                if (hit) {
                    for (std::size_t i = 0; i < m.size(); ++i)
                        m[i] += rl.rhs[i] - rl.lhs[i];
                    changed = true;
                }
            }
        }
        r.add_term(m, c);
    }
    return r;
}

std::vector<monomial> graded_ring::monomials_of_weight(long k) const
{
    std::vector<monomial> out;
    if (k < 0)
        return out;
    monomial m(nvars(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == nvars()) {
            if (left == 0 && is_normal(m))
                out.push_back(m);
            return;
        }
        for (int e = 0; e * weights_[i] <= left; ++e) {
            m[i] = e;
            rec(i + 1, left - e * weights_[i]);
        }
        m[i] = 0;
    };
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

polynomial graded_ring::apply(algebra_map const & f, polynomial const & p) const
{
    return reduce(substitute(f, p));
}

algebra_map graded_ring::compose(algebra_map const & f, algebra_map const & g) const
{
    algebra_map r;
    for (auto const & img : g.images)
        r.images.push_back(apply(f, img));
    return r;
}

algebra_map graded_ring::identity_map() const
{
    algebra_map r;
    for (std::size_t i = 0; i < nvars(); ++i)
        r.images.push_back(gen(i));
    return r;
}

long graded_ring::weight_of(polynomial const & p) const
{
    auto w = p.weight(weights_);
    if (!w)
        throw std::invalid_argument("polynomial is zero or inhomogeneous: " + p.to_string(names_));
    return *w;
}

/* ---------------------------------------------------------------------- */

polynomial apply(graded_ring const & R, algebra_map const & f, polynomial const & p)
{
    return R.apply(f, p);
}

bool is_degree_preserving(graded_ring const & R, algebra_map const & f)
{
    if (f.images.size() != R.nvars())
        return false;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        auto w = f.images[i].weight(R.weights());
        if (f.images[i].is_zero())
            continue;
        if (!w || *w != R.weights()[i])
            return false;
    }
    return true;
}

bool respects_relations(graded_ring const & R, algebra_map const & f)
{
    for (auto const & r : R.rules())
        if (R.apply(f, polynomial::term(r.lhs, 1)) != R.apply(f, polynomial::term(r.rhs, 1)))
            return false;
    return true;
}

bool check_t_squared(graded_ring const & R, algebra_map const & tstar, long n)
{
    if (!is_degree_preserving(R, tstar))
        throw std::invalid_argument("check_t_squared: map is not degree-preserving");
    algebra_map tt = R.compose(tstar, tstar);
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(std::labs(n)),
                      static_cast<unsigned long>(R.weights()[i]));
        if (tt.images[i] != R.gen(i) * rational(scale))
            return false;
    }
    return true;
}

algebra_map fricke_from_t(graded_ring const & R, algebra_map const & tstar, long N)
{
    if (!is_degree_preserving(R, tstar))
        throw std::invalid_argument("fricke_from_t: map is not degree-preserving");
    algebra_map w;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        long k = R.weights()[i];
        if (k % 2 != 0)
            throw std::invalid_argument("fricke_from_t: odd weight generator " + R.names()[i]);
        integer s;
        mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(k / 2));
        if ((k / 2) % 2 != 0)
            s = -s;
        w.images.push_back(tstar.images[i] * (rational(1) / rational(s)));
    }
    return w;
}

bool is_involution(graded_ring const & R, algebra_map const & w)
{
    algebra_map ww = R.compose(w, w);
    for (std::size_t i = 0; i < R.nvars(); ++i)
        if (ww.images[i] != R.gen(i))
            return false;
    return true;
}

bool verify_identity(graded_ring const & R, polynomial const & lhs, polynomial const & rhs)
{
    polynomial l = R.reduce(lhs), r = R.reduce(rhs);
    if (R.weight_of(l) != R.weight_of(r))
        throw std::invalid_argument("verify_identity: sides have different weights");
    return l == r;
}

/* ---------------------------------------------------------------------- */

graded_action make_action(std::vector<algebra_map> maps, long character_order)
{
    if (character_order != 1 && character_order != 2 && character_order != 3 && character_order != 6)
        throw std::invalid_argument("character order must be 1, 2, 3 or 6");
    return {std::move(maps), character_order};
}

bool character_fixes_weight(graded_action const & g, long k)
{
    /* a generator of mu_{2n} acts on weight k by its k-th power */
    return k % (2 * g.character_order) == 0;
}

namespace {

rat_vector coordinates(polynomial const & p, std::vector<monomial> const & basis)
{
    rat_vector v(basis.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = p.coeff(basis[i]);
        if (v[i] != 0)
            ++found;
    }
    if (found != p.terms().size())
        throw std::logic_error("polynomial escapes the monomial basis of its piece");
    return v;
}

polynomial from_coordinates(rat_vector const & v, std::vector<monomial> const & basis, std::size_t nvars)
{
    polynomial p(nvars);
    for (std::size_t i = 0; i < basis.size(); ++i)
        p.add_term(basis[i], v[i]);
    return p;
}

void require_fixes_unit(graded_ring const & R, graded_action const & g)
{
    for (auto const & f : g.maps) {
        if (!is_degree_preserving(R, f))
            throw std::invalid_argument("action contains a map that is not degree-preserving");
        if (R.apply(f, R.distinguished()) != R.distinguished())
            throw std::invalid_argument("action does not fix the inverted element");
    }
    if (!character_fixes_weight(g, R.distinguished_weight()))
        throw std::invalid_argument("character does not fix the inverted element");
}

/* rows of (f - id) on the piece, stacked over all maps */
rat_matrix fixed_equations(graded_ring const & R, graded_action const & g, std::vector<monomial> const & basis)
{
    rat_matrix eqs;
    for (auto const & f : g.maps) {
        rat_matrix cols;
        for (auto const & b : basis) {
            polynomial x = polynomial::term(b, 1);
            cols.push_back(coordinates(R.apply(f, x) - x, basis));
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            rat_vector row(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j)
                row[j] = cols[j][i];
            eqs.push_back(std::move(row));
        }
    }
    return eqs;
}

} // namespace

piece_basis invariant_subspace(graded_ring const & R, graded_action const & g, long k, long m)
{
    require_fixes_unit(R, g);
    piece_basis out{k, m, {}};
    long top = k + m * R.distinguished_weight();
    auto basis = R.monomials_of_weight(top);
    if (basis.empty() || !character_fixes_weight(g, k))
        return out;
    rat_matrix eqs = fixed_equations(R, g, basis);
    std::vector<rat_vector> ker;
    if (eqs.empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            rat_vector e(basis.size(), 0);
            e[i] = 1;
            ker.push_back(e);
        }
    } else {
        ker = kernel(eqs, basis.size());
    }
    for (auto const & v : ker)
        out.numerators.push_back(from_coordinates(v, basis, R.nvars()));
    return out;
}

generation_result check_generation(graded_ring const & R, graded_action const & g,
                                   std::vector<claimed_generator> const & gens, long max_weight, long max_denom)
{
    require_fixes_unit(R, g);
    polynomial const & D = R.distinguished();
    long wd = R.distinguished_weight();

    std::vector<polynomial> plain;
    std::vector<long> plain_weights;
    std::optional<rational> unit_scale;
    for (auto const & c : gens) {
        polynomial v = R.reduce(c.value);
        long wv = R.weight_of(v);
        for (auto const & f : g.maps)
            if (R.apply(f, v) != v)
                throw std::invalid_argument("claimed generator " + R.format(v) + " is not invariant");
        if (!character_fixes_weight(g, wv))
            throw std::invalid_argument("claimed generator " + R.format(v) + " is not fixed by the character");
        if (c.inverted) {
            if (unit_scale)
                throw std::invalid_argument("at most one inverted generator is supported");
            auto [md, cd] = D.leading_term();
            rational s = v.coeff(md) / cd;
            if (s == 0 || v != D * s)
                throw std::invalid_argument("inverted generator must be a multiple of the inverted element");
            unit_scale = s;
        } else {
            plain.push_back(v);
            plain_weights.push_back(wv);
        }
    }

    generation_result res;
    for (long m = 0; m <= max_denom; ++m) {
        for (long k = -m * wd; k <= max_weight; k += 2) {
            ++res.pieces_scanned;
            long top = k + m * wd;
            auto basis = R.monomials_of_weight(top);
            piece_basis inv = invariant_subspace(R, g, k, m);

            /* numerators of products of generators with at most m inverted units */
            rat_matrix span;
            std::vector<long> e(plain.size(), 0);
            std::vector<polynomial> numerators;
            std::function<void(std::size_t, long, polynomial const &)> rec = [&](std::size_t i, long left,
                                                                                 polynomial const & acc) {
                if (i == plain.size()) {
                    /* left = d wt(D), d >= -m */
                    if (left % wd != 0)
                        return;
                    long d = left / wd;
                    if (d < -m || (d != 0 && !unit_scale))
                        return;
                    rational s = 1;
                    for (long j = 0; j < std::labs(d); ++j)
                        s *= *unit_scale;
                    if (d < 0)
                        s = 1 / s;
                    numerators.push_back(R.reduce(acc * D.pow(static_cast<unsigned>(d + m)) * s));
                    return;
                }
                polynomial cur = acc;
                for (long used = 0;; used += plain_weights[i]) {
                    if (left - used < -m * wd)
                        break;
                    rec(i + 1, left - used, cur);
                    cur = cur * plain[i];
                }
            };
            rec(0, k, R.constant(1));

            for (auto const & x : numerators)
                span.push_back(coordinates(x, basis));
            std::size_t gen_dim = span.empty() ? 0 : rank(span);

            bool contained = true;
            if (!numerators.empty()) {
                if (!character_fixes_weight(g, k))
                    contained = false;
                for (auto const & f : g.maps)
                    for (auto const & x : numerators)
                        if (R.apply(f, x) != x)
                            contained = false;
            }
            if (!contained || gen_dim != inv.dimension()) {
                res.ok = false;
                res.failed_weight = k;
                res.failed_denom = m;
                res.invariant_dim = inv.dimension();
                res.generated_dim = gen_dim;
                return res;
            }
        }
    }
    return res;
}

bool p_integrality(std::vector<polynomial> const & polys, long p)
{
    for (auto const & q : polys)
        for (auto const & [m, c] : q.terms())
            if (!is_p_integral(c, p))
                return false;
    return true;
}

std::optional<unsigned> divides_power(graded_ring const & R, polynomial const & n, polynomial const & d,
                                      unsigned max_power)
{
    polynomial en = R.embed(n), ed = R.embed(d), acc = ed;
    for (unsigned k = 1; k <= max_power; ++k) {
        if (exact_divide(acc, en))
            return k;
        acc = acc * ed;
    }
    return std::nullopt;
}

/* ---------------------------------------------------------------------- */

level_ring level1_ring()
{
    graded_ring R({"c4", "c6"}, {4, 6});
    polynomial c4 = R.gen(0), c6 = R.gen(1);
    polynomial delta = (c4.pow(3) - c6.pow(2)) * rational(1, 1728);
    R.set_distinguished(delta);
    algebra_map t = R.identity_map();
    algebra_map w = fricke_from_t(R, t, 1);
    graded_action act = make_action({w}, 1);
    std::vector<claimed_generator> claimed = {{c4, false}, {c6.pow(2), false}, {delta, true}};
    return {1, R, t, w, delta, delta, claimed, act, 5};
}

level_ring level2_ring()
{
    graded_ring R({"q2", "q4"}, {2, 4});
    polynomial q2 = R.gen(0), q4 = R.gen(1);
    algebra_map t{{q2 * rational(-2), q2.pow(2) - q4 * rational(4)}};
    algebra_map w = fricke_from_t(R, t, 2);
    polynomial delta = q4.pow(2) * (q2.pow(2) * rational(16) - q4 * rational(64));
    polynomial r4 = q4 * rational(8) - q2.pow(2);
    polynomial unit = q2.pow(4) - r4.pow(2);
    R.set_distinguished(unit);
    graded_action act = make_action({w}, 1);
    std::vector<claimed_generator> claimed = {{q2, false}, {unit, true}};
    return {2, R, t, w, delta, unit, claimed, act, 11};
}

level_ring level3_ring()
{
    graded_ring R({"A", "B", "C"}, {2, 4, 6}, {{{0, 2, 0}, {1, 0, 1}}});
    polynomial A = R.gen(0), B = R.gen(1), C = R.gen(2);
    algebra_map t{{A * rational(-3), A.pow(2) * rational(1, 3) - B * rational(9),
                   A.pow(3) * rational(-1, 27) + A * B * rational(2) - C * rational(27)}};
    algebra_map w = fricke_from_t(R, t, 3);
    polynomial delta = R.reduce(A * B * C - C.pow(2) * rational(27));
    polynomial unit = (A * B - C * rational(27)) * rational(108);
    R.set_distinguished(unit);
    /* A = a1^2, B = a1 a3, C = a3^2 in Q[a1, a3] */
    polynomial a1 = polynomial::variable(2, 0), a3 = polynomial::variable(2, 1);
    R.set_embedding({{a1.pow(2), a1 * a3, a3.pow(2)}}, {"a1", "a3"});
    graded_action act = make_action({w}, 3);
    std::vector<claimed_generator> claimed = {{A.pow(3), false}, {unit, true}};
    return {3, R, t, w, delta, unit, claimed, act, 7};
}

level_ring level_ring_for(long level)
{
    switch (level) {
    case 1:
        return level1_ring();
    case 2:
        return level2_ring();
    case 3:
        return level3_ring();
    }
    throw std::invalid_argument("level must be 1, 2 or 3");
}

graded_action level1_character_action(long n)
{
    return make_action({}, n);
}

std::vector<claimed_generator> level1_character_generators(level_ring const & L, long n)
{
    polynomial c4 = L.ring.gen(0), c6 = L.ring.gen(1);
    if (n == 2)
        return {{c4, false}, {c6.pow(2), false}, {L.unit, true}};
    if (n == 3)
        return {{c4.pow(3), false}, {c6, false}, {L.unit, true}};
    throw std::invalid_argument("level-1 character generators are known for n = 2, 3");
}

} // namespace tafverify
