#include "supersym/coderiv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace supersym {

namespace {

bool is_zero_vector(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

SqElement linear_form(const SymmetricPair& sp, const TablePtr& t, const RatVector& v) {
    SqElement out(t);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!sp.in_q(k)) throw std::logic_error("vector field leaves q");
        out += SuperPolynomial::variable(t, k) * v[k];
    }
    return out;
}

TruncatedSeries1 minus_t(int order) { return -TruncatedSeries1::identity(std::max(order, 1)); }

std::string render_sq(const SymmetricPair& sp, const Monomial& w) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sp.nq(); ++i) names.push_back(sp.algebra().basis_name(i));
    auto s = render_monomial(w, names);
    return s.empty() ? "1" : s;
}

}  // namespace

TablePtr sq_table(const SymmetricPair& sp, int degree_bound) {
    std::vector<std::string> names;
    std::vector<Parity> par;
    bool any_even = false;
    for (std::size_t i = 0; i < sp.nq(); ++i) {
        names.push_back(sp.algebra().basis_name(i));
        par.push_back(sp.algebra().parity(i));
        any_even = any_even || par.back() == Parity::Even;
    }
    return make_table(names, par, any_even ? std::optional<int>(degree_bound) : std::nullopt);
}

std::vector<Monomial> sq_monomials(const SymmetricPair& sp, int D) {
    auto par = sp.q_parities();
    std::vector<Monomial> out;
    Monomial m(par.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == par.size()) {
            out.push_back(m);
            return;
        }
        int cap = par[i] == Parity::Odd ? std::min(1, left) : left;
        for (int e = 0; e <= cap; ++e) {
            m[i] = static_cast<std::uint8_t>(e);
            rec(i + 1, left - e);
        }
        m[i] = 0;
    };
    rec(0, D);
    std::stable_sort(out.begin(), out.end(),
                     [](const Monomial& a, const Monomial& b) { return mono::total_degree(a) < mono::total_degree(b); });
    return out;
}

Monomial to_g_monomial(const SymmetricPair& sp, const Monomial& w) {
    Monomial m(sp.algebra().dim(), 0);
    std::copy(w.begin(), w.end(), m.begin());
    return m;
}

RatVector apply_radx(const SymmetricPair& sp, const TruncatedSeries1& p, std::size_t a, const Monomial& w) {
    const auto& g = sp.algebra();
    RatVector out(g.dim(), Rational(0));
    auto letters = mono::letters(w);
    const int n = static_cast<int>(letters.size());
    if (n > p.order()) throw std::invalid_argument("apply_radx: series order below the monomial degree");
    if (p[n].is_zero()) return out;
    std::vector<std::size_t> perm(letters.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign *= koszul(g.parity(letters[perm[i]]), g.parity(letters[perm[j]]));
        RatVector v = g.basis_vector(a);
        for (auto it = perm.rbegin(); it != perm.rend(); ++it) v = g.bracket(g.basis_vector(letters[*it]), v);
        for (std::size_t k = 0; k < v.size(); ++k) out[k] += v[k] * Rational(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Parity pw = mono::parity(w, sp.q_parities());
    Rational scale = p[n] * Rational(koszul(g.parity(a), pw));
    for (auto& x : out) x *= scale;
    return out;
}

SqElement coderivation(const SymmetricPair& sp, const TruncatedSeries1& p, const TruncatedSeries1& d, std::size_t a,
                       const SqElement& w) {
    const auto& series = sp.in_q(a) ? p : d;
    const auto& t = w.table();
    auto par = sp.q_parities();
    SqElement out(t);
    for (const auto& [m, coef] : w.terms()) {
        mono::for_each_split(m, par, [&](const Rational& k, const Monomial& left, const Monomial& right) {
            if (mono::total_degree(left) > series.order()) return;
            RatVector v = apply_radx(sp, series, a, left);
            if (is_zero_vector(v)) return;
            out += linear_form(sp, t, v) * SuperPolynomial::monomial(t, right, k * coef);
        });
    }
    return out;
}

SqElement coderivation_C(const SymmetricPair& sp, const Rational& c, std::size_t a, const SqElement& w) {
    if (c.is_zero()) throw ZeroParameter();
    const auto& g = sp.algebra();
    const auto& t = w.table();
    if (sp.in_h(a)) {
        // derivation of parity p(a) extending b -> [a, b]
        SqElement out(t);
        for (const auto& [m, coef] : w.terms()) {
            auto letters = mono::letters(m);
            for (std::size_t i = 0; i < letters.size(); ++i) {
                int sign = 1;
                for (std::size_t j = 0; j < i; ++j) sign *= koszul(g.parity(a), g.parity(letters[j]));
                SqElement term(t, coef * Rational(sign));
                for (std::size_t j = 0; j < letters.size(); ++j)
                    term = term * (j == i ? linear_form(sp, t, g.bracket(a, letters[i]))
                                          : SuperPolynomial::variable(t, letters[j]));
                out += term;
            }
        }
        return out;
    }
    int deg = std::max(w.max_total_degree(), 1);
    return coderivation(sp, p_c(c, deg + 1), minus_t(deg + 1), a, w);
}

SqElement coderivation_C(const SymmetricPair& sp, const Rational& c, const RatVector& a, const SqElement& w) {
    SqElement out(w.table());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) out += coderivation_C(sp, c, k, w) * a[k];
    return out;
}

namespace {

CheckResult representation_grid(const SymmetricPair& sp, int D,
                                const std::function<SqElement(std::size_t, const SqElement&)>& C) {
    const auto& g = sp.algebra();
    auto t = sq_table(sp, D + 4);
    CheckResult r;
    for (const auto& m : sq_monomials(sp, D)) {
        SqElement w = SuperPolynomial::monomial(t, m, Rational(1));
        std::vector<SqElement> single;
        for (std::size_t a = 0; a < g.dim(); ++a) single.push_back(C(a, w));
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b) {
                SqElement lhs = C(a, single[b]) - C(b, single[a]) * Rational(koszul(g.parity(a), g.parity(b)));
                SqElement rhs(t);
                const auto& v = g.bracket(a, b);
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (!v[k].is_zero()) rhs += single[k] * v[k];
                ++r.checked;
                if (!(lhs == rhs)) {
                    r.ok = false;
                    r.witness = "a=" + g.basis_name(a) + " b=" + g.basis_name(b) + " w=" + render_sq(sp, m);
                    return r;
                }
            }
    }
    return r;
}

}  // namespace

CheckResult check_representation(const SymmetricPair& sp, const Rational& c, int D) {
    if (c.is_zero()) throw ZeroParameter();
    return representation_grid(sp, D, [&](std::size_t a, const SqElement& w) { return coderivation_C(sp, c, a, w); });
}

CheckResult check_representation(const SymmetricPair& sp, const TruncatedSeries1& p, const TruncatedSeries1& d,
                                 int D) {
    return representation_grid(sp, D, [&](std::size_t a, const SqElement& w) { return coderivation(sp, p, d, a, w); });
}

SqElement tau(const SymmetricPair& sp, const Pbw& u, const TablePtr& table) {
    SqElement out(table);
    for (const auto& [m, c] : u.terms()) {
        auto letters = mono::letters(m);
        SqElement w(table, Rational(1));
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = coderivation_C(sp, Rational(1), *it, w);
        out += w * c;
    }
    return out;
}

Character::Character(const SymmetricPair& sp, std::vector<Rational> values) : nq_(sp.nq()), values_(std::move(values)) {
    const auto& g = sp.algebra();
    if (values_.size() != sp.nh()) throw AlgebraError("character needs one value per h basis element");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!values_[i].is_zero() && g.parity(nq_ + i) == Parity::Odd)
            throw AlgebraError("character is nonzero on the odd element " + g.basis_name(nq_ + i));
    for (std::size_t a = nq_; a < g.dim(); ++a)
        for (std::size_t b = a; b < g.dim(); ++b)
            if (!(*this)(g.bracket(a, b)).is_zero())
                throw AlgebraError("character does not vanish on [" + g.basis_name(a) + "," + g.basis_name(b) + "]");
}

Character Character::trivial(const SymmetricPair& sp) {
    return Character(sp, std::vector<Rational>(sp.nh(), Rational(0)));
}

Character Character::str_g_mod_h(const SymmetricPair& sp) {
    std::vector<Rational> v;
    for (std::size_t a = sp.nq(); a < sp.algebra().dim(); ++a) v.push_back(str_q_ad(sp, a));
    return Character(sp, std::move(v));
}

Rational Character::operator()(const RatVector& v) const {
    Rational s(0);
    for (std::size_t i = 0; i < values_.size(); ++i) s += v.at(nq_ + i) * values_[i];
    return s;
}

Rational Character::on_monomial(const PbwMonomial& m) const {
    Rational s(1);
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (int e = 0; e < m.at(nq_ + i); ++e) s *= values_[i];
    return s;
}

bool Character::is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return r.is_zero(); });
}

SqElement theta_action(const SymmetricPair& sp, const Rational& c, const TruncatedSeries1& q, const Character& chi,
                       std::size_t a, const SqElement& w) {
    const auto& g = sp.algebra();
    SqElement out = coderivation_C(sp, c, a, w);
    if (sp.in_h(a)) return out + w * chi(g.basis_vector(a));
    const auto& t = w.table();
    auto par = sp.q_parities();
    for (const auto& [m, coef] : w.terms()) {
        mono::for_each_split(m, par, [&](const Rational& k, const Monomial& left, const Monomial& right) {
            if (mono::total_degree(right) > q.order()) return;
            Rational x = chi(apply_radx(sp, q, a, right));
            if (x.is_zero()) return;
            int sign = koszul(g.parity(a), mono::parity(left, par));
            out += SuperPolynomial::monomial(t, left, k * coef * x * Rational(sign));
        });
    }
    return out;
}

SqElement theta_action(const SymmetricPair& sp, const Rational& c, const Character& chi, std::size_t a,
                       const SqElement& w) {
    if (c.is_zero()) throw ZeroParameter();
    return theta_action(sp, c, q_c(c, std::max(w.max_total_degree(), 1) + 1), chi, a, w);
}

CheckResult check_theta_vs_induced(const SymmetricPair& sp, const Enveloping& env, const Character& chi, int D,
                                   const TruncatedSeries1& q) {
    const auto& g = sp.algebra();
    auto t = sq_table(sp, D + 4);
    CheckResult r;
    for (const auto& m : sq_monomials(sp, D)) {
        SqElement w = SuperPolynomial::monomial(t, m, Rational(1));
        Pbw bw = env.symmetrize(to_g_monomial(sp, m));
        for (std::size_t a = 0; a < g.dim(); ++a) {
            SqElement lhs = theta_action(sp, Rational(1), q, chi, a, w);
            SqElement rhs(t);
            for (const auto& [k, c] : env.factorize(env.multiply(env.j(a), bw))) {
                Rational x = chi.on_monomial(k) * c;
                if (x.is_zero()) continue;
                Monomial wq(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(sp.nq()));
                rhs += SuperPolynomial::monomial(t, wq, x);
            }
            ++r.checked;
            if (!(lhs == rhs)) {
                r.ok = false;
                r.witness = "a=" + g.basis_name(a) + " w=" + render_sq(sp, m);
                return r;
            }
        }
    }
    return r;
}

CheckResult check_theta_vs_induced(const SymmetricPair& sp, const Enveloping& env, const Character& chi, int D) {
    return check_theta_vs_induced(sp, env, chi, D, q_c(Rational(1), D + 1));
}

CheckResult verify_twisted_invariance(const Enveloping& env, const Pbw& T) {
    for (const auto& [m, c] : env.factorize(T))
        if (!env.is_pure_q(m)) throw std::invalid_argument("element does not lie in beta(S(q))");
    CheckResult r;
    const auto& g = env.algebra();
    for (std::size_t a = 0; a < g.dim(); ++a) {
        ++r.checked;
        if (!env.twisted_adjoint(a, T).is_zero()) {
            r.ok = false;
            r.witness = "a=" + g.basis_name(a);
            return r;
        }
    }
    return r;
}

InvariantSpace invariant_space(const SymmetricPair& sp, const Enveloping& env) {
    if (!sp.q_purely_odd()) throw std::invalid_argument("invariant_space needs a purely odd q");
    InvariantSpace out;
    out.monomials = sq_monomials(sp, static_cast<int>(sp.nq()));
    const std::size_t n = out.monomials.size();
    std::map<Monomial, std::size_t> index;
    std::vector<Pbw> images;
    for (std::size_t j = 0; j < n; ++j) {
        index[to_g_monomial(sp, out.monomials[j])] = j;
        images.push_back(env.symmetrize(to_g_monomial(sp, out.monomials[j])));
    }
    const auto& g = sp.algebra();
    RatMatrix rows;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        RatMatrix block(n, RatVector(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : env.factorize(env.twisted_adjoint(a, images[j]))) {
                auto it = index.find(k);
                if (it == index.end()) throw std::logic_error("beta(S(q)) is not stable under ad'");
                block[it->second][j] += c;
            }
        for (auto& row : block)
            if (!is_zero_vector(row)) rows.push_back(std::move(row));
    }
    out.basis = rows.empty() ? [&] {
        std::vector<RatVector> all;
        for (std::size_t j = 0; j < n; ++j) {
            RatVector e(n, Rational(0));
            e[j] = 1;
            all.push_back(e);
        }
        return all;
    }()
                             : rat_null_space(rows, n);
    for (const auto& v : out.basis) {
        Pbw e;
        for (std::size_t j = 0; j < n; ++j)
            if (!v[j].is_zero()) e += images[j] * v[j];
        out.elements.push_back(e);
    }
    return out;
}

std::optional<Rational> scalar_ratio(const Pbw& a, const Pbw& b) {
    if (b.is_zero()) return std::nullopt;
    const auto& [m0, c0] = *b.terms().begin();
    auto it = a.terms().find(m0);
    Rational lambda = it == a.terms().end() ? Rational(0) : it->second / c0;
    if (a == b * lambda) return lambda;
    return std::nullopt;
}

}  // namespace supersym
