#include "doctest.h"
#include "supersym/catalog.hpp"
#include "supersym/enveloping.hpp"

using namespace supersym;

namespace {

// All monomials over the given parities with total degree <= d.
std::vector<Monomial> monomials_upto(const std::vector<Parity>& par, int d) {
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
    rec(0, d);
    return out;
}

Monomial with_letters(std::size_t n, std::initializer_list<std::size_t> letters) {
    Monomial m(n, 0);
    for (auto l : letters) ++m[l];
    return m;
}

Pbw random_pbw(const Enveloping& env, Rng& rng, int max_degree) {
    Pbw u;
    auto mons = monomials_upto(env.algebra().parities(), max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int k = 0; k < 3; ++k) u.add_term(mons[pick(rng)], random_rational(rng));
    return u;
}

// (a1 (x) a2)(b1 (x) b2) = (-1)^{p(a2)p(b1)} a1 b1 (x) a2 b2
PbwTensor tensor_multiply(const Enveloping& env, const PbwTensor& a, const PbwTensor& b) {
    PbwTensor out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            int s = koszul(env.parity(ka.second), env.parity(kb.first));
            auto l = env.multiply(env.monomial(ka.first), env.monomial(kb.first));
            auto r = env.multiply(env.monomial(ka.second), env.monomial(kb.second));
            for (const auto& [t, c] : env.tensor(l, r)) out[t] += c * ca * cb * Rational(s);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Pbw super_commutator(const Enveloping& env, const Pbw& a, Parity pa, const Pbw& b, Parity pb) {
    return env.multiply(a, b) - env.multiply(b, a) * Rational(koszul(pa, pb));
}

}  // namespace

TEST_CASE("normal form examples") {
    auto s2 = catalog("solvable2").algebra;
    Enveloping env(s2);
    std::size_t x = s2.index_of("x").value(), y = s2.index_of("y").value();
    auto yx = env.normal_form({y, x});
    CHECK(yx == env.multiply(env.j(x), env.j(y)) - env.j(y));
    CHECK(env.render(yx) == "-y + x*y");
    CHECK(env.normal_form({x, y}) == env.monomial(with_letters(2, {x, y})));

    auto osp = catalog("osp12").algebra;
    Enveloping eo(osp);
    std::size_t q1 = osp.index_of("Q1").value(), f = osp.index_of("F").value();
    // Q1 Q1 = 1/2 [Q1, Q1] = -F
    CHECK(eo.normal_form({q1, q1}) == eo.j(f) * Rational(-1));

    auto ab = catalog("abelian(0,2)").algebra;
    Enveloping ea(ab);
    CHECK(ea.normal_form({1, 0}) == ea.monomial(with_letters(2, {0, 1})) * Rational(-1));
    CHECK(ea.normal_form({0, 0}).is_zero());
    // idempotent on normal words
    for (const auto& m : monomials_upto(osp.parities(), 3)) {
        auto w = mono::letters(m);
        CHECK(eo.normal_form(w) == eo.monomial(m));
    }
}

TEST_CASE("product: unit, associativity and the defining relation") {
    Rng rng(17);
    for (const auto& name : catalog_names()) {
        auto g = catalog(name).algebra;
        Enveloping env(g);
        CAPTURE(name);
        for (int it = 0; it < 8; ++it) {
            auto u = random_pbw(env, rng, 3), v = random_pbw(env, rng, 2), w = random_pbw(env, rng, 2);
            CHECK(env.multiply(u, env.one()) == u);
            CHECK(env.multiply(env.one(), u) == u);
            CHECK(env.multiply(env.multiply(u, v), w) == env.multiply(u, env.multiply(v, w)));
        }
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b)
                CHECK(super_commutator(env, env.j(a), g.parity(a), env.j(b), g.parity(b)) == env.j(g.bracket(a, b)));
    }
}

TEST_CASE("rewriting is confluent under random schedules") {
    Rng rng(2024);
    for (const char* name : {"osp12", "gl11", "heisenberg_super", "solvable2"}) {
        auto g = catalog(name).algebra;
        Enveloping env(g);
        std::uniform_int_distribution<std::size_t> letter(0, g.dim() - 1);
        for (int words = 0; words < 6; ++words) {
            Word w(2 + words % 4);
            for (auto& l : w) l = letter(rng);
            auto ref = env.normal_form(w);
            for (int k = 0; k < 100; ++k) CHECK(env.normal_form_random(w, rng) == ref);
        }
    }
}

TEST_CASE("coproduct") {
    auto g = catalog("osp12").algebra;
    Enveloping env(g);
    CHECK(env.coproduct(env.one()) == env.tensor(env.one(), env.one()));
    for (std::size_t a = 0; a < g.dim(); ++a) {
        auto expect = env.tensor(env.j(a), env.one());
        for (const auto& [k, c] : env.tensor(env.one(), env.j(a))) expect[k] += c;
        CHECK(env.coproduct(env.j(a)) == expect);
    }
    // multiplicativity, with the product computed in the tensor square
    Rng rng(3);
    for (int it = 0; it < 10; ++it) {
        auto u = random_pbw(env, rng, 2), v = random_pbw(env, rng, 2);
        CHECK(env.coproduct(env.multiply(u, v)) == tensor_multiply(env, env.coproduct(u), env.coproduct(v)));
    }
}

TEST_CASE("symmetrization") {
    auto g = catalog("abelian(1,2)").algebra;
    Enveloping env(g);
    CHECK(env.symmetrize(with_letters(3, {1})) == env.j(1));
    // beta(e1 e2) = 1/2 (e1 e2 - e2 e1)
    auto b12 = env.symmetrize(with_letters(3, {1, 2}));
    CHECK(b12 == (env.multiply(env.j(1), env.j(2)) - env.multiply(env.j(2), env.j(1))) * Rational(1, 2));
    CHECK(env.symmetrize(with_letters(3, {0, 0})) == env.multiply(env.j(0), env.j(0)));

    auto osp = catalog("osp12").algebra;
    Enveloping eo(osp);
    std::size_t q1 = osp.index_of("Q1").value(), q2 = osp.index_of("Q2").value();
    auto b = eo.symmetrize(with_letters(5, {q1, q2}));
    CHECK(b == (eo.multiply(eo.j(q1), eo.j(q2)) - eo.multiply(eo.j(q2), eo.j(q1))) * Rational(1, 2));
}

TEST_CASE("symmetrization is a coalgebra morphism") {
    for (const auto& name : catalog_names()) {
        auto g = catalog(name).algebra;
        Enveloping env(g);
        CAPTURE(name);
        const int D = g.dim() > 5 ? 3 : 4;
        for (const auto& w : monomials_upto(g.parities(), D)) {
            PbwTensor rhs;
            mono::for_each_split(w, g.parities(), [&](const Rational& k, const Monomial& l, const Monomial& r) {
                for (const auto& [t, c] : env.tensor(env.symmetrize(l), env.symmetrize(r))) rhs[t] += c * k;
            });
            std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
            CHECK(env.coproduct(env.symmetrize(w)) == rhs);
        }
    }
}

TEST_CASE("symmetrization is injective in low degree") {
    auto g = catalog("osp12").algebra;
    Enveloping env(g);
    auto mons = monomials_upto(g.parities(), 3);
    std::map<PbwMonomial, std::size_t> col;
    RatMatrix rows;
    for (const auto& w : mons) {
        auto b = env.symmetrize(w);
        RatVector r;
        for (const auto& [m, c] : b.terms()) {
            auto [it, fresh] = col.emplace(m, col.size());
            if (r.size() <= it->second) r.resize(col.size(), Rational(0));
            r[it->second] = c;
        }
        rows.push_back(r);
    }
    for (auto& r : rows) r.resize(col.size(), Rational(0));
    CHECK(rat_rank(rows, col.size()) == mons.size());
}

TEST_CASE("antipode") {
    for (const char* name : {"osp12", "gl11", "solvable2"}) {
        auto g = catalog(name).algebra;
        Enveloping env(g);
        for (std::size_t a = 0; a < g.dim(); ++a) CHECK(env.antipode(env.j(a)) == env.j(a) * Rational(-1));
        Rng rng(9);
        for (int it = 0; it < 6; ++it) {
            // S(uv) = (-1)^{p(u)p(v)} S(v) S(u) on monomials
            auto mons = monomials_upto(g.parities(), 2);
            std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
            auto mu = mons[pick(rng)], mv = mons[pick(rng)];
            auto u = env.monomial(mu), v = env.monomial(mv);
            CHECK(env.antipode(env.multiply(u, v)) ==
                  env.multiply(env.antipode(v), env.antipode(u)) * Rational(koszul(env.parity(mu), env.parity(mv))));
            // m (S (x) id) Delta = counit
            Pbw conv;
            for (const auto& [t, c] : env.coproduct(u))
                conv += env.multiply(env.antipode(env.monomial(t.first)), env.monomial(t.second)) * c;
            CHECK(conv == (mono::total_degree(mu) == 0 ? env.one() : Pbw()));
        }
    }
}

TEST_CASE("twisted adjoint action") {
    auto sp = catalog("osp12").pair();
    auto env = Enveloping::of_pair(sp);
    const auto& g = sp.algebra();
    for (std::size_t b = 0; b < sp.nq(); ++b) CHECK(env.twisted_adjoint(b, env.one()) == env.j(b) * Rational(2));
    for (std::size_t a = sp.nq(); a < g.dim(); ++a) CHECK(env.twisted_adjoint(a, env.one()).is_zero());
    Rng rng(21);
    for (int it = 0; it < 4; ++it) {
        auto u = random_pbw(env, rng, 2);
        for (std::size_t a = sp.nq(); a < g.dim(); ++a) {
            Pbw ord;
            for (const auto& [m, c] : u.terms())
                ord += super_commutator(env, env.j(a), g.parity(a), env.monomial(m, c), env.parity(m));
            CHECK(env.twisted_adjoint(a, u) == ord);
        }
        // representation property
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b) {
                Pbw lhs;
                const auto& v = g.bracket(a, b);
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (!v[k].is_zero()) lhs += env.twisted_adjoint(k, u) * v[k];
                auto rhs = env.twisted_adjoint(a, env.twisted_adjoint(b, u)) -
                           env.twisted_adjoint(b, env.twisted_adjoint(a, u)) *
                               Rational(koszul(g.parity(a), g.parity(b)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("gamma scales symmetrized q-monomials by 2^n") {
    for (const char* name : {"osp12", "gl11", "heisenberg_super", "solvable2", "abelian(1,2)"}) {
        auto sp = catalog(name).pair();
        auto env = Enveloping::of_pair(sp);
        CAPTURE(name);
        CHECK(env.gamma(env.one()) == env.one());
        for (const auto& wq : monomials_upto(sp.q_parities(), 3)) {
            Monomial w(sp.algebra().dim(), 0);
            std::copy(wq.begin(), wq.end(), w.begin());
            int n = mono::total_degree(w);
            CHECK(env.gamma(env.symmetrize(w)) == env.symmetrize(w) * Rational(1 << n));
            // beta(S(q)) is stable under ad'
            for (std::size_t a = 0; a < sp.algebra().dim(); ++a)
                for (const auto& [m, c] : env.factorize(env.twisted_adjoint(a, env.symmetrize(w))))
                    CHECK(env.is_pure_q(m));
        }
    }
}

TEST_CASE("quotient by U(g)h and factorization") {
    auto sp = catalog("osp12").pair();
    auto env = Enveloping::of_pair(sp);
    const auto& g = sp.algebra();
    for (std::size_t a = sp.nq(); a < g.dim(); ++a) {
        CHECK(env.quotient_mod_h(env.j(a)).is_zero());
        for (std::size_t b = 0; b < sp.nq(); ++b)
            CHECK(env.quotient_mod_h(env.multiply(env.j(b), env.j(a))).is_zero());
    }
    for (const auto& wq : monomials_upto(sp.q_parities(), 2)) {
        Monomial w(g.dim(), 0);
        std::copy(wq.begin(), wq.end(), w.begin());
        auto coords = env.factorize(env.symmetrize(w));
        CHECK(coords == std::map<PbwMonomial, Rational>{{w, Rational(1)}});
    }
    Rng rng(4);
    for (int it = 0; it < 10; ++it) {
        auto u = random_pbw(env, rng, 4);
        Pbw back;
        for (const auto& [m, c] : env.factorize(u)) {
            Monomial wq = m, mh = m;
            std::fill(wq.begin() + 2, wq.end(), 0);
            std::fill(mh.begin(), mh.begin() + 2, 0);
            back += env.multiply(env.symmetrize(wq), env.monomial(mh)) * c;
        }
        CHECK(back == u);
    }
    Pbw big = env.one();
    for (int k = 0; k < 7; ++k) big = env.multiply(big, env.j(2));
    CHECK_THROWS_AS(env.factorize(big), DegreeOverflow);
}

TEST_CASE("beta as exp(j) at the generic point") {
    // The coefficient functions of j(y)^n / n! pair with w in S^n(g) to beta(w).
    for (const char* name : {"osp12", "heisenberg_super"}) {
        auto g = catalog(name).algebra;
        Enveloping env(g);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < g.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
        const int N = 3;
        auto t = make_table(names, g.parities(), N);
        PbwElement<SuperPolynomial> y;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            Monomial m(g.dim(), 0);
            m[i] = 1;
            y.add_term(m, SuperPolynomial::variable(t, i));
        }
        PbwElement<SuperPolynomial> pw;
        pw.add_term(Monomial(g.dim(), 0), SuperPolynomial(t, Rational(1)));
        for (int n = 1; n <= N; ++n) {
            pw = env.multiply(pw, y);
            for (const auto& w : monomials_upto(g.parities(), n)) {
                if (mono::total_degree(w) != n) continue;
                SuperPolynomial::Terms wt{{w, Rational(1)}};
                Pbw paired;
                for (const auto& [m, f] : pw.terms())
                    paired.add_term(m, pairing(f.terms(), wt, g.parities()) * factorial(n).inverse());
                CHECK(paired == env.symmetrize(w));
            }
        }
    }
}
