#include "doctest.h"
#include "supersym/catalog.hpp"
#include "supersym/jacobian.hpp"

#include <functional>

using namespace supersym;

namespace {

// str_q(ad^k y) as sum over index tuples of x^{i1}...x^{ik} str_q(ad e_i1 ... ad e_ik),
// the x's moved to the right with their Koszul signs.
SuperPolynomial str_power_by_tuples(const GenericPoint& gp, int k) {
    const auto& g = gp.algebra();
    const auto& t = gp.table();
    SuperPolynomial out(t);
    std::vector<std::size_t> tup(static_cast<std::size_t>(k), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == tup.size()) {
            Rational s = str_q_of(gp, tup);
            if (s.is_zero()) return;
            int sign = 1;
            for (std::size_t j = 0; j < tup.size(); ++j)
                for (std::size_t l = j + 1; l < tup.size(); ++l)
                    sign *= koszul(g.parity(tup[j]), g.parity(tup[l]));
            SuperPolynomial xs(t, Rational(1));
            for (auto i : tup) xs = xs * SuperPolynomial::variable(t, i);
            out += xs * (s * Rational(sign));
            return;
        }
        for (std::size_t i = 0; i < gp.nvars(); ++i) {
            tup[pos] = i;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

SuperPolynomial degree_part(const SuperPolynomial& p, int d) { return p.homogeneous_part(d); }

}  // namespace

TEST_CASE("generic point") {
    auto gp = GenericPoint::of_pair(catalog("osp12").pair());
    CHECK(gp.nvars() == 2);
    CHECK(gp.purely_odd());
    CHECK_FALSE(gp.order().has_value());
    for (const auto& v : gp.y()) CHECK(v.grading() != Grading::Inhomogeneous);
    CHECK(gp.ad_y().is_homogeneous());
    auto gs = GenericPoint::of_algebra(catalog("solvable2").algebra, 5);
    CHECK(gs.order() == 5);
    CHECK(gs.nvars() == 2);
}

TEST_CASE("supertraces of powers of ad y") {
    auto ab = GenericPoint::of_pair(catalog("abelian(1,2)").pair());
    for (int k = 2; k <= 4; k += 2) CHECK(str_ad_power(ab, k).is_zero());
    CHECK(str_ad_power(ab, 0) == SuperPolynomial(ab.table(), Rational(-2)));
    CHECK_THROWS(str_ad_power(ab, 1));

    for (const char* name : {"osp12", "gl11", "heisenberg_super", "gl21", "solvable2"}) {
        auto gp = GenericPoint::of_pair(catalog(name).pair(), 5);
        CAPTURE(name);
        for (int k = 0; k <= 4; k += 2) {
            if (gp.nvars() > 3 && k > 2) continue;
            auto s = str_ad_power(gp, k);
            CHECK(s == str_power_by_tuples(gp, k));
            CHECK(s == degree_part(s, k));
        }
    }
    auto osp = GenericPoint::of_pair(catalog("osp12").pair());
    auto s2 = str_ad_power(osp, 2);
    CHECK(s2.term_count() == 1);
    CHECK(s2.coefficient(Monomial{1, 1}) == str_q_of(osp, {1, 0}) - str_q_of(osp, {0, 1}));
}

TEST_CASE("jacobian J_c") {
    auto ab = GenericPoint::of_pair(catalog("abelian(1,2)").pair());
    CHECK(jacobian_Jc(ab, 2, 6).J == SuperPolynomial(ab.table(), Rational(1)));
    CHECK_THROWS_AS(jacobian_Jc(ab, 0, 6), ZeroParameter);

    for (const char* name : {"osp12", "gl11", "heisenberg_super", "gl21", "solvable2"}) {
        auto gp = GenericPoint::of_pair(catalog(name).pair(), 6);
        CAPTURE(name);
        auto j2 = jacobian_Jc(gp, 2, 6);
        CHECK(j2.J.evaluate_at_zero() == Rational(1));
        CHECK(degree_part(j2.J, 2) == str_ad_power(gp, 2) * Rational(1, 24));
        auto j1 = jacobian_Jc(gp, 1, 6);
        auto s2 = str_ad_power(gp, 2);
        auto s4 = str_ad_power(gp, 4);
        CHECK(degree_part(j1.J, 4) == s4 * Rational(-1, 180) + (s2 * s2).homogeneous_part(4) * Rational(1, 72));
        // scaling: degree-k part of J_c is c^{-k} times that of J_1
        for (Rational c : {Rational(2), Rational(1, 3), Rational(-3, 2)}) {
            auto jc = jacobian_Jc(gp, c, 6).J;
            for (int k = 0; k <= 6; ++k) CHECK(degree_part(jc, k) == degree_part(j1.J, k) * c.pow(-k));
            for (int k = 1; k <= 5; k += 2) CHECK(degree_part(jc, k).is_zero());
        }
        if (gp.purely_odd()) CHECK(j1.J.max_total_degree() <= static_cast<int>(gp.nvars()));
        // block Berezinian route
        for (Rational c : {Rational(1), Rational(2)}) CHECK(jacobian_Jc_block(gp, c, 6) == jacobian_Jc(gp, c, 6).J);
    }
}

TEST_CASE("closed form for q of rank (0,2)") {
    for (const char* name : {"osp12", "gl11", "heisenberg_super", "abelian(0,2)"}) {
        auto gp = GenericPoint::of_pair(catalog(name).pair());
        CAPTURE(name);
        CHECK(jacobian_J2_q2(gp) == jacobian_Jc(gp, 2, 2).J);
    }
    auto ab = GenericPoint::of_pair(catalog("abelian(0,2)").pair());
    CHECK(jacobian_J2_q2(ab) == SuperPolynomial(ab.table(), Rational(1)));
    auto osp = GenericPoint::of_pair(catalog("osp12").pair());
    CHECK_FALSE(jacobian_J2_q2(osp) == SuperPolynomial(osp.table(), Rational(1)));
    CHECK_THROWS(jacobian_J2_q2(GenericPoint::of_pair(catalog("gl21").pair())));
}

TEST_CASE("full-group jacobian") {
    auto one = jacobian_full_group(catalog("abelian(1,2)").algebra, 6);
    CHECK(one.term_count() == 1);
    CHECK(one.evaluate_at_zero() == Rational(1));
    auto g = catalog("solvable2").algebra;
    const int N = 6;
    auto J = jacobian_full_group(g, N);
    auto gp = GenericPoint::of_algebra(g, N);
    // independent route: determinant of the truncated matrix series
    TruncatedSeries1 f(N + 1);
    for (int k = 0; k <= N + 1; ++k) f.at(k) = factorial(k + 1).inverse() * Rational(k % 2 ? -1 : 1);
    auto m = apply_series(f, gp.ad_y());
    std::vector<std::vector<SuperPolynomial>> rows{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
    CHECK(J.rebased(gp.table()) == determinant(rows, gp.table()));
    // closed form (1 - e^{-x1}) / x1 in the dual variable of x
    auto x1 = SuperPolynomial::variable(gp.table(), g.index_of("x").value());
    SuperPolynomial closed(gp.table());
    for (int k = 0; k <= N; ++k) closed += power(x1, k) * f[k];
    CHECK(J.rebased(gp.table()) == closed);
    // degree-one term is -1/2 str(ad x)
    for (const char* name : {"solvable2", "solvable11", "gl11", "osp12"}) {
        auto h = catalog(name).algebra;
        auto p = GenericPoint::of_algebra(h, 4);
        CHECK(jacobian_full_group(h, 4).homogeneous_part(1).rebased(p.table()) == str_ad_power(p, 1) * Rational(-1, 2));
    }
}

TEST_CASE("divergence identity") {
    const int N = 4;
    for (const char* name : {"abelian(1,2)", "solvable2", "solvable11", "osp12", "gl11"}) {
        auto g = catalog(name).algebra;
        auto gp = GenericPoint::of_algebra(g, N);
        CAPTURE(std::string(name));
        std::vector<Rational> t2(11, Rational(0));
        t2[2] = 1;
        std::vector<TruncatedSeries1> series{TruncatedSeries1(t2), p_c(1, 10), q_c(2, 10), TruncatedSeries1::exp(10)};
        for (const auto& p : series)
            for (std::size_t a = 0; a < g.dim(); ++a) CHECK(divergence_check(gp, p, a, N).is_zero());
    }
    auto osp = GenericPoint::of_pair(catalog("osp12").pair());
    for (std::size_t a = 0; a < osp.nvars(); ++a) CHECK(divergence_check(osp, p_c(1, 6), a, N).is_zero());
}

TEST_CASE("key identity") {
    const int N = 4;
    for (const char* name : {"abelian(1,2)", "osp12", "gl11", "heisenberg_super", "gl21", "solvable2", "solvable11"}) {
        auto sp = catalog(name).pair();
        auto gp = GenericPoint::of_pair(sp, N);
        CAPTURE(name);
        for (Rational c : {Rational(1), Rational(2)})
            for (std::size_t a = 0; a < sp.algebra().dim(); ++a) {
                CAPTURE(a);
                CHECK(key_identity_check(gp, c, a, N).is_zero());
            }
    }
}

TEST_CASE("gorelik candidate") {
    auto ab = catalog("abelian(1,2)").pair();
    auto ea = Enveloping::of_pair(ab);
    auto ga = gorelik_candidate(ab, ea);
    CHECK(ga.element == (ea.multiply(ea.j(0), ea.j(1)) - ea.multiply(ea.j(1), ea.j(0))) * Rational(1, 2));
    for (const char* name : {"osp12", "gl11", "heisenberg_super", "abelian(0,2)"}) {
        auto sp = catalog(name).pair();
        auto env = Enveloping::of_pair(sp);
        CAPTURE(name);
        auto r = gorelik_candidate(sp, env);
        CHECK(r.unimodular);
        CHECK(r.element == gorelik_closed_form_q2(sp, env));
    }
    auto s11 = catalog("solvable11").pair();
    auto e11 = Enveloping::of_pair(s11);
    auto bad = gorelik_candidate(s11, e11);
    CHECK_FALSE(bad.unimodular);
    CHECK(bad.failing_value == Rational(-1));
    CHECK_THROWS(gorelik_candidate(catalog("solvable2").pair(), Enveloping::of_pair(catalog("solvable2").pair())));
}
