#include "doctest.h"
#include "supersym/series.hpp"

using namespace supersym;

namespace {

TruncatedSeries1 sinh_series(int N) {
    TruncatedSeries1 s(N);
    for (int k = 1; k <= N; k += 2) s.at(k) = factorial(k).inverse();
    return s;
}

TruncatedSeries1 cosh_series(int N) {
    TruncatedSeries1 s(N);
    for (int k = 0; k <= N; k += 2) s.at(k) = factorial(k).inverse();
    return s;
}

// sh(x)/x to order N
TruncatedSeries1 sinhc_series(int N) { return sinh_series(N + 1).divided_by_t(); }

TruncatedSeries1 poly(std::vector<Rational> c) { return TruncatedSeries1(std::move(c)); }

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // oracle: t/(e^t - 1) by series division
    const int N = 14;
    auto gen = TruncatedSeries1::exp(N + 1);
    gen.at(0) = 0;
    auto p = gen.divided_by_t().reciprocal();
    for (int n = 0; n <= N; ++n) CHECK(p[n] * factorial(n) == bernoulli(n));
}

TEST_CASE("p_c coefficients") {
    auto p1 = p_c(1, 4);
    CHECK(p1 == poly({1, 0, Rational(1, 3), 0, Rational(-1, 45)}));
    CHECK(p_c(2, 2) == poly({2, 0, Rational(1, 6)}));
    CHECK(p_c(Rational(1, 3), 5)[1].is_zero());
    CHECK(p_c(7, 9).is_even());
    CHECK_THROWS_AS(p_c(0, 4), ZeroParameter);
    // oracle: c * cosh(x) / (sh(x)/x) at x = t/c
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3), Rational(-3, 2)}) {
        const int N = 12;
        auto oracle = (cosh_series(N) / sinhc_series(N)).substitute_scaled(c.inverse()) * c;
        CHECK(p_c(c, N) == oracle);
        CHECK(p_c(c, N)[2] == (Rational(3) * c).inverse());
        CHECK(p_c(c, N)[4] == -(Rational(45) * c.pow(3)).inverse());
    }
}

TEST_CASE("q_c coefficients") {
    CHECK(q_c(1, 3) == poly({0, Rational(-1, 2), 0, Rational(1, 24)}));
    CHECK(q_c(2, 3)[1] == Rational(-1, 4));
    CHECK(q_c(2, 6)[2].is_zero());
    CHECK(q_c(5, 11).is_odd());
    CHECK_THROWS_AS(q_c(0, 3), ZeroParameter);
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3)}) {
        const int N = 12;
        auto oracle = -(sinh_series(N) / cosh_series(N)).substitute_scaled((Rational(2) * c).inverse());
        CHECK(q_c(c, N) == oracle);
    }
}

TEST_CASE("w_c coefficients") {
    CHECK(w_c(1, 4) == poly({0, 0, Rational(1, 6), 0, Rational(-1, 180)}));
    CHECK(w_c(2, 4)[2] == Rational(1, 24));
    CHECK_THROWS_AS(w_c(0, 3), ZeroParameter);
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3)}) {
        const int N = 12;
        auto w = w_c(c, N);
        CHECK(w == series_log(sinhc_series(N)).substitute_scaled(c.inverse()));
        // w_c' = (p_c - c)/(c t)
        auto rhs = (p_c(c, N) - TruncatedSeries1::constant(c, N)).divided_by_t() * c.inverse();
        CHECK(w.derivative() == rhs);
    }
    // exp(w_1) reproduces sh(t)/t
    CHECK(series_exp(w_c(1, 10)) == sinhc_series(10));
}

TEST_CASE("composition") {
    const int N = 9;
    auto logp = TruncatedSeries1::log1p(N);
    auto e = compose(TruncatedSeries1::exp(N), logp);
    CHECK(e == poly({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    auto f = p_c(3, N);
    CHECK(compose(f, TruncatedSeries1::identity(N)) == f);
    CHECK_THROWS(compose(f, TruncatedSeries1::constant(1, N)));
}

TEST_CASE("divided differences") {
    auto d = divided_difference(poly({0, 0, 1, 0}), 2);
    CHECK(d.coeff(1, 0) == Rational(2));
    CHECK(d.coeff(0, 1) == Rational(1));
    CHECK(d.coeff(0, 0).is_zero());
    CHECK(d.coeff(2, 0).is_zero());
    auto one = divided_difference(poly({0, 1, 0}), 1);
    CHECK(one.coeff(0, 0) == Rational(1));
    CHECK(one.coeff(1, 0).is_zero());
    CHECK(divided_difference(TruncatedSeries1::constant(5, 4), 3).is_zero());
    CHECK(divided_difference_t(poly({0, 0, 1, 0}), 2).coeff(0, 1) == Rational(2));
}

TEST_CASE("symmetric functional equations") {
    const int N = 12;
    auto minus_t = -TruncatedSeries1::identity(N + 1);
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3)}) {
        auto rep = check_symmetric_equations(p_c(c, N + 1), minus_t, N);
        CHECK(rep.all_zero());
        CHECK(rep.residuals.size() == 3);
        CHECK(rep.residuals[0].value.order() == N);
    }
    CHECK(check_symmetric_equations(TruncatedSeries1(N + 1), TruncatedSeries1(N + 1), N).all_zero());
    auto bad = p_c(1, N + 1);
    bad.at(2) += 1;
    auto rep = check_symmetric_equations(bad, minus_t, N);
    CHECK_FALSE(rep.all_zero());
    CHECK(rep.residuals[0].value.is_zero());
    CHECK_FALSE(rep.residuals[1].value.is_zero());
    CHECK(rep.witness().rfind("symmetric-2", 0) == 0);
    CHECK_THROWS_AS(check_symmetric_equations(minus_t, minus_t, N), ParityViolation);
    CHECK_THROWS_AS(check_symmetric_equations(bad, bad, N), ParityViolation);
}

TEST_CASE("coinduced functional equations") {
    const int N = 12;
    auto one = TruncatedSeries1::constant(1, N + 1);
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3)}) {
        CHECK(check_coinduced_equations(one, q_c(c, N + 1), c, N).all_zero());
        // with h = 1 the coinduced-q residual is the single equation
        // (q(t+u)-q(t))/u p_c(u) + (q(t+u)-q(u))/t p_c(t) = q(t)q(u) - 1
        auto q = q_c(c, N + 1);
        auto p = p_c(c, N + 1);
        auto lhs = divided_difference(q, N) * TruncatedSeries2::in_u(p, N) +
                   divided_difference_t(q, N) * TruncatedSeries2::in_t(p, N);
        auto rhs = TruncatedSeries2::in_t(q, N) * TruncatedSeries2::in_u(q, N) -
                   TruncatedSeries2::in_t(TruncatedSeries1::constant(1, N), N);
        CHECK(lhs.truncated(N - 1) == rhs.truncated(N - 1));
    }
    CHECK(check_coinduced_equations(TruncatedSeries1(N + 1), TruncatedSeries1(N + 1), 1, N).all_zero());
    auto bad = q_c(1, N + 1);
    bad.at(3) += Rational(1, 7);
    auto rep = check_coinduced_equations(one, bad, 1, N);
    CHECK_FALSE(rep.all_zero());
    CHECK_THROWS_AS(check_coinduced_equations(one, one, 1, N), ParityViolation);
    CHECK_THROWS_AS(check_coinduced_equations(one, bad, 0, N), ZeroParameter);
}

TEST_CASE("differential equations and identities") {
    const int N = 12;
    // t p' + p(p - 1) = t^2 for p = p_1
    auto p = p_c(1, N);
    auto lhs = p.derivative().times_t() + p * (p - TruncatedSeries1::constant(1, N));
    auto t2 = TruncatedSeries1(N);
    t2.at(2) = 1;
    CHECK(lhs.truncated(N) == t2);
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3)}) {
        // c q' + q p_c / t = -1
        auto q = q_c(c, N + 1);
        auto pc = p_c(c, N + 1);
        auto rel = q.derivative() * c + (q * pc).divided_by_t();
        CHECK(rel.truncated(N - 1) == TruncatedSeries1::constant(-1, N - 1));
        // q_c(2t) = (p_c(t) - p_c(2t))/t
        auto left = q_c(c, N).substitute_scaled(2);
        auto right = (p_c(c, N + 1) - p_c(c, N + 1).substitute_scaled(2)).divided_by_t();
        CHECK(left == right);
        // scaling covariance: p_c(t) = c p_1(t/c)
        CHECK(p_c(c, N) == p_c(1, N).substitute_scaled(c.inverse()) * c);
    }
    // p(0) w' - (p - p(0))/t = 0, p = t/(e^t-1), w = log((1 - e^{-t})/t)
    auto em1 = TruncatedSeries1::exp(N + 2);
    em1.at(0) = 0;
    auto pp = em1.divided_by_t().reciprocal();
    auto one_minus_emt = -TruncatedSeries1::exp(N + 2).substitute_scaled(-1) + TruncatedSeries1::constant(1, N + 2);
    auto w = series_log(one_minus_emt.divided_by_t());
    auto miracle = w.derivative() * pp[0] - (pp - TruncatedSeries1::constant(pp[0], N + 1)).divided_by_t();
    CHECK(miracle.is_zero());
    CHECK(miracle.order() >= N);
    CHECK(exp_jacobian_residual(N).is_zero());
    CHECK(exp_jacobian_residual(N).order() == N);
    for (Rational c : {Rational(1), Rational(2), Rational(1, 3)}) CHECK(tanh_coth_residual(c, N).is_zero());
}

TEST_CASE("series rendering") {
    CHECK(p_c(1, 4).str() == "1 + 1/3 t^2 - 1/45 t^4 + O(t^5)");
    CHECK(q_c(1, 3).str() == "-1/2 t + 1/24 t^3 + O(t^4)");
}
