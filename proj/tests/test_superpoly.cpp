#include "doctest.h"
#include "supersym/random.hpp"
#include "supersym/superpoly.hpp"

#include <algorithm>
#include <numeric>

using namespace supersym;

namespace {

TablePtr odd_table(std::size_t q) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= q; ++i) names.push_back("x" + std::to_string(i));
    return make_table(names, std::vector<Parity>(q, Parity::Odd));
}

TablePtr mixed_table(int order = 6) {
    return make_table({"t", "s", "x1", "x2"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}, order);
}

SuperPolynomial var(const TablePtr& t, const std::string& n) { return SuperPolynomial::variable(t, n); }

int parity_bit(const SuperPolynomial& p) { return p.grading() == Grading::Odd ? 1 : 0; }

}  // namespace

TEST_CASE("variable table invariants") {
    CHECK_THROWS(make_table({"a", "a"}, {Parity::Odd, Parity::Odd}));
    CHECK_THROWS(make_table({"t"}, {Parity::Even}));
    CHECK_NOTHROW(make_table({"t"}, {Parity::Even}, 3));
    CHECK_NOTHROW(make_table({"x"}, {Parity::Odd}));
}

TEST_CASE("multiply: odd letters") {
    auto t = odd_table(2);
    auto x1 = var(t, "x1"), x2 = var(t, "x2");
    CHECK((x1 * x2).str() == "x1*x2");
    CHECK((x2 * x1).str() == "-x1*x2");
    CHECK(x2 * x1 == -(x1 * x2));
    CHECK((x1 * x1).is_zero());
    auto other = odd_table(2);
    CHECK_THROWS_AS(x1 * var(other, "x1"), TableMismatch);
}

TEST_CASE("multiply: truncation discards even overflow") {
    auto t = make_table({"t", "x"}, {Parity::Even, Parity::Odd}, 2);
    auto tt = var(t, "t");
    CHECK((tt * tt).str() == "t^2");
    CHECK((tt * tt * tt).is_zero());
    // odd letters do not count toward the truncation order
    CHECK((tt * tt * var(t, "x")).str() == "t^2*x");
}

TEST_CASE("partial derivatives") {
    auto t = odd_table(2);
    auto x1 = var(t, "x1"), x2 = var(t, "x2");
    CHECK((x1 * x2).partial_derivative("x1") == x2);
    CHECK((x1 * x2).partial_derivative("x2") == -x1);
    auto e = make_table({"t"}, {Parity::Even}, 5);
    auto tt = var(e, "t");
    CHECK((tt * tt * tt).partial_derivative("t") == tt * tt * Rational(3));
    CHECK_THROWS_AS(x1.partial_derivative("y"), UnknownVariable);
}

TEST_CASE("berezin integral") {
    for (std::size_t q = 1; q <= 4; ++q) {
        auto t = odd_table(q);
        SuperPolynomial desc(t, Rational(1));
        for (std::size_t i = q; i-- > 0;) desc = desc * SuperPolynomial::variable(t, i);
        CHECK(berezin_integral(desc) == Rational(1));
        CHECK(berezin_integral(SuperPolynomial(t, Rational(1))) == Rational(0));
    }
    auto t = odd_table(2);
    auto p = var(t, "x1") * var(t, "x2") * Rational(3);
    // oracle: compose the two derivatives by hand
    Rational oracle = p.partial_derivative("x2").partial_derivative("x1").evaluate_at_zero();
    CHECK(berezin_integral(p) == oracle);
    CHECK(berezin_integral(p) == Rational(-3));
    CHECK_THROWS(berezin_integral(SuperPolynomial(mixed_table(), Rational(1))));
}

TEST_CASE("evaluate at zero") {
    auto t = odd_table(2);
    CHECK((SuperPolynomial(t, Rational(1)) + var(t, "x1") * var(t, "x2")).evaluate_at_zero() == Rational(1));
    CHECK(var(t, "x1").evaluate_at_zero() == Rational(0));
    CHECK(SuperPolynomial(t, Rational(5, 7)).evaluate_at_zero() == Rational(5, 7));
}

TEST_CASE("rendering") {
    auto t = odd_table(2);
    auto p = SuperPolynomial(t, Rational(1)) + var(t, "x1") * var(t, "x2") * Rational(1, 24);
    CHECK(p.str() == "1 + 1/24 x1*x2");
    CHECK((var(t, "x2") - var(t, "x1")).str() == "-x1 + x2");
    CHECK(SuperPolynomial(t).str() == "0");
}

TEST_CASE("supercommutativity, associativity and Leibniz on random inputs") {
    auto t = mixed_table(6);
    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        Parity pa = parity_of_bit(it % 2), pb = parity_of_bit((it / 2) % 2);
        auto a = random_superpoly(t, rng, 4, 3, pa);
        auto b = random_superpoly(t, rng, 4, 3, pb);
        auto c = random_superpoly(t, rng, 4, 3);
        CHECK(a * b == (b * a) * Rational(koszul(pa, pb)));
        CHECK((a * b) * c == a * (b * c));
        for (std::size_t v = 0; v < t->size(); ++v) {
            int s = (bit(t->parity(v)) && bit(pa)) ? -1 : 1;
            CHECK((a * b).partial_derivative(v) ==
                  a.partial_derivative(v) * b + (a * b.partial_derivative(v)) * Rational(s));
        }
    }
}

TEST_CASE("berezin integral under reordering of the differentiation sequence") {
    // Differentiating in permuted order multiplies the result by the sign of
    // the permutation of the odd letters.
    for (std::size_t q = 1; q <= 4; ++q) {
        auto t = odd_table(q);
        Rng rng(q);
        auto p = random_superpoly(t, rng, 8, static_cast<int>(q));
        std::vector<std::size_t> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            SuperPolynomial r = p;
            for (std::size_t k = q; k-- > 0;) r = r.partial_derivative(perm[k]);
            int s = mono::sort_sign(perm, t->parities());
            CHECK(r.evaluate_at_zero() * Rational(s) == berezin_integral(p));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("Berezin integral pairs the derivative top form with the top monomial of the dual") {
    // For w = (-1)^q e1...eq in the symmetric algebra on odd letters, the
    // linear form phi' -> int d1...dq (phi phi') agrees with phi' -> (w phi)(phi'),
    // where w phi is the right module action and w(f) = (-1)^{p(w)p(f)} f(w).
    for (std::size_t q = 1; q <= 4; ++q) {
        auto t = odd_table(q);
        const auto& par = t->parities();
        Monomial top(q, 1);
        SuperPolynomial::Terms w0{{top, Rational(q % 2 ? -1 : 1)}};
        for (unsigned a = 0; a < (1u << q); ++a) {
            Monomial ma(q, 0);
            for (std::size_t i = 0; i < q; ++i) ma[i] = (a >> i) & 1;
            auto phi = SuperPolynomial::monomial(t, ma, Rational(1));
            int pphi = parity_bit(phi);
            auto u = contract(phi.terms(), w0, par);
            if (pphi && (q % 2)) for (auto& [m, c] : u) c = -c;
            for (unsigned b = 0; b < (1u << q); ++b) {
                Monomial mb(q, 0);
                for (std::size_t i = 0; i < q; ++i) mb[i] = (b >> i) & 1;
                auto phi2 = SuperPolynomial::monomial(t, mb, Rational(1));
                SuperPolynomial prod = phi * phi2;
                SuperPolynomial lhs = prod;
                for (std::size_t k = q; k-- > 0;) lhs = lhs.partial_derivative(k);
                int pu = (static_cast<int>(q) + pphi) & 1;
                Rational rhs = pairing(phi2.terms(), u, par);
                if (pu && parity_bit(phi2)) rhs = -rhs;
                CHECK(lhs.evaluate_at_zero() == rhs);
            }
        }
    }
}

TEST_CASE("interior product is a module action") {
    for (std::size_t q = 1; q <= 3; ++q) {
        auto t = odd_table(q);
        const auto& par = t->parities();
        Rng rng(100 + q);
        for (int it = 0; it < 30; ++it) {
            auto f1 = random_superpoly(t, rng, 3, static_cast<int>(q));
            auto f2 = random_superpoly(t, rng, 3, static_cast<int>(q));
            auto w = random_superpoly(t, rng, 4, static_cast<int>(q));
            CHECK(contract((f1 * f2).terms(), w.terms(), par) ==
                  contract(f1.terms(), contract(f2.terms(), w.terms(), par), par));
        }
        SuperPolynomial::Terms d{{Monomial(q, 1), Rational(1)}};
        CHECK(contract(SuperPolynomial(t, Rational(1)).terms(), d, par) == d);
    }
}

TEST_CASE("coproduct splitting of monomials") {
    auto par = std::vector<Parity>{Parity::Odd, Parity::Odd, Parity::Even};
    // e1 e2: e1e2 (x) 1 + e1 (x) e2 - e2 (x) e1 + 1 (x) e1e2
    int count = 0;
    mono::for_each_split(Monomial{1, 1, 0}, par, [&](const Rational& c, const Monomial& l, const Monomial& r) {
        ++count;
        if (l == Monomial{0, 1, 0}) CHECK(c == Rational(-1));
        else CHECK(c == Rational(1));
        CHECK(mono::add(l, r) == Monomial{1, 1, 0});
    });
    CHECK(count == 4);
    Rational total(0);
    mono::for_each_split(Monomial{0, 0, 3}, par, [&](const Rational& c, const Monomial&, const Monomial&) { total += c; });
    CHECK(total == Rational(8));
}

TEST_CASE("exp, log and inverse on nilpotent elements") {
    auto t = mixed_table(5);
    Rng rng(7);
    for (int it = 0; it < 10; ++it) {
        auto n = random_superpoly(t, rng, 4, 2, Parity::Even, true);
        CHECK(log_unipotent(exp_nilpotent(n)) == n);
        auto u = SuperPolynomial(t, Rational(2)) + n;
        CHECK(u * inverse_even(u) == SuperPolynomial(t, Rational(1)));
    }
}
