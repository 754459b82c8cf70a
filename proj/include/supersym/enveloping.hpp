#pragma once

#include "supersym/liealg.hpp"
#include "supersym/random.hpp"
#include "supersym/superpoly.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace supersym {

// Exponents over the ordered basis of g; odd exponents are 0 or 1.
using PbwMonomial = Monomial;
// A product j(e_{w_1}) ... j(e_{w_n}) in arbitrary order.
using Word = std::vector<std::size_t>;

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static bool is_zero(const Rational& s) { return s.is_zero(); }
    // Moving s to the right past something of parity p.
    static Rational commute(const Rational& s, Parity) { return s; }
};

template <>
struct ScalarOps<SuperPolynomial> {
    static bool is_zero(const SuperPolynomial& s) { return s.is_zero(); }
    static SuperPolynomial commute(const SuperPolynomial& s, Parity p) {
        return p == Parity::Odd ? s.even_part() - s.odd_part() : s;
    }
};

// Element of U(g) (x) S in PBW normal form with scalars on the right:
// sum m s. S is Rational or SuperPolynomial.
template <class S>
class PbwElement {
public:
    using Terms = std::map<PbwMonomial, S>;

    PbwElement() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const PbwMonomial& m, const S& s) {
        if (ScalarOps<S>::is_zero(s)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, s);
            return;
        }
        it->second += s;
        if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }

    PbwElement& operator+=(const PbwElement& o) {
        for (const auto& [m, s] : o.terms_) add_term(m, s);
        return *this;
    }
    PbwElement& operator-=(const PbwElement& o) {
        for (const auto& [m, s] : o.terms_) add_term(m, s * Rational(-1));
        return *this;
    }
    PbwElement& operator*=(const Rational& c) {
        if (c.is_zero()) terms_.clear();
        for (auto& [m, s] : terms_) s *= c;
        return *this;
    }
    friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
    friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
    friend PbwElement operator*(PbwElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }

    int max_degree() const {
        int d = -1;
        for (const auto& [m, s] : terms_) d = std::max(d, mono::total_degree(m));
        return d;
    }

private:
    Terms terms_;
};

using Pbw = PbwElement<Rational>;
// sum c (left (x) right) with both legs normal-ordered.
using PbwTensor = std::map<std::pair<PbwMonomial, PbwMonomial>, Rational>;

class DegreeOverflow : public std::runtime_error {
public:
    DegreeOverflow(int degree, int bound)
        : std::runtime_error("element of degree " + std::to_string(degree) + " exceeds the prepared bound " +
                             std::to_string(bound)) {}
};

// U(g) for an algebra whose first nq basis elements span q (the rest span
// h). The normal-form and factorization caches are filled lazily and are
// guarded by a mutex; everything else is a pure function of the algebra.
class Enveloping {
public:
    explicit Enveloping(LieSuperAlgebra g, std::size_t nq = 0, int degree_bound = 6);
    static Enveloping of_pair(const SymmetricPair& sp, int degree_bound = 6);

    const LieSuperAlgebra& algebra() const { return g_; }
    std::size_t nq() const { return nq_; }
    int degree_bound() const { return degree_bound_; }
    Parity parity(const PbwMonomial& m) const { return mono::parity(m, g_.parities()); }
    bool is_pure_q(const PbwMonomial& m) const;

    Pbw one() const;
    Pbw j(std::size_t i) const;
    Pbw j(const RatVector& v) const;
    Pbw monomial(const PbwMonomial& m, const Rational& c = Rational(1)) const;

    // Leftmost-inversion rewriting, memoized per word.
    Pbw normal_form(const Word& w) const;
    // Rewriting with the violation to fix chosen uniformly at random at each
    // step; used to test confluence.
    Pbw normal_form_random(const Word& w, Rng& rng) const;

    template <class S>
    PbwElement<S> multiply(const PbwElement<S>& a, const PbwElement<S>& b) const;
    Pbw multiply(const Pbw& a, const Pbw& b) const { return multiply<Rational>(a, b); }

    // Algebra morphism with primitive generators.
    PbwTensor coproduct(const Pbw& u) const;
    PbwTensor tensor(const Pbw& a, const Pbw& b) const;
    // Anti-morphism with S(j(a)) = -j(a).
    Pbw antipode(const Pbw& u) const;

    // beta of a monomial of S(g) over the same basis.
    Pbw symmetrize(const Monomial& w) const;
    Pbw symmetrize(const SuperPolynomial::Terms& w) const;

    // ad'(a)(u) = a u - (-1)^{p(a)p(u)} u sigma(a).
    Pbw twisted_adjoint(std::size_t a, const Pbw& u) const;
    // ad'(u)(1), ad' extended to U(g).
    Pbw gamma(const Pbw& u) const;

    // Projection on the span of pure-q PBW monomials, which is a complement
    // of U(g)h because every other normal monomial ends with an h letter.
    Pbw quotient_mod_h(const Pbw& u) const;
    // Coordinates of u in the basis beta(w) m_h (w in S(q), m_h a PBW monomial
    // of U(h)); the key is the monomial with q-part w and h-part m_h.
    std::map<PbwMonomial, Rational> factorize(const Pbw& u) const;

    std::string render(const Pbw& u) const;
    std::string render(const PbwMonomial& m) const;

private:
    std::vector<std::size_t> first_violation(const Word& w) const;
    std::vector<std::size_t> violations(const Word& w) const;
    Pbw rewrite_at(const Word& w, std::size_t i, const std::function<Pbw(const Word&)>& rec) const;
    const Pbw& factor_basis(const PbwMonomial& m) const;

    LieSuperAlgebra g_;
    std::size_t nq_;
    int degree_bound_;
    mutable std::mutex mu_;
    mutable std::map<Word, Pbw> nf_cache_;
    mutable std::map<PbwMonomial, Pbw> factor_cache_;
};

template <class S>
PbwElement<S> Enveloping::multiply(const PbwElement<S>& a, const PbwElement<S>& b) const {
    PbwElement<S> out;
    for (const auto& [m1, s1] : a.terms()) {
        Word w1 = mono::letters(m1);
        for (const auto& [m2, s2] : b.terms()) {
            Word w = w1;
            auto w2 = mono::letters(m2);
            w.insert(w.end(), w2.begin(), w2.end());
            S coef = ScalarOps<S>::commute(s1, parity(m2)) * s2;
            const Pbw nf = normal_form(w);
            for (const auto& [m, c] : nf.terms()) out.add_term(m, coef * c);
        }
    }
    return out;
}

}  // namespace supersym
