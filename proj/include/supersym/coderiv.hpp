#pragma once

#include "supersym/enveloping.hpp"
#include "supersym/liealg.hpp"
#include "supersym/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supersym {

// Elements of S(q) are super-polynomials whose letters are the q basis
// elements of a symmetric pair (same names, same parities).
using SqElement = SuperPolynomial;

// Letters of S(q); even letters need a degree bound.
TablePtr sq_table(const SymmetricPair& sp, int degree_bound = 8);
// Monomials of S(q) of total degree <= D, in increasing degree.
std::vector<Monomial> sq_monomials(const SymmetricPair& sp, int D);
// The monomial w of S(q) seen as a monomial of S(g).
Monomial to_g_monomial(const SymmetricPair& sp, const Monomial& w);

// p(ad y)(a) evaluated at w = b_1...b_n:
// (-1)^{p(a)p(w)} p_n sum_s eps(s) ad b_s(1) ... ad b_s(n) (a).
RatVector apply_radx(const SymmetricPair& sp, const TruncatedSeries1& p, std::size_t a, const Monomial& w);

// The coderivation c_alpha(w) = sum alpha(w_i) w'_i for alpha = p(ad y)(a)
// when a is in q and alpha = d(ad y)(a) when a is in h.
SqElement coderivation(const SymmetricPair& sp, const TruncatedSeries1& p, const TruncatedSeries1& d, std::size_t a,
                       const SqElement& w);
// C_c^a: (p, d) = (p_c, -t); for a in h the derivation extending b -> [a,b].
SqElement coderivation_C(const SymmetricPair& sp, const Rational& c, std::size_t a, const SqElement& w);
SqElement coderivation_C(const SymmetricPair& sp, const Rational& c, const RatVector& a, const SqElement& w);

struct CheckResult {
    bool ok = true;
    std::string witness;
    std::size_t checked = 0;
};

// [C^a, C^b](w) = C^{[a,b]}(w) for all basis pairs and monomials of degree <= D.
CheckResult check_representation(const SymmetricPair& sp, const Rational& c, int D);
CheckResult check_representation(const SymmetricPair& sp, const TruncatedSeries1& p, const TruncatedSeries1& d,
                                 int D);

// tau(u) = C_1^u(1).
SqElement tau(const SymmetricPair& sp, const Pbw& u, const TablePtr& table);

// One-dimensional representation of h, given by its value on each h basis
// element (in the pair's order).
class Character {
public:
    Character(const SymmetricPair& sp, std::vector<Rational> values);
    static Character trivial(const SymmetricPair& sp);
    // a -> str_q(ad a)
    static Character str_g_mod_h(const SymmetricPair& sp);

    const std::vector<Rational>& values() const { return values_; }
    // chi of the h-component of v (v over the whole basis of g).
    Rational operator()(const RatVector& v) const;
    // chi on the PBW monomial of U(h) given by the h exponents of m.
    Rational on_monomial(const PbwMonomial& m) const;
    bool is_trivial() const;

private:
    std::size_t nq_;
    std::vector<Rational> values_;
};

// Theta_{c,chi}^a on S(q) (x) V with V one-dimensional, identified with S(q).
SqElement theta_action(const SymmetricPair& sp, const Rational& c, const Character& chi, std::size_t a,
                       const SqElement& w);
// Same with q_c replaced by an arbitrary odd series.
SqElement theta_action(const SymmetricPair& sp, const Rational& c, const TruncatedSeries1& q, const Character& chi,
                       std::size_t a, const SqElement& w);

// Compares Theta_{1,chi} with left multiplication in U(g) (x)_h V_chi on all
// basis elements and monomials of degree <= D.
CheckResult check_theta_vs_induced(const SymmetricPair& sp, const Enveloping& env, const Character& chi, int D);
CheckResult check_theta_vs_induced(const SymmetricPair& sp, const Enveloping& env, const Character& chi, int D,
                                   const TruncatedSeries1& q);

// ad'(a) T = 0 for every basis element a; T must lie in beta(S(q)).
CheckResult verify_twisted_invariance(const Enveloping& env, const Pbw& T);

struct InvariantSpace {
    std::vector<Monomial> monomials;  // S(q) monomials indexing coordinates
    std::vector<RatVector> basis;     // null-space basis in those coordinates
    std::vector<Pbw> elements;        // sum_j x_j beta(w_j)
};

// ad'-invariants inside beta(S(q)) for purely odd q.
InvariantSpace invariant_space(const SymmetricPair& sp, const Enveloping& env);

// lambda with a = lambda b, if it exists (b nonzero).
std::optional<Rational> scalar_ratio(const Pbw& a, const Pbw& b);

}  // namespace supersym
