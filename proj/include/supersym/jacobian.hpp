#pragma once

#include "supersym/enveloping.hpp"
#include "supersym/liealg.hpp"
#include "supersym/series.hpp"
#include "supersym/supermatrix.hpp"

#include <optional>
#include <vector>

namespace supersym {

// y = sum_{i < nvars} e_i x^i in g (x) F, the variables x^i being dual to the
// first nvars basis elements (q for a symmetric pair, all of g otherwise).
class GenericPoint {
public:
    static GenericPoint of_pair(const SymmetricPair& sp, int order = 6);
    static GenericPoint of_algebra(const LieSuperAlgebra& g, int order = 6);

    const LieSuperAlgebra& algebra() const { return g_; }
    std::size_t nvars() const { return nvars_; }
    bool is_pair() const { return pair_; }
    const TablePtr& table() const { return table_; }
    const GVec& y() const { return y_; }
    // Truncation order of the even variables, if any.
    std::optional<int> order() const { return table_->truncation_order(); }
    bool purely_odd() const { return table_->odd_count() == table_->size(); }

    const SuperMatrix& ad_y() const { return ad_y_; }
    std::vector<std::size_t> var_indices() const;
    // The same point over a table of another truncation order.
    GenericPoint with_order(int order) const;

private:
    GenericPoint(LieSuperAlgebra g, std::size_t nvars, bool pair, int order);

    LieSuperAlgebra g_;
    std::size_t nvars_;
    bool pair_;
    TablePtr table_;
    GVec y_;
    SuperMatrix ad_y_;
};

// str over the variable block of (ad y)^k. For a symmetric pair k must be
// even, since odd powers exchange q and h.
SuperPolynomial str_ad_power(const GenericPoint& gp, int k);

struct JacobianResult {
    SuperPolynomial J;
    Rational c;
    int order = 0;
    std::vector<SuperPolynomial> str_powers;  // index k holds str(ad^k y)
};

// exp(sum_k w_{c,k} str_q(ad^k y)).
JacobianResult jacobian_Jc(const GenericPoint& gp, const Rational& c, int N);
// Ber_q(sh(ad y / c) / (ad y / c)) through the block Berezinian.
SuperPolynomial jacobian_Jc_block(const GenericPoint& gp, const Rational& c, int N);
// 1 + (1/24) str_q(-ad e1 ad e2 + ad e2 ad e1) x^1 x^2 for q of rank (0,2).
SuperPolynomial jacobian_J2_q2(const GenericPoint& gp);
// Ber((1 - e^{-ad x}) / ad x) over the whole algebra.
SuperPolynomial jacobian_full_group(const LieSuperAlgebra& g, int N);

// Supertrace over the variable block of a rational matrix product of ad's.
Rational str_q_of(const GenericPoint& gp, const std::vector<std::size_t>& ads);

// p(ad y)(e_a) as a vector field.
GVec series_of_ad(const GenericPoint& gp, const TruncatedSeries1& p, std::size_t a);
// zeta_alpha (g) for a vector field alpha tangent to the variable block.
SuperPolynomial apply_vector_field(const GenericPoint& gp, const GVec& alpha, const SuperPolynomial& g);
// div of zeta_alpha.
SuperPolynomial divergence(const GenericPoint& gp, const GVec& alpha);

// div(zeta_{p(ad y) a}) + str((p(ad y) - p(0)) / ad y . ad a), truncated at N.
// The series p must reach the nilpotency order of ad y at truncation N + 1.
SuperPolynomial divergence_check(const GenericPoint& gp, const TruncatedSeries1& p, std::size_t a, int N);
// zeta_{alpha}(str_q(w_c(ad y))) + div(zeta_alpha) - str_q(ad theta) for the
// vector field alpha = alpha_c^a and theta = theta_c^a, truncated at N.
SuperPolynomial key_identity_check(const GenericPoint& gp, const Rational& c, std::size_t a, int N);

struct GorelikResult {
    Pbw element;                    // beta(J_c d)
    SuperPolynomial J;              // J_c
    SuperPolynomial::Terms Jd;      // J_c . d in S(q)
    bool unimodular = true;
    std::optional<std::size_t> failing_h;
    Rational failing_value;
};

// beta(J_c d), d = e_1 ... e_q, for a pair with purely odd q; c = 2 gives the
// Gorelik element.
GorelikResult gorelik_candidate(const SymmetricPair& sp, const Enveloping& env, const Rational& c = Rational(2));

// 1/2 (j(e1)j(e2) - j(e2)j(e1)) + (1/24) str_q(ad e1 ad e2 - ad e2 ad e1).
Pbw gorelik_closed_form_q2(const SymmetricPair& sp, const Enveloping& env);

}  // namespace supersym
