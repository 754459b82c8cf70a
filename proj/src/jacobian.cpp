#include "supersym/jacobian.hpp"

namespace supersym {

namespace {

TablePtr point_table(const LieSuperAlgebra& g, std::size_t nvars, int order) {
    std::vector<std::string> names;
    std::vector<Parity> par;
    bool any_even = false;
    for (std::size_t i = 0; i < nvars; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        par.push_back(g.parity(i));
        any_even = any_even || g.parity(i) == Parity::Even;
    }
    return make_table(names, par, any_even ? std::optional<int>(order) : std::nullopt);
}

GVec point_vector(const LieSuperAlgebra& g, std::size_t nvars, const TablePtr& t) {
    GVec y = gvec_zero(g, t);
    for (std::size_t i = 0; i < nvars; ++i) y[i] = SuperPolynomial::variable(t, i);
    return y;
}

// Largest power of ad y that can be nonzero: the truncation bounds the even
// degree only.
int nilpotency_bound(const GenericPoint& gp) {
    return static_cast<int>(gp.table()->odd_count()) + gp.order().value_or(0);
}

Parity field_parity(const GenericPoint& gp, const GVec& alpha) {
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k].is_zero()) continue;
        if (k >= gp.nvars()) throw std::invalid_argument("vector field is not tangent to the variable block");
        Grading gr = alpha[k].grading();
        if (gr == Grading::Inhomogeneous) throw InhomogeneousMatrix();
        return parity_of_bit((gr == Grading::Odd ? 1 : 0) + bit(gp.algebra().parity(k)));
    }
    return Parity::Even;
}

SuperPolynomial block_supertrace(const GenericPoint& gp, const SuperMatrix& m) {
    return supertrace(m.block(gp.var_indices()));
}

}  // namespace

GenericPoint::GenericPoint(LieSuperAlgebra g, std::size_t nvars, bool pair, int order)
    : g_(std::move(g)),
      nvars_(nvars),
      pair_(pair),
      table_(point_table(g_, nvars_, order)),
      y_(point_vector(g_, nvars_, table_)),
      ad_y_(ad_matrix(g_, y_)) {}

GenericPoint GenericPoint::of_pair(const SymmetricPair& sp, int order) {
    return GenericPoint(sp.algebra(), sp.nq(), true, order);
}

GenericPoint GenericPoint::of_algebra(const LieSuperAlgebra& g, int order) {
    return GenericPoint(g, g.dim(), false, order);
}

GenericPoint GenericPoint::with_order(int order) const { return GenericPoint(g_, nvars_, pair_, order); }

std::vector<std::size_t> GenericPoint::var_indices() const {
    std::vector<std::size_t> idx(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) idx[i] = i;
    return idx;
}

SuperPolynomial str_ad_power(const GenericPoint& gp, int k) {
    if (k < 0) throw std::invalid_argument("str_ad_power: negative exponent");
    if (gp.is_pair() && k % 2) throw std::invalid_argument("str_ad_power: odd powers do not preserve q");
    return block_supertrace(gp, power(gp.ad_y(), k));
}

JacobianResult jacobian_Jc(const GenericPoint& gp, const Rational& c, int N) {
    if (c.is_zero()) throw ZeroParameter();
    const int order = std::min(N, nilpotency_bound(gp));
    auto w = w_c(c, std::max(order, 0));
    std::vector<SuperPolynomial> powers;
    SuperPolynomial s(gp.table());
    SuperMatrix pw = SuperMatrix::identity(gp.ad_y().basis(), gp.table());
    for (int k = 0; k <= order; ++k) {
        powers.push_back(block_supertrace(gp, pw));
        if (k > 0 && !w[k].is_zero()) s += powers.back() * w[k];
        pw = pw * gp.ad_y();
    }
    return JacobianResult{exp_nilpotent(s), c, order, std::move(powers)};
}

SuperPolynomial jacobian_Jc_block(const GenericPoint& gp, const Rational& c, int N) {
    if (c.is_zero()) throw ZeroParameter();
    const int M = std::max(N, nilpotency_bound(gp)) + 1;
    // sh(t/c)/(t/c) = sum t^{2k} / ((2k+1)! c^{2k})
    TruncatedSeries1 r(M);
    for (int k = 0; k <= M; k += 2) r.at(k) = (factorial(static_cast<unsigned>(k + 1)) * c.pow(k)).inverse();
    return berezinian(apply_series(r, gp.ad_y()).block(gp.var_indices()));
}

Rational str_q_of(const GenericPoint& gp, const std::vector<std::size_t>& ads) {
    const auto& g = gp.algebra();
    SuperMatrix m = SuperMatrix::identity(g.parities(), gp.table());
    for (auto i : ads) m = m * ad_matrix(g, g.basis_vector(i), gp.table());
    return block_supertrace(gp, m).evaluate_at_zero();
}

SuperPolynomial jacobian_J2_q2(const GenericPoint& gp) {
    if (gp.nvars() != 2 || !gp.purely_odd()) throw std::invalid_argument("jacobian_J2_q2 needs q of rank (0,2)");
    Rational rho = (str_q_of(gp, {1, 0}) - str_q_of(gp, {0, 1})) * Rational(1, 24);
    const auto& t = gp.table();
    return SuperPolynomial(t, Rational(1)) + SuperPolynomial::variable(t, 0) * SuperPolynomial::variable(t, 1) * rho;
}

SuperPolynomial jacobian_full_group(const LieSuperAlgebra& g, int N) {
    auto gp = GenericPoint::of_algebra(g, N);
    const int M = std::min(N, nilpotency_bound(gp));
    // w = log((1 - e^{-t}) / t)
    TruncatedSeries1 f(M);
    for (int k = 0; k <= M; ++k)
        f.at(k) = factorial(static_cast<unsigned>(k + 1)).inverse() * Rational(k % 2 ? -1 : 1);
    auto w = series_log(f);
    SuperPolynomial s(gp.table());
    for (int k = 1; k <= M; ++k)
        if (!w[k].is_zero()) s += str_ad_power(gp, k) * w[k];
    return exp_nilpotent(s);
}

GVec series_of_ad(const GenericPoint& gp, const TruncatedSeries1& p, std::size_t a) {
    const auto& g = gp.algebra();
    GVec v = gvec_constant(g, gp.table(), g.basis_vector(a));
    GVec sum = gvec_scale(v, p[0]);
    for (int k = 1;; ++k) {
        v = supersym::apply(gp.ad_y(), v);
        if (gvec_is_zero(v)) break;
        if (k > p.order()) throw std::invalid_argument("series_of_ad: series order too small");
        sum = gvec_add(sum, gvec_scale(v, p[k]));
    }
    return sum;
}

// zeta_alpha = sum_k (-1)^{p_k p(alpha)} alpha^k d/dx^k, so that the constant
// field e_k gives zeta(y) = e_k.
SuperPolynomial apply_vector_field(const GenericPoint& gp, const GVec& alpha, const SuperPolynomial& f) {
    Parity pa = field_parity(gp, alpha);
    SuperPolynomial out(gp.table());
    for (std::size_t k = 0; k < gp.nvars(); ++k) {
        if (alpha[k].is_zero()) continue;
        out += alpha[k] * f.partial_derivative(k) * Rational(koszul(gp.algebra().parity(k), pa));
    }
    return out;
}

// div(sum zeta^i d/dx^i) = sum (-1)^{p_i (p(zeta) + 1)} d zeta^i / dx^i
SuperPolynomial divergence(const GenericPoint& gp, const GVec& alpha) {
    Parity pa = field_parity(gp, alpha);
    SuperPolynomial out(gp.table());
    for (std::size_t i = 0; i < gp.nvars(); ++i) {
        if (alpha[i].is_zero()) continue;
        Parity pi = gp.algebra().parity(i);
        int sign = koszul(pi, pa) * koszul(pi, pa + Parity::Odd);
        out += alpha[i].partial_derivative(i) * Rational(sign);
    }
    return out;
}

SuperPolynomial divergence_check(const GenericPoint& gp0, const TruncatedSeries1& p, std::size_t a, int N) {
    // One order of headroom: derivatives lose a degree in the even variables.
    auto gp = gp0.with_order(N + 1);
    auto alpha = series_of_ad(gp, p, a);
    SuperPolynomial lhs = divergence(gp, alpha);
    auto shifted = (p - TruncatedSeries1::constant(p[0], p.order())).divided_by_t();
    const auto& g = gp.algebra();
    SuperMatrix m = apply_series(shifted, gp.ad_y()) * ad_matrix(g, g.basis_vector(a), gp.table());
    SuperPolynomial rhs = -block_supertrace(gp, m);
    return (lhs - rhs).truncated(N);
}

SuperPolynomial key_identity_check(const GenericPoint& gp0, const Rational& c, std::size_t a, int N) {
    if (c.is_zero()) throw ZeroParameter();
    if (!gp0.is_pair()) throw std::invalid_argument("key_identity_check needs a symmetric pair");
    auto gp = gp0.with_order(N + 1);
    const int M = nilpotency_bound(gp) + 1;
    const auto& g = gp.algebra();
    const bool in_q = a < gp.nvars();

    GVec alpha = in_q ? series_of_ad(gp, p_c(c, M), a) : series_of_ad(gp, -TruncatedSeries1::identity(M), a);
    SuperPolynomial logj(gp.table());
    auto w = w_c(c, M);
    for (int k = 2; k <= M; k += 2)
        if (!w[k].is_zero()) logj += str_ad_power(gp, k) * w[k];

    GVec theta = in_q ? series_of_ad(gp, q_c(c, M), a) : gvec_constant(g, gp.table(), g.basis_vector(a));
    SuperPolynomial str_theta = block_supertrace(gp, ad_matrix(g, theta));

    SuperPolynomial r = apply_vector_field(gp, alpha, logj) + divergence(gp, alpha) - str_theta;
    return r.truncated(N);
}

GorelikResult gorelik_candidate(const SymmetricPair& sp, const Enveloping& env, const Rational& c) {
    if (!sp.q_purely_odd()) throw std::invalid_argument("Gorelik element needs a purely odd q");
    auto gp = GenericPoint::of_pair(sp);
    GorelikResult r{Pbw(), jacobian_Jc(gp, c, static_cast<int>(sp.nq())).J, {}, true, std::nullopt, Rational(0)};
    auto u = check_unimodularity(sp);
    r.unimodular = u.ok;
    r.failing_h = u.witness;
    r.failing_value = u.value;
    SuperPolynomial::Terms d{{Monomial(sp.nq(), 1), Rational(1)}};
    auto par = sp.q_parities();
    r.Jd = contract(r.J.terms(), d, par);
    r.element = env.symmetrize(r.Jd);
    return r;
}

Pbw gorelik_closed_form_q2(const SymmetricPair& sp, const Enveloping& env) {
    if (sp.nq() != 2 || !sp.q_purely_odd()) throw std::invalid_argument("closed form needs q of rank (0,2)");
    auto gp = GenericPoint::of_pair(sp);
    Pbw t = (env.multiply(env.j(0), env.j(1)) - env.multiply(env.j(1), env.j(0))) * Rational(1, 2);
    Rational s = (str_q_of(gp, {0, 1}) - str_q_of(gp, {1, 0})) * Rational(1, 24);
    return t + env.one() * s;
}

}  // namespace supersym
