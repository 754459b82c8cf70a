#pragma once

#include "supersym/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supersym {

class ParityViolation : public std::invalid_argument {
public:
    explicit ParityViolation(const std::string& what) : std::invalid_argument(what) {}
};

class ZeroParameter : public std::invalid_argument {
public:
    ZeroParameter() : std::invalid_argument("parameter c must be nonzero") {}
};

// Power series a_0 + a_1 t + ... + a_N t^N + O(t^{N+1}).
class TruncatedSeries1 {
public:
    explicit TruncatedSeries1(int order);
    explicit TruncatedSeries1(std::vector<Rational> coefficients);

    static TruncatedSeries1 constant(const Rational& c, int order);
    static TruncatedSeries1 identity(int order);  // the series t
    static TruncatedSeries1 exp(int order);
    static TruncatedSeries1 log1p(int order);     // log(1+t)

    int order() const { return static_cast<int>(c_.size()) - 1; }
    // Coefficient of t^k; zero above the order.
    const Rational& operator[](int k) const;
    Rational& at(int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coefficients() const { return c_; }

    TruncatedSeries1 truncated(int order) const;
    bool is_zero() const;
    bool is_even() const;
    bool is_odd() const;

    TruncatedSeries1& operator+=(const TruncatedSeries1& o);
    TruncatedSeries1& operator-=(const TruncatedSeries1& o);
    TruncatedSeries1& operator*=(const Rational& s);
    TruncatedSeries1 operator-() const;
    friend TruncatedSeries1 operator+(TruncatedSeries1 a, const TruncatedSeries1& b) { return a += b; }
    friend TruncatedSeries1 operator-(TruncatedSeries1 a, const TruncatedSeries1& b) { return a -= b; }
    friend TruncatedSeries1 operator*(TruncatedSeries1 a, const Rational& s) { return a *= s; }
    friend TruncatedSeries1 operator*(const Rational& s, TruncatedSeries1 a) { return a *= s; }
    friend TruncatedSeries1 operator*(const TruncatedSeries1& a, const TruncatedSeries1& b);
    friend bool operator==(const TruncatedSeries1& a, const TruncatedSeries1& b) = default;

    TruncatedSeries1 derivative() const;  // order drops by one
    TruncatedSeries1 divided_by_t() const;  // requires zero constant term; order drops by one
    TruncatedSeries1 times_t() const;       // order rises by one
    TruncatedSeries1 reciprocal() const;    // requires invertible constant term
    TruncatedSeries1 substitute_scaled(const Rational& s) const;  // f(s t)

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
};

TruncatedSeries1 operator/(const TruncatedSeries1& a, const TruncatedSeries1& b);
// f(g(t)); g must have zero constant term.
TruncatedSeries1 compose(const TruncatedSeries1& f, const TruncatedSeries1& g);
TruncatedSeries1 series_exp(const TruncatedSeries1& g);  // exp(g), g(0) = 0
TruncatedSeries1 series_log(const TruncatedSeries1& g);  // log(g), g(0) = 1

// Two-variable series with coefficients of t^i u^j, i + j <= N, stored dense.
class TruncatedSeries2 {
public:
    explicit TruncatedSeries2(int order);

    static TruncatedSeries2 in_t(const TruncatedSeries1& f, int order);
    static TruncatedSeries2 in_u(const TruncatedSeries1& f, int order);
    static TruncatedSeries2 of_sum(const TruncatedSeries1& f, int order);  // f(t+u)

    int order() const { return n_; }
    Rational coeff(int i, int j) const;
    void add(int i, int j, const Rational& v);

    TruncatedSeries2 truncated(int order) const;
    TruncatedSeries2 swapped() const;  // t <-> u
    bool is_zero() const;
    // First nonzero coefficient in (total degree, i) order.
    std::optional<std::pair<int, int>> first_nonzero() const;

    TruncatedSeries2& operator+=(const TruncatedSeries2& o);
    TruncatedSeries2& operator-=(const TruncatedSeries2& o);
    TruncatedSeries2& operator*=(const Rational& s);
    friend TruncatedSeries2 operator+(TruncatedSeries2 a, const TruncatedSeries2& b) { return a += b; }
    friend TruncatedSeries2 operator-(TruncatedSeries2 a, const TruncatedSeries2& b) { return a -= b; }
    friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b);
    friend bool operator==(const TruncatedSeries2& a, const TruncatedSeries2& b);

    std::string str() const;

private:
    std::size_t index(int i, int j) const;
    int n_;
    std::vector<Rational> c_;
};

// (f(t+u) - f(t)) / u. Coefficients of f above its order are unknown, so the
// result is cut at min(N, f.order - 1).
TruncatedSeries2 divided_difference(const TruncatedSeries1& f, int N);
// (f(t+u) - f(u)) / t, the mirror image.
TruncatedSeries2 divided_difference_t(const TruncatedSeries1& f, int N);

// Bernoulli number b_n (generating series t/(e^t - 1)); exact and cached.
Rational bernoulli(unsigned n);

TruncatedSeries1 p_c(const Rational& c, int N);  // t coth(t/c)
TruncatedSeries1 q_c(const Rational& c, int N);  // -th(t/(2c))
TruncatedSeries1 w_c(const Rational& c, int N);  // log(sh(t/c)/(t/c))

// q_c(2t) - (p_c(t) - p_c(2t))/t, to order N.
TruncatedSeries1 tanh_coth_residual(const Rational& c, int N);
// p(0) w'(t) - (p(t) - p(0))/t for p = t/(e^t - 1), w = log((1 - e^{-t})/t),
// to order N.
TruncatedSeries1 exp_jacobian_residual(int N);

struct Residual {
    std::string name;
    TruncatedSeries2 value;
};

struct ResidualReport {
    std::vector<Residual> residuals;
    bool all_zero() const;
    // Name and first nonzero coefficient of the first failing residual.
    std::string witness() const;
};

// Residuals of the three functional equations for coderivation pairs (p, d).
ResidualReport check_symmetric_equations(const TruncatedSeries1& p, const TruncatedSeries1& d, int N);
// Residuals of the three coinduced equations for (h, q) with p_c substituted.
ResidualReport check_coinduced_equations(const TruncatedSeries1& h, const TruncatedSeries1& q, const Rational& c,
                                         int N);

}  // namespace supersym
