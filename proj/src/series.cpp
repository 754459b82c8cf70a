#include "supersym/series.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace supersym {

TruncatedSeries1::TruncatedSeries1(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries1::TruncatedSeries1(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries1 TruncatedSeries1::constant(const Rational& c, int order) {
    TruncatedSeries1 s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries1 TruncatedSeries1::identity(int order) {
    TruncatedSeries1 s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

TruncatedSeries1 TruncatedSeries1::exp(int order) {
    TruncatedSeries1 s(order);
    for (int k = 0; k <= order; ++k) s.c_[k] = factorial(k).inverse();
    return s;
}

TruncatedSeries1 TruncatedSeries1::log1p(int order) {
    TruncatedSeries1 s(order);
    for (int k = 1; k <= order; ++k) s.c_[k] = Rational((k % 2) ? 1 : -1, k);
    return s;
}

const Rational& TruncatedSeries1::operator[](int k) const {
    static const Rational zero(0);
    if (k < 0 || k > order()) return zero;
    return c_[static_cast<std::size_t>(k)];
}

TruncatedSeries1 TruncatedSeries1::truncated(int order) const {
    TruncatedSeries1 s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
    return s;
}

bool TruncatedSeries1::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool TruncatedSeries1::is_even() const {
    for (int k = 1; k <= order(); k += 2)
        if (!c_[k].is_zero()) return false;
    return true;
}

bool TruncatedSeries1::is_odd() const {
    for (int k = 0; k <= order(); k += 2)
        if (!c_[k].is_zero()) return false;
    return true;
}

TruncatedSeries1& TruncatedSeries1::operator+=(const TruncatedSeries1& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries1& TruncatedSeries1::operator-=(const TruncatedSeries1& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries1& TruncatedSeries1::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

TruncatedSeries1 TruncatedSeries1::operator-() const {
    TruncatedSeries1 r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

TruncatedSeries1 operator*(const TruncatedSeries1& a, const TruncatedSeries1& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries1 r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncatedSeries1 TruncatedSeries1::derivative() const {
    if (order() == 0) return TruncatedSeries1(0);
    TruncatedSeries1 r(order() - 1);
    for (int k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * Rational(k);
    return r;
}

TruncatedSeries1 TruncatedSeries1::divided_by_t() const {
    if (!c_[0].is_zero()) throw std::invalid_argument("divided_by_t: nonzero constant term");
    if (order() == 0) return TruncatedSeries1(0);
    return TruncatedSeries1(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

TruncatedSeries1 TruncatedSeries1::times_t() const {
    std::vector<Rational> v(1, Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return TruncatedSeries1(std::move(v));
}

TruncatedSeries1 TruncatedSeries1::reciprocal() const {
    if (c_[0].is_zero()) throw DivisionByZero();
    TruncatedSeries1 r(order());
    Rational inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
        r.c_[k] = -s * inv0;
    }
    return r;
}

TruncatedSeries1 TruncatedSeries1::substitute_scaled(const Rational& s) const {
    TruncatedSeries1 r = *this;
    Rational p(1);
    for (int k = 0; k <= order(); ++k) {
        r.c_[k] *= p;
        p *= s;
    }
    return r;
}

std::string TruncatedSeries1::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) os << (c.sign() < 0 ? "-" : "");
        else os << (c.sign() < 0 ? " - " : " + ");
        std::string mon = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mon.empty()) os << mag;
        else if (mag.is_one()) os << mon;
        else os << mag << " " << mon;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
}

TruncatedSeries1 operator/(const TruncatedSeries1& a, const TruncatedSeries1& b) { return a * b.reciprocal(); }

TruncatedSeries1 compose(const TruncatedSeries1& f, const TruncatedSeries1& g) {
    if (!g[0].is_zero()) throw std::invalid_argument("compose: inner series has nonzero constant term");
    int n = std::min(f.order(), g.order());
    TruncatedSeries1 r = TruncatedSeries1::constant(f[0], n);
    TruncatedSeries1 pw = TruncatedSeries1::constant(Rational(1), n);
    TruncatedSeries1 gg = g.truncated(n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * gg;
        if (!f[k].is_zero()) r += pw * f[k];
    }
    return r;
}

TruncatedSeries1 series_exp(const TruncatedSeries1& g) { return compose(TruncatedSeries1::exp(g.order()), g); }

TruncatedSeries1 series_log(const TruncatedSeries1& g) {
    if (!g[0].is_one()) throw std::invalid_argument("series_log: constant term must be 1");
    TruncatedSeries1 h = g;
    h.at(0) = 0;
    return compose(TruncatedSeries1::log1p(g.order()), h);
}

TruncatedSeries2::TruncatedSeries2(int order) : n_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    c_.assign(static_cast<std::size_t>((order + 1) * (order + 2) / 2), Rational(0));
}

std::size_t TruncatedSeries2::index(int i, int j) const {
    // Rows of constant total degree d = i + j, ordered by i.
    int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + i);
}

Rational TruncatedSeries2::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > n_) return Rational(0);
    return c_[index(i, j)];
}

void TruncatedSeries2::add(int i, int j, const Rational& v) {
    if (i < 0 || j < 0) throw std::out_of_range("negative exponent");
    if (i + j > n_) return;
    c_[index(i, j)] += v;
}

TruncatedSeries2 TruncatedSeries2::in_t(const TruncatedSeries1& f, int order) {
    TruncatedSeries2 r(std::min(order, f.order()));
    for (int k = 0; k <= r.n_; ++k) r.add(k, 0, f[k]);
    return r;
}

TruncatedSeries2 TruncatedSeries2::in_u(const TruncatedSeries1& f, int order) { return in_t(f, order).swapped(); }

TruncatedSeries2 TruncatedSeries2::of_sum(const TruncatedSeries1& f, int order) {
    TruncatedSeries2 r(std::min(order, f.order()));
    for (int n = 0; n <= r.n_; ++n) {
        if (f[n].is_zero()) continue;
        for (int k = 0; k <= n; ++k) r.add(n - k, k, f[n] * binomial(n, k));
    }
    return r;
}

TruncatedSeries2 TruncatedSeries2::truncated(int order) const {
    TruncatedSeries2 r(order);
    for (int d = 0; d <= std::min(order, n_); ++d)
        for (int i = 0; i <= d; ++i) r.c_[r.index(i, d - i)] = c_[index(i, d - i)];
    return r;
}

TruncatedSeries2 TruncatedSeries2::swapped() const {
    TruncatedSeries2 r(n_);
    for (int d = 0; d <= n_; ++d)
        for (int i = 0; i <= d; ++i) r.c_[r.index(d - i, i)] = c_[index(i, d - i)];
    return r;
}

bool TruncatedSeries2::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::optional<std::pair<int, int>> TruncatedSeries2::first_nonzero() const {
    for (int d = 0; d <= n_; ++d)
        for (int i = d; i >= 0; --i)
            if (!c_[index(i, d - i)].is_zero()) return std::make_pair(i, d - i);
    return std::nullopt;
}

TruncatedSeries2& TruncatedSeries2::operator+=(const TruncatedSeries2& o) {
    if (o.n_ < n_) *this = truncated(o.n_);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries2& TruncatedSeries2::operator-=(const TruncatedSeries2& o) {
    if (o.n_ < n_) *this = truncated(o.n_);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries2& TruncatedSeries2::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    int n = std::min(a.n_, b.n_);
    TruncatedSeries2 r(n);
    for (int da = 0; da <= n; ++da)
        for (int ia = 0; ia <= da; ++ia) {
            const Rational& x = a.c_[a.index(ia, da - ia)];
            if (x.is_zero()) continue;
            for (int db = 0; da + db <= n; ++db)
                for (int ib = 0; ib <= db; ++ib) {
                    const Rational& y = b.c_[b.index(ib, db - ib)];
                    if (y.is_zero()) continue;
                    r.c_[r.index(ia + ib, da - ia + db - ib)] += x * y;
                }
        }
    return r;
}

bool operator==(const TruncatedSeries2& a, const TruncatedSeries2& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

std::string TruncatedSeries2::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= n_; ++d)
        for (int i = d; i >= 0; --i) {
            const Rational& c = c_[index(i, d - i)];
            if (c.is_zero()) continue;
            int j = d - i;
            std::string mon;
            if (i) mon += i == 1 ? "t" : "t^" + std::to_string(i);
            if (j) mon += std::string(i ? "*" : "") + (j == 1 ? "u" : "u^" + std::to_string(j));
            Rational mag = c.abs();
            if (first) os << (c.sign() < 0 ? "-" : "");
            else os << (c.sign() < 0 ? " - " : " + ");
            if (mon.empty()) os << mag;
            else if (mag.is_one()) os << mon;
            else os << mag << " " << mon;
            first = false;
        }
    if (first) os << "0";
    os << " + O(" << n_ + 1 << ")";
    return os.str();
}

TruncatedSeries2 divided_difference(const TruncatedSeries1& f, int N) {
    int n = std::max(0, std::min(N, f.order() - 1));
    TruncatedSeries2 r(n);
    // ((t+u)^m - t^m)/u = sum_{k>=1} C(m,k) t^{m-k} u^{k-1}
    for (int m = 1; m <= n + 1 && m <= f.order(); ++m) {
        if (f[m].is_zero()) continue;
        for (int k = 1; k <= m; ++k) r.add(m - k, k - 1, f[m] * binomial(m, k));
    }
    return r;
}

TruncatedSeries2 divided_difference_t(const TruncatedSeries1& f, int N) { return divided_difference(f, N).swapped(); }

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli(unsigned n) {
    {
        std::shared_lock lock(bernoulli_mutex);
        if (n < bernoulli_cache.size()) return bernoulli_cache[n];
    }
    std::unique_lock lock(bernoulli_mutex);
    // (t/(e^t-1)) * ((e^t-1)/t) = 1, with (e^t-1)/t = sum t^k/(k+1)!.
    // Writing B(t) = sum b_m t^m/m!, the t^n coefficient gives
    // sum_{m<=n} b_m / (m! (n-m+1)!) = 0 for n >= 1.
    while (bernoulli_cache.size() <= n) {
        unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        Rational s(0);
        for (unsigned k = 0; k < m; ++k)
            s += bernoulli_cache[k] / (factorial(k) * factorial(m - k + 1));
        bernoulli_cache.push_back(-s * factorial(m));
    }
    return bernoulli_cache[n];
}

TruncatedSeries1 p_c(const Rational& c, int N) {
    if (c.is_zero()) throw ZeroParameter();
    TruncatedSeries1 s(N);
    s.at(0) = c;
    for (int n = 1; 2 * n <= N; ++n)
        s.at(2 * n) = bernoulli(2 * n) * Rational(2).pow(2 * n) / (c.pow(2 * n - 1) * factorial(2 * n));
    return s;
}

TruncatedSeries1 q_c(const Rational& c, int N) {
    if (c.is_zero()) throw ZeroParameter();
    TruncatedSeries1 s(N);
    for (int n = 1; 2 * n - 1 <= N; ++n)
        s.at(2 * n - 1) = Rational(-2) * bernoulli(2 * n) * (Rational(2).pow(2 * n) - Rational(1)) /
                          (c.pow(2 * n - 1) * factorial(2 * n));
    return s;
}

TruncatedSeries1 w_c(const Rational& c, int N) {
    if (c.is_zero()) throw ZeroParameter();
    // w_c' = (p_c - c)/(c t); integrate termwise.
    TruncatedSeries1 s(N);
    for (int n = 1; 2 * n <= N; ++n)
        s.at(2 * n) = bernoulli(2 * n) * Rational(2).pow(2 * n) /
                      (c.pow(2 * n) * Rational(2 * n) * factorial(2 * n));
    return s;
}

TruncatedSeries1 tanh_coth_residual(const Rational& c, int N) {
    auto left = q_c(c, N).substitute_scaled(2);
    auto pc = p_c(c, N + 1);
    return (left - (pc - pc.substitute_scaled(2)).divided_by_t()).truncated(N);
}

TruncatedSeries1 exp_jacobian_residual(int N) {
    auto em1 = TruncatedSeries1::exp(N + 2);
    em1.at(0) = 0;
    auto p = em1.divided_by_t().reciprocal();
    auto one_minus_emt = TruncatedSeries1::constant(1, N + 2) - TruncatedSeries1::exp(N + 2).substitute_scaled(-1);
    auto w = series_log(one_minus_emt.divided_by_t());
    return (w.derivative() * p[0] - (p - TruncatedSeries1::constant(p[0], N + 1)).divided_by_t()).truncated(N);
}

bool ResidualReport::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.value.is_zero(); });
}

std::string ResidualReport::witness() const {
    for (const auto& r : residuals) {
        auto nz = r.value.first_nonzero();
        if (!nz) continue;
        std::ostringstream os;
        os << r.name << ": coefficient of t^" << nz->first << " u^" << nz->second << " is "
           << r.value.coeff(nz->first, nz->second);
        return os.str();
    }
    return "";
}

namespace {

int usable_order(int N, std::initializer_list<const TruncatedSeries1*> inputs) {
    int n = N;
    for (auto* s : inputs) n = std::min(n, s->order() - 1);
    return std::max(n, 0);
}

}  // namespace

ResidualReport check_symmetric_equations(const TruncatedSeries1& p, const TruncatedSeries1& d, int N) {
    if (!p.is_even()) throw ParityViolation("p must be an even series");
    if (!d.is_odd()) throw ParityViolation("d must be an odd series");
    const int n = usable_order(N, {&p, &d});
    auto T = [n](const TruncatedSeries1& f) { return TruncatedSeries2::in_t(f, n); };
    auto U = [n](const TruncatedSeries1& f) { return TruncatedSeries2::in_u(f, n); };
    auto S = [n](const TruncatedSeries1& f) { return TruncatedSeries2::of_sum(f, n); };
    auto Du = [n](const TruncatedSeries1& f) { return divided_difference(f, n).truncated(n); };
    auto Dt = [n](const TruncatedSeries1& f) { return divided_difference_t(f, n).truncated(n); };

    ResidualReport rep;
    rep.residuals.push_back({"symmetric-1", (U(d) * Du(d) + T(d) * Dt(d) + S(d)).truncated(n)});
    rep.residuals.push_back({"symmetric-2", (U(p) * Du(p) + T(p) * Dt(p) + S(d)).truncated(n)});
    rep.residuals.push_back({"symmetric-3", (U(p) * Du(d) + T(d) * Dt(p) + S(p)).truncated(n)});
    return rep;
}

ResidualReport check_coinduced_equations(const TruncatedSeries1& h, const TruncatedSeries1& q, const Rational& c,
                                         int N) {
    if (c.is_zero()) throw ZeroParameter();
    if (!h.is_even()) throw ParityViolation("h must be an even series");
    if (!q.is_odd()) throw ParityViolation("q must be an odd series");
    TruncatedSeries1 p = p_c(c, N + 1);
    const int n = usable_order(N, {&h, &q});
    auto T = [n](const TruncatedSeries1& f) { return TruncatedSeries2::in_t(f, n); };
    auto U = [n](const TruncatedSeries1& f) { return TruncatedSeries2::in_u(f, n); };
    auto S = [n](const TruncatedSeries1& f) { return TruncatedSeries2::of_sum(f, n); };
    auto Du = [n](const TruncatedSeries1& f) { return divided_difference(f, n).truncated(n); };
    auto Dt = [n](const TruncatedSeries1& f) { return divided_difference_t(f, n).truncated(n); };

    ResidualReport rep;
    rep.residuals.push_back({"coinduced-h", (T(h) + U(h) - S(h) - T(h) * U(h)).truncated(n)});
    rep.residuals.push_back({"coinduced-q", (Du(q) * U(p) + Dt(q) * T(p) - T(q) * U(q) + S(h)).truncated(n)});
    rep.residuals.push_back({"coinduced-mixed", (T(q) + Dt(h) * T(p) - T(q) * U(h)).truncated(n)});
    return rep;
}

}  // namespace supersym
