#include "supersym/supermatrix.hpp"

#include <bit>
#include <sstream>

namespace supersym {

SuperMatrix::SuperMatrix(std::vector<Parity> basis, TablePtr table, Parity parity)
    : basis_(std::move(basis)), table_(std::move(table)), parity_(parity) {
    e_.assign(basis_.size() * basis_.size(), SuperPolynomial(table_));
}

SuperMatrix SuperMatrix::identity(std::vector<Parity> basis, TablePtr table) {
    SuperMatrix m(std::move(basis), std::move(table));
    for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = SuperPolynomial(m.table_, Rational(1));
    return m;
}

bool SuperMatrix::is_homogeneous() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            const auto& x = (*this)(i, j);
            if (x.is_zero()) continue;
            Grading g = x.grading();
            Parity want = basis_[i] + basis_[j] + parity_;
            if (g == Grading::Inhomogeneous) return false;
            if ((g == Grading::Odd) != (want == Parity::Odd)) return false;
        }
    return true;
}

bool SuperMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix SuperMatrix::constant_part() const {
    RatMatrix m(size(), RatVector(size(), Rational(0)));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) m[i][j] = (*this)(i, j).evaluate_at_zero();
    return m;
}

SuperMatrix SuperMatrix::block(const std::vector<std::size_t>& idx) const {
    std::vector<Parity> b;
    for (auto i : idx) b.push_back(basis_.at(i));
    SuperMatrix r(std::move(b), table_, parity_);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t c = 0; c < idx.size(); ++c) r(a, c) = (*this)(idx[a], idx[c]);
    return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (o.basis_ != basis_) throw std::invalid_argument("supermatrix basis mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (o.basis_ != basis_) throw std::invalid_argument("supermatrix basis mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rational& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("supermatrix basis mismatch");
    SuperMatrix r(a.basis_, a.table_, a.parity_ + b.parity_);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                const auto& y = b(j, k);
                if (!y.is_zero()) r(i, k) += x * y;
            }
        }
    return r;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.basis_ == b.basis_ && a.e_ == b.e_; }

std::string SuperMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < size(); ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

SuperMatrix power(const SuperMatrix& x, int k) {
    SuperMatrix r = SuperMatrix::identity(x.basis(), x.table());
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

SuperPolynomial supertrace(const SuperMatrix& x) {
    if (!x.is_homogeneous()) throw InhomogeneousMatrix();
    SuperPolynomial s(x.table());
    for (std::size_t i = 0; i < x.size(); ++i) {
        int e = bit(x.basis()[i]) * (bit(x.basis()[i]) + bit(x.parity()));
        if (e % 2) s -= x(i, i);
        else s += x(i, i);
    }
    return s;
}

SuperPolynomial determinant(const std::vector<std::vector<SuperPolynomial>>& m, const TablePtr& t) {
    const std::size_t n = m.size();
    if (n == 0) return SuperPolynomial(t, Rational(1));
    if (n > 20) throw std::invalid_argument("determinant: matrix too large");
    // dp[mask]: signed sum over assignments of the first popcount(mask) rows
    // to the columns in mask.
    std::vector<SuperPolynomial> dp(std::size_t(1) << n, SuperPolynomial(t));
    dp[0] = SuperPolynomial(t, Rational(1));
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t(1) << j)) continue;
            if (m[row][j].is_zero()) continue;
            int above = std::popcount(mask >> (j + 1));
            SuperPolynomial term = dp[mask] * m[row][j];
            if (above % 2) dp[mask | (std::size_t(1) << j)] -= term;
            else dp[mask | (std::size_t(1) << j)] += term;
        }
    }
    return dp.back();
}

SuperMatrix inverse(const SuperMatrix& x) {
    if (x.parity() != Parity::Even) throw std::invalid_argument("inverse: matrix must be even");
    RatMatrix d0 = x.constant_part();
    RatMatrix d0inv;
    try {
        d0inv = rat_inverse(d0);
    } catch (const DivisionByZero&) {
        throw NotInvertibleAtZero();
    }
    const std::size_t n = x.size();
    SuperMatrix c(x.basis(), x.table());
    SuperMatrix nil(x.basis(), x.table());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c(i, j) = SuperPolynomial(x.table(), d0inv[i][j]);
            nil(i, j) = x(i, j) - SuperPolynomial(x.table(), d0[i][j]);
        }
    // X = D0 (1 + D0^{-1} N), X^{-1} = sum (-D0^{-1} N)^k D0^{-1}
    SuperMatrix step = (c * nil) * Rational(-1);
    SuperMatrix sum = SuperMatrix::identity(x.basis(), x.table());
    SuperMatrix term = sum;
    for (;;) {
        term = term * step;
        if (term.is_zero()) break;
        sum += term;
    }
    return sum * c;
}

SuperPolynomial berezinian(const SuperMatrix& x) {
    if (x.parity() != Parity::Even || !x.is_homogeneous()) throw InhomogeneousMatrix();
    std::vector<std::size_t> ev, od;
    for (std::size_t i = 0; i < x.size(); ++i) (x.basis()[i] == Parity::Even ? ev : od).push_back(i);
    const auto& t = x.table();
    SuperMatrix d = x.block(od);
    if (od.empty()) {
        std::vector<std::vector<SuperPolynomial>> a(ev.size(), std::vector<SuperPolynomial>(ev.size(), SuperPolynomial(t)));
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = 0; j < ev.size(); ++j) a[i][j] = x(ev[i], ev[j]);
        return determinant(a, t);
    }
    SuperMatrix dinv = inverse(d);
    std::vector<std::vector<SuperPolynomial>> schur(ev.size(), std::vector<SuperPolynomial>(ev.size(), SuperPolynomial(t)));
    for (std::size_t i = 0; i < ev.size(); ++i)
        for (std::size_t j = 0; j < ev.size(); ++j) {
            SuperPolynomial s = x(ev[i], ev[j]);
            for (std::size_t k = 0; k < od.size(); ++k) {
                if (x(ev[i], od[k]).is_zero()) continue;
                SuperPolynomial bd(t);
                for (std::size_t l = 0; l < od.size(); ++l)
                    if (!x(od[l], ev[j]).is_zero()) bd += dinv(k, l) * x(od[l], ev[j]);
                s -= x(ev[i], od[k]) * bd;
            }
            schur[i][j] = s;
        }
    std::vector<std::vector<SuperPolynomial>> dd(od.size(), std::vector<SuperPolynomial>(od.size(), SuperPolynomial(t)));
    for (std::size_t i = 0; i < od.size(); ++i)
        for (std::size_t j = 0; j < od.size(); ++j) dd[i][j] = d(i, j);
    return determinant(schur, t) * inverse_even(determinant(dd, t));
}

SuperMatrix apply_series(const TruncatedSeries1& f, const SuperMatrix& x) {
    SuperMatrix sum = SuperMatrix::identity(x.basis(), x.table()) * f[0];
    SuperMatrix pw = SuperMatrix::identity(x.basis(), x.table());
    for (int k = 1; k <= f.order(); ++k) {
        pw = pw * x;
        if (pw.is_zero()) return sum;
        if (!f[k].is_zero()) sum += pw * f[k];
    }
    if (!(pw * x).is_zero()) throw std::invalid_argument("apply_series: series order too small for this matrix");
    return sum;
}

SuperMatrix matrix_exp(const SuperMatrix& x) {
    SuperMatrix sum = SuperMatrix::identity(x.basis(), x.table());
    SuperMatrix term = sum;
    for (int k = 1;; ++k) {
        term = (term * x) * Rational(1, k);
        if (term.is_zero()) break;
        sum += term;
        if (k > 10000) throw std::invalid_argument("matrix_exp: argument is not nilpotent");
    }
    return sum;
}

SuperPolynomial apply_series(const TruncatedSeries1& f, const SuperPolynomial& p) {
    if (!p.evaluate_at_zero().is_zero()) throw std::invalid_argument("apply_series: nonzero constant term");
    SuperPolynomial sum(p.table(), f[0]);
    SuperPolynomial pw(p.table(), Rational(1));
    for (int k = 1; k <= f.order(); ++k) {
        pw = pw * p;
        if (pw.is_zero()) return sum;
        if (!f[k].is_zero()) sum += pw * f[k];
    }
    if (!(pw * p).is_zero()) throw std::invalid_argument("apply_series: series order too small for this element");
    return sum;
}

SuperMatrix supertranspose(const SuperMatrix& x) {
    if (x.parity() != Parity::Even) throw std::invalid_argument("supertranspose: matrix must be even");
    SuperMatrix r(x.basis(), x.table());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            // odd row of the result with even column carries the minus sign
            bool neg = x.basis()[i] == Parity::Odd && x.basis()[j] == Parity::Even;
            r(i, j) = neg ? -x(j, i) : x(j, i);
        }
    return r;
}

SuperMatrix ad_matrix(const LieSuperAlgebra& g, const GVec& a) {
    const std::size_t n = g.dim();
    if (a.size() != n) throw std::invalid_argument("ad_matrix: element does not match the basis");
    const TablePtr& t = a.at(0).table();
    std::optional<Parity> par;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        Grading gr = a[i].grading();
        if (gr == Grading::Inhomogeneous) throw InhomogeneousMatrix();
        Parity p = (gr == Grading::Odd ? Parity::Odd : Parity::Even) + g.parity(i);
        if (par && *par != p) throw InhomogeneousMatrix();
        par = p;
    }
    SuperMatrix m(g.parities(), t, par.value_or(Parity::Even));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        bool coeff_odd = a[i].grading() == Grading::Odd;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& v = g.bracket(i, k);
            int s = (coeff_odd && g.parity(k) == Parity::Odd) ? -1 : 1;
            for (std::size_t mm = 0; mm < n; ++mm)
                if (!v[mm].is_zero()) m(mm, k) += a[i] * (v[mm] * Rational(s));
        }
    }
    return m;
}

SuperMatrix ad_matrix(const LieSuperAlgebra& g, const RatVector& a, const TablePtr& t) {
    return ad_matrix(g, gvec_constant(g, t, a));
}

GVec apply(const SuperMatrix& x, const GVec& v) {
    GVec r(x.size(), SuperPolynomial(x.table()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!x(i, k).is_zero() && !v.at(k).is_zero()) r[i] += x(i, k) * v[k];
    return r;
}

}  // namespace supersym
