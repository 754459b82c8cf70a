#include "supersym/exact_linalg.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace supersym {

RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix rat_multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix r(n, RatVector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

RatMatrix rat_inverse(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatMatrix m = a, inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw DivisionByZero();
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = m[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Fraction-free Gaussian elimination (Bareiss) on an integer matrix.
Echelon bareiss(std::vector<std::vector<mpz_class>> m, std::size_t ncols) {
    Echelon e;
    const std::size_t nrows = m.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t piv = r;
        while (piv < nrows && m[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                mpz_class v = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        e.pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

std::vector<std::vector<mpz_class>> to_integer_rows(const RatMatrix& a, std::size_t ncols) {
    std::vector<std::vector<mpz_class>> out;
    for (const auto& row : a) {
        if (row.size() != ncols) throw std::invalid_argument("matrix row length mismatch");
        mpz_class l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        std::vector<mpz_class> r(ncols);
        bool nonzero = false;
        for (std::size_t j = 0; j < ncols; ++j) {
            r[j] = row[j].numerator() * (l / row[j].denominator());
            nonzero = nonzero || r[j] != 0;
        }
        if (nonzero) out.push_back(std::move(r));
    }
    return out;
}

// Solves the echelon system for the pivot variables given the others.
void back_substitute(const Echelon& e, RatVector& x, const RatVector* rhs) {
    for (std::size_t r = e.rows.size(); r-- > 0;) {
        std::size_t p = e.pivots[r];
        Rational s = rhs ? (*rhs)[r] : Rational(0);
        for (std::size_t j = p + 1; j < x.size(); ++j)
            if (e.rows[r][j] != 0 && !x[j].is_zero()) s -= Rational(e.rows[r][j]) * x[j];
        x[p] = s / Rational(e.rows[r][p]);
    }
}

}  // namespace

std::vector<RatVector> rat_null_space(const RatMatrix& a, std::size_t ncols) {
    Echelon e = bareiss(to_integer_rows(a, ncols), ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(ncols, Rational(0));
        x[f] = 1;
        back_substitute(e, x, nullptr);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rat_rank(const RatMatrix& a, std::size_t ncols) {
    return bareiss(to_integer_rows(a, ncols), ncols).pivots.size();
}

std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b.at(i));
    // Pivot structure of the augmented system tells consistency.
    Echelon e = bareiss(to_integer_rows(aug, n + 1), n + 1);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    RatVector x(n, Rational(0));
    RatVector rhs;
    for (const auto& row : e.rows) rhs.push_back(Rational(row[n]));
    Echelon lhs{e.rows, e.pivots};
    for (auto& row : lhs.rows) row.resize(n);
    back_substitute(lhs, x, &rhs);
    return x;
}

}  // namespace supersym
