#pragma once

#include "supersym/liealg.hpp"
#include "supersym/series.hpp"
#include "supersym/superpoly.hpp"

#include <vector>

namespace supersym {

// F-linear operator on a free graded module with basis parities `basis`.
// Coefficients act on the right: X(e_k) = sum_i e_i X(i,k), so composition is
// the ordinary matrix product.
class SuperMatrix {
public:
    SuperMatrix(std::vector<Parity> basis, TablePtr table, Parity parity = Parity::Even);
    static SuperMatrix identity(std::vector<Parity> basis, TablePtr table);

    std::size_t size() const { return basis_.size(); }
    const std::vector<Parity>& basis() const { return basis_; }
    const TablePtr& table() const { return table_; }
    Parity parity() const { return parity_; }

    const SuperPolynomial& operator()(std::size_t i, std::size_t j) const { return e_[i * size() + j]; }
    SuperPolynomial& operator()(std::size_t i, std::size_t j) { return e_[i * size() + j]; }

    // Entry parities agree with the declared operator parity.
    bool is_homogeneous() const;
    bool is_zero() const;
    // Constant part delta(X) as a rational matrix.
    RatMatrix constant_part() const;

    // Operator restricted to the sub-basis `idx` (rows and columns).
    SuperMatrix block(const std::vector<std::size_t>& idx) const;

    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix& operator*=(const Rational& c);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(SuperMatrix a, const Rational& c) { return a *= c; }
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

    std::string str() const;

private:
    std::vector<Parity> basis_;
    TablePtr table_;
    Parity parity_;
    std::vector<SuperPolynomial> e_;
};

class InhomogeneousMatrix : public std::invalid_argument {
public:
    InhomogeneousMatrix() : std::invalid_argument("supermatrix is not parity-homogeneous") {}
};

class NotInvertibleAtZero : public std::invalid_argument {
public:
    NotInvertibleAtZero() : std::invalid_argument("matrix is not invertible at zero") {}
};

SuperMatrix power(const SuperMatrix& x, int k);
// sum_i (-1)^{p_i (p_i + p(X))} X(i,i)
SuperPolynomial supertrace(const SuperMatrix& x);
// det(A - B D^{-1} C) det(D)^{-1} for even X.
SuperPolynomial berezinian(const SuperMatrix& x);
// Determinant of a matrix of pairwise commuting (even) entries, division free.
SuperPolynomial determinant(const std::vector<std::vector<SuperPolynomial>>& m, const TablePtr& t);
// Inverse of an even matrix with invertible constant part.
SuperMatrix inverse(const SuperMatrix& x);

// f(X) = sum f_k X^k for X with nilpotent entries; throws if X^{order+1}
// does not vanish, since the truncated series would then be inexact.
SuperMatrix apply_series(const TruncatedSeries1& f, const SuperMatrix& x);
SuperMatrix matrix_exp(const SuperMatrix& x);
// f(p) for a scalar p with zero constant term, same exactness rule.
SuperPolynomial apply_series(const TruncatedSeries1& f, const SuperPolynomial& p);

// Supertranspose [[A, B], [C, D]] -> [[A^t, C^t], [-B^t, D^t]] in the
// even/odd block splitting of an even matrix.
SuperMatrix supertranspose(const SuperMatrix& x);

// Matrix of ad a on the basis of g, a = sum e_i a^i.
SuperMatrix ad_matrix(const LieSuperAlgebra& g, const GVec& a);
SuperMatrix ad_matrix(const LieSuperAlgebra& g, const RatVector& a, const TablePtr& t);
// X(v) for v = sum e_k v^k: sum_i e_i X(i,k) v^k.
GVec apply(const SuperMatrix& x, const GVec& v);

}  // namespace supersym
