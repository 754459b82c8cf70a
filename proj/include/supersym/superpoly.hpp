#pragma once

#include "supersym/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace supersym {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return p == Parity::Odd ? 1 : 0; }
inline Parity parity_of_bit(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of_bit(bit(a) + bit(b)); }
// (-1)^{ab}
inline int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

enum class Grading { Even, Odd, Inhomogeneous };

class TableMismatch : public std::invalid_argument {
public:
    TableMismatch() : std::invalid_argument("super-polynomials live over different variable tables") {}
};

class UnknownVariable : public std::invalid_argument {
public:
    explicit UnknownVariable(const std::string& n) : std::invalid_argument("unknown variable: " + n) {}
};

// Ordered graded variables. The truncation order bounds the total degree in
// the even variables; it may be left unbounded only when every variable is odd.
class VariableTable {
public:
    VariableTable(std::vector<std::string> names, std::vector<Parity> parities,
                  std::optional<int> truncation_order);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    Parity parity(std::size_t i) const { return parities_.at(i); }
    const std::vector<Parity>& parities() const { return parities_; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> truncation_order() const { return truncation_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t odd_count() const;

private:
    std::vector<std::string> names_;
    std::vector<Parity> parities_;
    std::optional<int> truncation_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<std::string> names, std::vector<Parity> parities,
                    std::optional<int> truncation_order = std::nullopt);

// Exponent vector; odd exponents are 0 or 1 and odd letters are read in
// ascending index order.
using Monomial = std::vector<std::uint8_t>;

namespace mono {

int total_degree(const Monomial& m);
int even_degree(const Monomial& m, std::span<const Parity> par);
Parity parity(const Monomial& m, std::span<const Parity> par);

// Sign of moving the letters of b past those of a into ascending order, or 0
// when a and b share an odd letter.
int product_sign(const Monomial& a, const Monomial& b, std::span<const Parity> par);

Monomial add(const Monomial& a, const Monomial& b);

// Enumerates the coproduct of the monomial m of a free supercommutative
// algebra: m -> sum coeff * left (x) right, with binomial multiplicities and
// the Koszul sign of the shuffle.
void for_each_split(const Monomial& m, std::span<const Parity> par,
                    const std::function<void(const Rational&, const Monomial&, const Monomial&)>& f);

// Letter sequence of m in canonical order (even letters repeated).
std::vector<std::size_t> letters(const Monomial& m);

// Koszul sign of reading the given letter sequence in canonical order, 0 if
// an odd letter repeats.
int sort_sign(const std::vector<std::size_t>& seq, std::span<const Parity> par);

}  // namespace mono

// Element of the supercommutative algebra on a VariableTable, truncated in
// even degree.
class SuperPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit SuperPolynomial(TablePtr table);
    SuperPolynomial(TablePtr table, const Rational& constant);

    static SuperPolynomial variable(TablePtr table, std::size_t index);
    static SuperPolynomial variable(TablePtr table, const std::string& name);
    static SuperPolynomial monomial(TablePtr table, Monomial m, const Rational& c);

    const TablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Adds c*m, dropping terms beyond the truncation order.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& c);
    SuperPolynomial operator-() const;
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
    friend SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

    Grading grading() const;
    SuperPolynomial even_part() const;
    SuperPolynomial odd_part() const;
    SuperPolynomial homogeneous_part(int total_degree) const;
    // Keeps terms of total degree <= d.
    SuperPolynomial truncated(int total_degree) const;
    int max_total_degree() const;

    SuperPolynomial partial_derivative(std::size_t var) const;
    SuperPolynomial partial_derivative(const std::string& var) const;
    Rational evaluate_at_zero() const;

    // Same terms over another table with identical variables and a possibly
    // different truncation order.
    SuperPolynomial rebased(TablePtr other) const;

    std::string str() const;

private:
    TablePtr table_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SuperPolynomial& p);

// delta(d/dx^1 ... d/dx^q p), the innermost derivative being d/dx^q.
Rational berezin_integral(const SuperPolynomial& p);

// exp(p) for p with zero constant term.
SuperPolynomial exp_nilpotent(const SuperPolynomial& p);
// log(p) for p with constant term 1.
SuperPolynomial log_unipotent(const SuperPolynomial& p);
// Multiplicative inverse of an even p with invertible constant term.
SuperPolynomial inverse_even(const SuperPolynomial& p);
// p^k, k >= 0.
SuperPolynomial power(const SuperPolynomial& p, int k);

// Interior product of a function f (variables x^i) on a symmetric-algebra
// monomial space (letters e_i, same parities): x^i acts as the left
// derivative d/de_i and products act by composition, (f1 f2).w = f1.(f2.w).
// Both arguments are coefficient maps over the same parity list.
SuperPolynomial::Terms contract(const SuperPolynomial::Terms& f, const SuperPolynomial::Terms& w,
                                std::span<const Parity> par);

// Derivative of a coefficient map in the letter var (left convention).
SuperPolynomial::Terms derive_terms(const SuperPolynomial::Terms& w, std::size_t var,
                                    std::span<const Parity> par);

// Pairing f(w): the constant term of f.w.
Rational pairing(const SuperPolynomial::Terms& f, const SuperPolynomial::Terms& w,
                 std::span<const Parity> par);

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);
// Ordering used for rendering: by total degree, then larger exponent vector first.
bool render_order(const Monomial& a, const Monomial& b);

}  // namespace supersym
