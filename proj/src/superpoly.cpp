#include "supersym/superpoly.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace supersym {

VariableTable::VariableTable(std::vector<std::string> names, std::vector<Parity> parities,
                             std::optional<int> truncation_order)
    : names_(std::move(names)), parities_(std::move(parities)), truncation_(truncation_order) {
    if (names_.size() != parities_.size())
        throw std::invalid_argument("variable table: names and parities differ in length");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw std::invalid_argument("variable table: duplicate name " + n);
    if (truncation_ && *truncation_ < 0) throw std::invalid_argument("variable table: negative truncation order");
    bool has_even = std::any_of(parities_.begin(), parities_.end(), [](Parity p) { return p == Parity::Even; });
    if (has_even && !truncation_)
        throw std::invalid_argument("variable table: even variables require a finite truncation order");
}

std::optional<std::size_t> VariableTable::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableTable::odd_count() const {
    return static_cast<std::size_t>(std::count(parities_.begin(), parities_.end(), Parity::Odd));
}

TablePtr make_table(std::vector<std::string> names, std::vector<Parity> parities,
                    std::optional<int> truncation_order) {
    return std::make_shared<const VariableTable>(std::move(names), std::move(parities), truncation_order);
}

namespace mono {

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

int even_degree(const Monomial& m, std::span<const Parity> par) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (par[i] == Parity::Even) d += m[i];
    return d;
}

Parity parity(const Monomial& m, std::span<const Parity> par) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (par[i] == Parity::Odd) d += m[i];
    return parity_of_bit(d);
}

int product_sign(const Monomial& a, const Monomial& b, std::span<const Parity> par) {
    // Each odd letter of b moves left past the odd letters of a with larger index.
    int swaps = 0;
    int odd_a_above = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (par[i] != Parity::Odd) continue;
        if (a[i] && b[i]) return 0;
        if (b[i]) swaps += odd_a_above;
        if (a[i]) ++odd_a_above;
    }
    return (swaps & 1) ? -1 : 1;
}

Monomial add(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = a[i] + b[i];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        r[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

void for_each_split(const Monomial& m, std::span<const Parity> par,
                    const std::function<void(const Rational&, const Monomial&, const Monomial&)>& f) {
    const std::size_t n = m.size();
    Monomial left(n, 0), right(n, 0);
    // Recursive enumeration over letters; the sign counts pairs (i<j) with the
    // odd letter i sent right and the odd letter j sent left.
    std::function<void(std::size_t, Rational, int, int)> rec = [&](std::size_t i, Rational mult, int sign,
                                                                   int odd_right_so_far) {
        if (i == n) {
            f(sign < 0 ? -mult : mult, left, right);
            return;
        }
        if (par[i] == Parity::Odd) {
            if (m[i] == 0) {
                left[i] = right[i] = 0;
                rec(i + 1, mult, sign, odd_right_so_far);
                return;
            }
            left[i] = 1;
            right[i] = 0;
            rec(i + 1, mult, (odd_right_so_far & 1) ? -sign : sign, odd_right_so_far);
            left[i] = 0;
            right[i] = 1;
            rec(i + 1, mult, sign, odd_right_so_far + 1);
            right[i] = 0;
            return;
        }
        for (int k = 0; k <= m[i]; ++k) {
            left[i] = static_cast<std::uint8_t>(k);
            right[i] = static_cast<std::uint8_t>(m[i] - k);
            rec(i + 1, mult * binomial(m[i], static_cast<unsigned>(k)), sign, odd_right_so_far);
        }
        left[i] = right[i] = 0;
    };
    rec(0, Rational(1), 1, 0);
}

std::vector<std::size_t> letters(const Monomial& m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) out.push_back(i);
    return out;
}

int sort_sign(const std::vector<std::size_t>& seq, std::span<const Parity> par) {
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a) {
        if (par[seq[a]] != Parity::Odd) continue;
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
            if (par[seq[b]] != Parity::Odd) continue;
            if (seq[a] == seq[b]) return 0;
            if (seq[a] > seq[b]) ++inv;
        }
    }
    return (inv & 1) ? -1 : 1;
}

}  // namespace mono

SuperPolynomial::SuperPolynomial(TablePtr table) : table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("null variable table");
}

SuperPolynomial::SuperPolynomial(TablePtr table, const Rational& constant) : SuperPolynomial(std::move(table)) {
    add_term(Monomial(table_->size(), 0), constant);
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, std::size_t index) {
    if (index >= table->size()) throw UnknownVariable(std::to_string(index));
    Monomial m(table->size(), 0);
    m[index] = 1;
    return monomial(std::move(table), std::move(m), Rational(1));
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, const std::string& name) {
    auto i = table->index_of(name);
    if (!i) throw UnknownVariable(name);
    return variable(std::move(table), *i);
}

SuperPolynomial SuperPolynomial::monomial(TablePtr table, Monomial m, const Rational& c) {
    SuperPolynomial p(std::move(table));
    if (m.size() != p.table_->size()) throw std::invalid_argument("monomial length does not match table");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (p.table_->parity(i) == Parity::Odd && m[i] > 1) return p;
    p.add_term(m, c);
    return p;
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto trunc = table_->truncation_order();
    if (trunc && mono::even_degree(m, table_->parities()) > *trunc) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    if (table_ != o.table_) throw TableMismatch();
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    if (table_ != o.table_) throw TableMismatch();
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (a.table_ != b.table_) throw TableMismatch();
    SuperPolynomial r(a.table_);
    const auto& par = a.table_->parities();
    auto trunc = a.table_->truncation_order();
    for (const auto& [ma, ca] : a.terms_) {
        int ea = trunc ? mono::even_degree(ma, par) : 0;
        for (const auto& [mb, cb] : b.terms_) {
            if (trunc && ea + mono::even_degree(mb, par) > *trunc) continue;
            int s = mono::product_sign(ma, mb, par);
            if (s == 0) continue;
            Rational c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(mono::add(ma, mb), c);
        }
    }
    return r;
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (a.table_ != b.table_) throw TableMismatch();
    return a.terms_ == b.terms_;
}

Grading SuperPolynomial::grading() const {
    bool even = false, odd = false;
    for (const auto& [m, c] : terms_) {
        if (mono::parity(m, table_->parities()) == Parity::Odd) odd = true;
        else even = true;
    }
    if (even && odd) return Grading::Inhomogeneous;
    return odd ? Grading::Odd : Grading::Even;
}

SuperPolynomial SuperPolynomial::even_part() const {
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_)
        if (mono::parity(m, table_->parities()) == Parity::Even) r.terms_.emplace(m, c);
    return r;
}

SuperPolynomial SuperPolynomial::odd_part() const {
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_)
        if (mono::parity(m, table_->parities()) == Parity::Odd) r.terms_.emplace(m, c);
    return r;
}

SuperPolynomial SuperPolynomial::homogeneous_part(int d) const {
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_)
        if (mono::total_degree(m) == d) r.terms_.emplace(m, c);
    return r;
}

SuperPolynomial SuperPolynomial::truncated(int d) const {
    SuperPolynomial r(table_);
    for (const auto& [m, c] : terms_)
        if (mono::total_degree(m) <= d) r.terms_.emplace(m, c);
    return r;
}

int SuperPolynomial::max_total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, mono::total_degree(m));
    return d;
}

SuperPolynomial::Terms derive_terms(const SuperPolynomial::Terms& w, std::size_t var, std::span<const Parity> par) {
    SuperPolynomial::Terms out;
    for (const auto& [m, c] : w) {
        if (m[var] == 0) continue;
        Monomial r = m;
        Rational v = c;
        if (par[var] == Parity::Odd) {
            int before = 0;
            for (std::size_t i = 0; i < var; ++i)
                if (par[i] == Parity::Odd && m[i]) ++before;
            if (before & 1) v = -v;
        } else {
            v *= Rational(static_cast<long>(m[var]));
        }
        r[var] -= 1;
        auto [it, inserted] = out.try_emplace(r, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

SuperPolynomial SuperPolynomial::partial_derivative(std::size_t var) const {
    if (var >= table_->size()) throw UnknownVariable(std::to_string(var));
    SuperPolynomial r(table_);
    r.terms_ = derive_terms(terms_, var, table_->parities());
    return r;
}

SuperPolynomial SuperPolynomial::partial_derivative(const std::string& var) const {
    auto i = table_->index_of(var);
    if (!i) throw UnknownVariable(var);
    return partial_derivative(*i);
}

Rational SuperPolynomial::evaluate_at_zero() const { return coefficient(Monomial(table_->size(), 0)); }

SuperPolynomial SuperPolynomial::rebased(TablePtr other) const {
    if (other->names() != table_->names() || other->parities() != table_->parities()) throw TableMismatch();
    SuperPolynomial r(std::move(other));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

bool render_order(const Monomial& a, const Monomial& b) {
    int da = mono::total_degree(a), db = mono::total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string SuperPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return render_order(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Rational& c = t->second;
        std::string body = render_monomial(t->first, table_->names());
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (body.empty()) os << mag;
        else if (mag.is_one()) os << body;
        else os << mag << " " << body;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SuperPolynomial& p) { return os << p.str(); }

Rational berezin_integral(const SuperPolynomial& p) {
    const auto& t = *p.table();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.parity(i) == Parity::Even)
            throw std::invalid_argument("Berezin integral needs a purely odd variable table");
    SuperPolynomial r = p;
    for (std::size_t i = t.size(); i-- > 0;) r = r.partial_derivative(i);
    return r.evaluate_at_zero();
}

SuperPolynomial power(const SuperPolynomial& p, int k) {
    SuperPolynomial r(p.table(), Rational(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

SuperPolynomial exp_nilpotent(const SuperPolynomial& p) {
    if (!p.evaluate_at_zero().is_zero()) throw std::invalid_argument("exp: nonzero constant term");
    SuperPolynomial sum(p.table(), Rational(1));
    SuperPolynomial term(p.table(), Rational(1));
    for (int k = 1;; ++k) {
        term = term * p;
        term *= Rational(1, k);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

SuperPolynomial log_unipotent(const SuperPolynomial& p) {
    if (!p.evaluate_at_zero().is_one()) throw std::invalid_argument("log: constant term must be 1");
    SuperPolynomial n = p - SuperPolynomial(p.table(), Rational(1));
    SuperPolynomial sum(p.table());
    SuperPolynomial term(p.table(), Rational(1));
    for (int k = 1;; ++k) {
        term = term * n;
        if (term.is_zero()) break;
        sum += term * Rational((k % 2) ? 1 : -1, k);
    }
    return sum;
}

SuperPolynomial inverse_even(const SuperPolynomial& p) {
    Rational c0 = p.evaluate_at_zero();
    if (c0.is_zero()) throw DivisionByZero();
    if (p.odd_part().term_count() != 0) throw std::invalid_argument("inverse: element is not even");
    // p = c0 (1 + n), p^{-1} = c0^{-1} sum (-n)^k
    SuperPolynomial n = p * c0.inverse() - SuperPolynomial(p.table(), Rational(1));
    SuperPolynomial sum(p.table(), Rational(1));
    SuperPolynomial term(p.table(), Rational(1));
    for (;;) {
        term = -(term * n);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum * c0.inverse();
}

SuperPolynomial::Terms contract(const SuperPolynomial::Terms& f, const SuperPolynomial::Terms& w,
                                std::span<const Parity> par) {
    SuperPolynomial::Terms out;
    for (const auto& [m, c] : f) {
        SuperPolynomial::Terms cur = w;
        auto seq = mono::letters(m);
        for (std::size_t k = seq.size(); k-- > 0 && !cur.empty();) cur = derive_terms(cur, seq[k], par);
        for (const auto& [mw, cw] : cur) {
            Rational v = c * cw;
            auto [it, inserted] = out.try_emplace(mw, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Rational pairing(const SuperPolynomial::Terms& f, const SuperPolynomial::Terms& w, std::span<const Parity> par) {
    auto r = contract(f, w, par);
    if (r.empty()) return Rational(0);
    Monomial zero(par.size(), 0);
    auto it = r.find(zero);
    return it == r.end() ? Rational(0) : it->second;
}

}  // namespace supersym
