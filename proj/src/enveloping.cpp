#include "supersym/enveloping.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace supersym {

Enveloping::Enveloping(LieSuperAlgebra g, std::size_t nq, int degree_bound)
    : g_(std::move(g)), nq_(nq), degree_bound_(degree_bound) {
    if (nq_ > g_.dim()) throw AlgebraError("q-part larger than the algebra");
}

Enveloping Enveloping::of_pair(const SymmetricPair& sp, int degree_bound) {
    return Enveloping(sp.algebra(), sp.nq(), degree_bound);
}

bool Enveloping::is_pure_q(const PbwMonomial& m) const {
    for (std::size_t i = nq_; i < m.size(); ++i)
        if (m[i] != 0) return false;
    return true;
}

Pbw Enveloping::one() const { return monomial(PbwMonomial(g_.dim(), 0)); }

Pbw Enveloping::j(std::size_t i) const {
    PbwMonomial m(g_.dim(), 0);
    m.at(i) = 1;
    return monomial(m);
}

Pbw Enveloping::j(const RatVector& v) const {
    Pbw out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out += j(i) * v[i];
    return out;
}

Pbw Enveloping::monomial(const PbwMonomial& m, const Rational& c) const {
    Pbw out;
    out.add_term(m, c);
    return out;
}

std::vector<std::size_t> Enveloping::violations(const Word& w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1] || (w[i] == w[i + 1] && g_.parity(w[i]) == Parity::Odd)) out.push_back(i);
    return out;
}

std::vector<std::size_t> Enveloping::first_violation(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1] || (w[i] == w[i + 1] && g_.parity(w[i]) == Parity::Odd)) return {i};
    return {};
}

Pbw Enveloping::rewrite_at(const Word& w, std::size_t i, const std::function<Pbw(const Word&)>& rec) const {
    const std::size_t a = w[i], b = w[i + 1];
    Pbw out;
    auto bracket_terms = [&](const RatVector& v, const Rational& scale) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            u.push_back(k);
            u.insert(u.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
            out += rec(u) * (v[k] * scale);
        }
    };
    if (a == b) {
        // e e = 1/2 [e, e] for odd e
        bracket_terms(g_.bracket(a, a), Rational(1, 2));
        return out;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    out += rec(swapped) * Rational(koszul(g_.parity(a), g_.parity(b)));
    bracket_terms(g_.bracket(a, b), Rational(1));
    return out;
}

Pbw Enveloping::normal_form(const Word& w) const {
    {
        std::lock_guard lock(mu_);
        auto it = nf_cache_.find(w);
        if (it != nf_cache_.end()) return it->second;
    }
    Pbw out;
    auto v = first_violation(w);
    if (v.empty()) {
        PbwMonomial m(g_.dim(), 0);
        for (auto i : w) ++m.at(i);
        out.add_term(m, Rational(1));
    } else {
        out = rewrite_at(w, v[0], [this](const Word& u) { return normal_form(u); });
    }
    std::lock_guard lock(mu_);
    nf_cache_.emplace(w, out);
    return out;
}

Pbw Enveloping::normal_form_random(const Word& w, Rng& rng) const {
    auto v = violations(w);
    if (v.empty()) {
        PbwMonomial m(g_.dim(), 0);
        for (auto i : w) ++m.at(i);
        return monomial(m);
    }
    std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
    return rewrite_at(w, v[pick(rng)], [this, &rng](const Word& u) { return normal_form_random(u, rng); });
}

PbwTensor Enveloping::coproduct(const Pbw& u) const {
    PbwTensor out;
    for (const auto& [m, c] : u.terms()) {
        // Legs of a split of a sorted word are sorted, so the S(g) split
        // formula applies verbatim.
        mono::for_each_split(m, g_.parities(), [&](const Rational& k, const Monomial& l, const Monomial& r) {
            auto& slot = out[{l, r}];
            slot += k * c;
        });
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

PbwTensor Enveloping::tensor(const Pbw& a, const Pbw& b) const {
    PbwTensor out;
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) out[{m1, m2}] += c1 * c2;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Pbw Enveloping::antipode(const Pbw& u) const {
    Pbw out;
    for (const auto& [m, c] : u.terms()) {
        Word w = mono::letters(m);
        std::size_t odd = 0;
        for (auto i : w) odd += g_.parity(i) == Parity::Odd ? 1 : 0;
        const long k = static_cast<long>(odd);
        int sign = (w.size() % 2 ? -1 : 1) * ((k * (k - 1) / 2) % 2 ? -1 : 1);
        std::reverse(w.begin(), w.end());
        out += normal_form(w) * (c * Rational(sign));
    }
    return out;
}

Pbw Enveloping::symmetrize(const Monomial& w) const {
    if (w.size() != g_.dim()) throw AlgebraError("symmetrize: monomial has wrong length");
    Word letters = mono::letters(w);
    const std::size_t n = letters.size();
    // Distinct arrangements of the multiset; repeated letters are even so all
    // permutations giving the same arrangement carry the same sign.
    Rational weight(1);
    for (auto e : w) weight *= factorial(e);
    weight *= factorial(static_cast<unsigned>(n)).inverse();
    Pbw out;
    Word arr = letters;
    do {
        int sign = mono::sort_sign(arr, g_.parities());
        out += normal_form(arr) * (weight * Rational(sign));
    } while (std::next_permutation(arr.begin(), arr.end()));
    return out;
}

Pbw Enveloping::symmetrize(const SuperPolynomial::Terms& w) const {
    Pbw out;
    for (const auto& [m, c] : w) {
        Monomial full(g_.dim(), 0);
        std::copy(m.begin(), m.end(), full.begin());
        out += symmetrize(full) * c;
    }
    return out;
}

Pbw Enveloping::twisted_adjoint(std::size_t a, const Pbw& u) const {
    Pbw left = multiply(j(a), u);
    const Rational sigma(a < nq_ ? -1 : 1);
    Pbw right;
    for (const auto& [m, c] : u.terms()) {
        int sign = koszul(g_.parity(a), parity(m));
        right += multiply(monomial(m, c), j(a)) * (sigma * Rational(sign));
    }
    return left - right;
}

Pbw Enveloping::gamma(const Pbw& u) const {
    Pbw out;
    for (const auto& [m, c] : u.terms()) {
        Word w = mono::letters(m);
        Pbw v = one();
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = twisted_adjoint(*it, v);
        out += v * c;
    }
    return out;
}

Pbw Enveloping::quotient_mod_h(const Pbw& u) const {
    Pbw out;
    for (const auto& [m, c] : u.terms())
        if (is_pure_q(m)) out.add_term(m, c);
    return out;
}

const Pbw& Enveloping::factor_basis(const PbwMonomial& m) const {
    {
        std::lock_guard lock(mu_);
        auto it = factor_cache_.find(m);
        if (it != factor_cache_.end()) return it->second;
    }
    Monomial wq = m, mh = m;
    std::fill(wq.begin() + static_cast<std::ptrdiff_t>(nq_), wq.end(), 0);
    std::fill(mh.begin(), mh.begin() + static_cast<std::ptrdiff_t>(nq_), 0);
    Pbw v = multiply(symmetrize(wq), monomial(mh));
    std::lock_guard lock(mu_);
    return factor_cache_.emplace(m, std::move(v)).first->second;
}

std::map<PbwMonomial, Rational> Enveloping::factorize(const Pbw& u) const {
    if (u.max_degree() > degree_bound_) throw DegreeOverflow(u.max_degree(), degree_bound_);
    // beta(w) m_h = (w m_h) + terms of lower degree, so peeling off the
    // highest-degree terms is a triangular solve.
    std::map<PbwMonomial, Rational> coords;
    Pbw rest = u;
    while (!rest.is_zero()) {
        const PbwMonomial* lead = nullptr;
        int best = -1;
        for (const auto& [m, c] : rest.terms()) {
            int d = mono::total_degree(m);
            if (d > best) {
                best = d;
                lead = &m;
            }
        }
        PbwMonomial m = *lead;
        Rational c = rest.terms().at(m);
        rest -= factor_basis(m) * c;
        coords[m] += c;
    }
    std::erase_if(coords, [](const auto& kv) { return kv.second.is_zero(); });
    return coords;
}

std::string Enveloping::render(const PbwMonomial& m) const {
    std::vector<std::string> names;
    for (const auto& b : g_.basis()) names.push_back(b.name);
    return render_monomial(m, names);
}

std::string Enveloping::render(const Pbw& u) const {
    std::vector<std::pair<PbwMonomial, Rational>> terms(u.terms().begin(), u.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return render_order(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational mag = c.abs();
        if (first) os << (c.sign() < 0 ? "-" : "");
        else os << (c.sign() < 0 ? " - " : " + ");
        bool unit = mono::total_degree(m) == 0;
        if (unit) os << mag;
        else {
            if (!mag.is_one()) os << mag << " ";
            os << render(m);
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace supersym
