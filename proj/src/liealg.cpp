#include "supersym/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace supersym {

LieSuperAlgebra::LieSuperAlgebra(std::string name, std::vector<BasisElement> basis, const Brackets& upper)
    : name_(std::move(name)), basis_(std::move(basis)) {
    const std::size_t n = basis_.size();
    std::set<std::string> seen;
    for (const auto& b : basis_) {
        if (!seen.insert(b.name).second) throw AlgebraError("duplicate basis element " + b.name);
        parities_.push_back(b.parity);
    }
    table_.assign(n * n, RatVector(n, Rational(0)));
    for (const auto& [ij, v] : upper) {
        auto [i, j] = ij;
        if (i >= n || j >= n) throw AlgebraError("bracket index out of range");
        if (i > j) throw AlgebraError("brackets must be given for i <= j");
        if (v.size() != n) throw AlgebraError("bracket vector has wrong length");
        Parity target = parities_[i] + parities_[j];
        for (std::size_t k = 0; k < n; ++k)
            if (!v[k].is_zero() && parities_[k] != target)
                throw AlgebraError("bracket [" + basis_[i].name + "," + basis_[j].name + "] has a component on " +
                                   basis_[k].name + " of the wrong parity");
        if (i == j && parities_[i] == Parity::Even &&
            std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); }))
            throw AlgebraError("even element " + basis_[i].name + " has nonzero self-bracket");
        table_[i * n + j] = v;
        if (i != j) {
            int s = -koszul(parities_[i], parities_[j]);
            RatVector w(n);
            for (std::size_t k = 0; k < n; ++k) w[k] = v[k] * Rational(s);
            table_[j * n + i] = std::move(w);
        }
    }
}

std::optional<std::size_t> LieSuperAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    return std::nullopt;
}

std::vector<std::size_t> LieSuperAlgebra::indices_of(Parity p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (parities_[i] == p) out.push_back(i);
    return out;
}

RatVector LieSuperAlgebra::bracket(const RatVector& a, const RatVector& b) const {
    const std::size_t n = dim();
    RatVector r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Rational c = a[i] * b[j];
            const auto& v = bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero()) r[k] += c * v[k];
        }
    }
    return r;
}

RatVector LieSuperAlgebra::basis_vector(std::size_t i) const {
    RatVector v(dim(), Rational(0));
    v.at(i) = 1;
    return v;
}

LieSuperAlgebra::Brackets LieSuperAlgebra::upper_brackets() const {
    Brackets out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) {
            const auto& v = bracket(i, j);
            if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); })) out[{i, j}] = v;
        }
    return out;
}

LieSuperAlgebra LieSuperAlgebra::permuted(const std::vector<std::size_t>& perm, std::string name) const {
    const std::size_t n = dim();
    if (perm.size() != n) throw AlgebraError("permutation has wrong length");
    std::vector<std::size_t> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv.at(perm[k]) = k;
    std::vector<BasisElement> b;
    for (std::size_t k = 0; k < n; ++k) b.push_back(basis_[perm[k]]);
    Brackets up;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const auto& v = bracket(perm[i], perm[j]);
            RatVector w(n, Rational(0));
            bool nz = false;
            for (std::size_t k = 0; k < n; ++k) {
                w[inv[k]] = v[k];
                nz = nz || !v[k].is_zero();
            }
            if (nz) up[{i, j}] = std::move(w);
        }
    return LieSuperAlgebra(std::move(name), std::move(b), up);
}

std::string LieSuperAlgebra::render_vector(const RatVector& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        Rational mag = v[k].abs();
        if (first) os << (v[k].sign() < 0 ? "-" : "");
        else os << (v[k].sign() < 0 ? " - " : " + ");
        if (!mag.is_one()) os << mag << " ";
        os << basis_[k].name;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

JacobiResult check_jacobi(const LieSuperAlgebra& g) {
    const std::size_t n = g.dim();
    JacobiResult res;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto ea = g.basis_vector(a), eb = g.basis_vector(b), ec = g.basis_vector(c);
                Parity pa = g.parity(a), pb = g.parity(b), pc = g.parity(c);
                RatVector s(n, Rational(0));
                auto acc = [&](const RatVector& v, int sign) {
                    for (std::size_t k = 0; k < n; ++k) s[k] += v[k] * Rational(sign);
                };
                acc(g.bracket(ea, g.bracket(eb, ec)), koszul(pa, pc));
                acc(g.bracket(eb, g.bracket(ec, ea)), koszul(pb, pa));
                acc(g.bracket(ec, g.bracket(ea, eb)), koszul(pc, pb));
                if (std::any_of(s.begin(), s.end(), [](const Rational& r) { return !r.is_zero(); })) {
                    res.ok = false;
                    res.witness = std::array<std::size_t, 3>{a, b, c};
                    res.value = s;
                    return res;
                }
            }
    return res;
}

SymmetricPair::SymmetricPair(const LieSuperAlgebra& g, const std::vector<std::size_t>& h_indices)
    : g_(g), nq_(0) {
    const std::size_t n = g.dim();
    std::vector<bool> in_h(n, false);
    for (auto i : h_indices) {
        if (i >= n) throw AlgebraError("pair: index out of range");
        if (in_h[i]) throw AlgebraError("pair: repeated index");
        in_h[i] = true;
    }
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < n; ++i)
        if (!in_h[i]) perm.push_back(i);
    nq_ = perm.size();
    for (std::size_t i = 0; i < n; ++i)
        if (in_h[i]) perm.push_back(i);
    // Eigenspace compatibility: [x,y] lies in the eigenspace of sigma(x)sigma(y).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            bool target_h = in_h[i] == in_h[j];
            const auto& v = g.bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero() && in_h[k] != target_h)
                    throw AlgebraError("pair: [" + g.basis_name(i) + "," + g.basis_name(j) + "] has a component on " +
                                       g.basis_name(k) + " outside " + (target_h ? "h" : "q"));
        }
    g_ = g.permuted(perm, g.name());
    original_ = perm;
}

SymmetricPair SymmetricPair::parity_pair(const LieSuperAlgebra& g) {
    return SymmetricPair(g, g.indices_of(Parity::Even));
}

std::vector<Parity> SymmetricPair::q_parities() const {
    return std::vector<Parity>(g_.parities().begin(), g_.parities().begin() + static_cast<std::ptrdiff_t>(nq_));
}

bool SymmetricPair::q_purely_odd() const {
    for (std::size_t i = 0; i < nq_; ++i)
        if (g_.parity(i) != Parity::Odd) return false;
    return true;
}

Rational str_q_ad(const SymmetricPair& sp, std::size_t a) {
    const auto& g = sp.algebra();
    Rational s(0);
    // ad a is even for a in h_0; the formula keeps the general sign.
    Parity pa = g.parity(a);
    for (std::size_t i = 0; i < sp.nq(); ++i) {
        int sign = (bit(g.parity(i)) * (bit(g.parity(i)) + bit(pa))) % 2 ? -1 : 1;
        s += g.structure_constant(a, i, i) * Rational(sign);
    }
    return s;
}

UnimodularityResult check_unimodularity(const SymmetricPair& sp) {
    UnimodularityResult r;
    for (std::size_t a = sp.nq(); a < sp.algebra().dim(); ++a) {
        Rational v = str_q_ad(sp, a);
        if (!v.is_zero()) {
            r.ok = false;
            r.witness = a;
            r.value = v;
            return r;
        }
    }
    return r;
}

GVec gvec_zero(const LieSuperAlgebra& g, const TablePtr& t) { return GVec(g.dim(), SuperPolynomial(t)); }

GVec gvec_constant(const LieSuperAlgebra& g, const TablePtr& t, const RatVector& v) {
    GVec r;
    for (std::size_t i = 0; i < g.dim(); ++i) r.emplace_back(t, v.at(i));
    return r;
}

GVec gvec_add(const GVec& a, const GVec& b) {
    GVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

GVec gvec_scale(const GVec& a, const Rational& c) {
    GVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

GVec gvec_bracket(const LieSuperAlgebra& g, const GVec& a, const GVec& b) {
    const std::size_t n = g.dim();
    GVec r = gvec_zero(g, a.at(0).table());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        SuperPolynomial ai_odd = a[i].odd_part();
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const auto& v = g.bracket(i, j);
            if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) continue;
            SuperPolynomial coeff = a[i] * b[j];
            if (g.parity(j) == Parity::Odd) coeff -= (ai_odd * b[j]) * Rational(2);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero()) r[k] += coeff * v[k];
        }
    }
    return r;
}

bool gvec_is_zero(const GVec& a) {
    return std::all_of(a.begin(), a.end(), [](const SuperPolynomial& p) { return p.is_zero(); });
}

}  // namespace supersym
