#pragma once

#include "supersym/exact_linalg.hpp"
#include "supersym/superpoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supersym {

struct BasisElement {
    std::string name;
    Parity parity;
};

class AlgebraError : public std::invalid_argument {
public:
    explicit AlgebraError(const std::string& what) : std::invalid_argument(what) {}
};

// Finite-dimensional Lie superalgebra given by structure constants. The
// brackets [e_i, e_j] are supplied for i <= j; the others follow from
// super-antisymmetry.
class LieSuperAlgebra {
public:
    using Brackets = std::map<std::pair<std::size_t, std::size_t>, RatVector>;

    LieSuperAlgebra(std::string name, std::vector<BasisElement> basis, const Brackets& upper);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::string& basis_name(std::size_t i) const { return basis_.at(i).name; }
    Parity parity(std::size_t i) const { return basis_.at(i).parity; }
    const std::vector<Parity>& parities() const { return parities_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::vector<std::size_t> indices_of(Parity p) const;
    std::size_t even_dim() const { return indices_of(Parity::Even).size(); }
    std::size_t odd_dim() const { return indices_of(Parity::Odd).size(); }

    // [e_i, e_j] expanded on the basis.
    const RatVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[i * dim() + j][k];
    }
    // Bilinear extension to rational coordinate vectors.
    RatVector bracket(const RatVector& a, const RatVector& b) const;
    RatVector basis_vector(std::size_t i) const;

    // The stored half (i <= j, nonzero only).
    Brackets upper_brackets() const;

    // Same algebra with basis element perm[k] moved to position k.
    LieSuperAlgebra permuted(const std::vector<std::size_t>& perm, std::string name) const;

    std::string render_vector(const RatVector& v) const;

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<Parity> parities_;
    std::vector<RatVector> table_;
};

struct JacobiResult {
    bool ok = true;
    std::optional<std::array<std::size_t, 3>> witness;
    RatVector value;  // the nonzero cyclic sum at the witness
};

// (-1)^{p(a)p(c)} [a,[b,c]] + cyclic = 0 on all basis triples.
JacobiResult check_jacobi(const LieSuperAlgebra& g);

// Involutive splitting g = h + q with q placed before h in the basis. The
// stored algebra is the reordered one; original_index maps back.
class SymmetricPair {
public:
    SymmetricPair(const LieSuperAlgebra& g, const std::vector<std::size_t>& h_indices);
    // h = even part.
    static SymmetricPair parity_pair(const LieSuperAlgebra& g);

    const LieSuperAlgebra& algebra() const { return g_; }
    std::size_t nq() const { return nq_; }
    std::size_t nh() const { return g_.dim() - nq_; }
    bool in_q(std::size_t i) const { return i < nq_; }
    bool in_h(std::size_t i) const { return i >= nq_; }
    int sigma(std::size_t i) const { return in_q(i) ? -1 : 1; }
    std::vector<Parity> q_parities() const;
    bool q_purely_odd() const;
    std::size_t original_index(std::size_t i) const { return original_.at(i); }

private:
    LieSuperAlgebra g_;
    std::size_t nq_;
    std::vector<std::size_t> original_;
};

struct UnimodularityResult {
    bool ok = true;
    std::optional<std::size_t> witness;  // basis index in the pair's order (an h element)
    Rational value;                      // str_q(ad witness)
};

// str of ad a restricted to q, for every basis a of h.
UnimodularityResult check_unimodularity(const SymmetricPair& sp);
Rational str_q_ad(const SymmetricPair& sp, std::size_t a);

// Elements of g (x) F with coefficients on the right: v = sum e_i v^i.
using GVec = std::vector<SuperPolynomial>;

GVec gvec_zero(const LieSuperAlgebra& g, const TablePtr& t);
GVec gvec_constant(const LieSuperAlgebra& g, const TablePtr& t, const RatVector& v);
GVec gvec_add(const GVec& a, const GVec& b);
GVec gvec_scale(const GVec& a, const Rational& c);
// [sum e_i f_i, sum e_j g_j] = sum (-1)^{p(f_i) p_j} [e_i, e_j] f_i g_j
GVec gvec_bracket(const LieSuperAlgebra& g, const GVec& a, const GVec& b);
bool gvec_is_zero(const GVec& a);

}  // namespace supersym
