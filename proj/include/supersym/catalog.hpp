#pragma once

#include "supersym/liealg.hpp"

#include <string>
#include <vector>

namespace supersym {

struct MatrixGenerator {
    std::string name;
    RatMatrix matrix;
};

// Structure constants of the span of the given supermatrices (acting on a
// graded space with parities `rep`), closed under the supercommutator
// [X,Y] = XY - (-1)^{p(X)p(Y)} YX. Throws when the span is not closed or a
// generator is not parity-homogeneous.
LieSuperAlgebra algebra_from_matrices(const std::string& name, const std::vector<Parity>& rep,
                                      const std::vector<MatrixGenerator>& gens);

// Parity of a homogeneous supermatrix in the grading `rep`.
Parity matrix_parity(const std::vector<Parity>& rep, const RatMatrix& m);
RatMatrix supercommutator(const std::vector<Parity>& rep, const RatMatrix& x, const RatMatrix& y);

struct CatalogEntry {
    LieSuperAlgebra algebra;
    std::vector<std::size_t> h_indices;  // default symmetric pair
    SymmetricPair pair() const { return SymmetricPair(algebra, h_indices); }
};

// abelian(p,q), osp12, gl11, gl21, heisenberg_super, solvable2, solvable11.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace supersym
