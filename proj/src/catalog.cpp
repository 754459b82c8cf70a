#include "supersym/catalog.hpp"

#include <regex>

namespace supersym {

Parity matrix_parity(const std::vector<Parity>& rep, const RatMatrix& m) {
    std::optional<Parity> p;
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (std::size_t j = 0; j < rep.size(); ++j) {
            if (m.at(i).at(j).is_zero()) continue;
            Parity q = rep[i] + rep[j];
            if (p && *p != q) throw AlgebraError("supermatrix is not parity-homogeneous");
            p = q;
        }
    return p.value_or(Parity::Even);
}

RatMatrix supercommutator(const std::vector<Parity>& rep, const RatMatrix& x, const RatMatrix& y) {
    RatMatrix xy = rat_multiply(x, y), yx = rat_multiply(y, x);
    int s = koszul(matrix_parity(rep, x), matrix_parity(rep, y));
    for (std::size_t i = 0; i < xy.size(); ++i)
        for (std::size_t j = 0; j < xy.size(); ++j) xy[i][j] -= yx[i][j] * Rational(s);
    return xy;
}

LieSuperAlgebra algebra_from_matrices(const std::string& name, const std::vector<Parity>& rep,
                                      const std::vector<MatrixGenerator>& gens) {
    const std::size_t n = gens.size(), d = rep.size();
    std::vector<BasisElement> basis;
    for (const auto& g : gens) basis.push_back({g.name, matrix_parity(rep, g.matrix)});
    // Columns are the flattened generators.
    RatMatrix a(d * d, RatVector(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) a[i * d + j][k] = gens[k].matrix[i][j];
    if (rat_rank(a, n) != n) throw AlgebraError("generators are linearly dependent");
    LieSuperAlgebra::Brackets up;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatMatrix c = supercommutator(rep, gens[i].matrix, gens[j].matrix);
            RatVector b(d * d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) b[r * d + s] = c[r][s];
            auto x = rat_solve(a, b);
            if (!x) throw AlgebraError("span not closed under [" + gens[i].name + "," + gens[j].name + "]");
            up[{i, j}] = *x;
        }
    return LieSuperAlgebra(name, std::move(basis), up);
}

namespace {

RatMatrix unit(std::size_t d, std::size_t i, std::size_t j, const Rational& v = 1) {
    RatMatrix m(d, RatVector(d, Rational(0)));
    m[i][j] = v;
    return m;
}

RatMatrix sum(RatMatrix a, const RatMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
    return a;
}

CatalogEntry abelian(std::size_t p, std::size_t q) {
    std::vector<BasisElement> b;
    std::vector<std::size_t> h;
    for (std::size_t i = 1; i <= p; ++i) {
        h.push_back(b.size());
        b.push_back({"a" + std::to_string(i), Parity::Even});
    }
    for (std::size_t i = 1; i <= q; ++i) b.push_back({"e" + std::to_string(i), Parity::Odd});
    return {LieSuperAlgebra("abelian(" + std::to_string(p) + "," + std::to_string(q) + ")", std::move(b), {}), h};
}

CatalogEntry osp12() {
    // Defining representation on a (1|2)-dimensional space; the odd
    // generators mix the even line with the odd plane and close onto sl(2).
    std::vector<Parity> rep{Parity::Even, Parity::Odd, Parity::Odd};
    std::vector<MatrixGenerator> gens{
        {"H", sum(unit(3, 1, 1), unit(3, 2, 2, -1))},
        {"E", unit(3, 1, 2)},
        {"F", unit(3, 2, 1)},
        {"Q1", sum(unit(3, 0, 1), unit(3, 2, 0, -1))},
        {"Q2", sum(unit(3, 0, 2), unit(3, 1, 0))},
    };
    return {algebra_from_matrices("osp12", rep, gens), {0, 1, 2}};
}

CatalogEntry gl11() {
    std::vector<Parity> rep{Parity::Even, Parity::Odd};
    std::vector<MatrixGenerator> gens{
        {"E11", unit(2, 0, 0)}, {"E22", unit(2, 1, 1)}, {"E12", unit(2, 0, 1)}, {"E21", unit(2, 1, 0)}};
    return {algebra_from_matrices("gl11", rep, gens), {0, 1}};
}

CatalogEntry gl21() {
    std::vector<Parity> rep{Parity::Even, Parity::Even, Parity::Odd};
    std::vector<MatrixGenerator> gens;
    std::vector<std::size_t> h;
    // even generators first
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                bool odd = (rep[i] != rep[j]);
                if (odd != (pass == 1)) continue;
                if (!odd) h.push_back(gens.size());
                gens.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), unit(3, i, j)});
            }
    return {algebra_from_matrices("gl21", rep, gens), h};
}

CatalogEntry heisenberg_super() {
    LieSuperAlgebra::Brackets up;
    up[{1, 2}] = RatVector{1, 0, 0};
    return {LieSuperAlgebra("heisenberg_super", {{"z", Parity::Even}, {"t1", Parity::Odd}, {"t2", Parity::Odd}}, up),
            {0}};
}

CatalogEntry solvable2() {
    LieSuperAlgebra::Brackets up;
    up[{0, 1}] = RatVector{0, 1};
    return {LieSuperAlgebra("solvable2", {{"x", Parity::Even}, {"y", Parity::Even}}, up), {0}};
}

CatalogEntry solvable11() {
    LieSuperAlgebra::Brackets up;
    up[{0, 1}] = RatVector{0, 1};
    return {LieSuperAlgebra("solvable11", {{"x", Parity::Even}, {"t", Parity::Odd}}, up), {0}};
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    static const std::regex ab(R"(abelian\((\d+),(\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, ab)) return abelian(std::stoul(m[1]), std::stoul(m[2]));
    if (name == "osp12") return osp12();
    if (name == "gl11") return gl11();
    if (name == "gl21") return gl21();
    if (name == "heisenberg_super") return heisenberg_super();
    if (name == "solvable2") return solvable2();
    if (name == "solvable11") return solvable11();
    throw std::invalid_argument("unknown catalog algebra: " + name);
}

std::vector<std::string> catalog_names() {
    return {"abelian(1,2)", "abelian(0,2)", "osp12", "gl11", "gl21", "heisenberg_super", "solvable2", "solvable11"};
}

}  // namespace supersym
