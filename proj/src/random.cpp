#include "supersym/random.hpp"

namespace supersym {

Rational random_rational(Rng& rng, int range) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 4);
    return Rational(num(rng), den(rng));
}

SuperPolynomial random_superpoly(const TablePtr& table, Rng& rng, int terms, int max_degree,
                                 std::optional<Parity> parity, bool zero_constant) {
    SuperPolynomial p(table);
    const std::size_t n = table->size();
    if (n == 0) {
        if (!zero_constant && parity.value_or(Parity::Even) == Parity::Even)
            p.add_term(Monomial{}, random_rational(rng));
        return p;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> deg(zero_constant ? 1 : 0, std::max(max_degree, zero_constant ? 1 : 0));
    for (int t = 0; t < terms; ++t) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            Monomial m(n, 0);
            int d = deg(rng);
            for (int k = 0; k < d; ++k) {
                std::size_t i = pick(rng);
                if (table->parity(i) == Parity::Odd) m[i] = 1;
                else ++m[i];
            }
            if (zero_constant && mono::total_degree(m) == 0) continue;
            if (parity && mono::parity(m, table->parities()) != *parity) continue;
            p.add_term(m, random_rational(rng));
            break;
        }
    }
    return p;
}

}  // namespace supersym

namespace supersym {

SuperMatrix random_even_matrix(const std::vector<Parity>& basis, const TablePtr& table, Rng& rng,
                               bool nilpotent_at_zero, int terms, int max_degree) {
    SuperMatrix m(basis, table);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Parity p = basis[i] + basis[j];
            m(i, j) = random_superpoly(table, rng, terms, max_degree, p, true);
            if (!nilpotent_at_zero && p == Parity::Even) {
                // unipotent-lower-triangular constant part keeps delta(X) invertible
                if (i == j) m(i, j) += SuperPolynomial(table, Rational(1));
                else if (i > j) m(i, j) += SuperPolynomial(table, random_rational(rng, 2));
            }
        }
    return m;
}

}  // namespace supersym
