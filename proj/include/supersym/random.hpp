#pragma once

#include "supersym/superpoly.hpp"

#include <optional>
#include <random>

namespace supersym {

using Rng = std::mt19937_64;

// Small rational with numerator in [-range, range] and denominator in [1, 4].
Rational random_rational(Rng& rng, int range = 3);

// Random polynomial with up to `terms` terms of total degree <= max_degree.
// When a parity is requested only monomials of that parity are produced;
// with zero_constant the constant monomial is skipped.
SuperPolynomial random_superpoly(const TablePtr& table, Rng& rng, int terms, int max_degree,
                                 std::optional<Parity> parity = std::nullopt, bool zero_constant = false);

}  // namespace supersym

#include "supersym/supermatrix.hpp"

namespace supersym {

// Random even supermatrix; entry (i,j) has parity p_i + p_j. With
// nilpotent_at_zero all constant terms vanish, otherwise the constant part is
// the identity plus a small random even perturbation.
SuperMatrix random_even_matrix(const std::vector<Parity>& basis, const TablePtr& table, Rng& rng,
                               bool nilpotent_at_zero, int terms = 2, int max_degree = 2);

}  // namespace supersym
