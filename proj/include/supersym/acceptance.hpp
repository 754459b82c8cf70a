#pragma once

#include "supersym/coderiv.hpp"
#include "supersym/enveloping.hpp"
#include "supersym/random.hpp"
#include "supersym/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace supersym {

// All monomials over the given parities of total degree <= D.
std::vector<Monomial> monomials_upto(const std::vector<Parity>& par, int D);

// Delta(beta(w)) = (beta (x) beta)(Delta w) for all monomials of degree <= D.
CheckResult check_coalgebra_morphism(const Enveloping& env, int D);
// tau(beta~(w)) = w for all S(q) monomials of degree <= D.
CheckResult check_tau_inverts_beta(const SymmetricPair& sp, const Enveloping& env, int D);
// `words` random words of length 2..5, each rewritten under `schedules`
// random schedules and compared with the leftmost normal form.
CheckResult check_confluence(const Enveloping& env, Rng& rng, int words, int schedules);

struct AcceptanceOptions {
    std::uint64_t seed = 20240607;
    int series_order = 12;  // criteria 1 and 2
    int degree = 4;         // degree bound of the PBW checks
    int even_order = 6;     // truncation of even variables
};

struct CriterionResult {
    int id = 0;
    std::string title;
    Report report;
    double seconds = 0;
    bool pass() const { return report.all_pass(); }
};

constexpr int kLibraryCriteria = 8;

std::string criterion_title(int id);
// Criteria 1..8; the CLI criterion is driven by the acceptance binary.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace supersym
