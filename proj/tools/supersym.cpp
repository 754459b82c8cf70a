// supersym: command-line driver for the checks of the supersym library.
//
//   supersym [flags] check FILE
//   supersym [flags] gorelik FILE
//   supersym [flags] jacobian FILE
//   supersym [flags] series
//   supersym [flags] tau FILE [LETTER...]
//   supersym [flags] selftest
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on bad input.

#include "CLI11.hpp"
#include "supersym/acceptance.hpp"
#include "supersym/algebra_file.hpp"
#include "supersym/jacobian.hpp"
#include "supersym/series.hpp"

#include <fstream>
#include <iostream>

using namespace supersym;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string emit;
    std::uint64_t seed = AcceptanceOptions{}.seed;
    std::optional<int> order;
    std::string c;
    bool against_solver = false;
    bool full_group = false;
    std::string file;
    std::vector<std::string> letters;
    std::optional<int> perturb;
};

using Outcome = std::pair<bool, std::string>;

Rational flag_c(const Flags& f, const Rational& fallback) {
    if (f.c.empty()) return fallback;
    Rational c;
    try {
        c = Rational::parse(f.c);
    } catch (const std::invalid_argument&) {
        throw InputError("--c: malformed rational '" + f.c + "'");
    }
    if (c.is_zero()) throw InputError("--c must be nonzero");
    return c;
}

AlgebraFile load(const Flags& f) {
    try {
        return load_algebra_file(f.file);
    } catch (const ParseError& e) {
        throw InputError(f.file + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

std::string join_names(const LieSuperAlgebra& g, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) s += (s.empty() ? "" : " ") + g.basis_name(i);
    return s;
}

Report cmd_check(const Flags& f) {
    auto file = load(f);
    Report rep;
    auto g = file.algebra();
    auto jac = check_jacobi(g);
    std::string jw;
    if (!jac.ok) {
        const auto& w = *jac.witness;
        jw = "(" + g.basis_name(w[0]) + "," + g.basis_name(w[1]) + "," + g.basis_name(w[2]) +
             ") cyclic sum " + g.render_vector(jac.value);
    }
    rep.add("super-Jacobi identity", g.name(), jac.ok, jac.ok ? std::to_string(g.dim()) + " basis elements" : jw);
    if (!jac.ok) return rep;
    auto sp = file.pair();
    const auto& pg = sp.algebra();
    std::string hdesc = "h = {" + join_names(pg, sp.nq(), pg.dim()) + "}, q = {" + join_names(pg, 0, sp.nq()) + "}";
    rep.add("symmetric pair", g.name(), true, file.default_pair() ? "default pair, " + hdesc : hdesc);
    auto uni = check_unimodularity(sp);
    rep.add("unimodularity", g.name(), uni.ok,
            uni.ok ? "str_q(ad a) = 0 on h"
                   : "str_q(ad " + pg.basis_name(*uni.witness) + ") = " + uni.value.str());
    const int D = f.order.value_or(3);
    const Rational c = flag_c(f, Rational(1));
    rep.run("coderivation representation", g.name() + " c=" + c.str() + " degree " + std::to_string(D), [&] {
        auto r = check_representation(sp, c, D);
        return Outcome{r.ok, r.ok ? std::to_string(r.checked) + " cases" : r.witness};
    });
    return rep;
}

Report cmd_gorelik(const Flags& f) {
    auto file = load(f);
    auto g = file.algebra();
    if (!check_jacobi(g).ok) throw InputError(g.name() + " does not satisfy the super-Jacobi identity");
    auto sp = file.pair();
    if (!sp.q_purely_odd()) throw InputError("q is not purely odd; a Gorelik element needs q = g_1");
    auto uni = check_unimodularity(sp);
    if (!uni.ok)
        throw InputError("not unimodular: str_q(ad " + sp.algebra().basis_name(*uni.witness) +
                         ") = " + uni.value.str());
    auto env = Enveloping::of_pair(sp);
    const Rational c = flag_c(f, Rational(2));
    auto cand = gorelik_candidate(sp, env, c);
    Report rep;
    rep.add("J_" + c.str(), g.name(), true, cand.J.str());
    rep.add("beta(J_" + c.str() + " d)", g.name(), true, env.render(cand.element));
    rep.run("twisted invariance", g.name(), [&] {
        auto r = verify_twisted_invariance(env, cand.element);
        return Outcome{r.ok, r.ok ? "ad'(a) T = 0 for all basis a" : r.witness};
    });
    if (sp.nq() == 2 && c == Rational(2))
        rep.run("closed form for q of rank (0,2)", g.name(), [&] {
            auto closed = gorelik_closed_form_q2(sp, env);
            return Outcome{closed == cand.element, env.render(closed)};
        });
    if (f.against_solver)
        rep.run("invariant space", g.name(), [&] {
            auto space = invariant_space(sp, env);
            std::string dim = "dimension " + std::to_string(space.elements.size());
            if (space.elements.size() != 1) return Outcome{false, dim};
            auto ratio = scalar_ratio(space.elements[0], cand.element);
            if (!ratio || ratio->is_zero()) return Outcome{false, dim + ", generator not proportional"};
            return Outcome{true, dim + ", generator = " + ratio->str() + " T"};
        });
    return rep;
}

Report cmd_jacobian(const Flags& f) {
    auto file = load(f);
    auto g = file.algebra();
    if (!check_jacobi(g).ok) throw InputError(g.name() + " does not satisfy the super-Jacobi identity");
    const int N = f.order.value_or(6);
    if (N < 0) throw InputError("--order must be nonnegative");
    Report rep;
    if (f.full_group) {
        auto J = jacobian_full_group(g, N);
        rep.add("full-group jacobian", g.name(), true, J.str());
        rep.run("full-group jacobian vs Berezinian", g.name(), [&] {
            auto gp = GenericPoint::of_algebra(g, N);
            TruncatedSeries1 fser(N + static_cast<int>(g.odd_dim()) + 1);
            for (int k = 0; k <= fser.order(); ++k)
                fser.at(k) = factorial(static_cast<unsigned>(k + 1)).inverse() * Rational(k % 2 ? -1 : 1);
            auto ber = berezinian(apply_series(fser, gp.ad_y())).truncated(N);
            return Outcome{J.rebased(gp.table()) == ber, ber.str()};
        });
        return rep;
    }
    auto sp = file.pair();
    const Rational c = flag_c(f, Rational(2));
    auto gp = GenericPoint::of_pair(sp, N);
    auto res = jacobian_Jc(gp, c, N);
    for (std::size_t k = 2; k < res.str_powers.size(); k += 2)
        rep.add("str_q(ad^" + std::to_string(k) + " y)", g.name(), true, res.str_powers[k].str());
    rep.add("J_" + c.str(), g.name(), true, res.J.str());
    rep.run("J_" + c.str() + " vs block Berezinian", g.name(), [&] {
        auto b = jacobian_Jc_block(gp, c, N);
        return Outcome{b == res.J, b.str()};
    });
    return rep;
}

Report cmd_series(const Flags& f) {
    const int N = f.order.value_or(12);
    if (N < 1) throw InputError("--order must be positive");
    const Rational c = flag_c(f, Rational(1));
    auto p = p_c(c, N + 1);
    auto q = q_c(c, N + 1);
    if (f.perturb) {
        int k = *f.perturb;
        if (k < 0 || k > N) throw InputError("--perturb index out of range");
        (k % 2 == 0 ? p : q).at(k) += Rational(1, 7);
    }
    Report rep;
    const std::string tc = "c=" + c.str() + " order " + std::to_string(N);
    rep.run("symmetric equations (p_c, -t)", tc, [&] {
        auto r = check_symmetric_equations(p, -TruncatedSeries1::identity(N + 1), N);
        return Outcome{r.all_zero(), r.all_zero() ? "residuals vanish" : r.witness()};
    });
    rep.run("coinduced equations (1, q_c)", tc, [&] {
        auto r = check_coinduced_equations(TruncatedSeries1::constant(1, N + 1), q, c, N);
        return Outcome{r.all_zero(), r.all_zero() ? "residuals vanish" : r.witness()};
    });
    rep.run("exponential jacobian identity", tc, [&] {
        auto r = exp_jacobian_residual(N);
        return Outcome{r.is_zero(), r.str()};
    });
    rep.run("q_c(2t) = (p_c(t) - p_c(2t))/t", tc, [&] {
        auto r = (q.substitute_scaled(2) - (p - p.substitute_scaled(2)).divided_by_t()).truncated(N);
        return Outcome{r.is_zero(), r.str()};
    });
    return rep;
}

Report cmd_tau(const Flags& f) {
    auto file = load(f);
    auto g = file.algebra();
    if (!check_jacobi(g).ok) throw InputError(g.name() + " does not satisfy the super-Jacobi identity");
    auto sp = file.pair();
    auto env = Enveloping::of_pair(sp);
    const auto& pg = sp.algebra();
    Report rep;
    if (!f.letters.empty()) {
        Pbw u = env.one();
        std::string word;
        for (const auto& l : f.letters) {
            auto i = pg.index_of(l);
            if (!i) throw InputError("unknown basis element '" + l + "'");
            u = env.multiply(u, env.j(*i));
            word += (word.empty() ? "" : " ") + l;
        }
        auto t = sq_table(sp, static_cast<int>(f.letters.size()) + 4);
        rep.add("tau", word, true, tau(sp, env.quotient_mod_h(u), t).str());
    }
    const int D = f.order.value_or(4);
    rep.run("tau inverts beta~", g.name() + " degree " + std::to_string(D), [&] {
        auto r = check_tau_inverts_beta(sp, env, D);
        return Outcome{r.ok, r.ok ? std::to_string(r.checked) + " monomials" : r.witness};
    });
    return rep;
}

Report cmd_selftest(const Flags& f) {
    AcceptanceOptions opt;
    opt.seed = f.seed;
    Report rep;
    for (int id = 1; id <= kLibraryCriteria; ++id) {
        auto cr = run_criterion(id, opt);
        for (auto r : cr.report.records()) {
            r.name = "criterion " + std::to_string(id) + ": " + r.name;
            rep.add(std::move(r));
        }
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Lie superalgebras, symmetric pairs and Gorelik elements"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--emit", f.emit, "Write tab-separated records to PATH");
    app.add_option("--seed", f.seed, "Seed of the randomized checks");
    app.add_option("--order", f.order, "Truncation order or degree bound");
    app.add_option("--c", f.c, "Parameter c (rational, nonzero)");
    app.add_flag("--against-solver", f.against_solver, "gorelik: compare with the invariant-space solver");
    app.add_flag("--full-group", f.full_group, "jacobian: use the whole algebra instead of q");

    std::function<Report(const Flags&)> action;
    auto verb = [&](const char* name, const char* help, bool needs_file, Report (*fn)(const Flags&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (needs_file) sub->add_option("file", f.file, "Algebra definition")->required();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    verb("check", "Jacobi identity, pair, unimodularity and the coderivation representation", true, cmd_check);
    verb("gorelik", "Build and verify the Gorelik element beta(J_2 d)", true, cmd_gorelik);
    verb("jacobian", "Jacobian of the exponential map", true, cmd_jacobian);
    verb("series", "Functional equations of p_c and q_c", false, cmd_series)
        ->add_option("--perturb", f.perturb, "Add 1/7 to the t^K coefficient (p_c if K even, q_c if odd)");
    verb("tau", "tau of a word and tau o beta~ = id", true, cmd_tau)
        ->add_option("letters", f.letters, "Basis elements of a word in U(g)");
    verb("selftest", "Acceptance criteria 1-8", false, cmd_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Report rep = action(f);
        std::cout << rep.text();
        if (!f.emit.empty()) {
            std::ofstream out(f.emit, std::ios::binary);
            if (!out) throw InputError("cannot write " + f.emit);
            out << rep.tsv();
        }
        std::cout << (rep.all_pass() ? "all checks passed" : std::to_string(rep.failures()) + " check(s) failed")
                  << "\n";
        return rep.all_pass() ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
