// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-8 run
// in-process; criterion 9 drives the supersym executable.

#include "CLI11.hpp"
#include "supersym/acceptance.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace supersym;

namespace {

struct Run {
    int status = -1;
    std::string output;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Run spawn(const std::string& cli, const std::string& args, const fs::path& scratch) {
    const fs::path out = scratch / "output.txt";
    std::string cmd = quote(cli) + " " + args + " > " + quote(out.string()) + " 2>&1";
    int raw = std::system(cmd.c_str());
    Run r;
    r.status = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    r.output = slurp(out);
    return r;
}

CriterionResult cli_criterion(const std::string& cli, const std::string& data, std::uint64_t seed) {
    CriterionResult cr;
    cr.id = 9;
    cr.title = criterion_title(9);
    auto t0 = std::chrono::steady_clock::now();
    fs::path scratch = fs::temp_directory_path() / ("supersym-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(scratch);
    const std::string s = " --seed " + std::to_string(seed);
    const fs::path emit_a = scratch / "a.tsv", emit_b = scratch / "b.tsv";

    auto first = spawn(cli, "selftest" + s + " --emit " + quote(emit_a.string()), scratch);
    cr.report.add("selftest exits 0", "selftest", first.status == 0, "exit " + std::to_string(first.status));

    auto bad = spawn(cli, "gorelik " + quote(data + "/solvable11.alg"), scratch);
    bool printed = bad.output.find("str_q(ad x) = -1") != std::string::npos;
    cr.report.add("non-unimodular gorelik exits 2", "solvable11.alg", bad.status == 2 && printed,
                  "exit " + std::to_string(bad.status) + (printed ? ", supertrace printed" : ", supertrace missing"));

    auto second = spawn(cli, "selftest" + s + " --emit " + quote(emit_b.string()), scratch);
    std::string a = slurp(emit_a), b = slurp(emit_b);
    cr.report.add("--emit byte-stable", "selftest", second.status == 0 && !a.empty() && a == b,
                  std::to_string(a.size()) + " bytes");

    auto g1 = spawn(cli, "gorelik --against-solver" + s + " --emit " + quote(emit_a.string()) + " " +
                             quote(data + "/osp12.alg"), scratch);
    a = slurp(emit_a);
    auto g2 = spawn(cli, "gorelik --against-solver" + s + " --emit " + quote(emit_b.string()) + " " +
                             quote(data + "/osp12.alg"), scratch);
    b = slurp(emit_b);
    cr.report.add("--emit byte-stable", "gorelik osp12.alg", g1.status == 0 && g2.status == 0 && a == b,
                  std::to_string(a.size()) + " bytes");

    fs::remove_all(scratch);
    cr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cr;
}

void print(const CriterionResult& cr, bool verbose) {
    std::cout << (cr.pass() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " ("
              << std::fixed << std::setprecision(2) << cr.seconds << " s)\n";
    for (const auto& r : cr.report.records())
        if (verbose || !r.pass)
            std::cout << "    " << (r.pass ? "pass " : "FAIL ") << r.name << " [" << r.target << "]"
                      << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    AcceptanceOptions opt;
    std::string cli = SUPERSYM_CLI_PATH;
    std::string data = SUPERSYM_DATA_DIR;
    std::vector<int> only;
    bool verbose = false;
    app.add_option("--seed", opt.seed, "Seed of the randomized checks");
    app.add_option("--cli", cli, "Path of the supersym executable");
    app.add_option("--data", data, "Directory of the shipped algebra files");
    app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 9));
    app.add_flag("-v,--verbose", verbose, "Print every record");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (int id = 1; id <= kLibraryCriteria + 1; ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        CriterionResult cr;
        if (id <= kLibraryCriteria) {
            try {
                cr = run_criterion(id, opt);
            } catch (const std::exception& e) {
                cr.id = id;
                cr.title = criterion_title(id);
                cr.report.add("criterion aborted", "", false, e.what());
            }
        } else {
            cr = cli_criterion(cli, data, opt.seed);
        }
        print(cr, verbose);
        all = all && cr.pass();
    }
    return all ? 0 : 1;
}
