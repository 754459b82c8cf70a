#include "doctest.h"
#include "supersym/algebra_file.hpp"
#include "supersym/catalog.hpp"
#include "supersym/report.hpp"

#include <filesystem>

using namespace supersym;

namespace {

const std::string kData = SUPERSYM_DATA_DIR;

int error_line(const std::string& text) {
    try {
        parse_algebra_file(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse a small file") {
    auto f = parse_algebra_file("algebra ab\nbasis e1 odd\nbasis e2 odd\n");
    CHECK(f.name == "ab");
    CHECK(f.basis.size() == 2);
    CHECK(f.brackets.empty());
    CHECK(f.default_pair());
    auto sp = f.pair();
    CHECK(sp.nq() == 2);
    CHECK(sp.nh() == 0);

    auto s = parse_algebra_file(
        "# comment line\n"
        "algebra s2   # trailing comment\n"
        "basis x even\n"
        "basis y even\n"
        "\n"
        "bracket y x = -1 y\n");
    auto g = s.algebra();
    CHECK(g.bracket(0, 1) == RatVector{0, 1});
    CHECK(g.bracket(1, 0) == RatVector{0, -1});

    // [b,a] = [a,b] for two odd elements
    auto o = parse_algebra_file("algebra o\nbasis z even\nbasis a odd\nbasis b odd\nbracket b a = 1/2 z + 1/2 z\n");
    CHECK(o.algebra().bracket(1, 2) == RatVector{1, 0, 0});
    CHECK(parse_algebra_file("algebra z\nbasis x even\nbasis y even\nbracket x y = 0\n").brackets.empty());
}

TEST_CASE("parse errors carry the line number") {
    CHECK(error_line("algebra bad\nbasis x even\nbasis t odd\nbracket x t = 1 x\n") == 4);
    CHECK(error_line("algebra bad\nbasis x even\nbracket x q = 1 x\n") == 3);
    CHECK(error_line("algebra bad\nbasis x even\nbasis x odd\n") == 3);
    CHECK(error_line("algebra bad\nbasis x even\nbasis y even\nbracket x y = 1/0 y\n") == 4);
    CHECK(error_line("algebra bad\nbasis x even\nbasis y even\nbracket x y = one y\n") == 4);
    CHECK(error_line("algebra bad\nbasis x even\nbasis y even\nbracket x y = 1 y\nbracket y x = -1 y\n") == 5);
    CHECK(error_line("algebra bad\nbasis x even\nbasis y even\nbracket x y = 1 y 2 x\n") == 4);
    CHECK(error_line("algebra bad\nbasis x even\nbracket x x = 1 x\n") == 3);
    CHECK(error_line("algebra bad\nbasis x even\nbasis y maybe\n") == 3);
    CHECK(error_line("algebra bad\nbasis x even\nfrobnicate x\n") == 3);
    CHECK(error_line("basis x even\n") == 1);
    CHECK(error_line("algebra bad\nbasis x even\nbracket x x = 0\nbasis y even\n") == 4);
    // odd elements in h: [h,h] leaves h
    CHECK(error_line("algebra o\nbasis z even\nbasis a odd\nbasis b odd\nbracket a b = 1 z\n\npair h = a b\n") == 7);
    try {
        parse_algebra_file("algebra bad\nbasis x even\nbasis t odd\nbracket x t = 1 x\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 4:", 0) == 0);
    }
}

TEST_CASE("shipped files match the catalog") {
    const std::pair<const char*, const char*> files[] = {
        {"osp12", "osp12"}, {"gl11", "gl11"}, {"gl21", "gl21"}, {"heisenberg_super", "heisenberg_super"},
        {"solvable2", "solvable2"}, {"solvable11", "solvable11"}, {"abelian02", "abelian(0,2)"}};
    for (const auto& [file, entry] : files) {
        CAPTURE(file);
        auto f = load_algebra_file(kData + "/" + file + ".alg");
        auto g = f.algebra();
        auto c = catalog(entry);
        REQUIRE(g.dim() == c.algebra.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) {
            CHECK(g.basis_name(i) == c.algebra.basis_name(i));
            CHECK(g.parity(i) == c.algebra.parity(i));
            for (std::size_t j = 0; j < g.dim(); ++j) CHECK(g.bracket(i, j) == c.algebra.bracket(i, j));
        }
        CHECK(check_jacobi(g).ok);
        CHECK(f.pair().nq() == c.pair().nq());
    }
    CHECK_THROWS_AS(load_algebra_file(kData + "/missing.alg"), std::runtime_error);
}

TEST_CASE("render round trip") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        std::vector<std::string> h;
        for (auto i : e.h_indices) h.push_back(e.algebra.basis_name(i));
        for (auto hh : {std::optional<std::vector<std::string>>(), std::optional<std::vector<std::string>>(h)}) {
            auto text = render_algebra_file(algebra_file_of(e.algebra, hh));
            auto back = parse_algebra_file(text);
            CHECK(render_algebra_file(back) == text);
            CHECK(back.algebra().upper_brackets() == e.algebra.upper_brackets());
        }
    }
}

TEST_CASE("report") {
    Report r;
    r.add("first", "osp12", true, "ok");
    r.run("second", "gl11", [] { return std::pair<bool, std::string>{false, "w=E12\tE21"}; });
    r.run("third", "", []() -> std::pair<bool, std::string> { throw std::runtime_error("boom"); });
    CHECK_FALSE(r.all_pass());
    CHECK(r.failures() == 2);
    CHECK(r.tsv() == "first\tosp12\tPASS\tok\nsecond\tgl11\tFAIL\tw=E12 E21\nthird\t\tFAIL\texception: boom\n");
    CHECK(r.text().rfind("PASS first [osp12]: ok\n", 0) == 0);
    Report s;
    s.append(r);
    CHECK(s.records().size() == 3);
    CHECK(Report().all_pass());
}
