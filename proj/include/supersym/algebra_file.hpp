#pragma once

#include "supersym/liealg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace supersym {

class ParseError : public std::invalid_argument {
public:
    ParseError(int line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Line-oriented algebra definition:
//   algebra <name>
//   basis <name> <even|odd>
//   bracket <a> <b> = <rat> <name> { + <rat> <name> }
//   pair h = <name> { <name> }
// '#' starts a comment. Omitted brackets are zero and [b,a] follows from
// [a,b] by super-antisymmetry.
struct AlgebraFile {
    std::string name;
    std::vector<BasisElement> basis;
    LieSuperAlgebra::Brackets brackets;        // i <= j, nonzero only
    std::optional<std::vector<std::string>> h;  // absent: h = even part

    LieSuperAlgebra algebra() const;
    SymmetricPair pair() const;
    bool default_pair() const { return !h.has_value(); }
};

AlgebraFile parse_algebra_file(std::string_view text);
// Throws std::runtime_error when the file cannot be read.
AlgebraFile load_algebra_file(const std::string& path);

// Canonical text: basis in declaration order, brackets by (i, j), terms in
// basis order.
std::string render_algebra_file(const AlgebraFile& f);

AlgebraFile algebra_file_of(const LieSuperAlgebra& g, std::optional<std::vector<std::string>> h = std::nullopt);

}  // namespace supersym
