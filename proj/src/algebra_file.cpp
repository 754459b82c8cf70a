#include "supersym/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace supersym {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

Rational parse_rational(const std::string& s, int line) {
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, "malformed rational '" + s + "'");
    }
}

}  // namespace

LieSuperAlgebra AlgebraFile::algebra() const { return LieSuperAlgebra(name, basis, brackets); }

SymmetricPair AlgebraFile::pair() const {
    auto g = algebra();
    if (!h) return SymmetricPair::parity_pair(g);
    std::vector<std::size_t> idx;
    for (const auto& n : *h) idx.push_back(g.index_of(n).value());
    return SymmetricPair(g, idx);
}

AlgebraFile parse_algebra_file(std::string_view text) {
    AlgebraFile f;
    std::map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, int> bracket_line;
    int pair_line = 0;
    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;
    auto lookup = [&](const std::string& n, int line) {
        auto it = index.find(n);
        if (it == index.end()) throw ParseError(line, "unknown basis element '" + n + "'");
        return it->second;
    };
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tk = tokens(raw);
        if (tk.empty()) continue;
        const auto& kw = tk[0];
        if (kw == "algebra") {
            if (tk.size() != 2) throw ParseError(lineno, "expected 'algebra <name>'");
            if (!f.name.empty()) throw ParseError(lineno, "algebra name given twice");
            f.name = tk[1];
        } else if (kw == "basis") {
            if (tk.size() != 3) throw ParseError(lineno, "expected 'basis <name> <even|odd>'");
            if (!f.brackets.empty() || !bracket_line.empty())
                throw ParseError(lineno, "basis declared after a bracket");
            Parity p;
            if (tk[2] == "even")
                p = Parity::Even;
            else if (tk[2] == "odd")
                p = Parity::Odd;
            else
                throw ParseError(lineno, "parity must be 'even' or 'odd', got '" + tk[2] + "'");
            if (index.count(tk[1])) throw ParseError(lineno, "duplicate basis element '" + tk[1] + "'");
            index[tk[1]] = f.basis.size();
            f.basis.push_back({tk[1], p});
        } else if (kw == "bracket") {
            if (tk.size() < 5 || tk[3] != "=") throw ParseError(lineno, "expected 'bracket <a> <b> = ...'");
            std::size_t a = lookup(tk[1], lineno), b = lookup(tk[2], lineno);
            RatVector v(f.basis.size(), Rational(0));
            if (!(tk.size() == 5 && tk[4] == "0")) {
                std::size_t k = 4;
                while (true) {
                    if (k + 1 >= tk.size()) throw ParseError(lineno, "expected '<rat> <name>' after '='");
                    Rational c = parse_rational(tk[k], lineno);
                    std::size_t e = lookup(tk[k + 1], lineno);
                    if (!c.is_zero() && f.basis[e].parity != f.basis[a].parity + f.basis[b].parity)
                        throw ParseError(lineno, "bracket [" + tk[1] + "," + tk[2] + "] has a component on " + tk[k + 1] +
                                                     " of the wrong parity");
                    v[e] += c;
                    k += 2;
                    if (k == tk.size()) break;
                    if (tk[k] != "+") throw ParseError(lineno, "expected '+' between terms, got '" + tk[k] + "'");
                    ++k;
                }
            }
            if (a > b) {
                // [b,a] = -(-1)^{p(a)p(b)} [a,b]
                Rational s(-koszul(f.basis[a].parity, f.basis[b].parity));
                for (auto& x : v) x *= s;
                std::swap(a, b);
            }
            if (auto it = bracket_line.find({a, b}); it != bracket_line.end())
                throw ParseError(lineno, "bracket [" + tk[1] + "," + tk[2] + "] already given on line " +
                                             std::to_string(it->second));
            bracket_line[{a, b}] = lineno;
            if (a == b && f.basis[a].parity == Parity::Even &&
                std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); }))
                throw ParseError(lineno, "even element " + tk[1] + " has a nonzero self-bracket");
            if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); })) f.brackets[{a, b}] = v;
        } else if (kw == "pair") {
            if (tk.size() < 3 || tk[1] != "h" || tk[2] != "=") throw ParseError(lineno, "expected 'pair h = <names>'");
            if (f.h) throw ParseError(lineno, "pair given twice");
            std::vector<std::string> names(tk.begin() + 3, tk.end());
            std::set<std::string> seen;
            for (const auto& n : names) {
                lookup(n, lineno);
                if (!seen.insert(n).second) throw ParseError(lineno, "'" + n + "' repeated in pair");
            }
            f.h = names;
            pair_line = lineno;
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (f.name.empty()) throw ParseError(lineno, "missing 'algebra <name>' line");
    if (f.basis.empty()) throw ParseError(lineno, "no basis elements declared");
    if (f.h) {
        try {
            f.pair();
        } catch (const AlgebraError& e) {
            throw ParseError(pair_line, e.what());
        }
    }
    return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

std::string render_algebra_file(const AlgebraFile& f) {
    std::ostringstream os;
    os << "algebra " << f.name << "\n";
    for (const auto& b : f.basis) os << "basis " << b.name << " " << (b.parity == Parity::Even ? "even" : "odd") << "\n";
    for (const auto& [k, v] : f.brackets) {
        os << "bracket " << f.basis[k.first].name << " " << f.basis[k.second].name << " =";
        bool first = true;
        for (std::size_t e = 0; e < v.size(); ++e) {
            if (v[e].is_zero()) continue;
            os << (first ? " " : " + ") << v[e].str() << " " << f.basis[e].name;
            first = false;
        }
        os << "\n";
    }
    if (f.h) {
        os << "pair h =";
        for (const auto& n : *f.h) os << " " << n;
        os << "\n";
    }
    return os.str();
}

AlgebraFile algebra_file_of(const LieSuperAlgebra& g, std::optional<std::vector<std::string>> h) {
    AlgebraFile f;
    f.name = g.name();
    f.basis = g.basis();
    f.brackets = g.upper_brackets();
    f.h = std::move(h);
    return f;
}

}  // namespace supersym
