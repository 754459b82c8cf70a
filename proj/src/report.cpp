#include "supersym/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace supersym {

namespace {

// Tabs and newlines would break the line-per-record format.
std::string flatten(std::string s) {
    std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
    return s;
}

}  // namespace

void Report::add(std::string name, std::string target, bool pass, std::string detail) {
    records_.push_back({std::move(name), std::move(target), pass, std::move(detail), 0});
}

void Report::run(const std::string& name, const std::string& target,
                 const std::function<std::pair<bool, std::string>()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord r{name, target, false, "", 0};
    try {
        auto [ok, detail] = f();
        r.pass = ok;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    records_.push_back(std::move(r));
}

void Report::append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::all_pass() const {
    return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return !r.pass; }));
}

std::string Report::tsv() const {
    std::ostringstream os;
    for (const auto& r : records_)
        os << flatten(r.name) << '\t' << flatten(r.target) << '\t' << (r.pass ? "PASS" : "FAIL") << '\t'
           << flatten(r.detail) << '\n';
    return os.str();
}

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        os << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.target.empty()) os << " [" << r.target << "]";
        if (!r.detail.empty()) os << ": " << r.detail;
        if (r.elapsed_ms >= 1) os << " (" << std::fixed << std::setprecision(0) << r.elapsed_ms << " ms)";
        os << '\n';
    }
    return os.str();
}

}  // namespace supersym
