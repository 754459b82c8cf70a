#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace supersym {

struct CheckRecord {
    std::string name;
    std::string target;
    bool pass = true;
    std::string detail;  // witness on failure, value or note otherwise
    double elapsed_ms = 0;
};

// Ordered check records. The TSV form leaves out timings so that it is
// byte-stable across runs.
class Report {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void add(std::string name, std::string target, bool pass, std::string detail = "");
    // Runs f, timing it; f returns (pass, detail). Exceptions become failures.
    void run(const std::string& name, const std::string& target, const std::function<std::pair<bool, std::string>()>& f);
    void append(const Report& other);

    const std::vector<CheckRecord>& records() const { return records_; }
    bool all_pass() const;
    std::size_t failures() const;

    std::string tsv() const;
    std::string text() const;

private:
    std::vector<CheckRecord> records_;
};

}  // namespace supersym
