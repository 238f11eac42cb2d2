#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ksym {

struct CaseResult {
    bool pass = true;
    /// Both sides in canonical form; filled on failure.
    std::string lhs;
    std::string rhs;
    /// Optional extra information, e.g. the computed value of a golden check.
    std::string note;
};

struct VerifyCase {
    std::string id;
    std::function<CaseResult()> run;
};

struct Suite {
    std::string name;
    std::string description;
    /// What --max-size bounds for this suite.
    std::string bound;
    int default_max_size = 0;
    std::function<std::vector<VerifyCase>(int max_size)> cases;
};

/// All suites in a fixed order.
[[nodiscard]] const std::vector<Suite>& suite_registry();
/// nullptr when unknown.
[[nodiscard]] const Suite* find_suite(const std::string& name);

struct CaseOutcome {
    std::string id;
    CaseResult result;
};

struct SuiteReport {
    std::string suite;
    int max_size = 0;
    std::vector<CaseOutcome> cases;
    double seconds = 0;

    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] bool passed() const { return failures() == 0; }
};

/// Runs every case, on `jobs` threads when jobs > 1. `on_case` sees the
/// outcomes in case order regardless of the thread count. An exception in a
/// case counts as a failure carrying the message.
SuiteReport run_suite(const Suite& suite, int max_size, int jobs = 1,
                      const std::function<void(const CaseOutcome&)>& on_case = {});

}  // namespace ksym
