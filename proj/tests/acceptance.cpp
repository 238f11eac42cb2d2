// Acceptance checks: one PASS/FAIL line per criterion, with wall time
// against the allowed budget. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ksym/grothendieck.hpp"
#include "ksym/operators.hpp"
#include "ksym/verify.hpp"

using namespace ksym;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

void suite(Outcome& o, const std::string& name, int max_size) {
    const Suite* s = find_suite(name);
    if (!s) {
        o.require(false, "missing suite " + name);
        return;
    }
    const SuiteReport r = run_suite(*s, max_size);
    std::string what = name + "@" + std::to_string(max_size) + ": " + std::to_string(r.failures()) + "/" +
                       std::to_string(r.cases.size()) + " failed";
    for (const auto& c : r.cases) {
        if (!c.result.pass) {
            what += ", first " + c.id + ": " + c.result.lhs + " vs " + c.result.rhs;
            break;
        }
    }
    o.require(r.passed() && !r.cases.empty(), what);
}

std::string capture(const std::string& args) {
    std::string out;
    FILE* pipe = popen((std::string(KSYM_BINARY) + " " + args).c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

SymFunc g(const Partition& la) { return g_to_schur(la); }

Outcome worked_example() {
    Outcome o;
    const std::map<Partition, long> golden{{{3, 2}, 1},  {{3, 1, 1}, 1},  {{2, 2, 1}, 1}, {{3, 1}, -1},
                                           {{2, 2}, -1}, {{2, 1, 1}, -1}, {{2, 1}, 1}};
    std::map<Partition, long> got;
    try {
        const auto j = nlohmann::json::parse(capture(R"(expand --to g "g[3,2,1]/[1]")"));
        o.require(j.at("basis") == "g", "basis is not g");
        for (const auto& term : j.at("terms")) {
            got[Partition(term.at("partition").get<std::vector<int>>())] = std::stol(term.at("coeff").get<std::string>());
        }
    } catch (const std::exception& err) {
        o.require(false, std::string("CLI output unreadable: ") + err.what());
    }
    o.require(got == golden, "expand --to g differs from the seven-term expansion");

    const Partition la{3, 2, 1}, mu{1};
    std::set<Partition> union_of;
    for (const Partition& top : {Partition{3, 2}, Partition{3, 1, 1}, Partition{2, 2, 1}}) {
        for (const auto& k : interval({}, top)) union_of.insert(k);
    }
    SymFunc common;
    for (const auto& k : union_of) common += g(k);
    SymFunc lower, upper;
    for (const auto& nu : interval(mu, la)) {
        lower += g_skew(nu, mu);
        upper += g_skew(la, nu);
    }
    o.require(op_I(g_skew(la, mu)) == common, "I(g_{321/1}) differs from the union sum");
    o.require(lower == common, "sum of g_{nu/1} differs from the union sum");
    o.require(upper == common, "sum of g_{321/nu} differs from the union sum");
    suite(o, "worked-example", 0);
    return o;
}

Outcome counterexamples() {
    Outcome o;
    const Partition p321{3, 2, 1};
    const BigInt c = tilde_c({5, 3, 2, 2, 1}, p321, p321);
    const BigInt d = tilde_d({5, 3, 2, 1}, p321, p321);
    o.require(c == -1, "tilde_c = " + c.get_str());
    o.require(d == -1, "tilde_d = " + d.get_str());
    if (o.pass) o.detail = "tilde_c = -1, tilde_d = -1";
    return o;
}

Outcome with_suites(std::vector<std::pair<std::string, int>> runs) {
    Outcome o;
    for (const auto& [name, n] : runs) suite(o, name, n);
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked example g_{321/1} and the three equal sums", 1, worked_example},
        {2, "counterexample coefficients", 60, counterexamples},
        {3, "g_{la/mu} at (1,0,0,...) is 1 for |la| <= 7", 30, [] { return with_suites({{"i-equals-one", 7}}); }},
        {4, "sum rules for c and d, t-refined forms", 60,
         [] { return with_suites({{"sum-rules", 6}, {"cd-t-refined", 5}}); }},
        {5, "I and its inverse, multiplicativity, H and E perp expansions", 90,
         [] {
             return with_suites(
                 {{"i-inverse", 7}, {"i-ring-morphism", 4}, {"h-perp-expansion", 6}, {"e-perp-expansion", 6}});
         }},
        {6, "series identities at cap 6", 60,
         [] { return with_suites({{"generator-expansions", 6}, {"g-series-products", 3}}); }},
        {7, "incidence algebra and the telescoping sum", 10, [] { return with_suites({{"incidence", 4}}); }},
        {8, "Hopf axioms, group-like series, cocommutativity", 30,
         [] { return with_suites({{"antipode", 5}, {"group-like", 6}, {"cocommutativity", 5}}); }},
        {9, "skew Pieri rule against h_k g_{mu/nu}", 120, [] { return with_suites({{"skew-pieri", 5}}); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& err) {
            o.require(false, std::string("exception: ") + err.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds < c.limit_seconds, "over the time limit");
        if (!o.pass) ++failed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s (limit %g s)", seconds, c.limit_seconds);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  " << timing;
        if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
