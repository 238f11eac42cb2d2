// ksym: command-line front end for the symmetric function kernel.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksym/expr.hpp"
#include "ksym/operators.hpp"
#include "ksym/serialize.hpp"
#include "ksym/verify.hpp"

using namespace ksym;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Basis output_basis(const std::string& requested, const Expr& e) {
    if (!requested.empty()) {
        if (requested.size() != 1) throw UsageError("--to expects s, g or G");
        const Basis b = basis_from_letter(requested[0]);
        if (b != Basis::s && b != Basis::g && b != Basis::G) throw UsageError("--to expects s, g or G");
        return b;
    }
    if (mentions(e, Basis::G)) return Basis::G;
    if (mentions(e, Basis::g)) return Basis::g;
    return Basis::s;
}

Expansion express(const SymFunc& f, std::optional<int> cap, Basis basis) {
    Expansion x;
    x.basis = basis;
    x.cap = cap;
    switch (basis) {
        case Basis::s: x.terms = f.terms(); break;
        case Basis::g:
            if (cap) throw UsageError("a truncated series has no finite g expansion; use --to s or --to G");
            x.terms = schur_to_g(f);
            break;
        case Basis::G:
            if (!cap) throw UsageError("--to G needs G atoms and a cap");
            x.terms = series_to_G(TruncSeries(f, *cap));
            break;
        default: throw UsageError("unsupported output basis");
    }
    return x;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int cmd_expand(const std::string& text, const std::string& to, std::optional<int> cap) {
    const ExprPtr e = parse_expr(text);
    const Evaluated v = evaluate(*e, cap);
    emit(to_json(express(v.value, v.cap, output_basis(to, *e))));
    return 0;
}

int cmd_apply(std::string op, const std::string& t_text, const std::string& mu_text, const std::string& to,
              const std::string& text) {
    const ExprPtr e = parse_expr(text);
    const Evaluated v = evaluate(*e);
    if (v.cap) throw UsageError("operators act on finite elements; G atoms are not allowed here");
    const CoeffPoly t_value = parse_coeff(t_text);

    std::optional<Partition> mu;
    if (!mu_text.empty()) mu = parse_partition(mu_text);
    if (op.rfind("Gperp", 0) == 0 && op.size() > 5) {
        std::string arg = op.substr(5);
        if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
        mu = parse_partition(arg);
        op = "Gperp";
    }

    SymFunc out;
    if (op == "I") {
        out = op_I(v.value);
    } else if (op == "Iinv") {
        out = op_I_inv(v.value);
    } else if (op == "Hperp") {
        out = H_perp(t_value, v.value);
    } else if (op == "Eperp") {
        out = E_perp(t_value, v.value);
    } else if (op == "Gperp") {
        if (!mu) throw UsageError("Gperp needs --mu or the form Gperp([..])");
        out = G_perp(*mu, v.value);
    } else {
        throw UsageError("unknown operator '" + op + "' (expected I, Iinv, Hperp, Eperp or Gperp)");
    }
    const Basis basis = output_basis(to, *e);
    if (basis == Basis::G) throw UsageError("apply outputs in the s or g basis");
    emit(to_json(express(out, std::nullopt, basis)));
    return 0;
}

int cmd_inner(const std::string& series, const std::string& t_text, const std::string& la_text,
              const std::string& text) {
    const ExprPtr e = parse_expr(text);
    const Evaluated v = evaluate(*e);
    if (v.cap) throw UsageError("the argument of a pairing must be finite");
    const CoeffPoly t_value = parse_coeff(t_text);
    Json out;
    out["series"] = series;
    TruncSeries F(0);
    if (series == "H" || series == "E") {
        const int cap = v.value.degree();
        F = series == "H" ? H_at(t_value, cap) : E_at(t_value, cap);
        out["t"] = t_value.str();
    } else if (series == "G") {
        if (la_text.empty()) throw UsageError("--series G needs --lambda");
        const Partition la = parse_partition(la_text);
        F = G_truncated(la, std::max(v.value.degree(), la.size()));
        out["lambda"] = to_json(la);
    } else {
        throw UsageError("--series expects H, E or G");
    }
    out["value"] = functional_eval(Functional(F), v.value).str();
    emit(out);
    return 0;
}

int cmd_constants(const std::string& kind, const std::string& la_text, const std::string& mu_text,
                  const std::string& nu_text) {
    const Partition la = parse_partition(la_text);
    const Partition mu = parse_partition(mu_text);
    const Partition nu = parse_partition(nu_text);
    BigInt value;
    if (kind == "lr") {
        value = lr_coeff(la, mu, nu);
    } else if (kind == "c") {
        value = c_coeff(la, mu, nu);
    } else if (kind == "d") {
        value = d_coeff(la, mu, nu);
    } else if (kind == "tilde_c") {
        value = tilde_c(la, mu, nu);
    } else if (kind == "tilde_d") {
        value = tilde_d(la, mu, nu);
    } else {
        throw UsageError("--kind expects lr, c, d, tilde_c or tilde_d");
    }
    Json out;
    out["kind"] = kind;
    out["lambda"] = to_json(la);
    out["mu"] = to_json(mu);
    out["nu"] = to_json(nu);
    out["value"] = value.get_str();
    emit(out);
    return 0;
}

int cmd_verify(const std::vector<std::string>& names, bool list, std::optional<int> max_size, int jobs, bool timing) {
    if (list) {
        for (const auto& s : suite_registry()) {
            Json j;
            j["suite"] = s.name;
            j["default_max_size"] = s.default_max_size;
            j["bound"] = s.bound;
            j["description"] = s.description;
            emit(j);
        }
        return 0;
    }
    if (names.empty()) throw UsageError("verify needs --suite NAME (or --suite all) or --list");
    std::vector<const Suite*> chosen;
    for (const auto& name : names) {
        if (name == "all") {
            for (const auto& s : suite_registry()) chosen.push_back(&s);
            continue;
        }
        const Suite* s = find_suite(name);
        if (!s) throw UsageError("unknown suite '" + name + "'; see verify --list");
        chosen.push_back(s);
    }
    if (jobs < 1) throw UsageError("--jobs must be at least 1");

    bool all_passed = true;
    for (const Suite* s : chosen) {
        const int bound = max_size.value_or(s->default_max_size);
        const SuiteReport report = run_suite(*s, bound, jobs, [&](const CaseOutcome& c) {
            Json j;
            j["suite"] = s->name;
            j["case"] = c.id;
            j["status"] = c.result.pass ? "pass" : "fail";
            if (!c.result.pass) {
                j["lhs"] = c.result.lhs;
                j["rhs"] = c.result.rhs;
            }
            if (!c.result.note.empty()) j["note"] = c.result.note;
            emit(j);
        });
        Json summary;
        summary["suite"] = s->name;
        summary["max_size"] = bound;
        summary["cases"] = report.cases.size();
        summary["failed"] = report.failures();
        summary["status"] = report.passed() ? "pass" : "fail";
        if (timing) summary["seconds"] = report.seconds;
        emit(summary);
        all_passed = all_passed && report.passed();
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with symmetric functions and dual stable Grothendieck polynomials"};
    app.require_subcommand(1);

    std::string expr_text, to, op, t_text = "t", mu_text, series, la_text, kind, nu_text;
    std::optional<int> cap;
    std::optional<int> max_size;
    std::vector<std::string> suites;
    bool list = false, timing = false;
    int jobs = 1;

    auto* expand = app.add_subcommand("expand", "Expand an expression in the s, g or G basis");
    expand->add_option("expr", expr_text, "Expression, e.g. \"g[3,2,1]/[1]\"")->required();
    expand->add_option("--to", to, "Output basis: s, g or G (default: G if G atoms occur, else g if g atoms occur, else s)");
    expand->add_option("--cap", cap, "Degree cap; required when G atoms occur");

    auto* apply = app.add_subcommand("apply", "Apply I, Iinv, Hperp, Eperp or Gperp");
    apply->add_option("expr", expr_text, "Expression")->required();
    apply->add_option("--op", op, "Operator: I, Iinv, Hperp, Eperp, Gperp or Gperp([..])")->required();
    apply->add_option("--t", t_text, "Parameter for Hperp/Eperp: an integer, t, or a polynomial in t")->capture_default_str();
    apply->add_option("--mu", mu_text, "Partition for Gperp, e.g. [1]");
    apply->add_option("--to", to, "Output basis: s or g (default: g if g atoms occur, else s)");

    auto* inner = app.add_subcommand("inner", "Pair a series H(t), E(t) or G_lambda with an expression");
    inner->add_option("expr", expr_text, "Expression")->required();
    inner->add_option("--series", series, "H, E or G")->required();
    inner->add_option("--t", t_text, "Parameter for H and E")->capture_default_str();
    inner->add_option("--lambda", la_text, "Partition for G");

    auto* constants = app.add_subcommand("constants", "Structure constants");
    constants->add_option("--kind", kind, "lr, c, d, tilde_c or tilde_d")->required();
    constants->add_option("--lambda", la_text, "Partition lambda")->required();
    constants->add_option("--mu", mu_text, "Partition mu")->required();
    constants->add_option("--nu", nu_text, "Partition nu")->required();

    auto* verify = app.add_subcommand("verify", "Run verification suites, reporting JSON lines");
    verify->add_option("--suite", suites, "Suite name (repeatable) or all");
    verify->add_flag("--list", list, "List the available suites");
    verify->add_option("--max-size", max_size, "Size bound; meaning per suite, see --list");
    verify->add_option("--jobs", jobs, "Worker threads; output order does not depend on it")->capture_default_str();
    verify->add_flag("--timing", timing, "Report wall time per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : kUsageError;
    }

    try {
        if (*expand) return cmd_expand(expr_text, to, cap);
        if (*apply) return cmd_apply(op, t_text, mu_text, to, expr_text);
        if (*inner) return cmd_inner(series, t_text, la_text, expr_text);
        if (*constants) return cmd_constants(kind, la_text, mu_text, nu_text);
        if (*verify) return cmd_verify(suites, list, max_size, jobs, timing);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
