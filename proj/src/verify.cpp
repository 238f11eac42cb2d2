#include "ksym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ksym/expr.hpp"
#include "ksym/operators.hpp"
#include "ksym/serialize.hpp"

namespace ksym {

namespace {

// ---- witnesses ---------------------------------------------------------

std::string text(const SymFunc& f) { return to_json(Expansion{Basis::s, f.terms(), std::nullopt}).dump(); }
std::string text(const TruncSeries& f) { return to_json(Expansion{Basis::s, f.terms(), f.cap()}).dump(); }
std::string text(const GExpansion& x) { return to_json(Expansion{Basis::g, x, std::nullopt}).dump(); }
std::string text(const CoeffPoly& c) { return c.str(); }
std::string text(const BigInt& v) { return v.get_str(); }
std::string text(const MultiPoly& p) { return p.str(); }
std::string text(bool b) { return b ? "true" : "false"; }
std::string text(int v) { return std::to_string(v); }
std::string text(const Partition& la) { return la.str(); }

std::string text(const TensorElem& x) {
    Json out = Json::array();
    for (const auto& [key, c] : x.terms()) {
        out.push_back(Json{{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", c.str()}});
    }
    return out.dump();
}

std::string text(const IncidenceFn& f) {
    Json out = Json::array();
    for (const auto& [mu, nu] : f.pairs()) {
        const CoeffPoly v = f(mu, nu);
        if (!v.is_zero()) out.push_back(Json{{"lower", to_json(mu)}, {"upper", to_json(nu)}, {"value", v.str()}});
    }
    return out.dump();
}

template <class T>
CaseResult same(const T& lhs, const T& rhs) {
    if (lhs == rhs) return {};
    return {false, text(lhs), text(rhs), {}};
}

/// The first failure among several checks of one case.
CaseResult first_failure(std::initializer_list<CaseResult> checks) {
    for (const auto& c : checks) {
        if (!c.pass) return c;
    }
    return {};
}

// ---- shared helpers ----------------------------------------------------

std::vector<SkewShape> skew_shapes_up_to(int n) {
    std::vector<SkewShape> out;
    for (const auto& la : partitions_up_to(n)) {
        for (const auto& mu : interval(Partition{}, la)) out.emplace_back(la, mu);
    }
    return out;
}

std::string sid(const SkewShape& sh) { return sh.str(); }

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

CoeffPoly t_pow(int k) { return CoeffPoly::monomial(1, k); }

SymFunc g_sum(const std::vector<Partition>& labels) {
    SymFunc out;
    for (const auto& la : labels) out += g_to_schur(la);
    return out;
}

/// Drop x_1 from a polynomial in which it no longer occurs.
MultiPoly drop_first(const MultiPoly& p) {
    MultiPoly out(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] != 0) throw std::logic_error("drop_first: x_1 still occurs");
        out.add_term(Exponent(e.begin() + 1, e.end()), c);
    }
    return out;
}

/// Σ_d [x_1^d] p · t^d for a one-variable p with constant coefficients.
CoeffPoly one_variable_as_t(const MultiPoly& p) {
    CoeffPoly out;
    for (const auto& [e, c] : p.terms()) out += c * t_pow(e[0]);
    return out;
}

// Fixed-seed generators for the randomized suites.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    CoeffPoly coeff(bool with_t) {
        CoeffPoly c(static_cast<long>(uniform(-3, 3)));
        if (with_t && uniform(0, 2) == 0) c += CoeffPoly(static_cast<long>(uniform(-2, 2))) * CoeffPoly::t();
        if (c.is_zero()) c = CoeffPoly(1L);
        return c;
    }

    Partition partition(int max_size) {
        const auto all = partitions_up_to(max_size);
        return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
    }

    SymFunc symfunc(int max_degree, bool with_t = false) {
        SymFunc f;
        const int terms = uniform(1, 4);
        for (int i = 0; i < terms; ++i) f.add_term(partition(max_degree), coeff(with_t));
        return f;
    }

    TruncSeries series(int cap) {
        TruncSeries F(cap);
        F.add_term(Partition{}, CoeffPoly(static_cast<long>(uniform(-2, 2))));
        const int terms = uniform(1, 5);
        for (int i = 0; i < terms; ++i) F.add_term(partition(cap), coeff(true));
        return F;
    }

    CoeffPoly poly(int max_degree) {
        std::vector<BigInt> c;
        const int d = uniform(-1, max_degree);
        for (int i = 0; i <= d; ++i) c.emplace_back(uniform(-20, 20));
        return CoeffPoly(std::move(c));
    }

    MultiPoly multipoly(std::size_t nvars, int max_degree) {
        MultiPoly p(nvars);
        const int terms = uniform(0, 4);
        for (int i = 0; i < terms; ++i) {
            Exponent e(nvars, 0);
            int budget = uniform(0, max_degree);
            for (auto& x : e) {
                x = uniform(0, budget);
                budget -= x;
            }
            p.add_term(e, poly(2));
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

// ---- partition-core ------------------------------------------------------

std::vector<VerifyCase> transpose_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           return first_failure({same(transpose(transpose(la)), la), same(transpose(la).size(), la.size())});
                       }});
    }
    return out;
}

CaseResult same_text(const std::string& a, const std::string& b) {
    if (a == b) return {};
    return {false, a, b, {}};
}

std::vector<VerifyCase> containment_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la, n] {
                           const Partition lt = transpose(la);
                           for (const auto& mu : partitions_up_to(n)) {
                               if (contains(mu, la) != contains(transpose(mu), lt)) {
                                   return CaseResult{false, "contains(" + mu.str() + ", " + la.str() + ")",
                                                     "contains(" + transpose(mu).str() + ", " + lt.str() + ")", {}};
                               }
                           }
                           return CaseResult{};
                       }});
    }
    return out;
}

std::vector<VerifyCase> strip_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           const StripKind k = strip_kind(sh);
                           const bool rook_implies = !k.rook || (k.horizontal && k.vertical);
                           const bool rook_iff = k.rook == (k.vertical && sh.size() == column_count(sh));
                           return first_failure({same(rook_implies, true), same(rook_iff, true)});
                       }});
    }
    return out;
}

std::vector<VerifyCase> mobius_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           int total = 0;
                           for (const auto& nu : interval(sh.inner(), sh.outer())) total += mobius(sh.inner(), nu);
                           return same(total, sh.empty() ? 1 : 0);
                       }});
    }
    return out;
}

std::vector<VerifyCase> interval_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           std::vector<Partition> brute;
                           for (const auto& nu : partitions_up_to(sh.outer().size())) {
                               if (contains(sh.inner(), nu) && contains(nu, sh.outer())) brute.push_back(nu);
                           }
                           auto got = interval(sh.inner(), sh.outer());
                           std::string a, b;
                           for (const auto& p : got) a += p.str();
                           for (const auto& p : brute) b += p.str();
                           return same_text(a, b);
                       }});
    }
    return out;
}

// ---- exact-coeffs ------------------------------------------------------

std::vector<VerifyCase> ring_law_cases(int n) {
    std::vector<VerifyCase> out;
    Gen gen(0x5eed01);
    for (int i = 0; i < 100; ++i) {
        const CoeffPoly a = gen.poly(n), b = gen.poly(n), c = gen.poly(n);
        const long v = gen.uniform(-5, 5);
        const MultiPoly x = gen.multipoly(3, 3), y = gen.multipoly(3, 3), z = gen.multipoly(3, 3);
        out.push_back({"triple " + std::to_string(i), [=] {
                           return first_failure({
                               same((a * b) * c, a * (b * c)),
                               same(a * b, b * a),
                               same(a * (b + c), a * b + a * c),
                               same((a + b) + c, a + (b + c)),
                               same((a * b).eval(v), BigInt(a.eval(v) * b.eval(v))),
                               same((a + b).eval(v), BigInt(a.eval(v) + b.eval(v))),
                               same((x * y) * z, x * (y * z)),
                               same(x * y, y * x),
                               same(x * (y + z), x * y + x * z),
                               same(mpoly_mul(x, y, 3), (x * y).truncated(3)),
                           });
                       }});
    }
    return out;
}

// ---- symfunc-ring --------------------------------------------------------

std::vector<VerifyCase> bialgebra_cases(int n) {
    std::vector<VerifyCase> out;
    Gen gen(0x5eed02);
    for (int i = 0; i < 40; ++i) {
        const SymFunc f = gen.symfunc(n, true), g = gen.symfunc(n, true);
        out.push_back({"pair " + std::to_string(i), [f, g] { return same(coproduct(mul(f, g)), coproduct(f) * coproduct(g)); }});
    }
    return out;
}

std::vector<VerifyCase> antipode_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const SymFunc s = schur(la);
                           const SymFunc unit_counit(counit(s));
                           return first_failure({
                               same(multiply_out(antipode_left(coproduct(s))), unit_counit),
                               same(antipode(antipode(s)), s),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> cocommutative_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const TensorElem ds = coproduct(schur(la));
                           const TensorElem dg = coproduct(g_to_schur(la));
                           return first_failure({same(ds.swapped(), ds), same(dg.swapped(), dg)});
                       }});
    }
    return out;
}

std::vector<VerifyCase> self_duality_cases(int n) {
    std::vector<VerifyCase> out;
    Gen gen(0x5eed03);
    for (int i = 0; i < 40; ++i) {
        const SymFunc f = gen.symfunc(n), g = gen.symfunc(n), h = gen.symfunc(2 * n);
        out.push_back({"triple " + std::to_string(i), [f, g, h] {
                           CoeffPoly split;
                           const TensorElem dh = coproduct(h);
                           for (const auto& [key, c] : dh.terms()) split += c * f.coeff(key.first) * g.coeff(key.second);
                           return same(hall(mul(f, g), h), split);
                       }});
    }
    return out;
}

std::vector<VerifyCase> lr_symmetry_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const auto below = interval(Partition{}, la);
                           for (const auto& mu : below) {
                               for (const auto& nu : below) {
                                   const BigInt c = lr_coeff(la, mu, nu);
                                   if (c != lr_coeff(la, nu, mu) || c != lr_coeff(transpose(la), transpose(mu), transpose(nu))) {
                                       return CaseResult{false, "c(" + la.str() + "," + mu.str() + "," + nu.str() + ")=" + c.get_str(),
                                                         "swapped " + lr_coeff(la, nu, mu).get_str() + ", transposed " +
                                                             lr_coeff(transpose(la), transpose(mu), transpose(nu)).get_str(),
                                                         {}};
                                   }
                               }
                           }
                           return CaseResult{};
                       }});
    }
    return out;
}

std::vector<VerifyCase> roundtrip_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const auto nv = static_cast<std::size_t>(std::max(1, la.size()));
                           const SymFunc s = schur(la);
                           const SymFunc g = g_to_schur(la);
                           return first_failure({
                               same(from_polynomial(to_polynomial(s, nv)), s),
                               same(from_polynomial(to_polynomial(g, nv)), g),
                               same(from_polynomial(to_polynomial(g, nv + 1)), g),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> group_like_cases(int n) {
    std::vector<VerifyCase> out;
    out.push_back({"H", [n] { return same(is_group_like(H_series(n)), true); }});
    out.push_back({"E", [n] { return same(is_group_like(E_series(n)), true); }});
    out.push_back({"H(1)", [n] { return same(is_group_like(H_series(n).substitute_t(CoeffPoly(1L))), true); }});
    out.push_back({"E(-1)", [n] { return same(is_group_like(E_series(n).substitute_t(CoeffPoly(-1L))), true); }});
    out.push_back({"phi_t(H(1))", [n] {
                       const TruncSeries scaled = phi_t(H_series(n).substitute_t(CoeffPoly(1L)));
                       return first_failure({same(is_group_like(scaled), true), same(scaled, H_series(n))});
                   }});
    out.push_back({"G(1) not group-like", [n] { return same(is_group_like(G_truncated(Partition{1}, std::max(n, 2))), false); }});
    return out;
}

// ---- rpp-groth ---------------------------------------------------------

std::vector<VerifyCase> g_symmetry_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           const auto nv = static_cast<std::size_t>(std::max(1, sh.size()));
                           const MultiPoly p = rpp_polynomial(sh, nv);
                           if (!is_symmetric(p)) return CaseResult{false, p.str(), "a symmetric polynomial", {}};
                           return same(g_skew(sh), from_polynomial(p));
                       }});
    }
    return out;
}

std::vector<VerifyCase> g_top_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const SymFunc g = g_to_schur(la);
                           SymFunc rest = g;
                           rest.add_term(la, CoeffPoly(-1L));
                           const bool lower = rest.is_zero() || rest.degree() < la.size();
                           return first_failure({same(g.coeff(la), CoeffPoly(1L)), same(lower, true)});
                       }});
    }
    return out;
}

std::vector<VerifyCase> g_coproduct_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           const auto m = static_cast<std::size_t>(std::max(1, sh.size()));
                           const MultiPoly whole = to_polynomial(g_skew(sh), 2 * m);
                           MultiPoly split(2 * m);
                           const TensorElem delta = g_coproduct(sh);
                           for (const auto& [key, c] : delta.terms()) {
                               const MultiPoly y = to_polynomial(g_to_schur(key.first), m).embed(m, 2 * m);
                               const MultiPoly x = to_polynomial(g_to_schur(key.second), m).embed(0, 2 * m);
                               split += MultiPoly::constant(2 * m, c) * x * y;
                           }
                           MultiPoly direct(2 * m);
                           for (const auto& nu : interval(sh.inner(), sh.outer())) {
                               const MultiPoly y = to_polynomial(g_skew(sh.outer(), nu), m).embed(m, 2 * m);
                               const MultiPoly x = to_polynomial(g_skew(nu, sh.inner()), m).embed(0, 2 * m);
                               direct += x * y;
                           }
                           return first_failure({same(direct, whole), same(split, whole)});
                       }});
    }
    return out;
}

std::vector<VerifyCase> i_one_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           const SymFunc g = g_skew(sh);
                           const CoeffPoly at_one = one_variable_as_t(to_polynomial(g, 1)).compose(CoeffPoly(1L));
                           return first_failure({
                               same(at_one, CoeffPoly(1L)),
                               same(functional_eval(Functional(H_at(CoeffPoly(1L), g.degree())), g), CoeffPoly(1L)),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> single_variable_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           const SymFunc g = g_skew(sh);
                           const CoeffPoly expected = t_pow(column_count(sh));
                           return first_failure({
                               same(one_variable_as_t(to_polynomial(g, 1)), expected),
                               same(functional_eval(Functional(H_series(g.degree())), g), expected),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> duality_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la, n] {
                           const TruncSeries G = G_truncated(la, n);
                           for (const auto& mu : partitions_up_to(n)) {
                               const CoeffPoly v = hall(G, g_to_schur(mu));
                               if (v != CoeffPoly(mu == la ? 1L : 0L)) {
                                   return CaseResult{false, "(G" + la.str() + ", g" + mu.str() + ") = " + v.str(),
                                                     mu == la ? "1" : "0", {}};
                               }
                           }
                           return same(G.coeff(la), CoeffPoly(1L));
                       }});
    }
    return out;
}

std::vector<VerifyCase> g_roundtrip_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const GExpansion single{{la, CoeffPoly(1L)}};
                           return first_failure({
                               same(schur_to_g(g_to_schur(la)), single),
                               same(g_combination(schur_to_g(schur(la))), schur(la)),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> sum_rule_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({"c " + sid(sh), [sh] {
                           BigInt total = 0;
                           for (const auto& [nu, c] : skew_g_in_g(sh.outer(), sh.inner())) total += c;
                           return same(total, BigInt(1));
                       }});
    }
    const auto small = partitions_up_to(std::max(0, n - 2));
    for (const auto& mu : small) {
        for (const auto& nu : small) {
            if (nu < mu) continue;
            out.push_back({"d " + mu.str() + " " + nu.str(), [mu, nu] {
                               BigInt total = 0;
                               for (const auto& [la, d] : g_product_in_g(mu, nu)) total += d;
                               return same(total, BigInt(1));
                           }});
        }
    }
    return out;
}

std::vector<VerifyCase> cd_t_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({"c " + sid(sh), [sh] {
                           CoeffPoly total;
                           for (const auto& [nu, c] : skew_g_in_g(sh.outer(), sh.inner())) total += CoeffPoly(c) * t_pow(column_count(nu));
                           return same(total, t_pow(column_count(sh)));
                       }});
    }
    const auto parts = partitions_up_to(n);
    for (const auto& mu : parts) {
        for (const auto& nu : parts) {
            if (nu < mu) continue;
            out.push_back({"d " + mu.str() + " " + nu.str(), [mu, nu] {
                               CoeffPoly total;
                               for (const auto& [la, d] : g_product_in_g(mu, nu)) total += CoeffPoly(d) * t_pow(column_count(la));
                               return same(total, t_pow(column_count(mu) + column_count(nu)));
                           }});
        }
    }
    return out;
}

// ---- operators -----------------------------------------------------------

std::vector<VerifyCase> i_morphism_cases(int n) {
    std::vector<VerifyCase> out;
    Gen gen(0x5eed04);
    for (int i = 0; i < 100; ++i) {
        const SymFunc f = gen.symfunc(n, true), g = gen.symfunc(n, true);
        out.push_back({"pair " + std::to_string(i), [f, g] { return same(op_I(mul(f, g)), mul(op_I(f), op_I(g))); }});
    }
    return out;
}

std::vector<VerifyCase> i_inverse_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const SymFunc g = g_to_schur(la);
                           return first_failure({same(op_I_inv(op_I(g)), g), same(op_I(op_I_inv(g)), g)});
                       }});
    }
    return out;
}

std::vector<VerifyCase> i_basis_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const SymFunc g = g_to_schur(la);
                           SymFunc rook_sum;
                           for (const auto& mu : interval(Partition{}, la)) rook_sum += CoeffPoly(static_cast<long>(mobius(mu, la))) * g_to_schur(mu);
                           const SymFunc peeled = la.empty() ? g : g - g_skew(la, Partition{1});
                           return first_failure({
                               same(op_I(g), g_sum(interval(Partition{}, la))),
                               same(op_I_inv(g), rook_sum),
                               same(op_I_inv(g), peeled),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> i_substitution_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const auto nv = static_cast<std::size_t>(std::max(1, la.size()));
                           const SymFunc s = schur(la);
                           const MultiPoly wide = to_polynomial(s, nv + 1);
                           return first_failure({
                               same(to_polynomial(op_I(s), nv), drop_first(wide.specialize(0, CoeffPoly(1L)))),
                               same(to_polynomial(H_perp(CoeffPoly::t(), s), nv), drop_first(wide.specialize(0, CoeffPoly::t()))),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> i_skew_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           SymFunc lower, upper;
                           for (const auto& nu : interval(sh.inner(), sh.outer())) {
                               lower += g_skew(nu, sh.inner());
                               upper += g_skew(sh.outer(), nu);
                           }
                           const SymFunc image = op_I(g_skew(sh));
                           return first_failure({same(image, lower), same(image, upper)});
                       }});
    }
    return out;
}

std::vector<VerifyCase> perp_composition_cases(int n) {
    std::vector<VerifyCase> out;
    Gen gen(0x5eed05);
    for (int i = 0; i < 50; ++i) {
        const TruncSeries F = gen.series(n), G = gen.series(n);
        const SymFunc f = gen.symfunc(n, true);
        out.push_back({"triple " + std::to_string(i), [F, G, f] {
                           const Functional FG(series_mul(F, G));
                           return first_failure({
                               same(perp(FG, f), perp(Functional(G), perp(Functional(F), f))),
                               same(functional_eval(FG, f), functional_eval(Functional(G), perp(Functional(F), f))),
                               same(convolution(Functional(F), Functional::counit(F.cap())).series(), F),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> algebra_morphism_cases(int n) {
    std::vector<VerifyCase> out;
    Gen gen(0x5eed06);
    for (int i = 0; i < 40; ++i) {
        const SymFunc f = gen.symfunc(n / 2 + n % 2, true), g = gen.symfunc(n / 2, true);
        out.push_back({"pair " + std::to_string(i), [f, g, n] {
                           const Functional E(E_series(n)), H(H_series(n));
                           const SymFunc fg = mul(f, g);
                           return first_failure({same(E(fg), E(f) * E(g)), same(H(fg), H(f) * H(g))});
                       }});
    }
    return out;
}

std::vector<VerifyCase> phi_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const SymFunc s = schur(la);
                           return same(phi_t(H_perp(CoeffPoly::t(), s)), op_I(phi_t(s)));
                       }});
    }
    return out;
}

std::vector<VerifyCase> h_perp_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           SymFunc lower, upper;
                           for (const auto& nu : interval(sh.inner(), sh.outer())) {
                               lower += t_pow(column_count(SkewShape(sh.outer(), nu))) * g_skew(nu, sh.inner());
                               upper += t_pow(column_count(SkewShape(nu, sh.inner()))) * g_skew(sh.outer(), nu);
                           }
                           const SymFunc image = H_perp(CoeffPoly::t(), g_skew(sh));
                           return first_failure({same(image, lower), same(image, upper)});
                       }});
    }
    return out;
}

CoeffPoly vertical_weight(const SkewShape& sh) {
    if (!strip_kind(sh).vertical) return {};
    const int c = column_count(sh);
    return t_pow(c) * (CoeffPoly::t() + CoeffPoly(1L)).pow(static_cast<unsigned>(sh.size() - c));
}

std::vector<VerifyCase> e_perp_cases(int n) {
    std::vector<VerifyCase> out;
    for (const auto& sh : skew_shapes_up_to(n)) {
        out.push_back({sid(sh), [sh] {
                           SymFunc lower, upper;
                           for (const auto& nu : interval(sh.inner(), sh.outer())) {
                               lower += vertical_weight(SkewShape(sh.outer(), nu)) * g_skew(nu, sh.inner());
                               upper += vertical_weight(SkewShape(nu, sh.inner())) * g_skew(sh.outer(), nu);
                           }
                           const SymFunc image = E_perp(CoeffPoly::t(), g_skew(sh));
                           CaseResult columns;
                           if (sh.inner().empty()) {
                               const Partition& la = sh.outer();
                               SymFunc expected = g_to_schur(la);
                               const CoeffPoly tp1 = CoeffPoly::t() + CoeffPoly(1L);
                               for (std::size_t k = 1; k <= la.length(); ++k) {
                                   expected += CoeffPoly::t() * tp1.pow(static_cast<unsigned>(k - 1)) *
                                               g_skew(la, column(static_cast<int>(k)));
                               }
                               columns = same(image, expected);
                           }
                           return first_failure({same(image, lower), same(image, upper), columns});
                       }});
    }
    return out;
}

TruncSeries G_sum(const std::vector<std::pair<Partition, CoeffPoly>>& terms, int cap) {
    TruncSeries out(cap);
    for (const auto& [mu, c] : terms) out += c * G_truncated(mu, cap);
    return out;
}

std::vector<VerifyCase> series_product_cases(int n) {
    constexpr int cap = 6;
    std::vector<VerifyCase> out;
    for (const auto& la : partitions_up_to(n)) {
        out.push_back({la.str(), [la] {
                           const TruncSeries G = G_truncated(la, cap);
                           std::vector<std::pair<Partition, CoeffPoly>> h_terms, e_terms, all_terms, up_terms, rook_terms;
                           for (const auto& mu : partitions_up_to(cap)) {
                               all_terms.emplace_back(mu, CoeffPoly(1L));
                               if (!contains(la, mu)) continue;
                               const SkewShape strip(mu, la);
                               up_terms.emplace_back(mu, CoeffPoly(1L));
                               h_terms.emplace_back(mu, t_pow(column_count(strip)));
                               const CoeffPoly v = vertical_weight(strip);
                               if (!v.is_zero()) e_terms.emplace_back(mu, v);
                               if (strip_kind(strip).rook) rook_terms.emplace_back(mu, CoeffPoly(strip.size() % 2 ? -1L : 1L));
                           }
                           const TruncSeries one_minus_G1 = TruncSeries::one(cap) - G_truncated(Partition{1}, cap);
                           return first_failure({
                               same(series_mul(H_series(cap), G), G_sum(h_terms, cap)),
                               same(series_mul(E_series(cap), G), G_sum(e_terms, cap)),
                               same(series_mul(G_sum(all_terms, cap), G), G_sum(up_terms, cap)),
                               same(series_mul(one_minus_G1, G), G_sum(rook_terms, cap)),
                           });
                       }});
    }
    return out;
}

std::vector<VerifyCase> generator_cases(int n) {
    std::vector<VerifyCase> out;
    out.push_back({"H(t)E(-t)", [n] {
                       const TruncSeries E_neg = E_series(n).substitute_t(-CoeffPoly::t());
                       return first_failure({
                           same(series_mul(H_series(n), E_neg), TruncSeries::one(n)),
                           same(convolution(Functional(H_series(n)), Functional(E_neg)).series(), Functional::counit(n).series()),
                       });
                   }});
    out.push_back({"H(1)", [n] {
                       std::vector<std::pair<Partition, CoeffPoly>> terms;
                       for (const auto& mu : partitions_up_to(n)) terms.emplace_back(mu, CoeffPoly(1L));
                       return same(H_series(n).substitute_t(CoeffPoly(1L)), G_sum(terms, n));
                   }});
    out.push_back({"H(t)", [n] {
                       std::vector<std::pair<Partition, CoeffPoly>> terms;
                       for (const auto& mu : partitions_up_to(n)) terms.emplace_back(mu, t_pow(column_count(mu)));
                       return same(H_series(n), G_sum(terms, n));
                   }});
    out.push_back({"E(-1)", [n] {
                       return same(E_series(n).substitute_t(CoeffPoly(-1L)),
                                   TruncSeries::one(n) - G_truncated(Partition{1}, n));
                   }});
    out.push_back({"E(t)", [n] {
                       std::vector<std::pair<Partition, CoeffPoly>> terms{{Partition{}, CoeffPoly(1L)}};
                       const CoeffPoly tp1 = CoeffPoly::t() + CoeffPoly(1L);
                       for (int k = 1; k <= n; ++k) terms.emplace_back(column(k), CoeffPoly::t() * tp1.pow(static_cast<unsigned>(k - 1)));
                       return same(E_series(n), G_sum(terms, n));
                   }});
    return out;
}

Partition staircase(int k) {
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

std::vector<VerifyCase> incidence_cases(int n) {
    std::vector<VerifyCase> out;
    for (int k = 1; k <= n; ++k) {
        const Partition ground = staircase(k);
        out.push_back({"i_t j_t on " + ground.str(), [ground] {
                           return first_failure({
                               same(inc_convolve(inc_it(ground), inc_jt(ground)), inc_delta(ground)),
                               same(inc_convolve(inc_jt(ground), inc_it(ground)), inc_delta(ground)),
                           });
                       }});
        out.push_back({"t=1 on " + ground.str(), [ground] {
                           return first_failure({
                               same(inc_jt(ground).substitute_t(CoeffPoly(1L)), inc_mobius(ground)),
                               same(inc_it(ground).substitute_t(CoeffPoly(1L)), inc_zeta(ground)),
                               same(inc_convolve(inc_zeta(ground), inc_mobius(ground)), inc_delta(ground)),
                           });
                       }});
    }
    for (int q = 1; q <= 10; ++q) {
        out.push_back({"X q=" + std::to_string(q), [q] { return same(telescoping_X(q), CoeffPoly()); }});
    }
    return out;
}

std::vector<VerifyCase> counterexample_cases(int) {
    std::vector<VerifyCase> out;
    const Partition p321{3, 2, 1};
    out.push_back({"tilde_c [5,3,2,2,1] [3,2,1] [3,2,1]", [p321] {
                       const BigInt v = tilde_c(Partition{5, 3, 2, 2, 1}, p321, p321);
                       CaseResult r = same(v, BigInt(-1));
                       r.note = "value " + v.get_str();
                       return r;
                   }});
    out.push_back({"tilde_d [5,3,2,1] [3,2,1] [3,2,1]", [p321] {
                       const BigInt v = tilde_d(Partition{5, 3, 2, 1}, p321, p321);
                       CaseResult r = same(v, BigInt(-1));
                       r.note = "value " + v.get_str();
                       return r;
                   }});
    out.push_back({"tilde_c [3,2,1] [] [3,2,1]", [p321] { return same(tilde_c(p321, Partition{}, p321), BigInt(1)); }});
    return out;
}

// Expansions listed alongside the worked (3,2,1)/(1) example.
const std::vector<std::pair<std::string, std::string>>& worked_expansions() {
    static const std::vector<std::pair<std::string, std::string>> table{
        {"g[3,2,1]/[1]", "g[3,2] + g[3,1,1] + g[2,2,1] - g[3,1] - g[2,2] - g[2,1,1] + g[2,1]"},
        {"g[3,2]/[1]", "g[3,1] + g[2,2] - g[2,1]"},
        {"g[3,1,1]/[1]", "g[3,1] + g[2,1,1] - g[2,1]"},
        {"g[2,2,1]/[1]", "g[2,2] + g[2,1,1] - g[2,1]"},
        {"g[3,1]/[1]", "g[3] + g[2,1] - g[2]"},
        {"g[2,2]/[1]", "g[2,1]"},
        {"g[2,1,1]/[1]", "g[2,1] + g[1,1,1] - g[1,1]"},
        {"g[3]/[1]", "g[2]"},
        {"g[2,1]/[1]", "g[2] + g[1,1] - g[1]"},
        {"g[1,1,1]/[1]", "g[1,1]"},
        {"g[2]/[1]", "g[1]"},
        {"g[1,1]/[1]", "g[1]"},
        {"g[1]/[1]", "g[]"},
        {"g[3,2,1]/[3,2,1]", "g[]"},
        {"g[3,2,1]/[3,2]", "g[1]"},
        {"g[3,2,1]/[3,1,1]", "g[1]"},
        {"g[3,2,1]/[2,2,1]", "g[1]"},
        {"g[3,2,1]/[3,1]", "g[2] + g[1,1] - g[1]"},
        {"g[3,2,1]/[2,2]", "g[2] + g[1,1] - g[1]"},
        {"g[3,2,1]/[2,1,1]", "g[2] + g[1,1] - g[1]"},
        {"g[3,2,1]/[3]", "g[2,1]"},
        {"g[3,2,1]/[2,1]", "g[3] + 2*g[2,1] + g[1,1,1] - 2*g[2] - 2*g[1,1] + g[1]"},
        {"g[3,2,1]/[1,1,1]", "g[2,1]"},
        {"g[3,2,1]/[2]", "g[3,1] + g[2,2] + g[2,1,1] - 2*g[2,1]"},
        {"g[3,2,1]/[1,1]", "g[3,1] + g[2,2] + g[2,1,1] - 2*g[2,1]"},
    };
    return table;
}

std::vector<VerifyCase> worked_example_cases(int) {
    std::vector<VerifyCase> out;
    for (const auto& [lhs, rhs] : worked_expansions()) {
        out.push_back({lhs, [lhs, rhs] {
                           return same(schur_to_g(evaluate(*parse_expr(lhs)).value), schur_to_g(evaluate(*parse_expr(rhs)).value));
                       }});
    }
    out.push_back({"three sums for [3,2,1]/[1]", [] {
                       const Partition la{3, 2, 1}, mu{1};
                       std::set<Partition> uni;
                       for (const Partition& top : {Partition{3, 2}, Partition{3, 1, 1}, Partition{2, 2, 1}}) {
                           for (const auto& k : interval(Partition{}, top)) uni.insert(k);
                       }
                       const SymFunc target = g_sum(std::vector<Partition>(uni.begin(), uni.end()));
                       SymFunc lower, upper;
                       for (const auto& nu : interval(mu, la)) {
                           lower += g_skew(nu, mu);
                           upper += g_skew(la, nu);
                       }
                       return first_failure({same(op_I(g_skew(la, mu)), target), same(lower, target), same(upper, target)});
                   }});
    return out;
}

std::vector<VerifyCase> pieri_cases(int n) {
    std::vector<VerifyCase> out;
    for (int k = 0; k <= 3; ++k) {
        for (const auto& sh : skew_shapes_up_to(n)) {
            out.push_back({"k=" + std::to_string(k) + " " + sid(sh), [k, sh] {
                               return same(expand_skew_sum(skew_pieri(k, sh)), mul(h_gen(k), g_skew(sh)));
                           }});
        }
    }
    return out;
}

std::vector<Suite> build_registry() {
    return {
        {"transpose", "transpose is an involution", "|la|", 10, transpose_cases},
        {"containment-transpose", "mu in la iff mu' in la'", "|la|, |mu|", 8, containment_cases},
        {"strip-kinds", "rook strips are horizontal and vertical; rook iff vertical with |sh| = c(sh)", "|la|", 7, strip_cases},
        {"mobius-inversion", "sum of the Mobius function over an interval is delta", "|la|", 7, mobius_cases},
        {"interval", "interval agrees with brute-force filtering", "|la|", 7, interval_cases},
        {"ring-laws", "Z[t] and multivariate ring laws, evaluation and capped products", "degree of Z[t] samples", 8,
         ring_law_cases},
        {"bialgebra", "coproduct is multiplicative", "degree of random samples", 4, bialgebra_cases},
        {"antipode", "m (S x id) Delta = u epsilon and S^2 = id on Schur functions", "|la|", 5, antipode_cases},
        {"cocommutativity", "coproducts of s_la and g_la are symmetric", "|la|", 5, cocommutative_cases},
        {"self-duality", "(fg, h) = (f x g, Delta h)", "degree of f and g", 4, self_duality_cases},
        {"lr-symmetry", "c(la;mu,nu) = c(la;nu,mu) = c(la';mu',nu')", "|la|", 6, lr_symmetry_cases},
        {"polynomial-roundtrip", "from_polynomial inverts to_polynomial", "|la|", 5, roundtrip_cases},
        {"group-like", "H, E and their specializations are group-like; phi_t(H(1)) = H(t)", "series cap", 6,
         group_like_cases},
        {"g-symmetry", "RPP generating polynomials are symmetric and lift to g_skew", "|la|", 5, g_symmetry_cases},
        {"g-top-term", "g_la = s_la + lower degree terms", "|la|", 7, g_top_cases},
        {"g-coproduct", "g_{la/mu}(x, y) = sum over nu of g_{nu/mu}(x) g_{la/nu}(y)", "|la|", 5, g_coproduct_cases},
        {"i-equals-one", "every g_{la/mu} evaluates to 1 at (1, 0, 0, ...)", "|la|", 7, i_one_cases},
        {"single-variable-weight", "g_{la/mu}(t, 0, 0, ...) = t^c(la/mu)", "|la|", 7, single_variable_cases},
        {"g-duality", "(G_la, g_mu) = delta for |la|, |mu| <= N", "N", 6, duality_cases},
        {"g-roundtrip", "schur_to_g and g_to_schur are inverse", "|la|", 6, g_roundtrip_cases},
        {"sum-rules", "sum over nu of c(la;mu,nu) = 1 and sum over la of d(la;mu,nu) = 1", "|la| for c; |mu|, |nu| <= N-2 for d",
         6, sum_rule_cases},
        {"cd-t-refined", "t^c(la/mu) = sum c t^c(nu) and t^(c(mu)+c(nu)) = sum d t^c(la)", "|la| for c; |mu| and |nu| for d", 5,
         cd_t_cases},
        {"i-ring-morphism", "I(fg) = I(f) I(g) on 100 random pairs", "degree of random samples", 4, i_morphism_cases},
        {"i-inverse", "I and its inverse compose to the identity on g_la", "|la|", 7, i_inverse_cases},
        {"i-basis", "I(g_la) = sum of g_mu below la; I^-1(g_la) = rook-strip sum = g_la - g_{la/(1)}", "|la|", 7,
         i_basis_cases},
        {"i-substitution", "I(f)(x) = f(1, x) and H(t)-perp(f)(x) = f(t, x)", "|la|", 5, i_substitution_cases},
        {"i-skew", "I(g_{la/mu}) = sum g_{nu/mu} = sum g_{la/nu}", "|la|", 6, i_skew_cases},
        {"perp-composition", "(FG)-perp = G-perp F-perp and (FG, f) = (G, F-perp f) on random truncated F, G", "series cap", 4,
         perp_composition_cases},
        {"algebra-morphism", "(E(t), fg) = (E(t), f)(E(t), g), likewise for H(t)", "total degree", 6, algebra_morphism_cases},
        {"phi-intertwining", "phi_t H(t)-perp = H(1)-perp phi_t on s_la", "|la|", 5, phi_cases},
        {"h-perp-expansion", "H(t)-perp(g_{la/mu}) = sum t^c(la/nu) g_{nu/mu} = sum t^c(nu/mu) g_{la/nu}", "|la|", 6,
         h_perp_cases},
        {"e-perp-expansion", "E(t)-perp(g_{la/mu}) over vertical strips, and the column formula for straight shapes", "|la|", 6,
         e_perp_cases},
        {"g-series-products", "H(t) G_la, E(t) G_la, (sum G_mu) G_la and (1 - G_1) G_la at cap 6", "|la|", 3,
         series_product_cases},
        {"generator-expansions", "H(t)E(-t) = 1, H(1) = sum G, H(t) = sum t^c G, E(-1) = 1 - G_1, E(t) via G_(1^n)", "series cap",
         6, generator_cases},
        {"incidence", "i_t j_t = delta, j_t at t=1 is Mobius, telescoping sums vanish", "staircase size", 4, incidence_cases},
        {"counterexamples", "tilde_c([5,3,2,2,1]; [3,2,1], [3,2,1]) = tilde_d([5,3,2,1]; [3,2,1], [3,2,1]) = -1", "unused", 0,
         counterexample_cases},
        {"worked-example", "the expansions around g_{[3,2,1]/[1]} and the three equal sums", "unused", 0, worked_example_cases},
        {"skew-pieri", "the skew Pieri sum equals h_k g_{mu/nu} for k <= 3", "|mu|", 5, pieri_cases},
    };
}

}  // namespace

const std::vector<Suite>& suite_registry() {
    static const std::vector<Suite> registry = build_registry();
    return registry;
}

const Suite* find_suite(const std::string& name) {
    for (const auto& s : suite_registry()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseOutcome& c) { return !c.result.pass; }));
}

namespace {

CaseResult run_guarded(const VerifyCase& c) {
    try {
        return c.run();
    } catch (const std::exception& err) {
        return {false, std::string("exception: ") + err.what(), "no exception", {}};
    }
}

}  // namespace

SuiteReport run_suite(const Suite& suite, int max_size, int jobs, const std::function<void(const CaseOutcome&)>& on_case) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = suite.name;
    report.max_size = max_size;
    const auto cases = suite.cases(max_size);
    report.cases.resize(cases.size());

    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) {
            report.cases[i] = {cases[i].id, run_guarded(cases[i])};
            if (on_case) on_case(report.cases[i]);
        }
    } else {
        std::vector<char> done(cases.size(), 0);
        std::mutex m;
        std::condition_variable cv;
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < cases.size(); i = next++) {
                CaseOutcome outcome{cases[i].id, run_guarded(cases[i])};
                std::lock_guard lock(m);
                report.cases[i] = std::move(outcome);
                done[i] = 1;
                cv.notify_all();
            }
        };
        std::vector<std::jthread> pool;
        const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(cases.size(), 1));
        for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            std::unique_lock lock(m);
            cv.wait(lock, [&] { return done[i] != 0; });
            lock.unlock();
            if (on_case) on_case(report.cases[i]);
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ksym
