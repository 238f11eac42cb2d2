#include "ksym/grothendieck.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ksym/memo.hpp"

namespace ksym {

namespace {

using PartitionPair = std::pair<Partition, Partition>;
using IntMap = std::map<Partition, BigInt>;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("chain count overflow");
    return out;
}

// Monomial coefficients of g_{λ/μ} at every partition exponent α.
//
// The cells of an RPP holding entries <= i form a partition ν_i, so an RPP is
// a chain μ = ν_0 ⊆ ν_1 ⊆ ... ⊆ ν_n = λ and its weight is
// Π x_i^{c(ν_i / ν_{i-1})}. The coefficient of x^α counts chains whose i-th
// step spans exactly α_i columns. Prefixes of partitions are partitions, so
// a depth-first walk over α shares all prefix work.
std::map<Partition, CoeffPoly> g_dominant_coefficients(const Partition& outer, const Partition& inner) {
    const auto nodes = interval(inner, outer);
    std::unordered_map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    const int max_step = std::max(1, outer[0]);
    // by_width[ν][w] = every κ ⊊ ν in the interval with c(ν/κ) = w.
    std::vector<std::vector<std::vector<std::size_t>>> by_width(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        by_width[j].resize(static_cast<std::size_t>(max_step) + 1);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i == j || !contains(nodes[i], nodes[j])) continue;
            const int w = column_count(SkewShape(nodes[j], nodes[i]));
            by_width[j][static_cast<std::size_t>(w)].push_back(i);
        }
    }
    const std::size_t top = index.at(outer);
    const int total = outer.size() - inner.size();

    std::map<Partition, CoeffPoly> out;
    std::vector<int> alpha;
    std::vector<std::uint64_t> start(nodes.size(), 0);
    start[index.at(inner)] = 1;
    if (start[top]) out.emplace(Partition{}, CoeffPoly(1L));

    auto walk = [&](auto&& self, const std::vector<std::uint64_t>& ways, int max_part, int remaining) -> void {
        for (int w = 1; w <= std::min({max_part, remaining, max_step}); ++w) {
            std::vector<std::uint64_t> next(nodes.size(), 0);
            bool any = false;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                std::uint64_t acc = 0;
                for (std::size_t i : by_width[j][static_cast<std::size_t>(w)]) acc = checked_add(acc, ways[i]);
                next[j] = acc;
                any = any || acc != 0;
            }
            if (!any) continue;
            alpha.push_back(w);
            if (next[top]) out.emplace(Partition(alpha), CoeffPoly(BigInt(static_cast<unsigned long>(next[top]))));
            self(self, next, w, remaining - w);
            alpha.pop_back();
        }
    };
    walk(walk, start, total, total);
    return out;
}

Memo<PartitionPair, IntExpansion, TupleHash>& g_cache() {
    static Memo<PartitionPair, IntExpansion, TupleHash> memo;
    return memo;
}

Memo<PartitionPair, IntMap, TupleHash>& skew_g_cache() {
    static Memo<PartitionPair, IntMap, TupleHash> memo;
    return memo;
}

Memo<PartitionPair, IntMap, TupleHash>& product_g_cache() {
    static Memo<PartitionPair, IntMap, TupleHash> memo;
    return memo;
}

Memo<std::pair<Partition, int>, IntExpansion, TupleHash>& G_cache() {
    static Memo<std::pair<Partition, int>, IntExpansion, TupleHash> memo;
    return memo;
}

IntMap integer_g_expansion(const SymFunc& f) {
    IntMap out;
    for (const auto& [la, c] : schur_to_g(f)) {
        auto value = c.as_integer();
        if (!value) throw std::logic_error("expected an integer g-expansion, got " + c.str());
        out.emplace(la, *value);
    }
    return out;
}

}  // namespace

Exponent RppFilling::column_weight(std::size_t nvars) const {
    Exponent e(nvars, 0);
    const auto cells = shape.cells();
    // Per column, the set of distinct entries.
    std::map<int, std::vector<int>> columns;
    for (std::size_t k = 0; k < cells.size(); ++k) columns[cells[k].second].push_back(entries[k]);
    for (auto& [c, values] : columns) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int v : values) {
            if (v < 1 || static_cast<std::size_t>(v) > nvars) throw std::out_of_range("entry exceeds variable count");
            ++e[static_cast<std::size_t>(v - 1)];
        }
    }
    return e;
}

std::vector<RppFilling> enumerate_rpp(const SkewShape& sh, int max_entry) {
    if (max_entry < 1) throw std::invalid_argument("enumerate_rpp: max_entry must be >= 1");
    const auto cells = sh.cells();
    std::map<std::pair<int, int>, std::size_t> slot;
    for (std::size_t k = 0; k < cells.size(); ++k) slot.emplace(cells[k], k);
    std::vector<std::size_t> order(cells.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(cells[a].second, cells[a].first) < std::pair(cells[b].second, cells[b].first);
    });

    std::vector<RppFilling> out;
    std::vector<int> entries(cells.size(), 0);
    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            out.push_back({sh, entries});
            return;
        }
        const auto [r, c] = cells[order[idx]];
        int lo = 1;
        if (auto it = slot.find({r, c - 1}); it != slot.end()) lo = std::max(lo, entries[it->second]);
        if (auto it = slot.find({r - 1, c}); it != slot.end()) lo = std::max(lo, entries[it->second]);
        for (int v = lo; v <= max_entry; ++v) {
            entries[order[idx]] = v;
            self(self, idx + 1);
        }
        entries[order[idx]] = 0;
    };
    fill(fill, 0);
    return out;
}

MultiPoly rpp_polynomial(const SkewShape& sh, std::size_t nvars) {
    MultiPoly out(nvars);
    for (const auto& t : enumerate_rpp(sh, static_cast<int>(nvars))) out.add_term(t.column_weight(nvars), CoeffPoly(1L));
    return out;
}

const IntExpansion& g_skew_expansion(const Partition& outer, const Partition& inner) {
    return g_cache().get({outer, inner}, [&] {
        IntExpansion out;
        if (!contains(inner, outer)) return out;
        const SymFunc lifted = from_dominant_coefficients(g_dominant_coefficients(outer, inner));
        for (const auto& [la, c] : lifted.terms()) {
            out.emplace(la, *c.as_integer());
        }
        return out;
    });
}

SymFunc g_skew(const Partition& outer, const Partition& inner) { return SymFunc(g_skew_expansion(outer, inner)); }

SymFunc g_skew(const SkewShape& sh) { return g_skew(sh.outer(), sh.inner()); }

SymFunc g_to_schur(const Partition& la) { return g_skew(la, Partition{}); }

GExpansion schur_to_g(const SymFunc& f) {
    GExpansion out;
    SymFunc rest = f;
    while (!rest.is_zero()) {
        const int d = rest.degree();
        std::vector<std::pair<Partition, CoeffPoly>> top;
        for (const auto& [la, c] : rest.terms()) {
            if (la.size() == d) top.emplace_back(la, c);
        }
        for (const auto& [la, c] : top) {
            out.emplace(la, c);
            for (const auto& [mu, m] : g_skew_expansion(la, Partition{})) rest.add_term(mu, -(c * CoeffPoly(m)));
        }
    }
    return out;
}

SymFunc g_combination(const GExpansion& x) {
    SymFunc out;
    for (const auto& [la, c] : x) {
        for (const auto& [mu, m] : g_skew_expansion(la, Partition{})) out.add_term(mu, c * CoeffPoly(m));
    }
    return out;
}

const std::map<Partition, BigInt>& skew_g_in_g(const Partition& la, const Partition& mu) {
    return skew_g_cache().get({la, mu}, [&] { return integer_g_expansion(g_skew(la, mu)); });
}

const std::map<Partition, BigInt>& g_product_in_g(const Partition& mu, const Partition& nu) {
    const bool swap = nu < mu;
    const Partition& a = swap ? nu : mu;
    const Partition& b = swap ? mu : nu;
    return product_g_cache().get({a, b}, [&] { return integer_g_expansion(mul(g_to_schur(a), g_to_schur(b))); });
}

BigInt c_coeff(const Partition& la, const Partition& mu, const Partition& nu) {
    const auto& x = skew_g_in_g(la, mu);
    auto it = x.find(nu);
    return it == x.end() ? BigInt(0) : it->second;
}

BigInt d_coeff(const Partition& la, const Partition& mu, const Partition& nu) {
    const auto& x = g_product_in_g(mu, nu);
    auto it = x.find(la);
    return it == x.end() ? BigInt(0) : it->second;
}

TensorElem g_coproduct(const SkewShape& sh) {
    TensorElem out;
    for (const auto& nu : interval(sh.inner(), sh.outer())) {
        const auto& left = skew_g_in_g(sh.outer(), nu);
        const auto& right = skew_g_in_g(nu, sh.inner());
        for (const auto& [a, ca] : left) {
            for (const auto& [b, cb] : right) out.add_term(a, b, CoeffPoly(BigInt(ca * cb)));
        }
    }
    return out;
}

TruncSeries G_truncated(const Partition& la, int cap) {
    if (cap < la.size()) {
        throw std::invalid_argument("G_truncated: cap " + std::to_string(cap) + " is below |" + la.str() + "|");
    }
    const auto& expansion = G_cache().get({la, cap}, [&] {
        // (G_λ, g_ν) = Σ_κ x_κ [s_κ] g_ν = δ_{λν}; g_ν = s_ν + lower degree,
        // so solve for x_ν in increasing size.
        IntExpansion x;
        for (const auto& nu : partitions_up_to(cap)) {
            if (nu.size() < la.size()) continue;
            BigInt value = nu == la ? 1 : 0;
            for (const auto& [ka, m] : g_skew_expansion(nu, Partition{})) {
                if (ka == nu) continue;
                auto it = x.find(ka);
                if (it != x.end()) value -= it->second * m;
            }
            if (value != 0) x.emplace(nu, value);
        }
        return x;
    });
    return TruncSeries(SymFunc(expansion), cap);
}

}  // namespace ksym
