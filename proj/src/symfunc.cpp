#include "ksym/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ksym/memo.hpp"

namespace ksym {

namespace {

using PartitionPair = std::pair<Partition, Partition>;

Memo<PartitionPair, IntExpansion, TupleHash>& skew_cache() {
    static Memo<PartitionPair, IntExpansion, TupleHash> memo;
    return memo;
}

Memo<PartitionPair, IntExpansion, TupleHash>& product_cache() {
    static Memo<PartitionPair, IntExpansion, TupleHash> memo;
    return memo;
}

Memo<PartitionPair, BigInt, TupleHash>& kostka_cache() {
    static Memo<PartitionPair, BigInt, TupleHash> memo;
    return memo;
}

// Fill λ/μ in reverse reading order (rows top to bottom, each right to left)
// keeping the word read so far a lattice word. Content of each completed
// filling is a partition ν; tally fillings per ν.
IntExpansion compute_skew_schur(const Partition& la, const Partition& mu) {
    IntExpansion out;
    if (!contains(mu, la)) return out;
    const std::size_t rows = la.length();
    std::vector<std::vector<int>> grid(rows);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(la[r]), 0);
    std::vector<std::pair<int, int>> order;
    for (std::size_t r = 0; r < rows; ++r) {
        for (int c = la[r] - 1; c >= mu[r]; --c) order.emplace_back(static_cast<int>(r), c);
    }
    std::vector<int> content(static_cast<std::size_t>(la.size()) + 2, 0);

    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            std::vector<int> parts;
            for (std::size_t v = 1; v < content.size() && content[v] > 0; ++v) parts.push_back(content[v]);
            out[Partition(std::move(parts))] += 1;
            return;
        }
        const auto [r, c] = order[idx];
        const auto ru = static_cast<std::size_t>(r);
        const auto cu = static_cast<std::size_t>(c);
        int hi = static_cast<int>(content.size()) - 2;
        if (c + 1 < la[ru]) hi = std::min(hi, grid[ru][cu + 1]);
        int lo = 1;
        if (r > 0 && c >= mu[ru - 1]) lo = grid[ru - 1][cu] + 1;
        for (int v = lo; v <= hi; ++v) {
            const auto vu = static_cast<std::size_t>(v);
            if (v > 1 && content[vu] + 1 > content[vu - 1]) continue;
            grid[ru][cu] = v;
            ++content[vu];
            self(self, idx + 1);
            --content[vu];
        }
        grid[ru][cu] = 0;
    };
    fill(fill, 0);
    return out;
}

// Add the letters of ν one at a time to μ. Letter i occupies a horizontal
// strip; a_{r,i} copies in row r. The reverse reading word is a lattice word
// iff Σ_{s<=r} a_{s,i} <= Σ_{s<r} a_{s,i-1} for all r and i >= 2.
IntExpansion compute_schur_product(const Partition& mu, const Partition& nu) {
    IntExpansion out;
    const std::size_t rows = mu.length() + nu.length();
    std::vector<int> shape(rows, 0);
    for (std::size_t r = 0; r < mu.length(); ++r) shape[r] = mu[r];

    auto place_letter = [&](auto&& self, std::size_t letter, const std::vector<int>& prev_cum) -> void {
        if (letter == nu.length()) {
            out[Partition(shape)] += 1;
            return;
        }
        const std::vector<int> old = shape;
        std::vector<int> cum(rows, 0);
        const int need = nu[letter];
        auto place_row = [&](auto&& row_self, std::size_t r, int placed) -> void {
            if (placed == need) {
                for (std::size_t s = r; s < rows; ++s) cum[s] = placed;
                self(self, letter + 1, cum);
                return;
            }
            if (r == rows) return;
            int max_add = need - placed;
            if (r > 0) max_add = std::min(max_add, old[r - 1] - old[r]);
            if (letter > 0) max_add = std::min(max_add, (r > 0 ? prev_cum[r - 1] : 0) - placed);
            for (int a = std::max(0, max_add); a >= 0; --a) {
                shape[r] = old[r] + a;
                cum[r] = placed + a;
                row_self(row_self, r + 1, placed + a);
            }
            shape[r] = old[r];
        };
        place_row(place_row, 0, 0);
        shape = old;
    };
    place_letter(place_letter, 0, std::vector<int>(rows, 0));
    return out;
}

BigInt compute_kostka(const Partition& la, const Partition& alpha);

BigInt kostka_cached(const Partition& la, const Partition& alpha) {
    return kostka_cache().get({la, alpha}, [&] { return compute_kostka(la, alpha); });
}

// Entries equal to the largest letter form a horizontal strip at the end.
BigInt compute_kostka(const Partition& la, const Partition& alpha) {
    if (la.size() != alpha.size()) return 0;
    if (alpha.empty()) return 1;
    std::vector<int> rest(alpha.parts().begin(), alpha.parts().end() - 1);
    const Partition prefix(std::move(rest));
    const int strip = alpha[alpha.length() - 1];
    BigInt total = 0;
    // κ ⊆ λ with λ/κ a horizontal strip of size `strip`: λ_{i+1} <= κ_i <= λ_i.
    std::vector<int> parts(la.length(), 0);
    auto fill = [&](auto&& self, std::size_t r, int removed) -> void {
        if (r == la.length()) {
            if (removed == strip) total += kostka_cached(Partition(parts), prefix);
            return;
        }
        for (int v = la[r]; v >= la[r + 1] && removed + (la[r] - v) <= strip; --v) {
            parts[r] = v;
            self(self, r + 1, removed + (la[r] - v));
        }
    };
    fill(fill, 0, 0);
    return total;
}

}  // namespace

SymFunc::SymFunc(const CoeffPoly& c) { add_term(Partition{}, c); }

SymFunc::SymFunc(const IntExpansion& expansion) {
    for (const auto& [la, c] : expansion) add_term(la, CoeffPoly(c));
}

int SymFunc::degree() const noexcept {
    int d = 0;
    for (const auto& [la, c] : terms_) d = std::max(d, la.size());
    return d;
}

CoeffPoly SymFunc::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

void SymFunc::add_term(const Partition& la, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    for (const auto& [la, c] : other.terms_) add_term(la, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    for (const auto& [la, c] : other.terms_) add_term(la, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const CoeffPoly& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [la, c] : terms_) c *= scalar;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return mul(a, b); }

SymFunc SymFunc::substitute_t(const CoeffPoly& value) const {
    SymFunc out;
    for (const auto& [la, c] : terms_) out.add_term(la, c.compose(value));
    return out;
}

std::string SymFunc::str(const std::string& basis) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [la, c] = *it;
        if (c != CoeffPoly(1L)) out += "(" + c.str() + ")*";
        out += basis + la.str();
    }
    return out;
}

CoeffPoly TensorElem::coeff(const Partition& left, const Partition& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? CoeffPoly() : it->second;
}

void TensorElem::add_term(const Partition& left, const Partition& right, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& other) {
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    TensorElem out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const auto& left = schur_product(ka.first, kb.first);
            const auto& right = schur_product(ka.second, kb.second);
            const CoeffPoly c = ca * cb;
            for (const auto& [l, cl] : left) {
                for (const auto& [r, cr] : right) out.add_term(l, r, c * CoeffPoly(BigInt(cl * cr)));
            }
        }
    }
    return out;
}

TensorElem TensorElem::swapped() const {
    TensorElem out;
    for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
    return out;
}

SymFunc schur(const Partition& la) {
    SymFunc f;
    f.add_term(la, CoeffPoly(1L));
    return f;
}

SymFunc h_gen(int k) {
    if (k < 0) throw std::invalid_argument("h_k requires k >= 0");
    return schur(k == 0 ? Partition{} : Partition{k});
}

SymFunc e_gen(int k) {
    if (k < 0) throw std::invalid_argument("e_k requires k >= 0");
    return schur(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

SymFunc p_gen(int k) {
    if (k < 1) throw std::invalid_argument("p_k requires k >= 1");
    SymFunc f;
    for (int i = 0; i < k; ++i) {
        std::vector<int> parts{k - i};
        parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
        f.add_term(Partition(std::move(parts)), CoeffPoly(i % 2 == 0 ? 1L : -1L));
    }
    return f;
}

const IntExpansion& skew_schur(const Partition& la, const Partition& mu) {
    return skew_cache().get({la, mu}, [&] { return compute_skew_schur(la, mu); });
}

const IntExpansion& schur_product(const Partition& mu, const Partition& nu) {
    // s_μ s_ν = s_ν s_μ; cache under one ordering, fill with the longer first.
    const bool swap = nu < mu;
    const Partition& a = swap ? nu : mu;
    const Partition& b = swap ? mu : nu;
    return product_cache().get({a, b}, [&] {
        return a.length() >= b.length() ? compute_schur_product(a, b) : compute_schur_product(b, a);
    });
}

BigInt lr_coeff(const Partition& la, const Partition& mu, const Partition& nu) {
    if (la.size() != mu.size() + nu.size() || !contains(mu, la) || !contains(nu, la)) return 0;
    const auto& expansion = skew_schur(la, mu);
    auto it = expansion.find(nu);
    return it == expansion.end() ? BigInt(0) : it->second;
}

BigInt kostka(const Partition& la, const Partition& alpha) { return kostka_cached(la, alpha); }

SymFunc mul(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    for (const auto& [mu, cf] : f.terms()) {
        for (const auto& [nu, cg] : g.terms()) {
            const CoeffPoly c = cf * cg;
            for (const auto& [la, lr] : schur_product(mu, nu)) out.add_term(la, c * CoeffPoly(lr));
        }
    }
    return out;
}

TensorElem coproduct(const SymFunc& f) {
    TensorElem out;
    for (const auto& [la, c] : f.terms()) {
        for (const auto& mu : interval(Partition{}, la)) {
            for (const auto& [nu, lr] : skew_schur(la, mu)) out.add_term(mu, nu, c * CoeffPoly(lr));
        }
    }
    return out;
}

SymFunc antipode(const SymFunc& f) {
    SymFunc out;
    for (const auto& [la, c] : f.terms()) out.add_term(transpose(la), la.size() % 2 == 0 ? c : -c);
    return out;
}

CoeffPoly counit(const SymFunc& f) { return f.coeff(Partition{}); }

SymFunc multiply_out(const TensorElem& x) {
    SymFunc out;
    for (const auto& [k, c] : x.terms()) {
        for (const auto& [la, lr] : schur_product(k.first, k.second)) out.add_term(la, c * CoeffPoly(lr));
    }
    return out;
}

TensorElem antipode_left(const TensorElem& x) {
    TensorElem out;
    for (const auto& [k, c] : x.terms()) {
        out.add_term(transpose(k.first), k.second, k.first.size() % 2 == 0 ? c : -c);
    }
    return out;
}

CoeffPoly hall(const SymFunc& f, const SymFunc& g) {
    CoeffPoly acc;
    const auto& small = f.terms().size() <= g.terms().size() ? f : g;
    const auto& large = &small == &f ? g : f;
    for (const auto& [la, c] : small.terms()) {
        auto it = large.terms().find(la);
        if (it != large.terms().end()) acc += c * it->second;
    }
    return acc;
}

SymFunc from_dominant_coefficients(const std::map<Partition, CoeffPoly>& monomial) {
    int max_degree = 0;
    for (const auto& [alpha, c] : monomial) max_degree = std::max(max_degree, alpha.size());
    SymFunc out;
    for (int d = 0; d <= max_degree; ++d) {
        // Lex-greatest first; K_{νμ} != 0 only when ν dominates μ.
        std::vector<std::pair<Partition, CoeffPoly>> found;
        for (const auto& mu : partitions_of(d)) {
            auto it = monomial.find(mu);
            CoeffPoly a = it == monomial.end() ? CoeffPoly() : it->second;
            for (const auto& [nu, coeff] : found) {
                const BigInt k = kostka(nu, mu);
                if (k != 0) a -= coeff * CoeffPoly(k);
            }
            if (!a.is_zero()) found.emplace_back(mu, a);
        }
        for (const auto& [mu, a] : found) out.add_term(mu, a);
    }
    return out;
}

SymFunc from_polynomial(const MultiPoly& p) {
    if (!is_symmetric(p)) throw std::invalid_argument("from_polynomial: polynomial is not symmetric");
    if (!p.is_zero() && static_cast<int>(p.nvars()) < p.total_degree()) {
        throw std::invalid_argument("from_polynomial: need at least as many variables as the degree");
    }
    std::map<Partition, CoeffPoly> dominant;
    for (const auto& [e, c] : p.terms()) {
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) dominant.emplace(Partition(e), c);
    }
    return from_dominant_coefficients(dominant);
}

MultiPoly schur_polynomial(const Partition& la, std::size_t n) {
    MultiPoly out(n);
    if (la.length() > n) return out;
    const std::size_t rows = la.length();
    std::vector<std::vector<int>> grid(rows);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(la[r]), 0);
    Exponent e(n, 0);
    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows) {
            out.add_term(e, CoeffPoly(1L));
            return;
        }
        if (c == grid[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(n); ++v) {
            grid[r][c] = v;
            ++e[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1);
            --e[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(fill, 0, 0);
    return out;
}

MultiPoly to_polynomial(const SymFunc& f, std::size_t n) {
    MultiPoly out(n);
    for (const auto& [la, c] : f.terms()) {
        out += mpoly_mul(MultiPoly::constant(n, c), schur_polynomial(la, n));
    }
    return out;
}

SymFunc phi_t(const SymFunc& f) {
    SymFunc out;
    for (const auto& [la, c] : f.terms()) out.add_term(la, c * CoeffPoly::monomial(1, la.size()));
    return out;
}

}  // namespace ksym
