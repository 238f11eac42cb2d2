#pragma once

#include <map>
#include <vector>

#include "ksym/series.hpp"
#include "ksym/symfunc.hpp"

namespace ksym {

/// A reverse plane partition: entries weakly increase along rows and down
/// columns. `entries` is aligned with `shape.cells()`.
struct RppFilling {
    SkewShape shape;
    std::vector<int> entries;

    /// x^T exponent vector: T(i) = number of columns containing i.
    [[nodiscard]] Exponent column_weight(std::size_t nvars) const;
};

/// Every RPP of `sh` with entries in 1..max_entry, in lexicographic order of
/// the column-major entry sequence.
[[nodiscard]] std::vector<RppFilling> enumerate_rpp(const SkewShape& sh, int max_entry);

/// Σ_T x^T over RPPs with entries in 1..nvars.
[[nodiscard]] MultiPoly rpp_polynomial(const SkewShape& sh, std::size_t nvars);

/// g_{λ/μ} in the Schur basis; zero when μ ⊄ λ.
[[nodiscard]] const IntExpansion& g_skew_expansion(const Partition& outer, const Partition& inner);
[[nodiscard]] SymFunc g_skew(const Partition& outer, const Partition& inner);
[[nodiscard]] SymFunc g_skew(const SkewShape& sh);
[[nodiscard]] SymFunc g_to_schur(const Partition& la);

/// Coefficients in the g basis; label -> coefficient.
using GExpansion = std::map<Partition, CoeffPoly>;

[[nodiscard]] GExpansion schur_to_g(const SymFunc& f);
[[nodiscard]] SymFunc g_combination(const GExpansion& x);

/// g_{λ/μ} = Σ_ν c^λ_{μν} g_ν.
[[nodiscard]] BigInt c_coeff(const Partition& la, const Partition& mu, const Partition& nu);
/// g_μ g_ν = Σ_λ d^λ_{μν} g_λ.
[[nodiscard]] BigInt d_coeff(const Partition& la, const Partition& mu, const Partition& nu);
/// g-basis expansions backing c_coeff and d_coeff.
[[nodiscard]] const std::map<Partition, BigInt>& skew_g_in_g(const Partition& la, const Partition& mu);
[[nodiscard]] const std::map<Partition, BigInt>& g_product_in_g(const Partition& mu, const Partition& nu);

/// Δ(g_{λ/μ}) = Σ_{μ⊆ν⊆λ} g_{λ/ν} ⊗ g_{ν/μ}, expanded with g-basis labels.
[[nodiscard]] TensorElem g_coproduct(const SkewShape& sh);

/// G_λ through degree cap, dual to {g_μ : |μ| <= cap}. Throws if cap < |λ|.
[[nodiscard]] TruncSeries G_truncated(const Partition& la, int cap);

}  // namespace ksym
