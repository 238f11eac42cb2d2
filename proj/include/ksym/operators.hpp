#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ksym/grothendieck.hpp"
#include "ksym/series.hpp"

namespace ksym {

/// The pairing (F, -) for a truncated F. Evaluating on anything of degree
/// above the cap is an error, never a silent truncation.
class Functional {
public:
    explicit Functional(TruncSeries series) : series_(std::move(series)) {}

    /// The counit ε = (1, -).
    static Functional counit(int cap) { return Functional(TruncSeries::one(cap)); }

    [[nodiscard]] const TruncSeries& series() const noexcept { return series_; }
    [[nodiscard]] int cap() const noexcept { return series_.cap(); }

    [[nodiscard]] CoeffPoly operator()(const SymFunc& f) const;

private:
    TruncSeries series_;
};

[[nodiscard]] CoeffPoly functional_eval(const Functional& F, const SymFunc& f);

/// F^⊥ = ((F, -) ⊗ id) ∘ Δ.
[[nodiscard]] SymFunc perp(const Functional& F, const SymFunc& f);

/// (FG, -) = (F, -) * (G, -).
[[nodiscard]] Functional convolution(const Functional& F, const Functional& G);

/// H(value) truncated at cap, i.e. Σ value^i h_i.
[[nodiscard]] TruncSeries H_at(const CoeffPoly& value, int cap);
/// E(value) truncated at cap.
[[nodiscard]] TruncSeries E_at(const CoeffPoly& value, int cap);

/// I = H(1)^⊥.
[[nodiscard]] SymFunc op_I(const SymFunc& f);
/// I^{-1} = E(-1)^⊥.
[[nodiscard]] SymFunc op_I_inv(const SymFunc& f);
[[nodiscard]] SymFunc H_perp(const CoeffPoly& t_value, const SymFunc& f);
[[nodiscard]] SymFunc E_perp(const CoeffPoly& t_value, const SymFunc& f);
/// G_μ^⊥ with cap deg f.
[[nodiscard]] SymFunc G_perp(const Partition& mu, const SymFunc& f);

/// A Z[t]-valued function on comparable pairs μ ⊆ ν inside [∅, ground].
class IncidenceFn {
public:
    using Pair = std::pair<Partition, Partition>;

    explicit IncidenceFn(Partition ground);

    /// Build from a function of (μ, ν).
    template <class F>
    static IncidenceFn from(const Partition& ground, F&& value) {
        IncidenceFn out(ground);
        for (const auto& [mu, nu] : out.pairs_) out.set(mu, nu, value(mu, nu));
        return out;
    }

    [[nodiscard]] const Partition& ground() const noexcept { return ground_; }
    [[nodiscard]] const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    [[nodiscard]] const std::vector<Partition>& elements() const noexcept { return elements_; }
    [[nodiscard]] CoeffPoly operator()(const Partition& mu, const Partition& nu) const;
    void set(const Partition& mu, const Partition& nu, const CoeffPoly& value);

    [[nodiscard]] IncidenceFn substitute_t(const CoeffPoly& value) const;

    friend bool operator==(const IncidenceFn& a, const IncidenceFn& b) {
        return a.ground_ == b.ground_ && a.values_ == b.values_;
    }

private:
    Partition ground_;
    std::vector<Partition> elements_;
    std::vector<Pair> pairs_;
    std::map<Pair, CoeffPoly> values_;
};

/// (fg)(μ, λ) = Σ_{μ⊆ν⊆λ} f(μ, ν) g(ν, λ). Throws on ground mismatch.
[[nodiscard]] IncidenceFn inc_convolve(const IncidenceFn& f, const IncidenceFn& g);
[[nodiscard]] IncidenceFn inc_delta(const Partition& ground);
[[nodiscard]] IncidenceFn inc_zeta(const Partition& ground);
[[nodiscard]] IncidenceFn inc_mobius(const Partition& ground);
/// i_t(μ, λ) = t^{c(λ/μ)}.
[[nodiscard]] IncidenceFn inc_it(const Partition& ground);
/// j_t(μ, λ) = (-1)^{|λ/μ|} t^{c} (t-1)^{|λ/μ|-c} on vertical strips, else 0.
[[nodiscard]] IncidenceFn inc_jt(const Partition& ground);

/// Σ_{j=0}^{q} (-1)^j t^{[j>0]+[j<q]} (t-1)^{j-[j>0]}; q >= 1.
[[nodiscard]] CoeffPoly telescoping_X(int q);

using SkewSum = std::map<SkewShape, BigInt>;

/// h_k g_{μ/ν} as a signed sum of skew g's.
[[nodiscard]] SkewSum skew_pieri(int k, const SkewShape& sh);
/// Σ coeff · g_{shape} in the Schur basis.
[[nodiscard]] SymFunc expand_skew_sum(const SkewSum& sum);

/// c̃^λ_{μν} = Σ_{μ⊆κ⊆λ} c^λ_{κν}.
[[nodiscard]] BigInt tilde_c(const Partition& la, const Partition& mu, const Partition& nu);
/// d̃^λ_{μν} = Σ_{α⊆μ, β⊆ν} d^λ_{αβ}.
[[nodiscard]] BigInt tilde_d(const Partition& la, const Partition& mu, const Partition& nu);

}  // namespace ksym
