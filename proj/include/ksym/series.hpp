#pragma once

#include <map>

#include "ksym/symfunc.hpp"

namespace ksym {

/// An element of the completion Λ̂ known up to (and including) degree cap.
/// Arithmetic between series truncates to the smaller cap.
class TruncSeries {
public:
    explicit TruncSeries(int cap);
    /// Truncation of a finite element.
    TruncSeries(const SymFunc& f, int cap);

    static TruncSeries one(int cap) { return TruncSeries(SymFunc(CoeffPoly(1L)), cap); }

    [[nodiscard]] int cap() const noexcept { return cap_; }
    [[nodiscard]] const std::map<Partition, CoeffPoly>& terms() const noexcept { return terms_; }
    [[nodiscard]] CoeffPoly coeff(const Partition& la) const;
    /// The stored terms as a finite element of Λ.
    [[nodiscard]] SymFunc as_symfunc() const;

    /// Ignored (not an error) when |la| > cap.
    void add_term(const Partition& la, const CoeffPoly& c);

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const CoeffPoly& scalar);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const CoeffPoly& c, TruncSeries a) { return a *= c; }
    /// Equal caps and equal terms.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] TruncSeries with_cap(int cap) const;
    [[nodiscard]] TruncSeries substitute_t(const CoeffPoly& value) const;

private:
    int cap_;
    std::map<Partition, CoeffPoly> terms_;
};

[[nodiscard]] TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
[[nodiscard]] TruncSeries phi_t(const TruncSeries& f);

/// Σ_{i<=N} t^i h_i.
[[nodiscard]] TruncSeries H_series(int cap);
/// Σ_{i<=N} t^i e_i.
[[nodiscard]] TruncSeries E_series(int cap);

/// Pairing Λ̂ × Λ -> Z[t]. Throws std::domain_error when cap < deg f.
[[nodiscard]] CoeffPoly hall(const TruncSeries& F, const SymFunc& f);

/// A_∅ = 1 and A_μ A_ν = Σ_λ A_λ c^λ_{μν} for all |μ| + |ν| <= cap.
[[nodiscard]] bool is_group_like(const TruncSeries& F);

}  // namespace ksym
