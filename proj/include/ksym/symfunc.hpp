#pragma once

#include <map>
#include <string>
#include <utility>

#include "ksym/coeff.hpp"
#include "ksym/partition.hpp"

namespace ksym {

/// Integer Schur-basis coefficients; the currency of the combinatorial caches.
using IntExpansion = std::map<Partition, BigInt>;

/// A finite element of Λ over Z[t], stored in the Schur basis.
class SymFunc {
public:
    SymFunc() = default;
    SymFunc(const CoeffPoly& c);  // NOLINT: scalars embed as c * s_∅
    explicit SymFunc(const IntExpansion& expansion);

    [[nodiscard]] const std::map<Partition, CoeffPoly>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest |λ| with a nonzero coefficient; 0 for the zero element.
    [[nodiscard]] int degree() const noexcept;
    [[nodiscard]] CoeffPoly coeff(const Partition& la) const;

    void add_term(const Partition& la, const CoeffPoly& c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const CoeffPoly& scalar);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator-(SymFunc a) { return a *= CoeffPoly(-1L); }
    friend SymFunc operator*(const CoeffPoly& c, SymFunc a) { return a *= c; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

    /// Apply t := value to every coefficient.
    [[nodiscard]] SymFunc substitute_t(const CoeffPoly& value) const;
    /// Human-readable `2*s[2,1] + (t)*s[1]`, basis label configurable.
    [[nodiscard]] std::string str(const std::string& basis = "s") const;

private:
    std::map<Partition, CoeffPoly> terms_;
};

/// Element of Λ ⊗ Λ as a map (left, right) -> coefficient.
class TensorElem {
public:
    using Key = std::pair<Partition, Partition>;

    [[nodiscard]] const std::map<Key, CoeffPoly>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] CoeffPoly coeff(const Partition& left, const Partition& right) const;
    void add_term(const Partition& left, const Partition& right, const CoeffPoly& c);

    TensorElem& operator+=(const TensorElem& other);
    /// Componentwise product in Λ ⊗ Λ (Schur-basis labels).
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.terms_ == b.terms_; }

    /// a ⊗ b -> b ⊗ a.
    [[nodiscard]] TensorElem swapped() const;

private:
    std::map<Key, CoeffPoly> terms_;
};

[[nodiscard]] SymFunc schur(const Partition& la);
[[nodiscard]] SymFunc h_gen(int k);
[[nodiscard]] SymFunc e_gen(int k);
/// Power sum; k must be >= 1.
[[nodiscard]] SymFunc p_gen(int k);

/// s_{λ/μ} = Σ_ν c^λ_{μν} s_ν by lattice-word skew tableaux. Zero map if μ ⊄ λ.
[[nodiscard]] const IntExpansion& skew_schur(const Partition& la, const Partition& mu);
/// s_μ s_ν = Σ_λ c^λ_{μν} s_λ, built one letter (horizontal strip) at a time.
[[nodiscard]] const IntExpansion& schur_product(const Partition& mu, const Partition& nu);
[[nodiscard]] BigInt lr_coeff(const Partition& la, const Partition& mu, const Partition& nu);

/// Number of semistandard tableaux of shape la and content alpha.
[[nodiscard]] BigInt kostka(const Partition& la, const Partition& alpha);

[[nodiscard]] SymFunc mul(const SymFunc& f, const SymFunc& g);
[[nodiscard]] TensorElem coproduct(const SymFunc& f);
[[nodiscard]] SymFunc antipode(const SymFunc& f);
[[nodiscard]] CoeffPoly counit(const SymFunc& f);
/// m: Λ ⊗ Λ -> Λ.
[[nodiscard]] SymFunc multiply_out(const TensorElem& x);
/// S ⊗ id applied to a tensor.
[[nodiscard]] TensorElem antipode_left(const TensorElem& x);

[[nodiscard]] CoeffPoly hall(const SymFunc& f, const SymFunc& g);

/// Coefficient extraction from monomial coefficients at partition exponents.
/// Entries must come from a symmetric function: m_α coefficients keyed by α.
[[nodiscard]] SymFunc from_dominant_coefficients(const std::map<Partition, CoeffPoly>& monomial);
/// Lift a symmetric polynomial in n >= deg variables to Λ. Throws on
/// asymmetric input or too few variables.
[[nodiscard]] SymFunc from_polynomial(const MultiPoly& p);
/// s_λ(x_1..x_n) by semistandard tableau enumeration.
[[nodiscard]] MultiPoly schur_polynomial(const Partition& la, std::size_t n);
/// f(x_1..x_n, 0, 0, ...).
[[nodiscard]] MultiPoly to_polynomial(const SymFunc& f, std::size_t n);

/// f(x) -> f(tx): multiplies the s_λ coefficient by t^|λ|.
[[nodiscard]] SymFunc phi_t(const SymFunc& f);

}  // namespace ksym
