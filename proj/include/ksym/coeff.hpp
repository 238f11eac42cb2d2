#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ksym {

using BigInt = mpz_class;

/// An element of Z[t]; coeffs()[i] is the coefficient of t^i.
/// Canonical: no trailing zero coefficients, zero is the empty sequence.
class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(long value);  // NOLINT: integers embed implicitly
    CoeffPoly(const BigInt& value);  // NOLINT
    explicit CoeffPoly(std::vector<BigInt> coeffs);

    /// The polynomial t.
    static CoeffPoly t();
    /// c * t^k.
    static CoeffPoly monomial(const BigInt& c, int k);

    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] BigInt coeff(int k) const;
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// The integer value when constant.
    [[nodiscard]] std::optional<BigInt> as_integer() const;

    CoeffPoly& operator+=(const CoeffPoly& other);
    CoeffPoly& operator-=(const CoeffPoly& other);
    CoeffPoly& operator*=(const CoeffPoly& other);

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator-(CoeffPoly a);
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.coeffs_ == b.coeffs_; }

    [[nodiscard]] CoeffPoly pow(unsigned exponent) const;
    [[nodiscard]] BigInt eval(const BigInt& value) const;
    /// Substitute t := replacement.
    [[nodiscard]] CoeffPoly compose(const CoeffPoly& replacement) const;

    /// Canonical text, highest power first: `t^3-3*t^2+3*t-1`, `0`.
    [[nodiscard]] std::string str() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

enum class ArithOp { add, sub, mul };
[[nodiscard]] CoeffPoly poly_arith(const CoeffPoly& a, const CoeffPoly& b, ArithOp op);
[[nodiscard]] BigInt poly_eval_int(const CoeffPoly& a, const BigInt& v);

/// Parse an integer or an expression in canonical form (`t^2+t`, `-3*t+1`, `t`).
[[nodiscard]] CoeffPoly parse_coeff(std::string_view text);

/// Binomial coefficient C(m, n) for any integer m; zero when n < 0.
[[nodiscard]] BigInt binomial(const BigInt& m, long n);

using Exponent = std::vector<int>;

/// Sparse polynomial in x_1..x_n with Z[t] coefficients.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const CoeffPoly& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] const std::map<Exponent, CoeffPoly>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] CoeffPoly coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const CoeffPoly& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Drop every term of total degree > cap.
    [[nodiscard]] MultiPoly truncated(int cap) const;
    /// Relabel x_i as x_{i + offset} inside a ring of total_vars variables.
    [[nodiscard]] MultiPoly embed(std::size_t offset, std::size_t total_vars) const;
    /// Set x_i := value for the given variable, keeping the variable count.
    [[nodiscard]] MultiPoly specialize(std::size_t index, const CoeffPoly& value) const;

    [[nodiscard]] std::string str() const;

private:
    std::size_t nvars_;
    std::map<Exponent, CoeffPoly> terms_;
};

/// Product, dropping terms above degree_cap when given. Throws on nvars mismatch.
[[nodiscard]] MultiPoly mpoly_mul(const MultiPoly& a, const MultiPoly& b,
                                  std::optional<int> degree_cap = std::nullopt);

[[nodiscard]] bool is_symmetric(const MultiPoly& p);

}  // namespace ksym
