#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ksym/series.hpp"

namespace ksym {

enum class Basis { s, g, G, h, e, p };

[[nodiscard]] char basis_letter(Basis b);

/// A basis element: `s[..]`, `g[..]`, `G[..]` (s and g may be skew), or
/// `h2`, `e3`, `p1`.
struct Atom {
    Basis basis = Basis::s;
    SkewShape shape;
    int index = 0;

    friend bool operator==(const Atom&, const Atom&) = default;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { integer, param, atom, add, sub, mul, neg };

    static ExprPtr integer(BigInt value);
    static ExprPtr param();
    static ExprPtr atom(Atom a);
    static ExprPtr binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr neg(ExprPtr arg);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const BigInt& value() const noexcept { return value_; }
    [[nodiscard]] const Atom& get_atom() const noexcept { return atom_; }
    [[nodiscard]] const ExprPtr& lhs() const noexcept { return lhs_; }
    [[nodiscard]] const ExprPtr& rhs() const noexcept { return rhs_; }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    Kind kind_ = Kind::integer;
    BigInt value_;
    Atom atom_;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

/// Throws std::invalid_argument with the offending position on bad input.
[[nodiscard]] ExprPtr parse_expr(std::string_view text);
/// Minimal-parenthesis text; parse_expr(print_expr(e)) == e.
[[nodiscard]] std::string print_expr(const Expr& e);

[[nodiscard]] bool mentions(const Expr& e, Basis b);

/// The value of an expression. `cap` is set exactly when G atoms occur, in
/// which case `value` holds the truncation through degree cap.
struct Evaluated {
    SymFunc value;
    std::optional<int> cap;
};

/// G atoms require a cap; finite atoms above the cap are rejected.
[[nodiscard]] Evaluated evaluate(const Expr& e, std::optional<int> cap = std::nullopt);

/// Expansion of a truncated series in the G basis through degree cap.
[[nodiscard]] std::map<Partition, CoeffPoly> series_to_G(const TruncSeries& f);

}  // namespace ksym
