#include "ksym/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "ksym/grothendieck.hpp"

namespace ksym {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::s: return 's';
        case Basis::g: return 'g';
        case Basis::G: return 'G';
        case Basis::h: return 'h';
        case Basis::e: return 'e';
        case Basis::p: return 'p';
    }
    return '?';
}

ExprPtr Expr::integer(BigInt value) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::integer;
    e->value_ = std::move(value);
    return e;
}

ExprPtr Expr::param() {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::param;
    return e;
}

ExprPtr Expr::atom(Atom a) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::atom;
    e->atom_ = std::move(a);
    return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
    if (kind != Kind::add && kind != Kind::sub && kind != Kind::mul) {
        throw std::invalid_argument("Expr::binary needs add, sub or mul");
    }
    auto e = std::make_shared<Expr>();
    e->kind_ = kind;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::neg(ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::neg;
    e->lhs_ = std::move(arg);
    return e;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Expr::Kind::integer: return a.value_ == b.value_;
        case Expr::Kind::param: return true;
        case Expr::Kind::atom: return a.atom_ == b.atom_;
        case Expr::Kind::neg: return *a.lhs_ == *b.lhs_;
        default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        for (;;) {
            if (accept('+')) {
                e = Expr::binary(Expr::Kind::add, e, parse_product());
            } else if (accept('-')) {
                e = Expr::binary(Expr::Kind::sub, e, parse_product());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        while (accept('*')) e = Expr::binary(Expr::Kind::mul, e, parse_unary());
        return e;
    }

    ExprPtr parse_unary() {
        if (accept('-')) return Expr::neg(parse_unary());
        return parse_primary();
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Partition bracketed() {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '['");
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated partition");
        const auto inside = text_.substr(pos_, close - pos_ + 1);
        pos_ = close + 1;
        try {
            return parse_partition(inside);
        } catch (const std::invalid_argument& err) {
            fail(err.what());
        }
    }

    ExprPtr parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Expr::integer(BigInt(digits()));
        ++pos_;
        switch (c) {
            case 't': return Expr::param();
            case 's':
            case 'g':
            case 'G': {
                Atom a;
                a.basis = c == 's' ? Basis::s : c == 'g' ? Basis::g : Basis::G;
                Partition outer = bracketed();
                Partition inner;
                if (accept('/')) {
                    if (a.basis == Basis::G) fail("G atoms cannot be skew");
                    inner = bracketed();
                }
                if (!contains(inner, outer)) fail(inner.str() + " is not contained in " + outer.str());
                a.shape = SkewShape(std::move(outer), std::move(inner));
                return Expr::atom(a);
            }
            case 'h':
            case 'e':
            case 'p': {
                Atom a;
                a.basis = c == 'h' ? Basis::h : c == 'e' ? Basis::e : Basis::p;
                const std::string n = digits();
                if (n.empty()) fail(std::string("expected a degree after '") + c + "'");
                if (n.size() > 6) fail("degree too large");
                a.index = std::stoi(n);
                if (a.basis == Basis::p && a.index == 0) fail("p0 is undefined");
                return Expr::atom(a);
            }
            default:
                --pos_;
                fail("unexpected '" + std::string(1, c) + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string atom_text(const Atom& a) {
    std::string out(1, basis_letter(a.basis));
    switch (a.basis) {
        case Basis::h:
        case Basis::e:
        case Basis::p: return out + std::to_string(a.index);
        default: break;
    }
    out += a.shape.outer().str();
    if (!a.shape.inner().empty()) out += "/" + a.shape.inner().str();
    return out;
}

std::string print_at(const Expr& e, int min_prec) {
    std::string text;
    int prec = 4;
    switch (e.kind()) {
        case Expr::Kind::integer: text = e.value().get_str(); break;
        case Expr::Kind::param: text = "t"; break;
        case Expr::Kind::atom: text = atom_text(e.get_atom()); break;
        case Expr::Kind::add:
            text = print_at(*e.lhs(), 1) + " + " + print_at(*e.rhs(), 2);
            prec = 1;
            break;
        case Expr::Kind::sub:
            text = print_at(*e.lhs(), 1) + " - " + print_at(*e.rhs(), 2);
            prec = 1;
            break;
        case Expr::Kind::mul:
            text = print_at(*e.lhs(), 2) + "*" + print_at(*e.rhs(), 3);
            prec = 2;
            break;
        case Expr::Kind::neg:
            text = "-" + print_at(*e.lhs(), 3);
            prec = 3;
            break;
    }
    return prec < min_prec ? "(" + text + ")" : text;
}

SymFunc truncate(const SymFunc& f, std::optional<int> cap) {
    if (!cap) return f;
    return TruncSeries(f, *cap).as_symfunc();
}

SymFunc atom_value(const Atom& a, std::optional<int> cap) {
    SymFunc out;
    switch (a.basis) {
        case Basis::s: out = SymFunc(skew_schur(a.shape.outer(), a.shape.inner())); break;
        case Basis::g: out = g_skew(a.shape); break;
        case Basis::h: out = h_gen(a.index); break;
        case Basis::e: out = e_gen(a.index); break;
        case Basis::p: out = p_gen(a.index); break;
        case Basis::G:
            if (!cap) throw std::invalid_argument("G atoms need a degree cap");
            return G_truncated(a.shape.outer(), *cap).as_symfunc();
    }
    if (cap && out.degree() > *cap) {
        throw std::domain_error(atom_text(a) + " has degree " + std::to_string(out.degree()) + " above the cap " +
                                std::to_string(*cap));
    }
    return out;
}

SymFunc evaluate_at(const Expr& e, std::optional<int> cap) {
    switch (e.kind()) {
        case Expr::Kind::integer: return SymFunc(CoeffPoly(e.value()));
        case Expr::Kind::param: return SymFunc(CoeffPoly::t());
        case Expr::Kind::atom: return atom_value(e.get_atom(), cap);
        case Expr::Kind::add: return evaluate_at(*e.lhs(), cap) + evaluate_at(*e.rhs(), cap);
        case Expr::Kind::sub: return evaluate_at(*e.lhs(), cap) - evaluate_at(*e.rhs(), cap);
        case Expr::Kind::mul: return truncate(mul(evaluate_at(*e.lhs(), cap), evaluate_at(*e.rhs(), cap)), cap);
        case Expr::Kind::neg: return -evaluate_at(*e.lhs(), cap);
    }
    return {};
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

bool mentions(const Expr& e, Basis b) {
    switch (e.kind()) {
        case Expr::Kind::integer:
        case Expr::Kind::param: return false;
        case Expr::Kind::atom: return e.get_atom().basis == b;
        case Expr::Kind::neg: return mentions(*e.lhs(), b);
        default: return mentions(*e.lhs(), b) || mentions(*e.rhs(), b);
    }
}

Evaluated evaluate(const Expr& e, std::optional<int> cap) {
    if (!mentions(e, Basis::G)) return {evaluate_at(e, std::nullopt), std::nullopt};
    if (!cap) throw std::invalid_argument("G atoms need a degree cap");
    if (*cap < 0) throw std::invalid_argument("cap must be nonnegative");
    return {evaluate_at(e, cap), cap};
}

std::map<Partition, CoeffPoly> series_to_G(const TruncSeries& f) {
    std::map<Partition, CoeffPoly> out;
    TruncSeries rest = f;
    while (!rest.terms().empty()) {
        const int d = rest.terms().begin()->first.size();
        std::vector<std::pair<Partition, CoeffPoly>> low;
        for (const auto& [la, c] : rest.terms()) {
            if (la.size() == d) low.emplace_back(la, c);
        }
        for (const auto& [la, c] : low) {
            out.emplace(la, c);
            rest -= c * G_truncated(la, f.cap());
        }
    }
    return out;
}

}  // namespace ksym
