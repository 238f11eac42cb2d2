#include "ksym/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ksym {

CoeffPoly::CoeffPoly(long value) {
    if (value != 0) coeffs_.emplace_back(value);
}

CoeffPoly::CoeffPoly(const BigInt& value) {
    if (value != 0) coeffs_.push_back(value);
}

CoeffPoly::CoeffPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

CoeffPoly CoeffPoly::t() { return monomial(1, 1); }

CoeffPoly CoeffPoly::monomial(const BigInt& c, int k) {
    if (k < 0) throw std::invalid_argument("negative power of t");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs.back() = c;
    return CoeffPoly(std::move(coeffs));
}

void CoeffPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt CoeffPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::optional<BigInt> CoeffPoly::as_integer() const {
    if (coeffs_.empty()) return BigInt(0);
    if (coeffs_.size() == 1) return coeffs_[0];
    return std::nullopt;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CoeffPoly(std::move(out));
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& other) { return *this = *this * other; }

CoeffPoly operator-(CoeffPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CoeffPoly CoeffPoly::pow(unsigned exponent) const {
    CoeffPoly result(1L);
    CoeffPoly base = *this;
    while (exponent) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent) base *= base;
    }
    return result;
}

BigInt CoeffPoly::eval(const BigInt& value) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

CoeffPoly CoeffPoly::compose(const CoeffPoly& replacement) const {
    CoeffPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * replacement + CoeffPoly(*it);
    }
    return acc;
}

std::string CoeffPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt magnitude = abs(c);
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out += magnitude.get_str() + "*";
        out += 't';
        if (k > 1) out += '^' + std::to_string(k);
    }
    return out;
}

CoeffPoly poly_arith(const CoeffPoly& a, const CoeffPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

BigInt poly_eval_int(const CoeffPoly& a, const BigInt& v) { return a.eval(v); }

CoeffPoly parse_coeff(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty coefficient");
    CoeffPoly result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("bad coefficient '" + std::string(text) + "'");
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        BigInt magnitude = 1;
        bool have_number = pos > start;
        if (have_number) magnitude = BigInt(s.substr(start, pos - start));
        int power = 0;
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 't')) {
            if (s[pos] == '*') {
                if (!have_number) throw std::invalid_argument("bad coefficient '" + std::string(text) + "'");
                ++pos;
            }
            if (pos >= s.size() || s[pos] != 't') {
                throw std::invalid_argument("bad coefficient '" + std::string(text) + "'");
            }
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
                power = std::stoi(s.substr(start, pos - start));
            }
        } else if (!have_number) {
            throw std::invalid_argument("bad coefficient '" + std::string(text) + "'");
        }
        result += CoeffPoly::monomial(sign * magnitude, power);
    }
    return result;
}

BigInt binomial(const BigInt& m, long n) {
    if (n < 0) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long i = 0; i < n; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const CoeffPoly& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    Exponent e(nvars, 0);
    e[index] = 1;
    p.add_term(e, CoeffPoly(1L));
    return p;
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

CoeffPoly MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const CoeffPoly& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mpoly_mul(a, b); }

MultiPoly MultiPoly::truncated(int cap) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) <= cap) out.terms_.emplace(e, c);
    }
    return out;
}

MultiPoly MultiPoly::embed(std::size_t offset, std::size_t total_vars) const {
    if (offset + nvars_ > total_vars) throw std::invalid_argument("embedding does not fit");
    MultiPoly out(total_vars);
    for (const auto& [e, c] : terms_) {
        Exponent f(total_vars, 0);
        std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::specialize(std::size_t index, const CoeffPoly& value) const {
    if (index >= nvars_) throw std::out_of_range("variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        const int k = f[index];
        f[index] = 0;
        out.add_term(f, c * value.pow(static_cast<unsigned>(k)));
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

MultiPoly mpoly_mul(const MultiPoly& a, const MultiPoly& b, std::optional<int> degree_cap) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mpoly_mul: variable count mismatch");
    MultiPoly out(a.nvars());
    Exponent e(a.nvars(), 0);
    for (const auto& [ea, ca] : a.terms()) {
        const int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : b.terms()) {
            if (degree_cap && da + std::accumulate(eb.begin(), eb.end(), 0) > *degree_cap) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool is_symmetric(const MultiPoly& p) {
    for (std::size_t i = 0; i + 1 < p.nvars(); ++i) {
        for (const auto& [e, c] : p.terms()) {
            Exponent swapped = e;
            std::swap(swapped[i], swapped[i + 1]);
            if (p.coeff(swapped) != c) return false;
        }
    }
    return true;
}

}  // namespace ksym
