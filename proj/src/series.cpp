#include "ksym/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ksym {

TruncSeries::TruncSeries(int cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
}

TruncSeries::TruncSeries(const SymFunc& f, int cap) : TruncSeries(cap) {
    for (const auto& [la, c] : f.terms()) add_term(la, c);
}

CoeffPoly TruncSeries::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

SymFunc TruncSeries::as_symfunc() const {
    SymFunc f;
    for (const auto& [la, c] : terms_) f.add_term(la, c);
    return f;
}

void TruncSeries::add_term(const Partition& la, const CoeffPoly& c) {
    if (la.size() > cap_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::with_cap(int cap) const {
    TruncSeries out(cap);
    for (const auto& [la, c] : terms_) out.add_term(la, c);
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    if (other.cap_ < cap_) *this = with_cap(other.cap_);
    for (const auto& [la, c] : other.terms_) add_term(la, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
    if (other.cap_ < cap_) *this = with_cap(other.cap_);
    for (const auto& [la, c] : other.terms_) add_term(la, -c);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const CoeffPoly& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [la, c] : terms_) c *= scalar;
    return *this;
}

TruncSeries TruncSeries::substitute_t(const CoeffPoly& value) const {
    TruncSeries out(cap_);
    for (const auto& [la, c] : terms_) out.add_term(la, c.compose(value));
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.cap(), b.cap()));
    for (const auto& [mu, ca] : a.terms()) {
        for (const auto& [nu, cb] : b.terms()) {
            if (mu.size() + nu.size() > out.cap()) continue;
            const CoeffPoly c = ca * cb;
            for (const auto& [la, lr] : schur_product(mu, nu)) out.add_term(la, c * CoeffPoly(lr));
        }
    }
    return out;
}

TruncSeries phi_t(const TruncSeries& f) {
    TruncSeries out(f.cap());
    for (const auto& [la, c] : f.terms()) out.add_term(la, c * CoeffPoly::monomial(1, la.size()));
    return out;
}

TruncSeries H_series(int cap) {
    TruncSeries out(cap);
    for (int i = 0; i <= cap; ++i) out.add_term(i == 0 ? Partition{} : Partition{i}, CoeffPoly::monomial(1, i));
    return out;
}

TruncSeries E_series(int cap) {
    TruncSeries out(cap);
    for (int i = 0; i <= cap; ++i) {
        out.add_term(Partition(std::vector<int>(static_cast<std::size_t>(i), 1)), CoeffPoly::monomial(1, i));
    }
    return out;
}

CoeffPoly hall(const TruncSeries& F, const SymFunc& f) {
    if (f.degree() > F.cap()) {
        throw std::domain_error("pairing needs cap >= " + std::to_string(f.degree()) + ", series cap is " +
                                std::to_string(F.cap()));
    }
    CoeffPoly acc;
    for (const auto& [la, c] : f.terms()) acc += F.coeff(la) * c;
    return acc;
}

bool is_group_like(const TruncSeries& F) {
    if (F.coeff(Partition{}) != CoeffPoly(1L)) return false;
    const int cap = F.cap();
    for (int m = 0; m <= cap; ++m) {
        for (const auto& mu : partitions_of(m)) {
            for (int n = 0; m + n <= cap; ++n) {
                for (const auto& nu : partitions_of(n)) {
                    CoeffPoly rhs;
                    for (const auto& [la, lr] : schur_product(mu, nu)) rhs += F.coeff(la) * CoeffPoly(lr);
                    if (F.coeff(mu) * F.coeff(nu) != rhs) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ksym
