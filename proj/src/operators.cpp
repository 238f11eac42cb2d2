#include "ksym/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ksym {

namespace {

CoeffPoly sign(int exponent) { return CoeffPoly(exponent % 2 == 0 ? 1L : -1L); }

int cap_for(const SymFunc& f, int floor = 0) { return std::max(f.degree(), floor); }

}  // namespace

CoeffPoly Functional::operator()(const SymFunc& f) const { return hall(series_, f); }

CoeffPoly functional_eval(const Functional& F, const SymFunc& f) { return F(f); }

SymFunc perp(const Functional& F, const SymFunc& f) {
    if (f.degree() > F.cap()) {
        throw std::domain_error("perp needs cap >= " + std::to_string(f.degree()) + ", functional cap is " +
                                std::to_string(F.cap()));
    }
    SymFunc out;
    const TensorElem delta = coproduct(f);
    for (const auto& [key, c] : delta.terms()) {
        const CoeffPoly pairing = F.series().coeff(key.first);
        if (!pairing.is_zero()) out.add_term(key.second, pairing * c);
    }
    return out;
}

Functional convolution(const Functional& F, const Functional& G) {
    return Functional(series_mul(F.series(), G.series()));
}

TruncSeries H_at(const CoeffPoly& value, int cap) { return H_series(cap).substitute_t(value); }

TruncSeries E_at(const CoeffPoly& value, int cap) { return E_series(cap).substitute_t(value); }

SymFunc op_I(const SymFunc& f) { return perp(Functional(H_at(CoeffPoly(1L), cap_for(f))), f); }

SymFunc op_I_inv(const SymFunc& f) { return perp(Functional(E_at(CoeffPoly(-1L), cap_for(f))), f); }

SymFunc H_perp(const CoeffPoly& t_value, const SymFunc& f) {
    return perp(Functional(H_at(t_value, cap_for(f))), f);
}

SymFunc E_perp(const CoeffPoly& t_value, const SymFunc& f) {
    return perp(Functional(E_at(t_value, cap_for(f))), f);
}

SymFunc G_perp(const Partition& mu, const SymFunc& f) {
    return perp(Functional(G_truncated(mu, cap_for(f, mu.size()))), f);
}

IncidenceFn::IncidenceFn(Partition ground) : ground_(std::move(ground)), elements_(interval(Partition{}, ground_)) {
    for (const auto& mu : elements_) {
        for (const auto& nu : elements_) {
            if (contains(mu, nu)) pairs_.emplace_back(mu, nu);
        }
    }
}

CoeffPoly IncidenceFn::operator()(const Partition& mu, const Partition& nu) const {
    if (!contains(nu, ground_) || !contains(mu, nu)) {
        throw std::out_of_range("(" + mu.str() + ", " + nu.str() + ") is not a comparable pair below " + ground_.str());
    }
    auto it = values_.find({mu, nu});
    return it == values_.end() ? CoeffPoly() : it->second;
}

void IncidenceFn::set(const Partition& mu, const Partition& nu, const CoeffPoly& value) {
    if (!contains(nu, ground_) || !contains(mu, nu)) {
        throw std::out_of_range("(" + mu.str() + ", " + nu.str() + ") is not a comparable pair below " + ground_.str());
    }
    if (value.is_zero()) {
        values_.erase({mu, nu});
    } else {
        values_[{mu, nu}] = value;
    }
}

IncidenceFn IncidenceFn::substitute_t(const CoeffPoly& value) const {
    IncidenceFn out(ground_);
    for (const auto& [key, c] : values_) out.set(key.first, key.second, c.compose(value));
    return out;
}

IncidenceFn inc_convolve(const IncidenceFn& f, const IncidenceFn& g) {
    if (!(f.ground() == g.ground())) throw std::invalid_argument("inc_convolve: ground mismatch");
    return IncidenceFn::from(f.ground(), [&](const Partition& mu, const Partition& la) {
        CoeffPoly acc;
        for (const auto& nu : interval(mu, la)) acc += f(mu, nu) * g(nu, la);
        return acc;
    });
}

IncidenceFn inc_delta(const Partition& ground) {
    return IncidenceFn::from(ground, [](const Partition& mu, const Partition& nu) {
        return CoeffPoly(mu == nu ? 1L : 0L);
    });
}

IncidenceFn inc_zeta(const Partition& ground) {
    return IncidenceFn::from(ground, [](const Partition&, const Partition&) { return CoeffPoly(1L); });
}

IncidenceFn inc_mobius(const Partition& ground) {
    return IncidenceFn::from(ground, [](const Partition& mu, const Partition& nu) {
        return CoeffPoly(static_cast<long>(mobius(mu, nu)));
    });
}

IncidenceFn inc_it(const Partition& ground) {
    return IncidenceFn::from(ground, [](const Partition& mu, const Partition& la) {
        return CoeffPoly::monomial(1, column_count(SkewShape(la, mu)));
    });
}

IncidenceFn inc_jt(const Partition& ground) {
    const CoeffPoly t_minus_one = CoeffPoly::t() - CoeffPoly(1L);
    return IncidenceFn::from(ground, [&](const Partition& mu, const Partition& la) {
        const SkewShape sh(la, mu);
        if (!strip_kind(sh).vertical) return CoeffPoly();
        const int n = sh.size();
        const int c = column_count(sh);
        return sign(n) * CoeffPoly::monomial(1, c) * t_minus_one.pow(static_cast<unsigned>(n - c));
    });
}

CoeffPoly telescoping_X(int q) {
    if (q < 1) throw std::invalid_argument("telescoping_X requires q >= 1");
    const CoeffPoly t_minus_one = CoeffPoly::t() - CoeffPoly(1L);
    CoeffPoly acc;
    for (int j = 0; j <= q; ++j) {
        const int t_power = (j > 0 ? 1 : 0) + (j < q ? 1 : 0);
        const int tm1_power = j - (j > 0 ? 1 : 0);
        acc += sign(j) * CoeffPoly::monomial(1, t_power) * t_minus_one.pow(static_cast<unsigned>(tm1_power));
    }
    return acc;
}

SkewSum skew_pieri(int k, const SkewShape& sh) {
    if (k < 0) throw std::invalid_argument("skew_pieri requires k >= 0");
    const Partition& mu = sh.outer();
    const Partition& nu = sh.inner();
    const Partition nu_t = transpose(nu);
    SkewSum out;
    for (const auto& la : add_horizontal_strips(mu, k)) {
        const int h = la.size() - mu.size();
        const int a_la = a_statistic(la, mu);
        for (const auto& eta : remove_vertical_strips(nu, k - h)) {
            const int v = nu.size() - eta.size();
            const int lower = k - h - v;
            const BigInt upper = a_la - a_statistic(nu_t, transpose(eta)) - v;
            BigInt c = binomial(upper, lower);
            if ((k - h) % 2 != 0) c = -c;
            if (c == 0) continue;
            auto [it, inserted] = out.try_emplace(SkewShape(la, eta), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

SymFunc expand_skew_sum(const SkewSum& sum) {
    SymFunc out;
    for (const auto& [shape, c] : sum) out += CoeffPoly(c) * g_skew(shape);
    return out;
}

BigInt tilde_c(const Partition& la, const Partition& mu, const Partition& nu) {
    if (!contains(mu, la)) return 0;
    BigInt total = 0;
    for (const auto& kappa : interval(mu, la)) total += c_coeff(la, kappa, nu);
    return total;
}

BigInt tilde_d(const Partition& la, const Partition& mu, const Partition& nu) {
    // Σ_{α,β} d^λ_{αβ} is the g_λ coefficient of (Σ_α g_α)(Σ_β g_β).
    SymFunc left;
    for (const auto& alpha : interval(Partition{}, mu)) left += g_to_schur(alpha);
    SymFunc right;
    for (const auto& beta : interval(Partition{}, nu)) right += g_to_schur(beta);
    const auto expansion = schur_to_g(mul(left, right));
    auto it = expansion.find(la);
    if (it == expansion.end()) return 0;
    return *it->second.as_integer();
}

}  // namespace ksym
