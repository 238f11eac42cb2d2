#include <doctest.h>

#include <stdexcept>

#include "ksym/series.hpp"
#include "ksym/symfunc.hpp"
#include "support.hpp"

using namespace ksym;
using ksym::testing::Rng;
using ksym::testing::S;

namespace {

const CoeffPoly t = CoeffPoly::t();

// Generating polynomial of semistandard fillings of la/mu with entries 1..n,
// by brute force over all fillings in row-major order.
void fill(const std::vector<std::pair<int, int>>& cells, std::size_t k, std::map<std::pair<int, int>, int>& T,
          std::size_t n, MultiPoly& out) {
    if (k == cells.size()) {
        Exponent e(n, 0);
        for (const auto& [_, v] : T) ++e[static_cast<std::size_t>(v - 1)];
        out.add_term(e, 1L);
        return;
    }
    const auto [r, c] = cells[k];
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        if (auto it = T.find({r, c - 1}); it != T.end() && it->second > v) continue;
        if (auto it = T.find({r - 1, c}); it != T.end() && it->second >= v) continue;
        T[{r, c}] = v;
        fill(cells, k + 1, T, n, out);
        T.erase({r, c});
    }
}

MultiPoly ssyt_poly(const Partition& la, const Partition& mu, std::size_t n) {
    MultiPoly out(n);
    std::map<std::pair<int, int>, int> T;
    fill(SkewShape(la, mu).cells(), 0, T, n, out);
    return out;
}

MultiPoly from_schur(const std::map<Partition, BigInt>& x, std::size_t n) {
    MultiPoly out(n);
    for (const auto& [la, c] : x) out += MultiPoly::constant(n, c) * ssyt_poly(la, {}, n);
    return out;
}

MultiPoly xvar(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("generators") {
    CHECK(h_gen(2) == S({2}));
    CHECK(e_gen(3) == S({1, 1, 1}));
    CHECK(p_gen(2) == S({2}) - S({1, 1}));
    CHECK(h_gen(0) == SymFunc(1L));
    CHECK_THROWS(p_gen(0));
    CHECK_THROWS(h_gen(-1));
    // p_k evaluated in k variables is the sum of k-th powers.
    for (int k = 1; k <= 5; ++k) {
        const auto n = static_cast<std::size_t>(k);
        MultiPoly want(n);
        for (std::size_t i = 0; i < n; ++i) {
            Exponent e(n, 0);
            e[i] = k;
            want.add_term(e, 1L);
        }
        CHECK(to_polynomial(p_gen(k), n) == want);
    }
}

TEST_CASE("littlewood-richardson coefficients") {
    CHECK(lr_coeff({2}, {1}, {1}) == 1);
    CHECK(lr_coeff({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coeff({3}, {1}, {1}) == 0);
    CHECK(lr_coeff({3, 2, 1}, {2, 1}, {2, 1}) == 2);
}

TEST_CASE("products agree with polynomial multiplication") {
    for (const auto& mu : partitions_up_to(3)) {
        for (const auto& nu : partitions_up_to(3)) {
            const auto n = static_cast<std::size_t>(mu.size() + nu.size());
            if (n == 0) continue;
            CAPTURE(mu.str());
            CAPTURE(nu.str());
            CHECK(from_schur(schur_product(mu, nu), n) == ssyt_poly(mu, {}, n) * ssyt_poly(nu, {}, n));
        }
    }
}

TEST_CASE("skew schur functions agree with skew tableaux") {
    for (const auto& la : partitions_up_to(5)) {
        for (const auto& mu : interval({}, la)) {
            const auto n = static_cast<std::size_t>(std::max(1, la.size() - mu.size()));
            CHECK(from_schur(skew_schur(la, mu), n) == ssyt_poly(la, mu, n));
        }
    }
    CHECK(skew_schur({2}, {1, 1}).empty());
}

TEST_CASE("schur polynomials and kostka numbers") {
    for (const auto& la : partitions_up_to(5)) {
        for (std::size_t n = 1; n <= 3; ++n) CHECK(schur_polynomial(la, n) == ssyt_poly(la, {}, n));
        const auto n = static_cast<std::size_t>(std::max(1, la.size()));
        const MultiPoly p = ssyt_poly(la, {}, n);
        for (const auto& alpha : partitions_of(la.size())) {
            Exponent e(alpha.parts().begin(), alpha.parts().end());
            e.resize(n, 0);
            CHECK(CoeffPoly(kostka(la, alpha)) == p.coeff(e));
        }
    }
}

TEST_CASE("multiplication") {
    CHECK(mul(S({1}), S({1})) == S({2}) + S({1, 1}));
    CHECK(mul(S({2, 1}), SymFunc(1L)) == S({2, 1}));
    CHECK(mul(S({1}), S({2})) == S({3}) + S({2, 1}));
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        const SymFunc a = rng.symfunc(3), b = rng.symfunc(3), c = rng.symfunc(2);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
    }
}

TEST_CASE("coproduct") {
    TensorElem want;
    want.add_term({}, {1}, 1L);
    want.add_term({1}, {}, 1L);
    CHECK(coproduct(S({1})) == want);

    TensorElem one;
    one.add_term({}, {}, 1L);
    CHECK(coproduct(SymFunc(1L)) == one);

    TensorElem two;
    two.add_term({}, {2}, 1L);
    two.add_term({1}, {1}, 1L);
    two.add_term({2}, {}, 1L);
    CHECK(coproduct(S({2})) == two);

    // s_la(x1, x2, y1, y2) split over the two alphabets.
    for (const auto& la : partitions_up_to(4)) {
        MultiPoly split(4);
        const TensorElem delta = coproduct(schur(la));
        for (const auto& [key, c] : delta.terms()) {
            split += MultiPoly::constant(4, c) * ssyt_poly(key.first, {}, 2).embed(0, 4) *
                     ssyt_poly(key.second, {}, 2).embed(2, 4);
        }
        CHECK(split == ssyt_poly(la, {}, 4));
    }
}

TEST_CASE("antipode and counit") {
    CHECK(antipode(S({2})) == S({1, 1}));
    CHECK(antipode(S({1})) == -S({1}));
    CHECK(counit(S({2, 1}) + SymFunc(3L)) == CoeffPoly(3L));
    CHECK(antipode(antipode(S({3, 1}))) == S({3, 1}));
    CHECK(multiply_out(antipode_left(coproduct(S({2, 1})))).is_zero());
}

TEST_CASE("hall pairing") {
    CHECK(hall(S({2, 1}), S({2, 1})) == CoeffPoly(1L));
    CHECK(hall(S({2}), S({1, 1})).is_zero());
    CHECK(hall(H_series(3), S({2})) == t * t);
    CHECK_THROWS_AS(hall(H_series(1), S({2})), std::domain_error);
}

TEST_CASE("lifting polynomials") {
    CHECK(from_polynomial(xvar(2, 0) * xvar(2, 1)) == S({1, 1}));
    CHECK(from_polynomial(xvar(2, 0) * xvar(2, 0) + xvar(2, 0) * xvar(2, 1) + xvar(2, 1) * xvar(2, 1)) == S({2}));
    CHECK(from_polynomial(xvar(2, 0) * xvar(2, 0) + xvar(2, 1) * xvar(2, 1)) == S({2}) - S({1, 1}));
    CHECK_THROWS_AS(from_polynomial(xvar(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(from_polynomial(xvar(1, 0) * xvar(1, 0)), std::invalid_argument);

    CHECK(to_polynomial(S({1, 1}), 1).is_zero());
    CHECK(to_polynomial(S({2}), 2) ==
          xvar(2, 0) * xvar(2, 0) + xvar(2, 0) * xvar(2, 1) + xvar(2, 1) * xvar(2, 1));
    CHECK(to_polynomial(S({2, 1}), 2) == xvar(2, 0) * xvar(2, 0) * xvar(2, 1) + xvar(2, 0) * xvar(2, 1) * xvar(2, 1));

    Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        const SymFunc f = rng.symfunc(4);
        CHECK(from_polynomial(to_polynomial(f, 4)) == f);
    }
}

TEST_CASE("phi_t") {
    CHECK(phi_t(S({2, 1})) == t * t * t * S({2, 1}));
    CHECK(phi_t(SymFunc(1L)) == SymFunc(1L));
}

TEST_CASE("truncated series") {
    TruncSeries h2(2);
    h2.add_term({}, 1L);
    h2.add_term({1}, t);
    h2.add_term({2}, t * t);
    CHECK(H_series(2) == h2);
    CHECK(E_series(0) == TruncSeries::one(0));
    CHECK(series_mul(H_series(4), E_series(4).substitute_t(-t)) == TruncSeries::one(4));
    CHECK_THROWS(TruncSeries(-1));

    const TruncSeries mixed = H_series(5) + E_series(3);
    CHECK(mixed.cap() == 3);
    TruncSeries s(1);
    s.add_term({2}, 1L);
    CHECK(s.terms().empty());
}

TEST_CASE("group-like series") {
    CHECK(is_group_like(H_series(5)));
    CHECK(is_group_like(E_series(5)));
    TruncSeries a = TruncSeries::one(2);
    a.add_term({1}, 1L);
    CHECK_FALSE(is_group_like(a));
    // 1 + s1 + s2 through degree 2 is the truncation of H(1).
    a.add_term({2}, 1L);
    CHECK(is_group_like(a));
    TruncSeries b(2);
    b.add_term({1}, 1L);
    CHECK_FALSE(is_group_like(b));
}
