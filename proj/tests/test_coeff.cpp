#include <doctest.h>

#include <stdexcept>

#include "ksym/coeff.hpp"
#include "support.hpp"

using namespace ksym;
using ksym::testing::Rng;

namespace {

const CoeffPoly t = CoeffPoly::t();

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("poly arithmetic") {
    CHECK(poly_arith(t, t + 1, ArithOp::mul) == t * t + t);
    CHECK(poly_arith(1L, -1L, ArithOp::add).is_zero());
    CHECK(poly_arith((t - 1) * (t - 1), t - 1, ArithOp::mul) == CoeffPoly({BigInt(-1), BigInt(3), BigInt(-3), BigInt(1)}));
    CHECK(poly_arith(t, t, ArithOp::sub).is_zero());
    CHECK(CoeffPoly(0L).degree() == -1);
    CHECK((t + 1).pow(3) == t * t * t + 3 * t * t + 3 * t + 1);
    CHECK(CoeffPoly(5L).as_integer() == BigInt(5));
    CHECK_FALSE(t.as_integer().has_value());
}

TEST_CASE("poly evaluation") {
    const CoeffPoly a = t * (t + 1) * (t + 1);
    CHECK(poly_eval_int(a, 1) == 4);
    for (unsigned n = 2; n <= 8; ++n) CHECK(poly_eval_int(t * (t + 1).pow(n - 1), -1) == 0);
    CHECK(poly_eval_int((t - 1) * (t - 1), 0) == 1);
    CHECK((t * t).compose(t + 1) == t * t + 2 * t + 1);
}

TEST_CASE("canonical text") {
    CHECK((t - 1).pow(3).str() == "t^3-3*t^2+3*t-1");
    CHECK(CoeffPoly(0L).str() == "0");
    CHECK(CoeffPoly(-7L).str() == "-7");
    CHECK(t.str() == "t");
    CHECK((-t).str() == "-t");
    CHECK((t * t + t).str() == "t^2+t");
    CHECK(parse_coeff("-3*t+1") == 1 - 3 * t);
    CHECK(parse_coeff(" t^2 + t ") == t * t + t);
    CHECK(parse_coeff("12") == CoeffPoly(12L));
    CHECK_THROWS_AS(parse_coeff("t^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coeff("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coeff(""), std::invalid_argument);
}

TEST_CASE("text round trip on random polynomials") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const CoeffPoly a = rng.coeff(5, 40);
        CHECK(parse_coeff(a.str()) == a);
    }
}

TEST_CASE("ring laws checked through evaluation") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const CoeffPoly a = rng.coeff(4, 9), b = rng.coeff(4, 9), c = rng.coeff(3, 9);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        for (long v = -3; v <= 3; ++v) {
            const BigInt pa = a.eval(v), pb = b.eval(v);
            CHECK((a * b).eval(v) == BigInt(pa * pb));
            CHECK((a - b).eval(v) == BigInt(pa - pb));
            CHECK(a.compose(b).eval(v) == a.eval(pb));
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 2) == 3);
    CHECK(binomial(7, 0) == 1);
    // Pascal's rule holds for every upper index.
    for (long m = -6; m <= 6; ++m) {
        for (long n = 1; n <= 6; ++n) CHECK(binomial(m, n) == binomial(m - 1, n) + binomial(m - 1, n - 1));
    }
}

TEST_CASE("multivariate products") {
    const MultiPoly s = x(2, 0) + x(2, 1);
    MultiPoly want(2);
    want.add_term({2, 0}, 1L);
    want.add_term({1, 1}, 2L);
    want.add_term({0, 2}, 1L);
    CHECK(mpoly_mul(s, s) == want);
    CHECK(mpoly_mul(s, MultiPoly::constant(2, 1L)) == s);
    CHECK(mpoly_mul(x(2, 0) * x(2, 1), x(2, 0), 2).is_zero());
    CHECK_THROWS(mpoly_mul(x(2, 0), x(3, 0)));
    CHECK((s * s).total_degree() == 2);
    CHECK((s * s).truncated(1).is_zero());
    CHECK(x(2, 0).embed(1, 3) == x(3, 1));
    CHECK(x(2, 0).specialize(0, 5L) == MultiPoly::constant(2, 5L));
}

TEST_CASE("symmetry test") {
    CHECK(is_symmetric(x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1)));
    CHECK(is_symmetric(x(2, 0) * x(2, 0) * x(2, 1) + x(2, 0) * x(2, 1) * x(2, 1)));
    CHECK_FALSE(is_symmetric(x(2, 0) * x(2, 0) + x(2, 1)));
    CHECK(is_symmetric(MultiPoly(3)));
    CHECK_FALSE(is_symmetric(x(3, 0) * x(3, 1)));
}
