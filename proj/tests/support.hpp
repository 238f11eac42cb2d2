#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ksym/grothendieck.hpp"
#include "ksym/symfunc.hpp"

namespace ksym::testing {

inline SymFunc S(std::initializer_list<int> parts) { return schur(Partition(parts)); }

inline SymFunc g(std::initializer_list<int> parts) { return g_skew(Partition(parts), Partition{}); }

/// Small seeded generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
    }

    Partition partition(int max_size) { return pick(partitions_up_to(max_size)); }

    CoeffPoly coeff(int max_degree, int max_abs) {
        std::vector<BigInt> cs;
        const int d = uniform(-1, max_degree);
        for (int i = 0; i <= d; ++i) cs.emplace_back(uniform(-max_abs, max_abs));
        return CoeffPoly(std::move(cs));
    }

    /// A random element with a few Schur terms of degree at most max_degree.
    SymFunc symfunc(int max_degree, int terms = 3) {
        SymFunc f;
        const int n = uniform(1, terms);
        for (int i = 0; i < n; ++i) f.add_term(partition(max_degree), coeff(1, 3));
        return f;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ksym::testing
