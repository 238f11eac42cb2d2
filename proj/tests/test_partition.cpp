#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "ksym/partition.hpp"

using namespace ksym;

namespace {

std::set<std::pair<int, int>> cell_set(const Partition& la) {
    std::set<std::pair<int, int>> out;
    for (std::size_t r = 0; r < la.length(); ++r) {
        for (int c = 0; c < la[r]; ++c) out.emplace(static_cast<int>(r), c);
    }
    return out;
}

// Möbius function straight from its recursive definition.
int mobius_oracle(const Partition& mu, const Partition& nu, std::map<Partition, int>& memo) {
    if (auto it = memo.find(nu); it != memo.end()) return it->second;
    int value = 0;
    if (mu == nu) {
        value = 1;
    } else {
        for (const auto& z : partitions_up_to(nu.size() - 1)) {
            if (contains(mu, z) && contains(z, nu)) value -= mobius_oracle(mu, z, memo);
        }
    }
    memo.emplace(nu, value);
    return value;
}

}  // namespace

TEST_CASE("contains") {
    CHECK(contains({1}, {3, 2, 1}));
    CHECK_FALSE(contains({2, 2}, {3, 1}));
    for (const auto& la : partitions_up_to(5)) CHECK(contains({}, la));
}

TEST_CASE("partition construction and text") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({2, 1}).str() == "[2,1]");
    CHECK(Partition{}.str() == "[]");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(parse_partition(" [3, 2,1] ") == Partition({3, 2, 1}));
    CHECK(parse_partition("[]").empty());
    CHECK_THROWS(parse_partition("[1,2]"));
    CHECK_THROWS(parse_partition("3,2"));
    CHECK(parse_skew("[3,2,1]/[1]") == SkewShape({3, 2, 1}, {1}));
    CHECK(parse_skew("[2]") == SkewShape({2}));
    CHECK_THROWS(parse_skew("[1]/[2]"));
    CHECK_THROWS_AS(SkewShape({2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("transpose") {
    CHECK(transpose({3, 1}) == Partition({2, 1, 1}));
    CHECK(transpose({}) == Partition{});
    CHECK(transpose({2, 2}) == Partition({2, 2}));
    for (const auto& la : partitions_up_to(8)) {
        std::set<std::pair<int, int>> flipped;
        for (auto [r, c] : cell_set(la)) flipped.emplace(c, r);
        CHECK(cell_set(transpose(la)) == flipped);
        CHECK(transpose(transpose(la)) == la);
    }
}

TEST_CASE("column count") {
    CHECK(column_count(SkewShape({3, 2, 1}, {1})) == 3);
    CHECK(column_count(SkewShape({2, 2}, {1, 1})) == 1);
    CHECK(column_count(SkewShape({4, 2}, {4, 2})) == 0);
    CHECK(column_count(Partition{3, 1}) == 3);
}

TEST_CASE("strip kinds") {
    auto k = strip_kind(SkewShape({2, 1}, {1}));
    CHECK((k.horizontal && k.vertical && k.rook));
    k = strip_kind(SkewShape({2, 2}, {1, 1}));
    CHECK((!k.horizontal && k.vertical && !k.rook));
    k = strip_kind(SkewShape({2}));
    CHECK((k.horizontal && !k.vertical && !k.rook));

    for (const auto& la : partitions_up_to(6)) {
        for (const auto& mu : interval({}, la)) {
            const SkewShape sh(la, mu);
            std::map<int, int> per_row, per_col;
            for (auto [r, c] : sh.cells()) {
                ++per_row[r];
                ++per_col[c];
            }
            bool h = true, v = true;
            for (auto [_, n] : per_col) h = h && n <= 1;
            for (auto [_, n] : per_row) v = v && n <= 1;
            const auto got = strip_kind(sh);
            CHECK(got.horizontal == h);
            CHECK(got.vertical == v);
            CHECK(got.rook == (h && v));
        }
    }
}

TEST_CASE("cells of a skew shape") {
    const SkewShape sh({3, 2, 1}, {1});
    const std::vector<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    CHECK(sh.cells() == want);
    CHECK(sh.size() == 5);
}

TEST_CASE("interval") {
    CHECK(interval({}, {1, 1}) == std::vector<Partition>{{}, {1}, {1, 1}});
    CHECK(interval({1}, {2, 1}) == std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}});
    CHECK(interval({2, 1}, {2, 1}) == std::vector<Partition>{{2, 1}});
    CHECK_THROWS(interval({2}, {1, 1}));

    for (const auto& la : partitions_up_to(6)) {
        for (const auto& mu : partitions_up_to(la.size())) {
            if (!contains(mu, la)) continue;
            std::vector<Partition> want;
            for (const auto& nu : partitions_up_to(la.size())) {
                if (contains(mu, nu) && contains(nu, la)) want.push_back(nu);
            }
            CHECK(interval(mu, la) == want);
        }
    }
}

TEST_CASE("mobius") {
    CHECK(mobius({1}, {2, 1}) == 1);
    CHECK(mobius({}, {2}) == 0);
    CHECK(mobius({3, 1}, {3, 1}) == 1);
    for (const auto& mu : partitions_up_to(3)) {
        std::map<Partition, int> memo;
        for (const auto& nu : partitions_up_to(6)) {
            if (!contains(mu, nu)) continue;
            CAPTURE(mu.str());
            CAPTURE(nu.str());
            CHECK(mobius(mu, nu) == mobius_oracle(mu, nu, memo));
        }
    }
}

TEST_CASE("a statistic") {
    CHECK(a_statistic({3, 1}, {2, 1}) == 2);
    CHECK(a_statistic({}, {}) == 0);
    CHECK(a_statistic({5}, {}) == 0);
}

TEST_CASE("partition listings") {
    CHECK(partitions_up_to(0) == std::vector<Partition>{{}});
    CHECK(partitions_up_to(2) == std::vector<Partition>{{}, {1}, {2}, {1, 1}});
    CHECK(partitions_up_to(4).size() == 12);
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
    const auto all = partitions_up_to(7);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("strip generation matches filtering") {
    for (const auto& mu : partitions_up_to(5)) {
        for (int k = 0; k <= 3; ++k) {
            std::set<Partition> want;
            for (const auto& la : partitions_up_to(mu.size() + k)) {
                if (contains(mu, la) && strip_kind(SkewShape(la, mu)).horizontal) want.insert(la);
            }
            const auto got = add_horizontal_strips(mu, k);
            CHECK(std::set<Partition>(got.begin(), got.end()) == want);
            CHECK(got.size() == want.size());

            std::set<Partition> want_v;
            for (const auto& eta : partitions_up_to(mu.size())) {
                if (contains(eta, mu) && mu.size() - eta.size() <= k && strip_kind(SkewShape(mu, eta)).vertical) {
                    want_v.insert(eta);
                }
            }
            const auto got_v = remove_vertical_strips(mu, k);
            CHECK(std::set<Partition>(got_v.begin(), got_v.end()) == want_v);
            CHECK(got_v.size() == want_v.size());
        }
    }
}
