#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ksym {

/// An integer partition stored without trailing zeros.
///
/// Parts beyond the length read as zero, so `p[i]` is total on all i >= 0.
/// The ordering is the canonical one used for every listing in the library:
/// ascending size, then lexicographically larger parts first within a size.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

    [[nodiscard]] std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// The cells of `outer` that are not in `inner`; requires inner ⊆ outer.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    [[nodiscard]] const Partition& outer() const noexcept { return outer_; }
    [[nodiscard]] const Partition& inner() const noexcept { return inner_; }
    [[nodiscard]] int size() const noexcept { return outer_.size() - inner_.size(); }
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }

    /// Row-major (r, c) cells, 0-based, English convention.
    [[nodiscard]] std::vector<std::pair<int, int>> cells() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b);

    [[nodiscard]] std::string str() const;

private:
    Partition outer_;
    Partition inner_;
};

struct StripKind {
    bool horizontal = false;
    bool vertical = false;
    bool rook = false;
};

[[nodiscard]] bool contains(const Partition& mu, const Partition& la);
[[nodiscard]] Partition transpose(const Partition& la);
[[nodiscard]] int column_count(const SkewShape& sh);
[[nodiscard]] int column_count(const Partition& la);
[[nodiscard]] StripKind strip_kind(const SkewShape& sh);

/// All ν with mu ⊆ ν ⊆ la in canonical order. Throws if mu ⊄ la.
[[nodiscard]] std::vector<Partition> interval(const Partition& mu, const Partition& la);

/// Möbius function of Young's lattice.
[[nodiscard]] int mobius(const Partition& mu, const Partition& nu);

/// #{i >= 1 : beta_i > alpha_{i+1} and beta_i > beta_{i+1}}.
[[nodiscard]] int a_statistic(const Partition& alpha, const Partition& beta);

[[nodiscard]] std::vector<Partition> partitions_of(int n);
[[nodiscard]] std::vector<Partition> partitions_up_to(int n);

/// All la ⊇ mu with la/mu a horizontal strip of size at most max_size.
[[nodiscard]] std::vector<Partition> add_horizontal_strips(const Partition& mu, int max_size);
/// All eta ⊆ nu with nu/eta a vertical strip of size at most max_size.
[[nodiscard]] std::vector<Partition> remove_vertical_strips(const Partition& nu, int max_size);

/// `[3,2,1]`, `[]`.
[[nodiscard]] Partition parse_partition(std::string_view text);
/// `[3,2,1]/[1]` or a bare partition (inner = ∅).
[[nodiscard]] SkewShape parse_skew(std::string_view text);

}  // namespace ksym

template <>
struct std::hash<ksym::Partition> {
    std::size_t operator()(const ksym::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
