#include "ksym/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ksym {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

void generate_bounded(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate_bounded(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int x : parts_) size_ += x;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // Larger parts first: compare b against a.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_)) {
        throw std::invalid_argument("skew shape " + outer_.str() + "/" + inner_.str() +
                                    ": inner partition is not contained in outer");
    }
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t r = 0; r < outer_.length(); ++r) {
        for (int c = inner_[r]; c < outer_[r]; ++c) out.emplace_back(static_cast<int>(r), c);
    }
    return out;
}

std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto cmp = a.outer_ <=> b.outer_; cmp != 0) return cmp;
    return a.inner_ <=> b.inner_;
}

std::string SkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

bool contains(const Partition& mu, const Partition& la) {
    if (mu.length() > la.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (mu[i] > la[i]) return false;
    }
    return true;
}

Partition transpose(const Partition& la) {
    std::vector<int> parts(static_cast<std::size_t>(la[0]), 0);
    for (int x : la.parts()) {
        for (int j = 0; j < x; ++j) ++parts[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(parts));
}

int column_count(const SkewShape& sh) {
    // Columns are intervals of rows, so a column j is occupied iff some row
    // has inner_r <= j < outer_r.
    const auto& outer = sh.outer();
    const auto& inner = sh.inner();
    std::vector<bool> used(static_cast<std::size_t>(outer[0]), false);
    for (std::size_t r = 0; r < outer.length(); ++r) {
        for (int c = inner[r]; c < outer[r]; ++c) used[static_cast<std::size_t>(c)] = true;
    }
    return static_cast<int>(std::count(used.begin(), used.end(), true));
}

int column_count(const Partition& la) { return la[0]; }

StripKind strip_kind(const SkewShape& sh) {
    const auto& outer = sh.outer();
    const auto& inner = sh.inner();
    StripKind kind;
    kind.vertical = true;
    kind.horizontal = true;
    for (std::size_t r = 0; r < outer.length(); ++r) {
        if (outer[r] - inner[r] >= 2) kind.vertical = false;
        // Two cells in one column: cell (r, c) and (r+1, c).
        if (r + 1 < outer.length() && outer[r + 1] > inner[r]) kind.horizontal = false;
    }
    kind.rook = kind.horizontal && kind.vertical;
    return kind;
}

std::vector<Partition> interval(const Partition& mu, const Partition& la) {
    if (!contains(mu, la)) {
        throw std::invalid_argument("interval: " + mu.str() + " is not contained in " + la.str());
    }
    std::vector<Partition> out;
    std::vector<int> parts(la.length(), 0);
    auto fill = [&](auto&& self, std::size_t row) -> void {
        if (row == la.length()) {
            out.emplace_back(parts);
            return;
        }
        const int hi = row == 0 ? la[0] : std::min(la[row], parts[row - 1]);
        for (int v = mu[row]; v <= hi; ++v) {
            parts[row] = v;
            self(self, row + 1);
        }
    };
    fill(fill, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(const Partition& mu, const Partition& nu) {
    if (!contains(mu, nu)) return 0;
    const SkewShape sh(nu, mu);
    if (!strip_kind(sh).rook) return 0;
    return sh.size() % 2 == 0 ? 1 : -1;
}

int a_statistic(const Partition& alpha, const Partition& beta) {
    int count = 0;
    for (std::size_t i = 0; i < beta.length(); ++i) {
        if (beta[i] > alpha[i + 1] && beta[i] > beta[i + 1]) ++count;
    }
    return count;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate_bounded(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto level = partitions_of(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& mu, int max_size) {
    std::vector<Partition> out;
    const std::size_t rows = mu.length() + 1;
    std::vector<int> parts(rows, 0);
    auto fill = [&](auto&& self, std::size_t row, int budget) -> void {
        if (row == rows) {
            out.emplace_back(parts);
            return;
        }
        const int hi = row == 0 ? mu[0] + budget : std::min(mu[row] + budget, mu[row - 1]);
        for (int v = mu[row]; v <= hi; ++v) {
            parts[row] = v;
            self(self, row + 1, budget - (v - mu[row]));
        }
    };
    fill(fill, 0, max_size);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> remove_vertical_strips(const Partition& nu, int max_size) {
    std::vector<Partition> out;
    std::vector<int> parts(nu.length(), 0);
    auto fill = [&](auto&& self, std::size_t row, int budget) -> void {
        if (row == nu.length()) {
            out.emplace_back(parts);
            return;
        }
        for (int drop = 0; drop <= 1 && drop <= budget; ++drop) {
            const int v = nu[row] - drop;
            if (row > 0 && v > parts[row - 1]) continue;
            parts[row] = v;
            self(self, row + 1, budget - drop);
        }
    };
    fill(fill, 0, max_size);
    std::sort(out.begin(), out.end());
    return out;
}

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("expected a partition like [3,2,1], got '" + std::string(text) + "'");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto field = trim(text.substr(0, comma));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size() || value <= 0) {
            throw std::invalid_argument("bad partition part '" + std::string(field) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
        if (trim(text).empty()) throw std::invalid_argument("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

SkewShape parse_skew(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

}  // namespace ksym
