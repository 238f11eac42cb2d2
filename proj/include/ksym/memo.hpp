#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

namespace ksym {

/// Hash for tuples and pairs of hashable keys.
struct TupleHash {
    template <class... Ts>
    std::size_t operator()(const std::tuple<Ts...>& key) const noexcept {
        std::size_t h = 0;
        std::apply([&](const auto&... parts) { ((h = combine(h, hash_one(parts))), ...); }, key);
        return h;
    }
    template <class A, class B>
    std::size_t operator()(const std::pair<A, B>& key) const noexcept {
        return combine(hash_one(key.first), hash_one(key.second));
    }

private:
    template <class T>
    static std::size_t hash_one(const T& v) noexcept { return std::hash<T>{}(v); }
    static std::size_t combine(std::size_t h, std::size_t v) noexcept {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

/// Concurrent memo table. Values are computed outside the lock, so two
/// threads racing on the same key may both compute it; the first insert wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
public:
    template <class Compute>
    const Value& get(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        // References stay valid across rehashing for node-based maps.
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace ksym
