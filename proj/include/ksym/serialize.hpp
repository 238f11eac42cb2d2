#pragma once

#include <map>
#include <optional>

#include <json.hpp>

#include "ksym/expr.hpp"

namespace ksym {

using Json = nlohmann::ordered_json;

/// A basis expansion as it appears on the wire.
struct Expansion {
    Basis basis = Basis::s;
    std::map<Partition, CoeffPoly> terms;
    /// Present for truncated series.
    std::optional<int> cap;

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

[[nodiscard]] Json to_json(const Partition& la);
[[nodiscard]] Partition partition_from_json(const Json& j);

/// {"basis": "g", "cap": 6?, "terms": [{"partition": [2,1], "coeff": "t+1"}, ...]}
/// with terms in canonical partition order.
[[nodiscard]] Json to_json(const Expansion& x);
/// Throws std::invalid_argument on malformed input.
[[nodiscard]] Expansion expansion_from_json(const Json& j);

[[nodiscard]] Basis basis_from_letter(char c);

}  // namespace ksym
