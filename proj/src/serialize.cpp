#include "ksym/serialize.hpp"

#include <stdexcept>
#include <string>

namespace ksym {

Json to_json(const Partition& la) {
    Json out = Json::array();
    for (int part : la.parts()) out.push_back(part);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 's': return Basis::s;
        case 'g': return Basis::g;
        case 'G': return Basis::G;
        case 'h': return Basis::h;
        case 'e': return Basis::e;
        case 'p': return Basis::p;
        default: throw std::invalid_argument(std::string("unknown basis '") + c + "'");
    }
}

Json to_json(const Expansion& x) {
    Json out;
    out["basis"] = std::string(1, basis_letter(x.basis));
    if (x.cap) out["cap"] = *x.cap;
    Json terms = Json::array();
    for (const auto& [la, c] : x.terms) {
        if (c.is_zero()) continue;
        Json term;
        term["partition"] = to_json(la);
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Expansion expansion_from_json(const Json& j) {
    try {
        Expansion x;
        const auto basis = j.at("basis").get<std::string>();
        if (basis.size() != 1) throw std::invalid_argument("basis must be one letter");
        x.basis = basis_from_letter(basis[0]);
        if (j.contains("cap")) x.cap = j.at("cap").get<int>();
        for (const auto& term : j.at("terms")) {
            Partition la = partition_from_json(term.at("partition"));
            CoeffPoly c = parse_coeff(term.at("coeff").get<std::string>());
            if (!x.terms.emplace(std::move(la), std::move(c)).second) {
                throw std::invalid_argument("repeated partition in expansion");
            }
        }
        return x;
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("malformed expansion: ") + err.what());
    }
}

}  // namespace ksym
