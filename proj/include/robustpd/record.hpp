#ifndef ROBUSTPD_RECORD_HPP
#define ROBUSTPD_RECORD_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "robustpd/multiset.hpp"
#include "robustpd/robust.hpp"

namespace robustpd {

enum class Prover { formula, search, certificate };

inline const char* to_string(Prover p) {
    switch (p) {
    case Prover::formula: return "formula";
    case Prover::search: return "search";
    case Prover::certificate: return "certificate";
    }
    return "?";
}

inline Prover parse_prover(const std::string& s) {
    if (s == "formula") return Prover::formula;
    if (s == "search") return Prover::search;
    if (s == "certificate") return Prover::certificate;
    throw ParseError(0, "unknown prover mode '" + s + "'");
}

struct ResultRecord {
    std::string graph;
    std::string operation;
    std::optional<int> k;
    std::optional<int> value;
    /// (vertex, multiplicity), ascending by vertex.
    std::vector<std::pair<Vertex, int>> witness;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::int64_t elapsed_ms = 0;
    Prover prover = Prover::search;
    /// Operation-specific extras (verification flags, sequences, tables).
    nlohmann::json details = nlohmann::json::object();

    void set_witness(const PmuMultiset& s) { witness.assign(s.counts().begin(), s.counts().end()); }
    void set_witness(const VertexSet& s) {
        witness.clear();
        s.for_each([&](Vertex v) { witness.emplace_back(v, 1); });
    }
    void set_bounds(const BoundReport& r) {
        lower = r.lower;
        upper = r.upper;
    }
    [[nodiscard]] PmuMultiset witness_multiset() const {
        PmuMultiset s;
        for (auto [v, m] : witness) s.add(v, m);
        return s;
    }

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline void to_json(nlohmann::json& j, const BoundEntry& b) { j = {{"value", b.value}, {"source", b.source}}; }
inline void from_json(const nlohmann::json& j, BoundEntry& b) {
    j.at("value").get_to(b.value);
    j.at("source").get_to(b.source);
}

inline void to_json(nlohmann::json& j, const ResultRecord& r) {
    j = nlohmann::json{{"graph", r.graph},
                       {"operation", r.operation},
                       {"k", r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr)},
                       {"value", r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr)},
                       {"witness", nlohmann::json::array()},
                       {"bounds", {{"lower", r.lower}, {"upper", r.upper}}},
                       {"elapsed_ms", r.elapsed_ms},
                       {"prover", to_string(r.prover)},
                       {"details", r.details}};
    for (auto [v, m] : r.witness) j["witness"].push_back({v, m});
}

inline void from_json(const nlohmann::json& j, ResultRecord& r) {
    j.at("graph").get_to(r.graph);
    j.at("operation").get_to(r.operation);
    r.k = j.at("k").is_null() ? std::nullopt : std::optional<int>(j.at("k").get<int>());
    r.value = j.at("value").is_null() ? std::nullopt : std::optional<int>(j.at("value").get<int>());
    r.witness.clear();
    for (const auto& e : j.at("witness")) r.witness.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<int>());
    j.at("bounds").at("lower").get_to(r.lower);
    j.at("bounds").at("upper").get_to(r.upper);
    j.at("elapsed_ms").get_to(r.elapsed_ms);
    r.prover = parse_prover(j.at("prover").get<std::string>());
    r.details = j.value("details", nlohmann::json::object());
}

inline std::string to_json_text(const ResultRecord& r, int indent = 2) { return nlohmann::json(r).dump(indent); }

inline ResultRecord parse_record(const std::string& text) {
    try {
        return nlohmann::json::parse(text).get<ResultRecord>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("record: ") + e.what());
    }
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string join_bounds(const std::vector<BoundEntry>& entries) {
    std::string out;
    for (const auto& e : entries) out += (out.empty() ? "" : ";") + e.source + "=" + std::to_string(e.value);
    return out;
}

} // namespace detail

inline const char* csv_header() { return "graph,operation,k,value,witness,lower,upper,elapsed_ms,prover"; }

/// One CSV line; witness as "v:m;v:m", bounds as "source=value;...".
inline std::string to_csv_row(const ResultRecord& r) {
    std::string witness;
    for (auto [v, m] : r.witness) witness += (witness.empty() ? "" : ";") + std::to_string(v) + ":" + std::to_string(m);
    std::ostringstream os;
    os << detail::csv_field(r.graph) << ',' << detail::csv_field(r.operation) << ','
       << (r.k ? std::to_string(*r.k) : "") << ',' << (r.value ? std::to_string(*r.value) : "") << ','
       << detail::csv_field(witness) << ',' << detail::csv_field(detail::join_bounds(r.lower)) << ','
       << detail::csv_field(detail::join_bounds(r.upper)) << ',' << r.elapsed_ms << ',' << to_string(r.prover);
    return os.str();
}

} // namespace robustpd

#endif
