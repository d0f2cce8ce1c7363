/**
 * Rendering of PropertyReport as JSON, CSV, and plain text, and parsing
 * the JSON form back.
 *
 * Integers are written as JSON numbers when they fit in 64 bits and as
 * decimal strings otherwise; the parser accepts either.
 */
#pragma once

#include "lapsim/analysis.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace lapsim {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        try {
            return Integer(s);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + s + "'");
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

inline Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        return Graph(j.at("n").get<std::size_t>(), std::move(edges));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("graph: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

template <class T, class F>
Json optional_to_json(const std::optional<T>& v, F convert) {
    return v ? convert(*v) : Json(nullptr);
}

inline Json to_json(const PropertyReport& r) {
    Json j;
    if (!r.id.empty()) j["id"] = r.id;
    j["graph"] = graph_to_json(r.graph);
    j["kappa"] = integer_to_json(r.kappa);
    j["volume"] = integer_to_json(r.volume);
    if (r.hstar) {
        Json h = Json::array();
        for (const auto& x : r.hstar->entries) h.push_back(integer_to_json(x));
        j["hstar"] = h;
        j["strategy"] = std::string(to_string(r.hstar->strategy));
    } else {
        j["hstar"] = nullptr;
        j["strategy"] = nullptr;
    }
    j["reflexive"] = r.reflexive;
    j["ell"] = optional_to_json(r.ell, integer_to_json);
    auto boolean = [](bool b) { return Json(b); };
    j["symmetric"] = optional_to_json(r.symmetric, boolean);
    j["unimodal"] = optional_to_json(r.unimodal, boolean);
    j["idp"] = optional_to_json(r.idp, boolean);
    j["notes"] = r.notes;
    return j;
}

inline std::string render_json(const PropertyReport& r, int indent = 2) { return to_json(r).dump(indent); }

inline PropertyReport report_from_json(const Json& j) {
    try {
        auto opt_bool = [&](const char* key) -> std::optional<bool> {
            const auto& v = j.at(key);
            if (v.is_null()) return std::nullopt;
            return v.get<bool>();
        };
        PropertyReport r{j.value("id", std::string()), graph_from_json(j.at("graph")), integer_from_json(j.at("kappa")),
                         integer_from_json(j.at("volume")), std::nullopt, j.at("reflexive").get<bool>(),
                         std::nullopt, opt_bool("symmetric"), opt_bool("unimodal"), opt_bool("idp"),
                         j.at("notes").get<std::vector<std::string>>()};
        if (!j.at("hstar").is_null()) {
            HStarVector h;
            for (const auto& x : j.at("hstar")) h.entries.push_back(integer_from_json(x));
            h.strategy = parse_strategy(j.at("strategy").get<std::string>());
            r.hstar = std::move(h);
        }
        if (!j.at("ell").is_null()) r.ell = integer_from_json(j.at("ell"));
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

inline PropertyReport parse_report(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return report_from_json(j);
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_header() { return "n,kappa,volume,hstar,reflexive,ell,symmetric,unimodal,idp,notes"; }

inline std::string csv_row(const PropertyReport& r) {
    auto tri = [](const std::optional<bool>& b) -> std::string { return b ? (*b ? "true" : "false") : ""; };
    std::string notes;
    for (std::size_t i = 0; i < r.notes.size(); ++i) notes += (i ? "; " : "") + r.notes[i];
    std::ostringstream out;
    out << r.graph.n() << ',' << r.kappa << ',' << r.volume << ',' << (r.hstar ? to_string(*r.hstar, ";") : "") << ','
        << (r.reflexive ? "true" : "false") << ',' << (r.ell ? r.ell->str() : "") << ',' << tri(r.symmetric) << ','
        << tri(r.unimodal) << ',' << tri(r.idp) << ',' << csv_escape(notes);
    return out.str();
}

// ---------------------------------------------------------------------------
// Text

inline void render_text(std::ostream& out, const PropertyReport& r) {
    auto tri = [](const std::optional<bool>& b) -> std::string { return b ? (*b ? "yes" : "no") : "unknown"; };
    if (!r.id.empty()) out << "graph      " << r.id << '\n';
    out << "vertices   " << r.graph.n() << '\n';
    out << "edges     ";
    for (const auto& e : r.graph.edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
    out << "kappa      " << r.kappa << '\n';
    out << "volume     " << r.volume << '\n';
    if (r.hstar)
        out << "h*         (" << to_string(*r.hstar, ", ") << ")  [" << to_string(r.hstar->strategy) << "]\n";
    else
        out << "h*         unavailable\n";
    out << "reflexive  " << (r.reflexive ? "yes" : "no") << '\n';
    out << "ell        " << (r.ell ? r.ell->str() : "none") << '\n';
    out << "symmetric  " << tri(r.symmetric) << '\n';
    out << "unimodal   " << tri(r.unimodal) << '\n';
    out << "idp        " << tri(r.idp) << '\n';
    for (const auto& n : r.notes) out << "note       " << n << '\n';
}

}  // namespace lapsim
