#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgdual/errors.hpp"
#include "pgdual/pg3.hpp"
#include "pgdual/report.hpp"

namespace pgdual {

/// incidence-v1: the interchange format for incidence structures.
/// Pairs are sorted ascending by (point, plane); coordinate labels are
/// present exactly for pg3 models. Serialization is deterministic, so
/// rebuilding the same model yields byte-identical files.
inline Json to_incidence_json(const IncidenceSpace& s) {
    Json j;
    j["format"] = "incidence-v1";
    j["provenance"] = s.provenance() == Provenance::pg3 ? "pg3" : "imported";
    j["q"] = s.q() ? Json(*s.q()) : Json();
    j["num_points"] = s.num_points();
    j["num_planes"] = s.num_planes();
    Json pairs = Json::array();
    for (const auto& [p, pi] : s.incident_pairs()) {
        pairs.push_back(Json::array({p, pi}));
    }
    j["incident_pairs"] = std::move(pairs);
    if (s.has_labels()) {
        Json pc = Json::array();
        Json qc = Json::array();
        for (Id i = 0; i < s.num_points(); ++i) pc.push_back(s.point_label(i).values());
        for (Id i = 0; i < s.num_planes(); ++i) qc.push_back(s.plane_label(i).values());
        j["point_coords"] = std::move(pc);
        j["plane_coords"] = std::move(qc);
    }
    return j;
}

namespace detail {

inline int require_count(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw io_error(std::string("incidence-v1: missing or non-integer \"") + key + "\"");
    }
    auto v = j[key].get<std::int64_t>();
    if (v < 0 || v > 1000000) throw io_error(std::string("incidence-v1: \"") + key + "\" out of range");
    return static_cast<int>(v);
}

inline std::vector<std::pair<Id, Id>> read_pairs(const Json& j, int num_points, int num_planes) {
    if (!j.contains("incident_pairs") || !j["incident_pairs"].is_array()) {
        throw io_error("incidence-v1: missing \"incident_pairs\" array");
    }
    std::vector<std::pair<Id, Id>> pairs;
    std::pair<Id, Id> prev{-1, -1};
    for (const auto& e : j["incident_pairs"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw io_error("incidence-v1: incident pair is not a two-integer array");
        }
        std::pair<Id, Id> cur{e[0].get<Id>(), e[1].get<Id>()};
        if (cur.first < 0 || cur.first >= num_points || cur.second < 0 ||
            cur.second >= num_planes) {
            throw io_error("incidence-v1: incident pair (" + std::to_string(cur.first) + ", " +
                           std::to_string(cur.second) + ") out of range");
        }
        if (!pairs.empty() && !(prev < cur)) {
            throw io_error("incidence-v1: incident_pairs must be strictly ascending by (p, pi)");
        }
        pairs.push_back(cur);
        prev = cur;
    }
    return pairs;
}

inline void check_coords_match(const Json& coords, const IncidenceSpace& rebuilt, Side side) {
    int n = rebuilt.count(side);
    if (!coords.is_array() || static_cast<int>(coords.size()) != n) {
        throw io_error("incidence-v1: coordinate array length mismatch");
    }
    for (Id i = 0; i < n; ++i) {
        const auto& t = coords[static_cast<std::size_t>(i)];
        if (!t.is_array() || t.size() != 4) {
            throw io_error("incidence-v1: coordinate entries must be 4-tuples");
        }
        auto expected = side == Side::points ? rebuilt.point_label(i).values()
                                             : rebuilt.plane_label(i).values();
        for (int c = 0; c < 4; ++c) {
            if (!t[static_cast<std::size_t>(c)].is_number_integer() ||
                t[static_cast<std::size_t>(c)].get<std::int64_t>() !=
                    static_cast<std::int64_t>(expected[static_cast<std::size_t>(c)])) {
                throw io_error("incidence-v1: coordinates do not match the canonical pg3 labels");
            }
        }
    }
}

}  // namespace detail

/// Parse incidence-v1. A "pg3" file is verified against a rebuild of the
/// model it claims to be; an "imported" file is taken as a bare matrix and
/// must not carry q or coordinate labels.
inline IncidenceSpace from_incidence_json(const Json& j) {
    if (!j.is_object() || !j.contains("format") || j["format"] != "incidence-v1") {
        throw io_error("not an incidence-v1 document");
    }
    if (!j.contains("provenance") || !j["provenance"].is_string()) {
        throw io_error("incidence-v1: missing \"provenance\"");
    }
    std::string prov = j["provenance"].get<std::string>();
    int num_points = detail::require_count(j, "num_points");
    int num_planes = detail::require_count(j, "num_planes");
    auto pairs = detail::read_pairs(j, num_points, num_planes);

    if (prov == "pg3") {
        if (!j.contains("q") || !j["q"].is_number_integer()) {
            throw io_error("incidence-v1: pg3 provenance requires an integer \"q\"");
        }
        int q = j["q"].get<int>();
        IncidenceSpace rebuilt;
        try {
            rebuilt = build_pg3(q);
        } catch (const usage_error& e) {
            throw io_error(std::string("incidence-v1: ") + e.what());
        }
        if (rebuilt.num_points() != num_points || rebuilt.num_planes() != num_planes ||
            rebuilt.incident_pairs() != pairs) {
            throw io_error("incidence-v1: incidence data does not match pg3(" + std::to_string(q) +
                           ")");
        }
        if (j.contains("point_coords")) detail::check_coords_match(j["point_coords"], rebuilt, Side::points);
        if (j.contains("plane_coords")) detail::check_coords_match(j["plane_coords"], rebuilt, Side::planes);
        return rebuilt;
    }
    if (prov == "imported") {
        if (j.contains("q") && !j["q"].is_null()) {
            throw io_error("incidence-v1: imported structures carry no q");
        }
        if (j.contains("point_coords") || j.contains("plane_coords")) {
            throw io_error("incidence-v1: imported structures carry no coordinate labels");
        }
        return IncidenceSpace::from_pairs(num_points, num_planes, pairs, Provenance::imported);
    }
    throw io_error("incidence-v1: provenance must be \"pg3\" or \"imported\"");
}

inline Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io_error("input is not valid JSON");
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << content;
}

/// FNV-1a, 64 bit; used to fingerprint imported model files in reports.
inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

}  // namespace pgdual
