#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pgdual/axioms.hpp"
#include "pgdual/harmonicity.hpp"
#include "pgdual/pg3.hpp"
#include "pgdual/polarity.hpp"
#include "pgdual/report.hpp"

namespace pgdual {
namespace detail {

inline Json histogram_json(const std::map<std::int64_t, std::int64_t>& h) {
    Json j = Json::object();
    for (const auto& [k, v] : h) j[std::to_string(k)] = v;
    return j;
}

inline std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace detail

/// Model statistics: element counts, line census and histograms. Line-based
/// counts are only defined on models of the foundation axioms; on other
/// structures they are reported as undefined, naming the failing axiom.
inline Json compute_stats(const IncidenceSpace& s, unsigned workers = 1) {
    Json out;
    out["points"] = s.num_points();
    out["planes"] = s.num_planes();

    auto foundation = check_foundation(s, SearchMode::exhaustive_mode(), workers);
    auto failing = failing_foundation(foundation);
    if (failing) {
        out["foundation"] = Json{{"fails", failing->axiom}};
        out["lines"] = "undefined (AXIOM [" + failing->axiom + "] fails)";
        return out;
    }
    out["foundation"] = "pass";

    auto lines = all_lines(s);
    out["lines"] = static_cast<std::int64_t>(lines.size());

    std::map<std::int64_t, std::int64_t> points_per_line;
    for (const auto& l : lines) ++points_per_line[l.points.size()];
    out["points_per_line"] = detail::histogram_json(points_per_line);

    std::map<std::int64_t, std::int64_t> pencil_sizes;
    for (Id p = 0; p < s.num_points(); ++p) {
        s.planes_through(p).for_each([&](int w) {
            ++pencil_sizes[static_cast<std::int64_t>(flat_pencil(s, p, static_cast<Id>(w)).size())];
        });
    }
    out["pencil_sizes"] = detail::histogram_json(pencil_sizes);

    std::map<std::int64_t, std::int64_t> quads_per_plane;
    for (Id w = 0; w < s.num_planes(); ++w) {
        ++quads_per_plane[static_cast<std::int64_t>(
            detail::quadrangle_vertex_sets(s, Side::points, w).size())];
    }
    out["quadrangles_per_plane"] = detail::histogram_json(quads_per_plane);

    // Hexagons alternately inscribed in an incident line pair, counted up to
    // the symmetry that preserves the opposite-side pairing: the vertex
    // choices are free once the pair is fixed, so the count per pair is
    // C(k1,3)·C(k2,3)·3! for k_i non-common points on line i. The exhaustive
    // checker's `checked` totals cross-validate this at q <= 3.
    std::map<std::int64_t, std::int64_t> hex_per_pair;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Bitset common = lines[i].points.bits & lines[j].points.bits;
            if (common.count() != 1) continue;
            std::int64_t k1 = lines[i].points.size() - 1;
            std::int64_t k2 = lines[j].points.size() - 1;
            ++hex_per_pair[detail::choose3(k1) * detail::choose3(k2) * 6];
        }
    }
    out["hexagons_per_incident_line_pair"] = detail::histogram_json(hex_per_pair);
    return out;
}

}  // namespace pgdual
