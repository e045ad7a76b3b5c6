#pragma once

#include <array>
#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgdual/axioms.hpp"
#include "pgdual/parallel.hpp"
#include "pgdual/pg3.hpp"
#include "pgdual/polarity.hpp"
#include "pgdual/report.hpp"
#include "pgdual/rng.hpp"

namespace pgdual {

/// Four points in a plane, no three collinear: every vertex triple has
/// polar exactly {plane}.
struct Quadrangle {
    Id plane;
    std::array<Id, 4> vertices;
};

struct DiagonalTriple {
    Id d1, d2, d3;

    std::array<Id, 3> ids() const { return {d1, d2, d3}; }
};

/// Four planes through a point, no three collinear (dual of Quadrangle).
struct DualQuadrangle {
    Id point;
    std::array<Id, 4> faces;
};

namespace detail {

/// True when the triple's polar is a singleton; with all three elements
/// incident to `carrier` that singleton can only be {carrier}.
inline bool triple_polar_is_carrier(const IncidenceSpace& s, Side vertex_side, Id a, Id b, Id c,
                                    Id carrier) {
    Bitset acc = polar_pair(s, vertex_side, a, b);
    acc &= s.incident_set(vertex_side, c);
    return acc.count() == 1 && acc.test(carrier);
}

inline bool general_position(const IncidenceSpace& s, Side vertex_side, Id carrier,
                             const std::array<Id, 4>& v) {
    return triple_polar_is_carrier(s, vertex_side, v[0], v[1], v[2], carrier) &&
           triple_polar_is_carrier(s, vertex_side, v[0], v[1], v[3], carrier) &&
           triple_polar_is_carrier(s, vertex_side, v[0], v[2], v[3], carrier) &&
           triple_polar_is_carrier(s, vertex_side, v[1], v[2], v[3], carrier);
}

/// {a,b} double polar on the vertex side: the element set of the connecting
/// line, as a bare bitset.
inline Bitset connecting_set(const IncidenceSpace& s, Side vertex_side, Id a, Id b) {
    return polar_of_bits(s, opposite(vertex_side), polar_pair(s, vertex_side, a, b));
}

/// The three diagonal elements of an ordered vertex 4-tuple, paired
/// (01|23), (02|31), (03|12). Empty when an intersection is not a
/// singleton, which cannot happen in a model of the foundation axioms.
inline std::optional<std::array<Id, 3>> diagonals(const IncidenceSpace& s, Side vertex_side,
                                                  const std::array<Id, 4>& v) {
    static constexpr int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    std::array<Id, 3> out{};
    for (int k = 0; k < 3; ++k) {
        Bitset lhs = connecting_set(s, vertex_side, v[pairing[k][0]], v[pairing[k][1]]);
        lhs &= connecting_set(s, vertex_side, v[pairing[k][2]], v[pairing[k][3]]);
        if (lhs.count() != 1) return std::nullopt;
        out[static_cast<std::size_t>(k)] = lhs.first();
    }
    return out;
}

/// All general-position vertex 4-sets incident with `carrier`, ascending.
inline std::vector<std::array<Id, 4>> quadrangle_vertex_sets(const IncidenceSpace& s,
                                                             Side vertex_side, Id carrier) {
    std::vector<std::array<Id, 4>> out;
    auto cand = s.incident_set(opposite(vertex_side), carrier).ids();
    std::size_t n = cand.size();
    if (n < 4) return out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    std::array<Id, 4> v{cand[i], cand[j], cand[k], cand[l]};
                    if (general_position(s, vertex_side, carrier, v)) out.push_back(v);
                }
    return out;
}

inline void validate_quadrangle(const IncidenceSpace& s, Side vertex_side, Id carrier,
                                const std::array<Id, 4>& v, const char* what) {
    s.check_id(opposite(vertex_side), carrier);
    for (Id id : v) s.check_id(vertex_side, id);
    std::set<Id> uniq(v.begin(), v.end());
    if (uniq.size() != 4) throw usage_error(std::string(what) + ": vertices must be distinct");
    for (Id id : v) {
        if (!s.incident_set(vertex_side, id).test(carrier)) {
            throw usage_error(std::string(what) + ": vertex " + std::to_string(id) +
                              " is not incident with the carrier");
        }
    }
    if (!general_position(s, vertex_side, carrier, v)) {
        throw usage_error(std::string(what) + ": three of the four vertices are collinear");
    }
}

}  // namespace detail

inline Quadrangle make_quadrangle(const IncidenceSpace& s, Id plane, std::array<Id, 4> vertices) {
    detail::validate_quadrangle(s, Side::points, plane, vertices, "quadrangle");
    return Quadrangle{plane, vertices};
}

inline DualQuadrangle make_dual_quadrangle(const IncidenceSpace& s, Id point,
                                           std::array<Id, 4> faces) {
    detail::validate_quadrangle(s, Side::planes, point, faces, "dual quadrangle");
    return DualQuadrangle{point, faces};
}

/// Complete quadrangles in a plane: vertex 4-sets in general position,
/// each reported once with ascending vertices. Sample mode draws without
/// replacement via the seeded generator.
inline std::vector<Quadrangle> find_quadrangles(const IncidenceSpace& s, Id plane,
                                                const SearchMode& mode =
                                                    SearchMode::exhaustive_mode()) {
    s.check_id(Side::planes, plane);
    std::vector<Quadrangle> out;
    if (mode.exhaustive) {
        for (const auto& v : detail::quadrangle_vertex_sets(s, Side::points, plane)) {
            out.push_back(Quadrangle{plane, v});
        }
        return out;
    }

    auto cand = s.points_on(plane).ids();
    int n = static_cast<int>(cand.size());
    if (n < 4) return out;
    SplitMix64 rng(mode.seed);
    std::set<std::array<Id, 4>> seen;
    std::int64_t attempts = 0;
    const std::int64_t max_attempts = 2000 * std::max<std::int64_t>(1, mode.samples);
    while (static_cast<std::int64_t>(out.size()) < mode.samples && attempts < max_attempts) {
        ++attempts;
        auto idx = rng.distinct(4, n);
        std::array<Id, 4> v{cand[static_cast<std::size_t>(idx[0])],
                            cand[static_cast<std::size_t>(idx[1])],
                            cand[static_cast<std::size_t>(idx[2])],
                            cand[static_cast<std::size_t>(idx[3])]};
        std::sort(v.begin(), v.end());
        if (seen.count(v)) continue;
        if (!detail::general_position(s, Side::points, plane, v)) continue;
        seen.insert(v);
        out.push_back(Quadrangle{plane, v});
    }
    return out;
}

/// The diagonal points D1, D2, D3 of a complete quadrangle, paired per the
/// vertex order: (01|23), (02|31), (03|12).
inline DiagonalTriple diagonal_points(const IncidenceSpace& s, const Quadrangle& q) {
    auto d = detail::diagonals(s, Side::points, q.vertices);
    if (!d) {
        throw structure_error("diagonal point intersection is not a singleton");
    }
    return DiagonalTriple{(*d)[0], (*d)[1], (*d)[2]};
}

/// The diagonal planes of a dual quadrangle (dual of diagonal_points).
inline std::array<Id, 3> diagonal_planes(const IncidenceSpace& s, const DualQuadrangle& dq) {
    auto d = detail::diagonals(s, Side::planes, dq.faces);
    if (!d) {
        throw structure_error("diagonal plane intersection is not a singleton");
    }
    return *d;
}

namespace detail {

/// Shared engine for AXIOM [H] and its spatial dual: iterate carriers and
/// their quadrangles, test whether the diagonal triple's polar is exactly
/// {carrier}. Degenerate diagonals are structure errors on pg3 models and
/// recorded violations on imported structures.
inline AxiomReport check_fano(const IncidenceSpace& s, Side vertex_side, const SearchMode& mode,
                              unsigned workers, const std::string& label) {
    Side carrier_side = opposite(vertex_side);
    const char* carrier_key = vertex_side == Side::points ? "plane" : "point";
    const char* vertex_key = vertex_side == Side::points ? "vertices" : "faces";
    const char* diag_key = vertex_side == Side::points ? "diagonals" : "diagonal_planes";

    auto evaluate = [&](Id carrier, const std::array<Id, 4>& v,
                        SearchOutcome& o) {
        ++o.checked;
        auto d = diagonals(s, vertex_side, v);
        if (!d) {
            if (s.provenance() == Provenance::pg3) {
                throw structure_error("diagonal intersection is not a singleton");
            }
            Json w;
            w[carrier_key] = carrier;
            w[vertex_key] = std::vector<Id>(v.begin(), v.end());
            w["degenerate"] = "diagonal intersection is not a singleton";
            o.record({carrier, v[0], v[1], v[2], v[3]}, std::move(w));
            return;
        }
        Bitset acc = s.incident_set(vertex_side, (*d)[0]);
        acc &= s.incident_set(vertex_side, (*d)[1]);
        acc &= s.incident_set(vertex_side, (*d)[2]);
        if (acc.count() != 1) {
            Json w;
            w[carrier_key] = carrier;
            w[vertex_key] = std::vector<Id>(v.begin(), v.end());
            w[diag_key] = std::vector<Id>(d->begin(), d->end());
            o.record({carrier, v[0], v[1], v[2], v[3]}, std::move(w));
        }
    };

    if (mode.exhaustive) {
        int carriers = s.count(carrier_side);
        auto chunk = [&](std::int64_t lo, std::int64_t hi) {
            SearchOutcome o;
            for (Id c = static_cast<Id>(lo); c < hi; ++c) {
                for (const auto& v : quadrangle_vertex_sets(s, vertex_side, c)) {
                    evaluate(c, v, o);
                }
            }
            return o;
        };
        auto result = parallel_reduce(carriers, workers, SearchOutcome{}, chunk, merge_outcomes);
        return finish_report(label, std::move(result), true, std::nullopt);
    }

    SplitMix64 rng(mode.seed);
    SearchOutcome o;
    int carriers = s.count(carrier_side);
    if (carriers > 0) {
        constexpr int kMaxAttempts = 2000;
        for (std::int64_t k = 0; k < mode.samples; ++k) {
            bool found = false;
            for (int attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
                Id c = rng.pick(carriers);
                auto cand = s.incident_set(carrier_side, c).ids();
                int n = static_cast<int>(cand.size());
                if (n < 4) continue;
                auto idx = rng.distinct(4, n);
                std::array<Id, 4> v{cand[static_cast<std::size_t>(idx[0])],
                                    cand[static_cast<std::size_t>(idx[1])],
                                    cand[static_cast<std::size_t>(idx[2])],
                                    cand[static_cast<std::size_t>(idx[3])]};
                std::sort(v.begin(), v.end());
                if (!general_position(s, vertex_side, c, v)) continue;
                evaluate(c, v, o);
                found = true;
            }
            if (!found) break;  // the structure has (effectively) no quadrangles
        }
    }
    return finish_report(label, std::move(o), false, mode.seed);
}

}  // namespace detail

/// AXIOM [H]: the diagonal points of every complete quadrangle are
/// noncollinear, i.e. the diagonal triple's polar is exactly the carrier
/// plane. Fails throughout characteristic 2.
inline AxiomReport check_axiom_h(const IncidenceSpace& s,
                                 const SearchMode& mode = SearchMode::exhaustive_mode(),
                                 unsigned workers = 1) {
    return detail::check_fano(s, Side::points, mode, workers, "H");
}

/// The spatial dual of AXIOM [H]: diagonal planes of every dual quadrangle
/// meet in exactly the carrier point.
inline AxiomReport check_axiom_h_dual(const IncidenceSpace& s,
                                      const SearchMode& mode = SearchMode::exhaustive_mode(),
                                      unsigned workers = 1) {
    return detail::check_fano(s, Side::planes, mode, workers, "Hdual");
}

/// Draw a random dual quadrangle (point + four faces, ascending) via the
/// seeded generator; nullopt when none can be found.
inline std::optional<DualQuadrangle> sample_dual_quadrangle(const IncidenceSpace& s,
                                                            SplitMix64& rng) {
    int n = s.num_points();
    if (n == 0) return std::nullopt;
    constexpr int kMaxAttempts = 4000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Id p = rng.pick(n);
        auto cand = s.planes_through(p).ids();
        int m = static_cast<int>(cand.size());
        if (m < 4) continue;
        auto idx = rng.distinct(4, m);
        std::array<Id, 4> faces{cand[static_cast<std::size_t>(idx[0])],
                                cand[static_cast<std::size_t>(idx[1])],
                                cand[static_cast<std::size_t>(idx[2])],
                                cand[static_cast<std::size_t>(idx[3])]};
        std::sort(faces.begin(), faces.end());
        if (!detail::general_position(s, Side::planes, p, faces)) continue;
        return DualQuadrangle{p, faces};
    }
    return std::nullopt;
}

/// Replay the Claims 1-9 proof that AXIOM [H] implies its spatial dual, on
/// a concrete dual quadrangle (P; π0..π3) sectioned by a plane ω not
/// through P. Every claim is evaluated literally as a polar-set identity;
/// claims whose antecedents failed are recorded as skipped. Claim 9 is
/// exactly where a characteristic-2 model breaks.
inline ClaimTrace replay_harmonicity_claims(const IncidenceSpace& s, Id point,
                                            std::array<Id, 4> faces, Id omega) {
    DualQuadrangle dq = make_dual_quadrangle(s, point, faces);
    s.check_id(Side::planes, omega);
    if (s.incident(point, omega)) {
        throw usage_error("the section plane omega must not be incident with the point");
    }

    ClaimTrace trace;
    trace.config = Json{{"point", point}, {"faces", faces}, {"omega", omega}};

    auto col = [&](Id plane) -> const Bitset& { return s.points_on(plane); };
    auto row = [&](Id p) -> const Bitset& { return s.planes_through(p); };
    // {x,y}^hh for planes x, y: the plane set of their connecting line
    auto dbl_planes = [&](Id x, Id y) {
        return polar_of_bits(s, Side::points, polar_pair(s, Side::planes, x, y));
    };
    // {a,b}^hh for points a, b: the point set of their connecting line
    auto dbl_points = [&](Id a, Id b) {
        return polar_of_bits(s, Side::planes, polar_pair(s, Side::points, a, b));
    };

    auto step = [&](int claim, std::string identity, Json lhs, Json rhs, bool pass) {
        trace.steps.push_back(ClaimStep{claim, std::move(identity), std::move(lhs), std::move(rhs),
                                        pass ? StepStatus::pass : StepStatus::fail});
        return pass;
    };
    auto skip = [&](int claim, std::string identity) {
        trace.steps.push_back(
            ClaimStep{claim, std::move(identity), Json(), Json(), StepStatus::skipped});
    };

    const std::array<Id, 4>& pi = dq.faces;
    auto pi_name = [](int i) { return "pi" + std::to_string(i); };

    // ---- Claim 1: {omega, pi_i, pi_j}^h is a singleton {P_ij} ----
    Id pij[4][4];
    for (auto& r : pij) r[0] = r[1] = r[2] = r[3] = -1;
    bool base_ok = true;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            Bitset lhs = col(omega) & col(pi[static_cast<std::size_t>(i)]);
            lhs &= col(pi[static_cast<std::size_t>(j)]);
            bool pass = lhs.count() == 1;
            if (pass) pij[i][j] = pij[j][i] = lhs.first();
            base_ok &= step(1, "|{omega," + pi_name(i) + "," + pi_name(j) + "}^h| = 1",
                            detail::bits_json(lhs), Json(), pass);
        }
    }

    // ---- Claim 2: {omega,pi_i}^hh & {omega,pi_j}^hh = {omega} ----
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            Bitset lhs = dbl_planes(omega, pi[static_cast<std::size_t>(i)]);
            lhs &= dbl_planes(omega, pi[static_cast<std::size_t>(j)]);
            Bitset rhs = Bitset::of(s.num_planes(), {omega});
            base_ok &= step(2, "{omega," + pi_name(i) + "}^hh & {omega," + pi_name(j) +
                                   "}^hh = {omega}",
                            detail::bits_json(lhs), detail::bits_json(rhs), lhs == rhs);
        }
    }

    // ---- Claim 3: {P,P_ij}^hh = {pi_i,pi_j}^h ----
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            std::string id3 = "{P,P" + std::to_string(i) + std::to_string(j) + "}^hh = {" +
                              pi_name(i) + "," + pi_name(j) + "}^h";
            if (pij[i][j] < 0) {
                skip(3, id3);
                base_ok = false;
                continue;
            }
            Bitset lhs = dbl_points(point, pij[i][j]);
            Bitset rhs = polar_pair(s, Side::planes, pi[static_cast<std::size_t>(i)],
                                    pi[static_cast<std::size_t>(j)]);
            base_ok &= step(3, std::move(id3), detail::bits_json(lhs), detail::bits_json(rhs),
                            lhs == rhs);
        }
    }

    // ---- Claim 4: {P_ki,P_kj}^hh = {omega,pi_k}^h ----
    for (int k = 0; k < 4; ++k) {
        std::array<int, 3> rest{};
        int r = 0;
        for (int x = 0; x < 4; ++x) {
            if (x != k) rest[static_cast<std::size_t>(r++)] = x;
        }
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                int i = rest[static_cast<std::size_t>(a)];
                int j = rest[static_cast<std::size_t>(b)];
                std::string id4 = "{P" + std::to_string(std::min(k, i)) +
                                  std::to_string(std::max(k, i)) + ",P" +
                                  std::to_string(std::min(k, j)) + std::to_string(std::max(k, j)) +
                                  "}^hh = {omega," + pi_name(k) + "}^h";
                if (pij[k][i] < 0 || pij[k][j] < 0) {
                    skip(4, id4);
                    base_ok = false;
                    continue;
                }
                Bitset lhs = dbl_points(pij[k][i], pij[k][j]);
                Bitset rhs = polar_pair(s, Side::planes, omega, pi[static_cast<std::size_t>(k)]);
                base_ok &= step(4, std::move(id4), detail::bits_json(lhs), detail::bits_json(rhs),
                                lhs == rhs);
            }
        }
    }

    // delta_k pairing: delta_1 = (pi0 pi1 | pi2 pi3), delta_2 = (pi0 pi2 | pi3 pi1),
    // delta_3 = (pi0 pi3 | pi1 pi2); claim 5 reads it as (pi_i pi_j | pi_k pi_0)
    // with {i,j,k} = {1,2,3}.
    static constexpr int kDeltaIdx[3][2] = {{2, 3}, {3, 1}, {1, 2}};  // (i,j) for k = 1,2,3
    std::array<Id, 3> delta{-1, -1, -1};

    // ---- Claims 5-8 (each skipped unless claims 1-4 all passed) ----
    bool ok5 = true;
    for (int k = 1; k <= 3; ++k) {
        int i = kDeltaIdx[k - 1][0];
        int j = kDeltaIdx[k - 1][1];
        std::string id5 = "{P,P" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j)) +
                          ",P0" + std::to_string(k) + "}^h = {delta" + std::to_string(k) + "}";
        if (!base_ok) {
            skip(5, id5);
            ok5 = false;
            continue;
        }
        Bitset def = dbl_planes(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)]);
        def &= dbl_planes(pi[static_cast<std::size_t>(k)], pi[0]);
        Bitset lhs = row(point) & row(pij[i][j]);
        lhs &= row(pij[k][0]);
        bool pass = def.count() == 1 && lhs == def;
        if (def.count() == 1) delta[static_cast<std::size_t>(k - 1)] = def.first();
        ok5 &= step(5, std::move(id5), detail::bits_json(lhs), detail::bits_json(def), pass);
    }
    (void)ok5;

    bool ok6 = true;
    for (int k = 1; k <= 3; ++k) {
        int i = kDeltaIdx[k - 1][0];
        int j = kDeltaIdx[k - 1][1];
        std::string id6 = "{P" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j)) +
                          ",P0" + std::to_string(k) + "}^hh = {omega,delta" + std::to_string(k) +
                          "}^h";
        if (!base_ok || delta[static_cast<std::size_t>(k - 1)] < 0) {
            skip(6, id6);
            ok6 = false;
            continue;
        }
        Bitset lhs = dbl_points(pij[i][j], pij[k][0]);
        Bitset rhs = polar_pair(s, Side::planes, omega, delta[static_cast<std::size_t>(k - 1)]);
        ok6 &= step(6, std::move(id6), detail::bits_json(lhs), detail::bits_json(rhs), lhs == rhs);
    }

    // ---- Claim 7: D_ij singletons, (i,j,k) cycling over (1,2,3) ----
    static constexpr int kDij[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    std::array<Id, 3> dpt{-1, -1, -1};
    bool ok7 = true;
    for (int t = 0; t < 3; ++t) {
        int i = kDij[t][0], j = kDij[t][1], k = kDij[t][2];
        std::string id7 = "|{P0" + std::to_string(i) + ",P" + std::to_string(std::min(j, k)) +
                          std::to_string(std::max(j, k)) + "}^hh & {P0" + std::to_string(j) +
                          ",P" + std::to_string(std::min(k, i)) + std::to_string(std::max(k, i)) +
                          "}^hh| = 1";
        if (!base_ok) {
            skip(7, id7);
            ok7 = false;
            continue;
        }
        Bitset lhs = dbl_points(pij[0][i], pij[j][k]);
        lhs &= dbl_points(pij[0][j], pij[k][i]);
        bool pass = lhs.count() == 1;
        if (pass) dpt[static_cast<std::size_t>(t)] = lhs.first();
        ok7 &= step(7, std::move(id7), detail::bits_json(lhs), Json(), pass);
    }

    // ---- Claim 8: P01 P02 P23 P31 is a complete quadrangle in omega ----
    bool ok8 = true;
    {
        std::array<Id, 4> quad{-1, -1, -1, -1};
        if (base_ok) quad = {pij[0][1], pij[0][2], pij[2][3], pij[3][1]};
        static constexpr const char* kQuadNames[4] = {"P01", "P02", "P23", "P31"};

        if (!base_ok) {
            skip(8, "P01,P02,P23,P31 distinct");
            ok8 = false;
        } else {
            std::set<Id> uniq(quad.begin(), quad.end());
            ok8 &= step(8, "P01,P02,P23,P31 distinct", Json(quad), Json(),
                        uniq.size() == 4 && uniq.count(-1) == 0);
        }
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                for (int c = b + 1; c < 4; ++c) {
                    std::string id8 = std::string("{") + kQuadNames[a] + "," + kQuadNames[b] + "," +
                                      kQuadNames[c] + "}^h = {omega}";
                    if (!base_ok) {
                        skip(8, std::move(id8));
                        ok8 = false;
                        continue;
                    }
                    Bitset lhs = polar_pair(s, Side::points, quad[static_cast<std::size_t>(a)],
                                            quad[static_cast<std::size_t>(b)]);
                    lhs &= row(quad[static_cast<std::size_t>(c)]);
                    Bitset rhs = Bitset::of(s.num_planes(), {omega});
                    ok8 &= step(8, std::move(id8), detail::bits_json(lhs), detail::bits_json(rhs),
                                lhs == rhs);
                }
            }
        }

        // The diagonal points of this quadrangle, recorded explicitly: the
        // pairings (01|23), (02|31), (03|12) must land on P03, D12, P12.
        struct DiagCheck {
            int va, vb, vc, vd;
            const char* name;
        };
        static constexpr DiagCheck kDiag[3] = {
            {0, 1, 2, 3, "P03"}, {0, 2, 3, 1, "D12"}, {0, 3, 1, 2, "P12"}};
        for (int t = 0; t < 3; ++t) {
            std::string id8d = std::string("diagonal (") + std::to_string(kDiag[t].va) +
                               std::to_string(kDiag[t].vb) + "|" + std::to_string(kDiag[t].vc) +
                               std::to_string(kDiag[t].vd) + ") of P01P02P23P31 = {" +
                               kDiag[t].name + "}";
            Id expected = t == 0 ? (base_ok ? pij[0][3] : -1)
                          : t == 1 ? dpt[0]
                                   : (base_ok ? pij[1][2] : -1);
            if (!base_ok || expected < 0) {
                skip(8, std::move(id8d));
                ok8 = false;
                continue;
            }
            Bitset lhs = dbl_points(quad[static_cast<std::size_t>(kDiag[t].va)],
                                    quad[static_cast<std::size_t>(kDiag[t].vb)]);
            lhs &= dbl_points(quad[static_cast<std::size_t>(kDiag[t].vc)],
                              quad[static_cast<std::size_t>(kDiag[t].vd)]);
            Bitset rhs = Bitset::of(s.num_points(), {expected});
            ok8 &= step(8, std::move(id8d), detail::bits_json(lhs), detail::bits_json(rhs),
                        lhs == rhs);
        }
    }

    // ---- Claim 9: {delta1,delta2,delta3}^h = {P} (depends on 6, 7, 8) ----
    {
        std::string id9 = "{delta1,delta2,delta3}^h = {P}";
        bool deltas_known = delta[0] >= 0 && delta[1] >= 0 && delta[2] >= 0;
        if (!(ok6 && ok7 && ok8) || !deltas_known) {
            skip(9, std::move(id9));
        } else {
            Bitset lhs = polar_pair(s, Side::planes, delta[0], delta[1]);
            lhs &= col(delta[2]);
            Bitset rhs = Bitset::of(s.num_points(), {point});
            step(9, std::move(id9), detail::bits_json(lhs), detail::bits_json(rhs), lhs == rhs);
        }
    }

    Json derived;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            std::string key = "P" + std::to_string(i) + std::to_string(j);
            derived[key] = pij[i][j] >= 0 ? Json(pij[i][j]) : Json();
        }
    }
    for (int k = 1; k <= 3; ++k) {
        derived["delta" + std::to_string(k)] =
            delta[static_cast<std::size_t>(k - 1)] >= 0
                ? Json(delta[static_cast<std::size_t>(k - 1)])
                : Json();
    }
    static constexpr const char* kDptNames[3] = {"D12", "D23", "D31"};
    for (int t = 0; t < 3; ++t) {
        derived[kDptNames[t]] =
            dpt[static_cast<std::size_t>(t)] >= 0 ? Json(dpt[static_cast<std::size_t>(t)]) : Json();
    }
    trace.derived = std::move(derived);
    return trace;
}

}  // namespace pgdual
