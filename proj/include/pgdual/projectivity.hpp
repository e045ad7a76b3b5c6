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

/// Two distinct lines sharing a point o and a plane w (by Theorem 2 of the
/// foundation, sharing either implies sharing both).
struct IncidentLinePair {
    Line l1, l2;
    Id o;  // l1 · l2
    Id w;  // l1 □ l2
};

inline IncidentLinePair make_incident_pair(const IncidenceSpace& s, Line l1, Line l2) {
    if (l1 == l2) throw usage_error("an incident pair needs two distinct lines");
    auto o = meet(s, l1, l2);
    auto w = join_plane(s, l1, l2);
    if (!o && !w) throw usage_error("the lines are skew");
    if (!o || !w) {
        throw structure_error("lines share a point xor a plane (Theorem 2 fails)");
    }
    return IncidentLinePair{std::move(l1), std::move(l2), *o, *w};
}

/// Simple hexagon alternately inscribed in an incident line pair: vertices
/// a1 b2 c1 a2 b1 c2, all distinct from each other and from the common
/// point o, with the 1-vertices on l1 and the 2-vertices on l2.
struct Hexagon {
    IncidentLinePair pair;
    Id a1, b1, c1;
    Id a2, b2, c2;
};

/// Dual hexagon: six planes distinct from each other and from the common
/// plane w, alternately on the two lines.
struct DualHexagon {
    IncidentLinePair pair;
    Id alpha1, beta1, gamma1;
    Id alpha2, beta2, gamma2;
};

namespace detail {

inline const Bitset& line_set(const Line& l, Side side) {
    return side == Side::points ? l.points.bits : l.planes.bits;
}

inline void validate_hexagon_side(const IncidenceSpace& s, Side side, const Line& l, Id avoid,
                                  std::array<Id, 3> verts, const char* what) {
    for (Id v : verts) {
        s.check_id(side, v);
        if (v == avoid) {
            throw usage_error(std::string(what) + ": vertex " + std::to_string(v) +
                              " coincides with the common element");
        }
        if (!line_set(l, side).test(v)) {
            throw usage_error(std::string(what) + ": vertex " + std::to_string(v) +
                              " does not lie on its line");
        }
    }
}

inline void validate_six_distinct(std::array<Id, 6> v, const char* what) {
    std::set<Id> uniq(v.begin(), v.end());
    if (uniq.size() != 6) throw usage_error(std::string(what) + ": the six vertices must be distinct");
}

/// Unique common element of two lines on `side`; meet for points, join for
/// planes. Absent or ambiguous commons are structure errors here because
/// the callers only reach this in figures where existence is forced.
inline Id cross_element(const Line& m, const Line& n, Side side) {
    Bitset common = line_set(m, side) & line_set(n, side);
    int c = common.count();
    if (c != 1) {
        throw structure_error(std::string("cross ") +
                              (side == Side::points ? "meet of joins" : "join of meets") +
                              (c == 0 ? " is absent" : " is not unique"));
    }
    return common.first();
}

/// Cross elements of a hexagon on `side`: for points this is
/// (B1C2)·(B2C1), (C1A2)·(C2A1), (A1B2)·(A2B1); for planes the duals via
/// joins.
inline std::array<Id, 3> cross_triple(const IncidenceSpace& s, Side side,
                                      const std::array<Id, 3>& on1, const std::array<Id, 3>& on2) {
    auto connect = [&](Id u, Id v) { return line_from_pair(s, u, v, side); };
    std::array<Id, 3> out{};
    // opposite-side pairing: index t leaves letter t out
    static constexpr int kPick[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (int t = 0; t < 3; ++t) {
        int x = kPick[t][0], y = kPick[t][1];
        Line m = connect(on1[static_cast<std::size_t>(x)], on2[static_cast<std::size_t>(y)]);
        Line n = connect(on2[static_cast<std::size_t>(x)], on1[static_cast<std::size_t>(y)]);
        out[static_cast<std::size_t>(t)] = cross_element(m, n, side);
    }
    return out;
}

}  // namespace detail

inline Hexagon make_hexagon(const IncidenceSpace& s, IncidentLinePair pair, Id a1, Id b1, Id c1,
                            Id a2, Id b2, Id c2) {
    detail::validate_hexagon_side(s, Side::points, pair.l1, pair.o, {a1, b1, c1}, "hexagon");
    detail::validate_hexagon_side(s, Side::points, pair.l2, pair.o, {a2, b2, c2}, "hexagon");
    detail::validate_six_distinct({a1, b1, c1, a2, b2, c2}, "hexagon");
    return Hexagon{std::move(pair), a1, b1, c1, a2, b2, c2};
}

inline DualHexagon make_dual_hexagon(const IncidenceSpace& s, IncidentLinePair pair, Id alpha1,
                                     Id beta1, Id gamma1, Id alpha2, Id beta2, Id gamma2) {
    detail::validate_hexagon_side(s, Side::planes, pair.l1, pair.w, {alpha1, beta1, gamma1},
                                  "dual hexagon");
    detail::validate_hexagon_side(s, Side::planes, pair.l2, pair.w, {alpha2, beta2, gamma2},
                                  "dual hexagon");
    detail::validate_six_distinct({alpha1, beta1, gamma1, alpha2, beta2, gamma2}, "dual hexagon");
    return DualHexagon{std::move(pair), alpha1, beta1, gamma1, alpha2, beta2, gamma2};
}

/// The three cross-join points A0 = (B1C2)·(B2C1), B0 = (C1A2)·(C2A1),
/// C0 = (A1B2)·(A2B1). Every meet exists in a model because all six
/// vertices are coplanar with w; an absent meet is a structure error.
inline std::array<Id, 3> cross_joins(const IncidenceSpace& s, const Hexagon& h) {
    return detail::cross_triple(s, Side::points, {h.a1, h.b1, h.c1}, {h.a2, h.b2, h.c2});
}

/// The three cross-meet planes (dual of cross_joins).
inline std::array<Id, 3> cross_meets(const IncidenceSpace& s, const DualHexagon& h) {
    return detail::cross_triple(s, Side::planes, {h.alpha1, h.beta1, h.gamma1},
                                {h.alpha2, h.beta2, h.gamma2});
}

namespace detail {

/// Shared engine for AXIOM [P] and its spatial dual.
///
/// Hexagons are enumerated per unordered incident line pair up to the
/// symmetry that preserves the opposite-side pairing: the l1 triple is kept
/// sorted while the l2 triple runs over all orderings. `ordered` forces raw
/// enumeration of both triples for cross-validation; it multiplies the count
/// by 3! without changing the verdict.
inline AxiomReport check_pappus(const IncidenceSpace& s, Side vertex_side, const SearchMode& mode,
                                unsigned workers, bool ordered, const std::string& label) {
    std::vector<Line> lines = all_lines(s);
    int nlines = static_cast<int>(lines.size());
    const char* set_key = vertex_side == Side::points ? "l1_points" : "l1_planes";
    const char* set_key2 = vertex_side == Side::points ? "l2_points" : "l2_planes";
    static constexpr const char* kPointNames[6] = {"a1", "b1", "c1", "a2", "b2", "c2"};
    static constexpr const char* kPlaneNames[6] = {"alpha1", "beta1", "gamma1",
                                                   "alpha2", "beta2", "gamma2"};
    const char* const* vnames = vertex_side == Side::points ? kPointNames : kPlaneNames;
    const char* cross_key = vertex_side == Side::points ? "cross_joins" : "cross_meets";

    // common elements on both sides, or nothing when the lines are skew
    auto incidence_of = [&](const Line& m, const Line& n) -> std::optional<std::pair<Id, Id>> {
        Bitset p = m.points.bits & n.points.bits;
        Bitset q = m.planes.bits & n.planes.bits;
        int cp = p.count(), cq = q.count();
        if (cp == 0 && cq == 0) return std::nullopt;
        if (cp != 1 || cq != 1) {
            throw structure_error("incident line pair without unique meet and join");
        }
        return std::make_pair(static_cast<Id>(p.first()), static_cast<Id>(q.first()));
    };

    auto evaluate = [&](int i, int j, Id o, Id w, const std::array<Id, 3>& on1,
                        const std::array<Id, 3>& on2, SearchOutcome& out) {
        ++out.checked;
        auto cross = cross_triple(s, vertex_side, on1, on2);
        Bitset bits(s.count(vertex_side));
        for (Id c : cross) bits.set(c);
        if (!collinear(s, ElementSet{vertex_side, bits})) {
            Json witness;
            witness["o"] = o;
            witness["w"] = w;
            witness[set_key] = line_set(lines[static_cast<std::size_t>(i)], vertex_side).ids();
            witness[set_key2] = line_set(lines[static_cast<std::size_t>(j)], vertex_side).ids();
            for (int t = 0; t < 3; ++t) witness[vnames[t]] = on1[static_cast<std::size_t>(t)];
            for (int t = 0; t < 3; ++t) witness[vnames[t + 3]] = on2[static_cast<std::size_t>(t)];
            witness[cross_key] = std::vector<Id>(cross.begin(), cross.end());
            out.record({static_cast<Id>(i), static_cast<Id>(j), on1[0], on1[1], on1[2], on2[0],
                        on2[1], on2[2]},
                       std::move(witness));
        }
    };

    // vertex triples on one line, avoiding the common element
    auto candidates = [&](const Line& l, Id avoid) {
        std::vector<Id> cand;
        line_set(l, vertex_side).for_each([&](int e) {
            if (e != avoid) cand.push_back(static_cast<Id>(e));
        });
        return cand;
    };

    auto for_each_hexagon = [&](int i, int j, Id o, Id w, auto&& fn) {
        Id avoid = vertex_side == Side::points ? o : w;
        auto c1 = candidates(lines[static_cast<std::size_t>(i)], avoid);
        auto c2 = candidates(lines[static_cast<std::size_t>(j)], avoid);
        std::size_t n1 = c1.size(), n2 = c2.size();
        if (n1 < 3 || n2 < 3) return;
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t y = x + 1; y < n1; ++y)
                for (std::size_t z = y + 1; z < n1; ++z) {
                    std::vector<std::array<Id, 3>> firsts;
                    if (ordered) {
                        std::array<Id, 3> t{c1[x], c1[y], c1[z]};
                        std::sort(t.begin(), t.end());
                        do {
                            firsts.push_back(t);
                        } while (std::next_permutation(t.begin(), t.end()));
                    } else {
                        firsts.push_back({c1[x], c1[y], c1[z]});
                    }
                    for (std::size_t u = 0; u < n2; ++u)
                        for (std::size_t v = u + 1; v < n2; ++v)
                            for (std::size_t t2 = v + 1; t2 < n2; ++t2) {
                                std::array<Id, 3> second{c2[u], c2[v], c2[t2]};
                                std::sort(second.begin(), second.end());
                                do {
                                    for (const auto& first : firsts) fn(first, second);
                                } while (std::next_permutation(second.begin(), second.end()));
                            }
                }
    };

    if (mode.exhaustive) {
        auto chunk = [&](std::int64_t lo, std::int64_t hi) {
            SearchOutcome out;
            for (int i = static_cast<int>(lo); i < hi; ++i) {
                for (int j = i + 1; j < nlines; ++j) {
                    auto inc = incidence_of(lines[static_cast<std::size_t>(i)],
                                            lines[static_cast<std::size_t>(j)]);
                    if (!inc) continue;
                    for_each_hexagon(i, j, inc->first, inc->second,
                                     [&](const std::array<Id, 3>& on1,
                                         const std::array<Id, 3>& on2) {
                                         evaluate(i, j, inc->first, inc->second, on1, on2, out);
                                     });
                }
            }
            return out;
        };
        auto result = parallel_reduce(nlines, workers, SearchOutcome{}, chunk, merge_outcomes);
        return finish_report(label, std::move(result), true, std::nullopt);
    }

    // Sampled mode. First decide whether any hexagon exists at all, so that
    // q = 2 reports vacuous rather than looping.
    bool any = false;
    for (int i = 0; i < nlines && !any; ++i) {
        if (line_set(lines[static_cast<std::size_t>(i)], vertex_side).count() < 4) continue;
        for (int j = i + 1; j < nlines && !any; ++j) {
            if (line_set(lines[static_cast<std::size_t>(j)], vertex_side).count() < 4) continue;
            auto inc = incidence_of(lines[static_cast<std::size_t>(i)],
                                    lines[static_cast<std::size_t>(j)]);
            if (inc) any = true;
        }
    }
    SearchOutcome out;
    if (any && nlines >= 2) {
        SplitMix64 rng(mode.seed);
        constexpr int kMaxAttempts = 100000;
        for (std::int64_t k = 0; k < mode.samples; ++k) {
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kMaxAttempts) {
                    throw structure_error("sampling could not find a hexagon configuration");
                }
                int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(nlines)));
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(nlines)));
                if (i == j) continue;
                const Line& m = lines[static_cast<std::size_t>(i)];
                const Line& n = lines[static_cast<std::size_t>(j)];
                auto inc = incidence_of(m, n);
                if (!inc) continue;
                Id avoid = vertex_side == Side::points ? inc->first : inc->second;
                auto c1 = candidates(m, avoid);
                auto c2 = candidates(n, avoid);
                if (c1.size() < 3 || c2.size() < 3) continue;
                auto pick1 = rng.distinct(3, static_cast<int>(c1.size()));
                auto pick2 = rng.distinct(3, static_cast<int>(c2.size()));
                std::array<Id, 3> on1{c1[static_cast<std::size_t>(pick1[0])],
                                      c1[static_cast<std::size_t>(pick1[1])],
                                      c1[static_cast<std::size_t>(pick1[2])]};
                std::sort(on1.begin(), on1.end());
                std::array<Id, 3> on2{c2[static_cast<std::size_t>(pick2[0])],
                                      c2[static_cast<std::size_t>(pick2[1])],
                                      c2[static_cast<std::size_t>(pick2[2])]};
                evaluate(i, j, inc->first, inc->second, on1, on2, out);
                break;
            }
        }
    }
    return finish_report(label, std::move(out), false, mode.seed);
}

}  // namespace detail

/// AXIOM [P] (Pappus): the cross-joins of every hexagon alternately
/// inscribed in an incident line pair are collinear. Vacuous when no
/// hexagon exists (q = 2: each line carries only two points besides o).
inline AxiomReport check_axiom_p(const IncidenceSpace& s,
                                 const SearchMode& mode = SearchMode::exhaustive_mode(),
                                 unsigned workers = 1, bool ordered = false) {
    return detail::check_pappus(s, Side::points, mode, workers, ordered, "P");
}

/// The spatial dual of AXIOM [P]: cross-meet planes of every dual hexagon
/// are collinear.
inline AxiomReport check_axiom_p_dual(const IncidenceSpace& s,
                                      const SearchMode& mode = SearchMode::exhaustive_mode(),
                                      unsigned workers = 1, bool ordered = false) {
    return detail::check_pappus(s, Side::planes, mode, workers, ordered, "Pdual");
}

/// Draw a random dual hexagon via the seeded generator; nullopt when none
/// exists (q = 2).
inline std::optional<DualHexagon> sample_dual_hexagon(const IncidenceSpace& s,
                                                      const std::vector<Line>& lines,
                                                      SplitMix64& rng) {
    int nlines = static_cast<int>(lines.size());
    if (nlines < 2) return std::nullopt;
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(nlines)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(nlines)));
        if (i == j) continue;
        const Line& m = lines[static_cast<std::size_t>(i)];
        const Line& n = lines[static_cast<std::size_t>(j)];
        Bitset p = m.points.bits & n.points.bits;
        Bitset q = m.planes.bits & n.planes.bits;
        if (p.count() != 1 || q.count() != 1) continue;
        Id w = q.first();
        std::vector<Id> c1, c2;
        m.planes.bits.for_each([&](int e) {
            if (e != w) c1.push_back(static_cast<Id>(e));
        });
        n.planes.bits.for_each([&](int e) {
            if (e != w) c2.push_back(static_cast<Id>(e));
        });
        if (c1.size() < 3 || c2.size() < 3) continue;
        auto pick1 = rng.distinct(3, static_cast<int>(c1.size()));
        auto pick2 = rng.distinct(3, static_cast<int>(c2.size()));
        IncidentLinePair pair{m, n, p.first(), w};
        return make_dual_hexagon(s, std::move(pair), c1[static_cast<std::size_t>(pick1[0])],
                                 c1[static_cast<std::size_t>(pick1[1])],
                                 c1[static_cast<std::size_t>(pick1[2])],
                                 c2[static_cast<std::size_t>(pick2[0])],
                                 c2[static_cast<std::size_t>(pick2[1])],
                                 c2[static_cast<std::size_t>(pick2[2])]);
    }
    return std::nullopt;
}

/// Replay the plane-section proof that AXIOM [P] implies its spatial dual:
/// section the dual hexagon by a plane pi not through o, trace the two
/// plane pencils into flat pencils of lines in pi, apply Pappus to the
/// sectioned figure, and recover collinearity of the three cross-meet
/// planes on the line through o and the Pappus point S.
inline ClaimTrace replay_section_trace(const IncidenceSpace& s, const DualHexagon& dh, Id pi) {
    s.check_id(Side::planes, pi);
    if (s.incident(dh.pair.o, pi)) {
        throw usage_error("the section plane pi must not be incident with o");
    }

    ClaimTrace trace;
    trace.config = Json{{"o", dh.pair.o},
                        {"w", dh.pair.w},
                        {"planes1", std::array<Id, 3>{dh.alpha1, dh.beta1, dh.gamma1}},
                        {"planes2", std::array<Id, 3>{dh.alpha2, dh.beta2, dh.gamma2}},
                        {"pi", pi}};

    auto col = [&](Id plane) -> const Bitset& { return s.points_on(plane); };
    auto dbl_points = [&](Id a, Id b) {
        return polar_of_bits(s, Side::planes, polar_pair(s, Side::points, a, b));
    };
    auto dbl_planes = [&](Id x, Id y) {
        return polar_of_bits(s, Side::points, polar_pair(s, Side::planes, x, y));
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

    // letters a,b,c on each line k; planes[k][letter]
    const Id planes_of[2][3] = {{dh.alpha1, dh.beta1, dh.gamma1},
                                {dh.alpha2, dh.beta2, dh.gamma2}};
    static constexpr const char* kLetter[3] = {"alpha", "beta", "gamma"};
    static constexpr const char* kLine[3] = {"a", "b", "c"};

    // ---- Claim 1: the trace points P1, P2 are well-defined singletons ----
    std::array<Id, 2> trace_point{-1, -1};
    bool ok1 = true;
    for (int k = 0; k < 2; ++k) {
        std::string suffix = std::to_string(k + 1);
        Bitset base = col(pi) & col(planes_of[k][1]);
        base &= col(planes_of[k][2]);
        bool pass = base.count() == 1;
        if (pass) trace_point[static_cast<std::size_t>(k)] = base.first();
        ok1 &= step(1, "|{pi,beta" + suffix + ",gamma" + suffix + "}^h| = 1",
                    detail::bits_json(base), Json(), pass);
        for (int other = 0; other < 2; ++other) {
            int x = other == 0 ? 2 : 0;  // (gamma,alpha) then (alpha,beta)
            int y = other == 0 ? 0 : 1;
            Bitset lhs = col(pi) & col(planes_of[k][x]);
            lhs &= col(planes_of[k][y]);
            ok1 &= step(1,
                        std::string("{pi,") + kLetter[x] + suffix + "," + kLetter[y] + suffix +
                            "}^h = {pi,beta" + suffix + ",gamma" + suffix + "}^h",
                        detail::bits_json(lhs), detail::bits_json(base), lhs == base);
        }
    }

    // ---- Claim 2: the three pencil lines through P_k are concurrent at it ----
    for (int k = 0; k < 2; ++k) {
        std::string suffix = std::to_string(k + 1);
        std::string id2 = "(a" + suffix + ")_P & (b" + suffix + ")_P & (c" + suffix + ")_P = {P" +
                          suffix + "}";
        if (!ok1 || trace_point[static_cast<std::size_t>(k)] < 0) {
            skip(2, id2);
            continue;
        }
        Bitset lhs = col(pi) & col(planes_of[k][0]);
        lhs &= col(pi) & col(planes_of[k][1]);
        lhs &= col(pi) & col(planes_of[k][2]);
        Bitset rhs = Bitset::of(s.num_points(), {trace_point[static_cast<std::size_t>(k)]});
        step(2, std::move(id2), detail::bits_json(lhs), detail::bits_json(rhs), lhs == rhs);
    }

    // ---- Claim 3: the six trace intersections x_i · y_j are singletons ----
    // pairs (x,y) over (a,b), (b,c), (c,a); (i,j) over (1,2), (2,1)
    static constexpr int kXY[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    Id meets[3][2];  // meets[t][0] = x1·y2, meets[t][1] = x2·y1
    for (auto& r : meets) r[0] = r[1] = -1;
    bool ok3 = true;
    for (int t = 0; t < 3; ++t) {
        int x = kXY[t][0], y = kXY[t][1];
        for (int d = 0; d < 2; ++d) {
            int i = d == 0 ? 0 : 1;
            int j = 1 - i;
            std::string id3 = std::string("|{pi,") + kLetter[x] + std::to_string(i + 1) + "," +
                              kLetter[y] + std::to_string(j + 1) + "}^h| = 1";
            Bitset lhs = col(pi) & col(planes_of[i][x]);
            lhs &= col(planes_of[j][y]);
            bool pass = lhs.count() == 1;
            if (pass) meets[t][d] = lhs.first();
            ok3 &= step(3, std::move(id3), detail::bits_json(lhs), Json(), pass);
        }
    }

    // ---- Claim 4: the three cross-meet planes exist ----
    std::array<Id, 3> cross{-1, -1, -1};  // alpha0, beta0, gamma0
    bool ok4 = true;
    static constexpr int kCrossPick[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (int t = 0; t < 3; ++t) {
        int x = kCrossPick[t][0], y = kCrossPick[t][1];
        std::string id4 = std::string("|{") + kLetter[x] + "1," + kLetter[y] + "2}^hh & {" +
                          kLetter[x] + "2," + kLetter[y] + "1}^hh| = 1";
        Bitset lhs = dbl_planes(planes_of[0][x], planes_of[1][y]);
        lhs &= dbl_planes(planes_of[1][x], planes_of[0][y]);
        bool pass = lhs.count() == 1;
        if (pass) cross[static_cast<std::size_t>(t)] = lhs.first();
        ok4 &= step(4, std::move(id4), detail::bits_json(lhs), Json(), pass);
    }

    // ---- Claim 5: the key identities {x_i·y_j, x_j·y_i}^hh = {pi, z0}^h ----
    // (a,b) pairs with gamma0, (b,c) with alpha0, (c,a) with beta0
    static constexpr int kZeroOf[3] = {2, 0, 1};
    bool ok5 = true;
    for (int t = 0; t < 3; ++t) {
        int x = kXY[t][0], y = kXY[t][1];
        int z = kZeroOf[t];
        std::string id5 = std::string("{") + kLine[x] + "1." + kLine[y] + "2," + kLine[x] + "2." +
                          kLine[y] + "1}^hh = {pi," + kLetter[z] + "0}^h";
        if (!ok3 || !ok4 || meets[t][0] < 0 || meets[t][1] < 0 ||
            cross[static_cast<std::size_t>(z)] < 0) {
            skip(5, id5);
            ok5 = false;
            continue;
        }
        Bitset lhs = dbl_points(meets[t][0], meets[t][1]);
        Bitset rhs = col(pi) & col(cross[static_cast<std::size_t>(z)]);
        ok5 &= step(5, std::move(id5), detail::bits_json(lhs), detail::bits_json(rhs), lhs == rhs);
    }

    // ---- Claim 6: the Pappus point S of the sectioned figure ----
    Id pappus_s = -1;
    bool ok6 = true;
    {
        std::string id6 = "|{b1.c2,b2.c1}^hh & {c1.a2,c2.a1}^hh| = 1";
        if (!ok3 || meets[1][0] < 0 || meets[1][1] < 0 || meets[2][0] < 0 || meets[2][1] < 0) {
            skip(6, id6);
            skip(6, "S != o");
            ok6 = false;
        } else {
            Bitset lhs = dbl_points(meets[1][0], meets[1][1]);
            lhs &= dbl_points(meets[2][0], meets[2][1]);
            bool pass = lhs.count() == 1;
            if (pass) pappus_s = lhs.first();
            ok6 &= step(6, std::move(id6), detail::bits_json(lhs), Json(), pass);
            if (pass) {
                ok6 &= step(6, "S != o", Json(pappus_s), Json(dh.pair.o), pappus_s != dh.pair.o);
            } else {
                skip(6, "S != o");
                ok6 = false;
            }
        }
    }

    // ---- Claim 7: S lies on each of {pi,alpha0}^h, {pi,beta0}^h, {pi,gamma0}^h ----
    bool ok7 = true;
    for (int t = 0; t < 3; ++t) {
        std::string id7 = std::string("S in {pi,") + kLetter[t] + "0}^h";
        if (!ok4 || !ok5 || !ok6 || pappus_s < 0 || cross[static_cast<std::size_t>(t)] < 0) {
            skip(7, id7);
            ok7 = false;
            continue;
        }
        Bitset line_pts = col(pi) & col(cross[static_cast<std::size_t>(t)]);
        Bitset lhs = Bitset::of(s.num_points(), {pappus_s});
        lhs &= line_pts;
        Bitset rhs = Bitset::of(s.num_points(), {pappus_s});
        ok7 &= step(7, std::move(id7), detail::bits_json(lhs), detail::bits_json(rhs), lhs == rhs);
    }

    // ---- Claim 8: alpha0, beta0, gamma0 all lie in {o,S}^h: collinear ----
    {
        std::string id8 = "{alpha0,beta0,gamma0} subset of {o,S}^h";
        if (!ok6 || !ok7 || pappus_s < 0 || cross[0] < 0 || cross[1] < 0 || cross[2] < 0) {
            skip(8, id8);
        } else {
            Bitset triple(s.num_planes());
            for (Id c : cross) triple.set(c);
            Bitset line_planes = polar_pair(s, Side::points, dh.pair.o, pappus_s);
            Bitset lhs = triple & line_planes;
            step(8, std::move(id8), detail::bits_json(lhs), detail::bits_json(triple),
                 lhs == triple);
        }
    }

    Json derived;
    derived["P1"] = trace_point[0] >= 0 ? Json(trace_point[0]) : Json();
    derived["P2"] = trace_point[1] >= 0 ? Json(trace_point[1]) : Json();
    static constexpr const char* kMeetNames[3][2] = {
        {"a1.b2", "a2.b1"}, {"b1.c2", "b2.c1"}, {"c1.a2", "c2.a1"}};
    for (int t = 0; t < 3; ++t) {
        for (int d = 0; d < 2; ++d) {
            derived[kMeetNames[t][d]] = meets[t][d] >= 0 ? Json(meets[t][d]) : Json();
        }
    }
    static constexpr const char* kCrossNames[3] = {"alpha0", "beta0", "gamma0"};
    for (int t = 0; t < 3; ++t) {
        derived[kCrossNames[t]] =
            cross[static_cast<std::size_t>(t)] >= 0 ? Json(cross[static_cast<std::size_t>(t)]) : Json();
    }
    derived["S"] = pappus_s >= 0 ? Json(pappus_s) : Json();
    trace.derived = std::move(derived);
    return trace;
}

}  // namespace pgdual
