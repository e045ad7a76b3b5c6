#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgdual/parallel.hpp"
#include "pgdual/pg3.hpp"
#include "pgdual/polarity.hpp"
#include "pgdual/report.hpp"
#include "pgdual/rng.hpp"

namespace pgdual {
namespace detail {

/// Partial result of an exhaustive scan: counts plus the least violating
/// tuple, keyed by the tuple itself so merging is order-independent.
struct SearchOutcome {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    std::optional<std::pair<std::vector<Id>, Json>> least;

    void record(std::vector<Id> key, Json witness) {
        ++violations;
        if (!least || key < least->first) least = {std::move(key), std::move(witness)};
    }
};

inline SearchOutcome merge_outcomes(SearchOutcome a, SearchOutcome b) {
    a.checked += b.checked;
    a.violations += b.violations;
    if (b.least && (!a.least || b.least->first < a.least->first)) a.least = std::move(b.least);
    return a;
}

inline AxiomReport finish_report(std::string label, SearchOutcome out, bool exhaustive,
                                 std::optional<std::uint64_t> seed,
                                 std::optional<std::string> quantifier = std::nullopt) {
    AxiomReport r;
    r.axiom = std::move(label);
    r.quantifier = std::move(quantifier);
    r.checked = out.checked;
    r.violations = out.violations;
    r.exhaustive = exhaustive;
    r.sample_seed = seed;
    if (out.checked == 0) {
        r.status = AxiomStatus::vacuous;
    } else if (out.least) {
        r.status = AxiomStatus::fails;
        r.counterexample = std::move(out.least->second);
    } else {
        r.status = AxiomStatus::holds;
    }
    return r;
}

inline std::string pair_label(int axiom, Side side) {
    return std::to_string(axiom) + (side == Side::points ? "p" : "π");
}

}  // namespace detail

/// AXIOM [1]: no point is incident with every plane, and dually. Two
/// sub-reports, one per side.
inline std::array<AxiomReport, 2> check_axiom1(const IncidenceSpace& s, unsigned workers = 1) {
    std::array<AxiomReport, 2> out;
    int idx = 0;
    for (Side side : {Side::points, Side::planes}) {
        int n = s.count(side);
        int m = s.count(opposite(side));
        auto chunk = [&s, side, m](std::int64_t lo, std::int64_t hi) {
            detail::SearchOutcome o;
            for (Id e = static_cast<Id>(lo); e < hi; ++e) {
                ++o.checked;
                if (s.incident_set(side, e).count() == m) {
                    Json w;
                    w[side == Side::points ? "point" : "plane"] = e;
                    o.record({e}, std::move(w));
                }
            }
            return o;
        };
        auto result = parallel_reduce(n, workers, detail::SearchOutcome{}, chunk,
                                      detail::merge_outcomes);
        out[static_cast<std::size_t>(idx++)] =
            detail::finish_report(detail::pair_label(1, side), std::move(result), true, std::nullopt);
    }
    return out;
}

/// AXIOM [2]: any two elements of one side have more than two common
/// elements on the other. The classical statement is ambiguous about whether
/// the two may coincide; `distinct_only` selects the reading (false =
/// literal, A = B allowed).
inline std::array<AxiomReport, 2> check_axiom2(const IncidenceSpace& s, bool distinct_only,
                                               unsigned workers = 1) {
    std::array<AxiomReport, 2> out;
    int idx = 0;
    for (Side side : {Side::points, Side::planes}) {
        int n = s.count(side);
        const char* key = side == Side::points ? "points" : "planes";
        auto chunk = [&s, side, n, key, distinct_only](std::int64_t lo, std::int64_t hi) {
            detail::SearchOutcome o;
            for (Id a = static_cast<Id>(lo); a < hi; ++a) {
                for (Id b = distinct_only ? a + 1 : a; b < n; ++b) {
                    ++o.checked;
                    if (polar_pair(s, side, a, b).count() <= 2) {
                        Json w;
                        w[key] = std::vector<Id>{a, b};
                        o.record({a, b}, std::move(w));
                    }
                }
            }
            return o;
        };
        auto result = parallel_reduce(n, workers, detail::SearchOutcome{}, chunk,
                                      detail::merge_outcomes);
        out[static_cast<std::size_t>(idx++)] = detail::finish_report(
            detail::pair_label(2, side), std::move(result), true, std::nullopt,
            distinct_only ? "distinct_pairs" : "all_pairs");
    }
    return out;
}

/// AXIOM [3]: any three elements of one side have a nonempty polar.
inline std::array<AxiomReport, 2> check_axiom3(const IncidenceSpace& s, unsigned workers = 1) {
    std::array<AxiomReport, 2> out;
    int idx = 0;
    for (Side side : {Side::points, Side::planes}) {
        int n = s.count(side);
        const char* key = side == Side::points ? "points" : "planes";
        auto chunk = [&s, side, n, key](std::int64_t lo, std::int64_t hi) {
            detail::SearchOutcome o;
            for (Id a = static_cast<Id>(lo); a < hi; ++a) {
                for (Id b = a + 1; b < n; ++b) {
                    Bitset ab = polar_pair(s, side, a, b);
                    for (Id c = b + 1; c < n; ++c) {
                        ++o.checked;
                        Bitset abc = ab;
                        abc &= s.incident_set(side, c);
                        if (abc.none()) {
                            Json w;
                            w[key] = std::vector<Id>{a, b, c};
                            o.record({a, b, c}, std::move(w));
                        }
                    }
                }
            }
            return o;
        };
        auto result = parallel_reduce(n, workers, detail::SearchOutcome{}, chunk,
                                      detail::merge_outcomes);
        out[static_cast<std::size_t>(idx++)] =
            detail::finish_report(detail::pair_label(3, side), std::move(result), true, std::nullopt);
    }
    return out;
}

namespace detail {

/// Both set identities of AXIOM [4] for one qualifying quadruple.
inline bool axiom4_identity_holds(const IncidenceSpace& s, const Bitset& point_pair_polar, Id alpha,
                                  Id beta) {
    Bitset plane_pair_polar = polar_pair(s, Side::planes, alpha, beta);
    // {A,B}^h = {α,β}^hh
    if (polar_of_bits(s, Side::points, plane_pair_polar) != point_pair_polar) return false;
    // {α,β}^h = {A,B}^hh
    if (polar_of_bits(s, Side::planes, point_pair_polar) != plane_pair_polar) return false;
    return true;
}

}  // namespace detail

/// AXIOM [4]: whenever {A,B} ⊥ {α,β} with A ≠ B and α ≠ β, the polar of each
/// pair is the double polar of the other. Quantified over all qualifying
/// quadruples when exhaustive; otherwise a seeded sample of them.
inline AxiomReport check_axiom4(const IncidenceSpace& s,
                                const SearchMode& mode = SearchMode::exhaustive_mode(),
                                unsigned workers = 1) {
    if (mode.exhaustive) {
        int n = s.num_points();
        auto chunk = [&s, n](std::int64_t lo, std::int64_t hi) {
            detail::SearchOutcome o;
            for (Id a = static_cast<Id>(lo); a < hi; ++a) {
                for (Id b = a + 1; b < n; ++b) {
                    Bitset h = polar_pair(s, Side::points, a, b);
                    auto planes = h.ids();
                    for (std::size_t i = 0; i < planes.size(); ++i) {
                        for (std::size_t j = i + 1; j < planes.size(); ++j) {
                            ++o.checked;
                            if (!detail::axiom4_identity_holds(s, h, planes[i], planes[j])) {
                                Json w;
                                w["points"] = std::vector<Id>{a, b};
                                w["planes"] = std::vector<Id>{planes[i], planes[j]};
                                o.record({a, b, planes[i], planes[j]}, std::move(w));
                            }
                        }
                    }
                }
            }
            return o;
        };
        auto result = parallel_reduce(n, workers, detail::SearchOutcome{}, chunk,
                                      detail::merge_outcomes);
        return detail::finish_report("4", std::move(result), true, std::nullopt);
    }

    SplitMix64 rng(mode.seed);
    detail::SearchOutcome o;
    int n = s.num_points();
    if (n >= 2) {
        constexpr int kMaxAttempts = 1000;
        for (std::int64_t k = 0; k < mode.samples; ++k) {
            for (int attempt = 0;; ++attempt) {
                if (attempt >= kMaxAttempts) {
                    // no qualifying quadruple found in a long streak; treat the
                    // space as effectively empty for sampling purposes
                    return detail::finish_report("4", std::move(o), false, mode.seed);
                }
                Id a = rng.pick(n);
                Id b = rng.pick(n);
                if (a == b) continue;
                if (a > b) std::swap(a, b);
                Bitset h = polar_pair(s, Side::points, a, b);
                int hc = h.count();
                if (hc < 2) continue;
                auto planes = h.ids();
                auto pick2 = rng.distinct(2, hc);
                Id alpha = planes[static_cast<std::size_t>(pick2[0])];
                Id beta = planes[static_cast<std::size_t>(pick2[1])];
                if (alpha > beta) std::swap(alpha, beta);
                ++o.checked;
                if (!detail::axiom4_identity_holds(s, h, alpha, beta)) {
                    Json w;
                    w["points"] = std::vector<Id>{a, b};
                    w["planes"] = std::vector<Id>{alpha, beta};
                    o.record({a, b, alpha, beta}, std::move(w));
                }
                break;
            }
        }
    }
    return detail::finish_report("4", std::move(o), false, mode.seed);
}

/// The foundation suite: AXIOM [1]-[4] in label order, with both quantifier
/// readings of AXIOM [2].
inline std::vector<AxiomReport> check_foundation(const IncidenceSpace& s,
                                                 const SearchMode& axiom4_mode =
                                                     SearchMode::exhaustive_mode(),
                                                 unsigned workers = 1) {
    std::vector<AxiomReport> reports;
    for (auto& r : check_axiom1(s, workers)) reports.push_back(std::move(r));
    auto two_all = check_axiom2(s, false, workers);
    auto two_distinct = check_axiom2(s, true, workers);
    reports.push_back(std::move(two_all[0]));
    reports.push_back(std::move(two_distinct[0]));
    reports.push_back(std::move(two_all[1]));
    reports.push_back(std::move(two_distinct[1]));
    for (auto& r : check_axiom3(s, workers)) reports.push_back(std::move(r));
    reports.push_back(check_axiom4(s, axiom4_mode, workers));
    return reports;
}

/// First failing foundation report, if any.
inline std::optional<AxiomReport> failing_foundation(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports) {
        if (r.status == AxiomStatus::fails) return r;
    }
    return std::nullopt;
}

}  // namespace pgdual
