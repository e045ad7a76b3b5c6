#include <doctest.h>

#include <vector>

#include "pgdual/axioms.hpp"
#include "pgdual/polarity.hpp"
#include "pgdual/rng.hpp"

using pgdual::AxiomReport;
using pgdual::AxiomStatus;
using pgdual::build_pg3;
using pgdual::check_axiom1;
using pgdual::check_axiom2;
using pgdual::check_axiom3;
using pgdual::check_axiom4;
using pgdual::Id;
using pgdual::IncidenceSpace;
using pgdual::SearchMode;

namespace {

IncidenceSpace random_bipartite(int np, int nm, std::uint64_t seed) {
    pgdual::SplitMix64 rng(seed);
    std::vector<std::pair<Id, Id>> pairs;
    for (Id p = 0; p < np; ++p) {
        for (Id w = 0; w < nm; ++w) {
            if (rng.next() & 1) pairs.emplace_back(p, w);
        }
    }
    return IncidenceSpace::from_pairs(np, nm, pairs);
}

}  // namespace

TEST_CASE("pg3(2) and pg3(3) satisfy the foundation axioms exhaustively") {
    for (int q : {2, 3}) {
        auto s = build_pg3(q);
        for (const auto& r : check_axiom1(s)) {
            CHECK(r.status == AxiomStatus::holds);
            CHECK(r.checked == s.num_points());
        }
        for (bool distinct : {false, true}) {
            for (const auto& r : check_axiom2(s, distinct)) {
                CHECK(r.status == AxiomStatus::holds);
                CHECK(r.quantifier == (distinct ? "distinct_pairs" : "all_pairs"));
            }
        }
        for (const auto& r : check_axiom3(s)) CHECK(r.status == AxiomStatus::holds);
        CHECK(check_axiom4(s).status == AxiomStatus::holds);
    }
    // frozen counts for pg3(2): C(15,2) = 105 pairs, +15 with repetition;
    // C(15,3) = 455 triples per side; 105 point pairs x C(3,2) plane pairs
    auto s2 = build_pg3(2);
    CHECK(check_axiom2(s2, true)[0].checked == 105);
    CHECK(check_axiom2(s2, false)[0].checked == 120);
    CHECK(check_axiom3(s2)[0].checked == 455);
    CHECK(check_axiom3(s2)[1].checked == 455);
    CHECK(check_axiom4(s2).checked == 315);
    // pg3(3): C(40,2) = 780 point pairs x C(4,2) = 6 qualifying plane pairs;
    // C(40,3) = 9880 triples per side
    auto s3 = build_pg3(3);
    CHECK(check_axiom4(s3).checked == 4680);
    CHECK(check_axiom3(s3)[0].checked == 9880);
    CHECK(check_axiom3(s3)[1].checked == 9880);
}

TEST_CASE("pg3(5) passes the foundation with the sampled quadruple checker") {
    auto s = build_pg3(5);
    for (const auto& r : check_axiom1(s)) CHECK(r.status == AxiomStatus::holds);
    for (const auto& r : check_axiom2(s, false)) CHECK(r.status == AxiomStatus::holds);
    for (const auto& r : check_axiom3(s, 2)) CHECK(r.status == AxiomStatus::holds);
    auto r4 = check_axiom4(s, SearchMode::sample(500, 0));
    CHECK(r4.status == AxiomStatus::holds);
    CHECK(r4.checked == 500);
}

TEST_CASE("axiom 1 counterexample: a point on every plane") {
    auto s = IncidenceSpace::from_pairs(1, 1, {{0, 0}});
    auto reports = check_axiom1(s);
    CHECK(reports[0].status == AxiomStatus::fails);
    CHECK((*reports[0].counterexample)["point"] == 0);
    CHECK(reports[1].status == AxiomStatus::fails);

    // no incidences at all: every polar is empty, which is fine for AXIOM [1]
    auto empty = IncidenceSpace::from_pairs(2, 2, {});
    for (const auto& r : check_axiom1(empty)) CHECK(r.status == AxiomStatus::holds);
}

TEST_CASE("axiom 2 counterexample: two points with only two common planes") {
    auto s = IncidenceSpace::from_pairs(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto all = check_axiom2(s, false);
    CHECK(all[0].status == AxiomStatus::fails);
    CHECK((*all[0].counterexample)["points"] == std::vector<Id>{0, 0});
    auto distinct = check_axiom2(s, true);
    CHECK(distinct[0].status == AxiomStatus::fails);
    CHECK((*distinct[0].counterexample)["points"] == std::vector<Id>{0, 1});
    CHECK(distinct[0].violations == 1);
}

TEST_CASE("axiom 3 counterexample: a triple with empty polar") {
    // 4 points, 1 plane; the plane misses point 3
    auto s = IncidenceSpace::from_pairs(4, 1, {{0, 0}, {1, 0}, {2, 0}});
    auto reports = check_axiom3(s);
    CHECK(reports[0].axiom == "3p");
    CHECK(reports[0].status == AxiomStatus::fails);
    CHECK((*reports[0].counterexample)["points"] == std::vector<Id>{0, 1, 3});
    // only one plane: no plane triple exists, so the dual side is vacuous
    CHECK(reports[1].axiom == "3π");
    CHECK(reports[1].status == AxiomStatus::vacuous);
    CHECK(reports[1].checked == 0);
}

TEST_CASE("axiom 4 fails on random bipartite structures with a deterministic witness") {
    auto s = random_bipartite(8, 8, 42);
    auto r1 = check_axiom4(s);
    CHECK(r1.status == AxiomStatus::fails);
    auto r2 = check_axiom4(s);
    auto r4 = check_axiom4(s, SearchMode::exhaustive_mode(), 4);
    CHECK(pgdual::to_json(r1) == pgdual::to_json(r2));
    CHECK(pgdual::to_json(r1) == pgdual::to_json(r4));  // worker count independent

    auto s2 = random_bipartite(9, 7, 1234);
    auto r = check_axiom4(s2);
    CHECK(r.status == AxiomStatus::fails);
}

TEST_CASE("the exhaustive counterexample is the lexicographically least violating tuple") {
    auto s = random_bipartite(6, 6, 5);
    auto r = check_axiom4(s);
    REQUIRE(r.status == AxiomStatus::fails);

    // brute-force scan in plain loops, independent of the checker
    std::array<Id, 4> least{-1, -1, -1, -1};
    std::int64_t qualifying = 0;
    bool found = false;
    for (Id a = 0; a < 6 && true; ++a) {
        for (Id b = a + 1; b < 6; ++b) {
            for (Id alpha = 0; alpha < 6; ++alpha) {
                for (Id beta = alpha + 1; beta < 6; ++beta) {
                    bool joint = s.incident(a, alpha) && s.incident(a, beta) &&
                                 s.incident(b, alpha) && s.incident(b, beta);
                    if (!joint) continue;
                    ++qualifying;
                    auto polar_points = [&](Id x, Id y) {
                        std::vector<Id> out;
                        for (Id w = 0; w < 6; ++w) {
                            if (s.incident(x, w) && s.incident(y, w)) out.push_back(w);
                        }
                        return out;
                    };
                    auto polar_planes = [&](const std::vector<Id>& ws) {
                        std::vector<Id> out;
                        for (Id p = 0; p < 6; ++p) {
                            bool all = true;
                            for (Id w : ws) all = all && s.incident(p, w);
                            if (all) out.push_back(p);
                        }
                        return out;
                    };
                    auto polar_planes_of_pair = [&](Id x, Id y) {
                        std::vector<Id> out;
                        for (Id p = 0; p < 6; ++p) {
                            if (s.incident(p, x) && s.incident(p, y)) out.push_back(p);
                        }
                        return out;
                    };
                    auto polar_points_of_set = [&](const std::vector<Id>& ps) {
                        std::vector<Id> out;
                        for (Id w = 0; w < 6; ++w) {
                            bool all = true;
                            for (Id p : ps) all = all && s.incident(p, w);
                            if (all) out.push_back(w);
                        }
                        return out;
                    };
                    auto ab_h = polar_points(a, b);
                    auto albe_hh = polar_points_of_set(polar_planes_of_pair(alpha, beta));
                    auto albe_h = polar_planes_of_pair(alpha, beta);
                    auto ab_hh = polar_planes(ab_h);
                    bool ok = ab_h == albe_hh && albe_h == ab_hh;
                    if (!ok && !found) {
                        least = {a, b, alpha, beta};
                        found = true;
                    }
                }
            }
        }
    }
    REQUIRE(found);
    CHECK(r.checked == qualifying);
    CHECK((*r.counterexample)["points"] == std::vector<Id>{least[0], least[1]});
    CHECK((*r.counterexample)["planes"] == std::vector<Id>{least[2], least[3]});
}

TEST_CASE("sampled axiom 4 reproduces with the same seed") {
    auto s = build_pg3(3);
    auto a = check_axiom4(s, SearchMode::sample(200, 17));
    auto b = check_axiom4(s, SearchMode::sample(200, 17));
    CHECK(a.status == AxiomStatus::holds);
    CHECK(a.checked == 200);
    CHECK(!a.exhaustive);
    CHECK(a.sample_seed == 17);
    CHECK(pgdual::to_json(a) == pgdual::to_json(b));
}

TEST_CASE("the axiom suite is self-dual: transposing swaps the sub-reports") {
    for (int q : {2, 3}) {
        auto s = build_pg3(q);
        auto d = pgdual::dual_space(s);
        auto s1 = check_axiom1(s);
        auto d1 = check_axiom1(d);
        CHECK(s1[0].status == d1[1].status);
        CHECK(s1[1].status == d1[0].status);
        auto s3 = check_axiom3(s);
        auto d3 = check_axiom3(d);
        CHECK(s3[0].status == d3[1].status);
        CHECK(s3[1].status == d3[0].status);
        CHECK(check_axiom4(s).status == check_axiom4(d).status);  // [4] is self-dual
    }
    // and on a structure that is not a model
    auto s = random_bipartite(6, 9, 7);
    auto d = pgdual::dual_space(s);
    auto s1 = check_axiom1(s);
    auto d1 = check_axiom1(d);
    CHECK(s1[0].status == d1[1].status);
    CHECK(s1[1].status == d1[0].status);
    auto s2 = check_axiom2(s, false);
    auto d2 = check_axiom2(d, false);
    CHECK(s2[0].status == d2[1].status);
    CHECK(s2[1].status == d2[0].status);
}

TEST_CASE("report invariants") {
    auto s = build_pg3(2);
    for (const auto& r : pgdual::check_foundation(s)) {
        CHECK((r.status == AxiomStatus::fails) == r.counterexample.has_value());
        if (r.status == AxiomStatus::holds) CHECK(r.violations == 0);
    }
}
