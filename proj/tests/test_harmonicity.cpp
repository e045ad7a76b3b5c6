#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgdual/harmonicity.hpp"
#include "pgdual/polarity.hpp"

#include "oracle.hpp"

using pgdual::AxiomStatus;
using pgdual::build_pg3;
using pgdual::check_axiom_h;
using pgdual::check_axiom_h_dual;
using pgdual::diagonal_points;
using pgdual::DualQuadrangle;
using pgdual::find_quadrangles;
using pgdual::Id;
using pgdual::make_quadrangle;
using pgdual::Quadrangle;
using pgdual::SearchMode;
using pgdual::Side;

TEST_CASE("quadrangle counts per plane: 7 in the Fano plane, 234 over GF(3)") {
    auto s2 = build_pg3(2);
    for (Id w = 0; w < s2.num_planes(); ++w) {
        CHECK(find_quadrangles(s2, w).size() == 7);
    }
    auto s3 = build_pg3(3);
    for (Id w = 0; w < s3.num_planes(); ++w) {
        CHECK(find_quadrangles(s3, w).size() == 234);
    }

    // the naive enumeration agrees on one plane of each model
    auto m2 = oracle::snapshot(s2);
    auto lines2 = oracle::line_point_sets(m2);
    auto naive2 = oracle::quadrangles_in_plane(m2, lines2, 0);
    auto got2 = find_quadrangles(s2, 0);
    REQUIRE(naive2.size() == got2.size());
    for (std::size_t i = 0; i < got2.size(); ++i) {
        for (int t = 0; t < 4; ++t) {
            CHECK(got2[i].vertices[static_cast<std::size_t>(t)] ==
                  naive2[i][static_cast<std::size_t>(t)]);
        }
    }
}

TEST_CASE("sampled quadrangles are valid, deduplicated and reproducible") {
    auto s = build_pg3(3);
    auto a = find_quadrangles(s, 5, SearchMode::sample(20, 99));
    auto b = find_quadrangles(s, 5, SearchMode::sample(20, 99));
    REQUIRE(a.size() == 20);
    std::set<std::array<Id, 4>> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].vertices == b[i].vertices);
        CHECK(seen.insert(a[i].vertices).second);  // without replacement
        CHECK_NOTHROW(make_quadrangle(s, 5, a[i].vertices));
    }
}

TEST_CASE("diagonal points: collinear over GF(2), a triangle over GF(3)") {
    auto s2 = build_pg3(2);
    auto m2 = oracle::snapshot(s2);
    for (Id w = 0; w < 15; ++w) {
        for (const auto& quad : find_quadrangles(s2, w)) {
            auto d = diagonal_points(s2, quad);
            auto naive = oracle::diagonal_points(m2, {quad.vertices[0], quad.vertices[1],
                                                      quad.vertices[2], quad.vertices[3]});
            CHECK(d.d1 == naive[0]);
            CHECK(d.d2 == naive[1]);
            CHECK(d.d3 == naive[2]);
            // characteristic 2: the three diagonal points always sit on one line
            auto dset = pgdual::make_set(s2, Side::points, {d.d1, d.d2, d.d3});
            CHECK(pgdual::collinear(s2, dset));
        }
    }
    auto s3 = build_pg3(3);
    for (const auto& quad : find_quadrangles(s3, 0)) {
        auto d = diagonal_points(s3, quad);
        auto dset = pgdual::make_set(s3, Side::points, {d.d1, d.d2, d.d3});
        CHECK(!pgdual::collinear(s3, dset));
        // the diagonal triple's polar is exactly the carrier plane
        CHECK(pgdual::polar(s3, dset).ids() == std::vector<int>{0});
    }
}

TEST_CASE("diagonal triple is invariant under vertex relabelling") {
    auto s = build_pg3(3);
    Quadrangle q = find_quadrangles(s, 7)[11];
    auto base = diagonal_points(s, q);
    std::set<Id> base_set{base.d1, base.d2, base.d3};

    // the double swap (P0 P1)(P2 P3) keeps each diagonal point in place
    Quadrangle swapped = make_quadrangle(
        s, q.plane, {q.vertices[1], q.vertices[0], q.vertices[3], q.vertices[2]});
    auto d2 = diagonal_points(s, swapped);
    CHECK(d2.d1 == base.d1);
    CHECK(d2.d2 == base.d2);
    CHECK(d2.d3 == base.d3);

    // all 24 orderings give the same diagonal set
    std::array<Id, 4> v = q.vertices;
    std::sort(v.begin(), v.end());
    do {
        auto d = diagonal_points(s, make_quadrangle(s, q.plane, v));
        CHECK(std::set<Id>{d.d1, d.d2, d.d3} == base_set);
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("diagonal points never coincide with the vertices (q = 2, 3)") {
    for (int q : {2, 3}) {
        auto s = build_pg3(q);
        for (Id w = 0; w < s.num_planes(); ++w) {
            for (const auto& quad : find_quadrangles(s, w)) {
                auto d = diagonal_points(s, quad);
                for (Id dd : {d.d1, d.d2, d.d3}) {
                    for (Id vv : quad.vertices) CHECK(dd != vv);
                }
            }
        }
    }
}

TEST_CASE("AXIOM [H] fails everywhere on pg3(2) and holds exhaustively on pg3(3)") {
    auto s2 = build_pg3(2);
    auto r2 = check_axiom_h(s2);
    CHECK(r2.status == AxiomStatus::fails);
    CHECK(r2.checked == 105);     // 15 planes x 7 quadrangles
    CHECK(r2.violations == 105);  // the Fano configuration is universal
    CHECK(r2.exhaustive);
    auto& ce = *r2.counterexample;
    CHECK(ce["plane"] == 0);
    CHECK(ce["vertices"] == std::vector<Id>{1, 3, 7, 13});
    CHECK(ce["diagonals"] == std::vector<Id>{5, 9, 11});
    // the frozen counterexample is the least quadrangle of the least plane
    auto m = oracle::snapshot(s2);
    auto naive_lines = oracle::line_point_sets(m);
    auto naive_quads = oracle::quadrangles_in_plane(m, naive_lines, 0);
    CHECK(naive_quads[0] == std::array<int, 4>{1, 3, 7, 13});
    CHECK(oracle::diagonal_points(m, naive_quads[0]) == std::array<int, 3>{5, 9, 11});

    auto s3 = build_pg3(3);
    auto r3 = check_axiom_h(s3);
    CHECK(r3.status == AxiomStatus::holds);
    CHECK(r3.checked == 9360);  // 40 planes x 234 quadrangles
    CHECK(r3.violations == 0);
}

TEST_CASE("diagonal_planes equals diagonal_points run on the transpose") {
    auto s = build_pg3(3);
    auto dual = pgdual::dual_space(s);
    pgdual::SplitMix64 rng(77);
    for (int k = 0; k < 20; ++k) {
        auto dq = pgdual::sample_dual_quadrangle(s, rng);
        REQUIRE(dq);
        auto deltas = pgdual::diagonal_planes(s, *dq);
        // the same figure in the transpose: faces become vertices, the
        // carrier point becomes a plane, ids carry over unchanged
        auto quad = make_quadrangle(dual, dq->point, dq->faces);
        CHECK(diagonal_points(dual, quad).ids() == deltas);
        // the diagonal planes meet in exactly the carrier point
        auto dset = pgdual::make_set(s, Side::planes, {deltas[0], deltas[1], deltas[2]});
        CHECK(pgdual::polar(s, dset).ids() == std::vector<int>{dq->point});
    }
}

TEST_CASE("the dual checker matches, both directly and through the transpose") {
    for (int q : {2, 3}) {
        auto s = build_pg3(q);
        auto h = check_axiom_h(s);
        auto hd = check_axiom_h_dual(s);
        CHECK(h.status == hd.status);
        CHECK(h.checked == hd.checked);
        CHECK(check_axiom_h(pgdual::dual_space(s)).status == hd.status);
        CHECK(check_axiom_h_dual(pgdual::dual_space(s)).status == h.status);
    }
}

TEST_CASE("H checker is deterministic and worker-count independent") {
    auto s = build_pg3(3);
    auto a = check_axiom_h(s, SearchMode::exhaustive_mode(), 1);
    auto b = check_axiom_h(s, SearchMode::exhaustive_mode(), 4);
    CHECK(pgdual::to_json(a) == pgdual::to_json(b));

    // odd characteristic: 2000 seeded samples on pg3(5) all satisfy [H]
    auto s5 = build_pg3(5);
    auto sa = check_axiom_h(s5, SearchMode::sample(2000, 3));
    auto sb = check_axiom_h(s5, SearchMode::sample(2000, 3));
    CHECK(sa.status == AxiomStatus::holds);
    CHECK(sa.checked == 2000);
    CHECK(!sa.exhaustive);
    CHECK(sa.sample_seed == 3);
    CHECK(pgdual::to_json(sa) == pgdual::to_json(sb));
    CHECK(check_axiom_h_dual(s5, SearchMode::sample(2000, 3)).status == AxiomStatus::holds);
}

TEST_CASE("claims replay on pg3(3): all nine claims pass") {
    auto s = build_pg3(3);
    pgdual::SplitMix64 rng(21);
    int replayed = 0;
    while (replayed < 10) {
        auto dq = pgdual::sample_dual_quadrangle(s, rng);
        REQUIRE(dq);
        Id omega = pgdual::least_nonincident_plane(s, dq->point);
        auto trace = pgdual::replay_harmonicity_claims(s, dq->point, dq->faces, omega);
        CHECK(trace.all_passed());
        for (int c = 1; c <= 9; ++c) CHECK(trace.claim_passed(c));

        // soundness identity from the final claim's proof:
        // omega^h ∩ {delta1,delta2,delta3}^h = {D12} ∩ {P03,P12}^hh
        Id d1 = trace.derived["delta1"].get<Id>();
        Id d2 = trace.derived["delta2"].get<Id>();
        Id d3 = trace.derived["delta3"].get<Id>();
        Id D12 = trace.derived["D12"].get<Id>();
        Id P03 = trace.derived["P03"].get<Id>();
        Id P12 = trace.derived["P12"].get<Id>();
        auto lhs = s.points_on(omega) & s.points_on(d1);
        lhs &= s.points_on(d2);
        lhs &= s.points_on(d3);
        auto line_pts = pgdual::polar_of_bits(
            s, Side::planes, pgdual::polar_pair(s, Side::points, P03, P12));
        auto rhs = pgdual::Bitset::of(s.num_points(), {D12});
        rhs &= line_pts;
        CHECK(lhs == rhs);
        ++replayed;
    }
}

TEST_CASE("claims replay on pg3(2): claims 1-8 pass, claim 9 fails") {
    auto s = build_pg3(2);
    pgdual::SplitMix64 rng(7);
    for (int k = 0; k < 10; ++k) {
        auto dq = pgdual::sample_dual_quadrangle(s, rng);
        REQUIRE(dq);
        Id omega = pgdual::least_nonincident_plane(s, dq->point);
        auto trace = pgdual::replay_harmonicity_claims(s, dq->point, dq->faces, omega);
        for (int c = 1; c <= 8; ++c) CHECK(trace.claim_passed(c));
        CHECK(trace.claim_failed(9));
        CHECK(!trace.all_passed());
    }
}

TEST_CASE("replay preconditions") {
    auto s = build_pg3(3);
    pgdual::SplitMix64 rng(5);
    auto dq = pgdual::sample_dual_quadrangle(s, rng);
    REQUIRE(dq);
    // omega through P is rejected
    Id bad = s.planes_through(dq->point).first();
    CHECK_THROWS_AS(pgdual::replay_harmonicity_claims(s, dq->point, dq->faces, bad),
                    pgdual::usage_error);
    // faces must form a dual quadrangle: repeat one face
    auto faces = dq->faces;
    faces[1] = faces[0];
    Id omega = pgdual::least_nonincident_plane(s, dq->point);
    CHECK_THROWS_AS(pgdual::replay_harmonicity_claims(s, dq->point, faces, omega),
                    pgdual::usage_error);
}

TEST_CASE("degenerate quadrangle requests on non-models") {
    // an imported structure with a 3-point "plane": no quadrangle exists
    auto t = pgdual::IncidenceSpace::from_pairs(4, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 1}});
    CHECK(find_quadrangles(t, 0).empty());
    CHECK(find_quadrangles(t, 1).empty());
    auto r = check_axiom_h(t);
    CHECK(r.status == AxiomStatus::vacuous);
    CHECK(r.checked == 0);
}

TEST_CASE("non-singleton diagonals: thrown for callers, recorded by the checker") {
    // plane 0 holds all four points; planes 1 and 2 split them into pairs.
    // every vertex triple has polar exactly {0}, so {0,1,2,3} is a valid
    // quadrangle, but {0,1}^hh = {0,1} and {2,3}^hh = {2,3} are disjoint:
    // the first diagonal intersection is empty.
    auto s = pgdual::IncidenceSpace::from_pairs(
        4, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 0}, {3, 2}});
    auto quads = find_quadrangles(s, 0);
    REQUIRE(quads.size() == 1);
    CHECK(quads[0].vertices == std::array<Id, 4>{0, 1, 2, 3});
    CHECK_THROWS_AS(diagonal_points(s, quads[0]), pgdual::structure_error);

    // the checker records the degenerate configuration instead of throwing
    auto r = check_axiom_h(s);
    CHECK(r.status == AxiomStatus::fails);
    CHECK(r.checked == 1);
    CHECK(r.violations == 1);
    CHECK((*r.counterexample)["degenerate"] ==
          "diagonal intersection is not a singleton");
}
