#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgdual/bitset.hpp"
#include "pgdual/errors.hpp"
#include "pgdual/pg3.hpp"

namespace pgdual {

/// A set of element ids on one side of the incidence structure.
struct ElementSet {
    Side side;
    Bitset bits;

    int size() const { return bits.count(); }
    std::vector<int> ids() const { return bits.ids(); }
    bool operator==(const ElementSet& o) const { return side == o.side && bits == o.bits; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }
};

inline ElementSet empty_set(const IncidenceSpace& s, Side side) {
    return ElementSet{side, Bitset(s.count(side))};
}

inline ElementSet make_set(const IncidenceSpace& s, Side side, std::initializer_list<Id> ids) {
    ElementSet x = empty_set(s, side);
    for (Id id : ids) {
        s.check_id(side, id);
        x.bits.set(id);
    }
    return x;
}

inline ElementSet set_from_bits(Side side, Bitset bits) {
    return ElementSet{side, std::move(bits)};
}

/// The polar of X: every element on the opposite side incident with each
/// member of X. The polar of the empty set is everything on the other side
/// (the quantifier over an empty set is vacuously true).
inline ElementSet polar(const IncidenceSpace& s, const ElementSet& x) {
    Side out_side = opposite(x.side);
    Bitset acc = Bitset::all(s.count(out_side));
    x.bits.for_each([&](int id) { acc &= s.incident_set(x.side, id); });
    return ElementSet{out_side, std::move(acc)};
}

/// Polar of a pair without building an ElementSet first; hot-loop helper.
inline Bitset polar_pair(const IncidenceSpace& s, Side side, Id a, Id b) {
    Bitset acc = s.incident_set(side, a);
    acc &= s.incident_set(side, b);
    return acc;
}

inline Bitset polar_of_bits(const IncidenceSpace& s, Side side, const Bitset& bits) {
    Bitset acc = Bitset::all(s.count(opposite(side)));
    bits.for_each([&](int id) { acc &= s.incident_set(side, id); });
    return acc;
}

/// A line: a point set and a plane set that generate each other under the
/// polar operator. In PG(3,q) both sets have q+1 elements. Lines are
/// identified by their point set.
struct Line {
    ElementSet points;
    ElementSet planes;

    bool operator==(const Line& o) const { return points.bits == o.points.bits; }
    bool operator!=(const Line& o) const { return !(*this == o); }
};

namespace detail {

/// Verify that the generated pair of sets really is a line by regenerating
/// it from the least pair on the opposite side. On a model of the axioms
/// this always holds; on imported non-models the violated identity is
/// reported. Only the least opposite pair is tested — enough to expose a
/// non-model deterministically without an existential search.
inline void validate_line_closure(const IncidenceSpace& s, Side gen_side, const Bitset& generated,
                                  const Bitset& polar_set) {
    Side co_side = opposite(gen_side);
    if (polar_set.count() < 2) {
        throw structure_error(std::string("not a line: fewer than two ") + side_name(co_side) +
                              " through the generating pair");
    }
    auto co = polar_set.ids();
    Bitset back = polar_pair(s, co_side, co[0], co[1]);
    if (back != generated) {
        throw structure_error("not a line: the least co-generating pair yields a different " +
                              std::string(side_name(gen_side)) + " set");
    }
    Bitset closure = polar_of_bits(s, gen_side, back);
    if (closure != polar_set) {
        throw structure_error("not a line: polar closure of the regenerated set differs on the " +
                              std::string(side_name(co_side)) + " side");
    }
}

}  // namespace detail

/// The line through two distinct elements: for points A ≠ B it is the pair
/// ({A,B} double-polar, {A,B} polar); for planes symmetrically. On imported
/// structures the polar-closure invariant is verified and a structure_error
/// raised when the input is not a model.
inline Line line_from_pair(const IncidenceSpace& s, Id a, Id b, Side side) {
    s.check_id(side, a);
    s.check_id(side, b);
    if (a == b) throw usage_error("a line needs two distinct elements");

    Bitset co = polar_pair(s, side, a, b);
    Bitset self = polar_of_bits(s, opposite(side), co);
    if (s.provenance() == Provenance::imported) {
        detail::validate_line_closure(s, side, self, co);
    }
    if (side == Side::points) {
        return Line{set_from_bits(Side::points, std::move(self)),
                    set_from_bits(Side::planes, std::move(co))};
    }
    return Line{set_from_bits(Side::points, std::move(co)),
                set_from_bits(Side::planes, std::move(self))};
}

/// Collinearity of a set of points (or of planes). Sets of size ≤ 2 are
/// collinear by convention: a line through any two elements exists in every
/// model, and degenerate cross-join triples must count as collinear.
///
/// On pg3 models a set of ≥ 2 elements is collinear exactly when its polar
/// has at least two elements. On imported structures the double-polar
/// closure test is applied literally: the double polar must be contained in
/// the element set of some line generated from a pair of the polar.
inline bool collinear(const IncidenceSpace& s, const ElementSet& x) {
    int n = x.size();
    if (n <= 2) return true;

    ElementSet h = polar(s, x);
    if (s.provenance() == Provenance::pg3) {
        return h.size() >= 2;
    }
    if (h.size() < 2) return false;
    Bitset closure = polar(s, h).bits;
    auto co = h.ids();
    for (std::size_t i = 0; i < co.size(); ++i) {
        for (std::size_t j = i + 1; j < co.size(); ++j) {
            try {
                Line l = line_from_pair(s, co[i], co[j], h.side);
                const Bitset& carrier = x.side == Side::points ? l.points.bits : l.planes.bits;
                if (carrier.contains_all(closure)) return true;
            } catch (const structure_error&) {
                // this pair does not generate a line; keep looking
            }
        }
    }
    return false;
}

/// The unique common point of two distinct lines, if they share one.
/// Sharing a point and sharing a plane are equivalent in any model; a
/// larger intersection means the input was not a model.
inline std::optional<Id> meet(const IncidenceSpace& s, const Line& m, const Line& n) {
    (void)s;
    if (m == n) throw usage_error("meet of a line with itself");
    Bitset common = m.points.bits & n.points.bits;
    int c = common.count();
    if (c == 0) return std::nullopt;
    if (c > 1) throw structure_error("distinct lines share more than one point");
    return common.first();
}

/// The unique common plane of two distinct lines, if they share one.
inline std::optional<Id> join_plane(const IncidenceSpace& s, const Line& m, const Line& n) {
    (void)s;
    if (m == n) throw usage_error("join of a line with itself");
    Bitset common = m.planes.bits & n.planes.bits;
    int c = common.count();
    if (c == 0) return std::nullopt;
    if (c > 1) throw structure_error("distinct lines share more than one plane");
    return common.first();
}

namespace detail {

inline bool line_lex_less(const Line& a, const Line& b) { return a.points.bits.lex_less(b.points.bits); }

}  // namespace detail

/// The flat pencil Λ(O,ω): every line whose point set contains O and whose
/// plane set contains ω. Requires O and ω incident. Sorted by point set,
/// which orders the pencil by smallest member point id.
inline std::vector<Line> flat_pencil(const IncidenceSpace& s, Id o, Id w) {
    if (!s.incident(o, w)) throw usage_error("flat pencil needs an incident (point, plane) pair");
    std::map<std::vector<int>, Line> dedup;
    s.points_on(w).for_each([&](int p) {
        if (p == o) return;
        Line l = line_from_pair(s, o, static_cast<Id>(p), Side::points);
        if (!l.planes.bits.test(w)) return;
        dedup.emplace(l.points.ids(), std::move(l));
    });
    std::vector<Line> out;
    out.reserve(dedup.size());
    for (auto& [key, line] : dedup) out.push_back(std::move(line));
    return out;
}

/// Every line of the structure, generated from point pairs, deduplicated by
/// point set and sorted lexicographically by point set. Requires a model of
/// the foundation axioms; non-models surface structure_errors.
inline std::vector<Line> all_lines(const IncidenceSpace& s) {
    std::map<std::vector<int>, Line> dedup;
    int n = s.num_points();
    for (Id a = 0; a < n; ++a) {
        for (Id b = a + 1; b < n; ++b) {
            Line l = line_from_pair(s, a, b, Side::points);
            auto key = l.points.ids();
            dedup.emplace(std::move(key), std::move(l));
        }
    }
    std::vector<Line> out;
    out.reserve(dedup.size());
    for (auto& [key, line] : dedup) out.push_back(std::move(line));
    return out;
}

/// The dual structure: point and plane interchanged. Always provenance
/// "imported" — the dual is a bare matrix, whatever the input was.
inline IncidenceSpace dual_space(const IncidenceSpace& s) { return transpose(s); }

/// Least plane not incident with the point; exists in every model by
/// AXIOM [1].
inline Id least_nonincident_plane(const IncidenceSpace& s, Id point) {
    const Bitset& row = s.planes_through(point);
    for (Id w = 0; w < s.num_planes(); ++w) {
        if (!row.test(w)) return w;
    }
    throw structure_error("every plane is incident with the point (AXIOM [1] fails)");
}

}  // namespace pgdual
