#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgdual/bitset.hpp"
#include "pgdual/errors.hpp"
#include "pgdual/field.hpp"

namespace pgdual {

using Id = std::int32_t;

enum class Side { points, planes };

inline Side opposite(Side s) { return s == Side::points ? Side::planes : Side::points; }

inline const char* side_name(Side s) { return s == Side::points ? "points" : "planes"; }

enum class Provenance { pg3, imported };

/// Homogeneous 4-vector over GF(q) in canonical form: the first nonzero
/// coordinate equals 1. Canonical form makes the representative of each
/// projective class unique, which keeps id assignment deterministic.
struct HVector {
    std::array<FieldElement, 4> coords;
    Side side;

    std::uint32_t modulus() const { return coords[0].modulus(); }

    std::array<std::uint32_t, 4> values() const {
        return {coords[0].value(), coords[1].value(), coords[2].value(), coords[3].value()};
    }

    bool operator==(const HVector& o) const { return side == o.side && values() == o.values(); }
};

/// Scale a nonzero 4-tuple so its first nonzero coordinate is 1.
inline HVector canon(std::array<FieldElement, 4> raw, Side side) {
    std::uint32_t q = raw[0].modulus();
    for (const auto& c : raw) {
        if (c.modulus() != q) throw usage_error("mixed moduli in homogeneous vector");
    }
    int lead = -1;
    for (int i = 0; i < 4; ++i) {
        if (raw[i].value() != 0) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw domain_error("the zero tuple has no projective class");
    FieldElement scale = raw[lead].inverse();
    return HVector{{raw[0] * scale, raw[1] * scale, raw[2] * scale, raw[3] * scale}, side};
}

/// Two element sets with an incidence bit-matrix between them. Immutable
/// after construction; concurrent readers need no synchronization.
///
/// Rows are indexed by point id (bits = incident planes), columns by plane
/// id (bits = incident points). Structures built by build_pg3 carry the
/// canonical coordinate labels; imported structures are bare matrices and
/// may violate every axiom.
class IncidenceSpace {
public:
    static constexpr int kDefaultMaxQ = 7;

    static IncidenceSpace from_pairs(int num_points, int num_planes,
                                     const std::vector<std::pair<Id, Id>>& pairs,
                                     Provenance provenance = Provenance::imported,
                                     std::optional<int> q = std::nullopt) {
        if (num_points < 0 || num_planes < 0) throw usage_error("negative element count");
        IncidenceSpace s;
        s.num_points_ = num_points;
        s.num_planes_ = num_planes;
        s.provenance_ = provenance;
        s.q_ = q;
        s.rows_.assign(static_cast<std::size_t>(num_points), Bitset(num_planes));
        s.cols_.assign(static_cast<std::size_t>(num_planes), Bitset(num_points));
        for (const auto& [p, pi] : pairs) {
            if (p < 0 || p >= num_points || pi < 0 || pi >= num_planes) {
                throw usage_error("incident pair (" + std::to_string(p) + ", " +
                                  std::to_string(pi) + ") out of range");
            }
            s.rows_[static_cast<std::size_t>(p)].set(pi);
            s.cols_[static_cast<std::size_t>(pi)].set(p);
        }
        return s;
    }

    int num_points() const { return num_points_; }
    int num_planes() const { return num_planes_; }

    int count(Side side) const { return side == Side::points ? num_points_ : num_planes_; }

    void check_id(Side side, Id id) const {
        if (id < 0 || id >= count(side)) {
            throw usage_error(std::string(side_name(side)) + " id " + std::to_string(id) +
                              " out of range");
        }
    }

    bool incident(Id point, Id plane) const {
        check_id(Side::points, point);
        check_id(Side::planes, plane);
        return rows_[static_cast<std::size_t>(point)].test(plane);
    }

    const Bitset& planes_through(Id point) const { return rows_[static_cast<std::size_t>(point)]; }
    const Bitset& points_on(Id plane) const { return cols_[static_cast<std::size_t>(plane)]; }

    /// The incidence row of an element: for a point, the set of its planes;
    /// for a plane, the set of its points. Lets the polarity calculus run
    /// identically on both sides.
    const Bitset& incident_set(Side side, Id id) const {
        check_id(side, id);
        return side == Side::points ? rows_[static_cast<std::size_t>(id)]
                                    : cols_[static_cast<std::size_t>(id)];
    }

    Provenance provenance() const { return provenance_; }
    std::optional<int> q() const { return q_; }

    bool has_labels() const { return !point_labels_.empty(); }

    const HVector& point_label(Id id) const {
        check_id(Side::points, id);
        return point_labels_[static_cast<std::size_t>(id)];
    }

    const HVector& plane_label(Id id) const {
        check_id(Side::planes, id);
        return plane_labels_[static_cast<std::size_t>(id)];
    }

    /// Id of the element whose canonical coordinates match, if labelled.
    std::optional<Id> label_id(const HVector& v) const {
        if (!has_labels()) return std::nullopt;
        auto it = label_index_.find(pack(v.values()));
        if (it == label_index_.end()) return std::nullopt;
        return it->second;
    }

    /// All incident pairs, ascending lexicographically by (point, plane).
    std::vector<std::pair<Id, Id>> incident_pairs() const {
        std::vector<std::pair<Id, Id>> out;
        for (Id p = 0; p < num_points_; ++p) {
            rows_[static_cast<std::size_t>(p)].for_each(
                [&](int pi) { out.emplace_back(p, static_cast<Id>(pi)); });
        }
        return out;
    }

    bool same_matrix(const IncidenceSpace& other) const {
        return num_points_ == other.num_points_ && num_planes_ == other.num_planes_ &&
               rows_ == other.rows_;
    }

    friend IncidenceSpace build_pg3(int q, int max_q);
    friend IncidenceSpace transpose(const IncidenceSpace& s);

private:
    static std::uint32_t pack(const std::array<std::uint32_t, 4>& v) {
        return ((v[0] * 256 + v[1]) * 256 + v[2]) * 256 + v[3];
    }

    int num_points_ = 0;
    int num_planes_ = 0;
    Provenance provenance_ = Provenance::imported;
    std::optional<int> q_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::vector<HVector> point_labels_;
    std::vector<HVector> plane_labels_;
    std::unordered_map<std::uint32_t, Id> label_index_;
};

/// Build the concrete model PG(3,q): points and planes are the canonical
/// vectors of GF(q)^4 in lexicographic order of their coordinate tuples, and
/// a point lies on a plane exactly when the dot product vanishes. Rebuilding
/// with the same q yields a bit-identical matrix.
inline IncidenceSpace build_pg3(int q, int max_q = IncidenceSpace::kDefaultMaxQ) {
    if (q < 2 || !is_prime(static_cast<std::uint32_t>(q))) {
        throw usage_error("q = " + std::to_string(q) + " is not prime");
    }
    if (q > max_q) {
        throw usage_error("q = " + std::to_string(q) + " exceeds the configured maximum " +
                          std::to_string(max_q));
    }

    std::uint32_t uq = static_cast<std::uint32_t>(q);
    std::vector<std::array<std::uint32_t, 4>> reps;
    for (std::uint32_t c0 = 0; c0 < uq; ++c0)
        for (std::uint32_t c1 = 0; c1 < uq; ++c1)
            for (std::uint32_t c2 = 0; c2 < uq; ++c2)
                for (std::uint32_t c3 = 0; c3 < uq; ++c3) {
                    std::array<std::uint32_t, 4> t{c0, c1, c2, c3};
                    std::uint32_t lead = c0 != 0 ? c0 : c1 != 0 ? c1 : c2 != 0 ? c2 : c3;
                    if (lead == 1) reps.push_back(t);
                }

    int n = static_cast<int>(reps.size());
    IncidenceSpace s;
    s.num_points_ = n;
    s.num_planes_ = n;
    s.provenance_ = Provenance::pg3;
    s.q_ = q;
    s.rows_.assign(static_cast<std::size_t>(n), Bitset(n));
    s.cols_.assign(static_cast<std::size_t>(n), Bitset(n));
    s.point_labels_.reserve(static_cast<std::size_t>(n));
    s.plane_labels_.reserve(static_cast<std::size_t>(n));
    for (Id i = 0; i < n; ++i) {
        const auto& t = reps[static_cast<std::size_t>(i)];
        std::array<FieldElement, 4> coords{FieldElement(t[0], uq), FieldElement(t[1], uq),
                                           FieldElement(t[2], uq), FieldElement(t[3], uq)};
        s.point_labels_.push_back(HVector{coords, Side::points});
        s.plane_labels_.push_back(HVector{coords, Side::planes});
        s.label_index_.emplace(IncidenceSpace::pack(t), i);
    }
    for (Id p = 0; p < n; ++p) {
        const auto& a = reps[static_cast<std::size_t>(p)];
        for (Id pi = 0; pi < n; ++pi) {
            const auto& b = reps[static_cast<std::size_t>(pi)];
            std::uint32_t dot = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]) % uq;
            if (dot == 0) {
                s.rows_[static_cast<std::size_t>(p)].set(pi);
                s.cols_[static_cast<std::size_t>(pi)].set(p);
            }
        }
    }
    return s;
}

/// Transposed matrix: point ids of the result are the plane ids of the input
/// and vice versa. The result is a bare imported structure.
inline IncidenceSpace transpose(const IncidenceSpace& s) {
    IncidenceSpace d;
    d.num_points_ = s.num_planes_;
    d.num_planes_ = s.num_points_;
    d.provenance_ = Provenance::imported;
    d.q_ = std::nullopt;
    d.rows_ = s.cols_;
    d.cols_ = s.rows_;
    return d;
}

}  // namespace pgdual
