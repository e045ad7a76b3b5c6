#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgdual/bitset.hpp"
#include "pgdual/errors.hpp"

namespace pgdual {

/// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

namespace detail {

inline Json bits_json(const Bitset& b) { return Json(b.ids()); }

}  // namespace detail

enum class AxiomStatus { holds, fails, vacuous };

inline const char* to_string(AxiomStatus s) {
    switch (s) {
        case AxiomStatus::holds: return "holds";
        case AxiomStatus::fails: return "fails";
        case AxiomStatus::vacuous: return "vacuous";
    }
    return "?";
}

/// Outcome of one axiom checker. `checked` counts the configurations the
/// quantifier ranges over (or the sample size); a report fails exactly when
/// it carries a counterexample, and an exhaustive counterexample is the
/// lexicographically least violating tuple.
struct AxiomReport {
    std::string axiom;
    std::optional<std::string> quantifier;  // axiom 2 only: all_pairs | distinct_pairs
    AxiomStatus status = AxiomStatus::holds;
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    bool exhaustive = true;
    std::optional<std::uint64_t> sample_seed;
    std::optional<Json> counterexample;
};

inline Json to_json(const AxiomReport& r) {
    Json j;
    j["axiom"] = r.axiom;
    if (r.quantifier) j["quantifier"] = *r.quantifier;
    j["status"] = to_string(r.status);
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["exhaustive"] = r.exhaustive;
    if (r.sample_seed) j["sample_seed"] = *r.sample_seed;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

enum class StepStatus { pass, fail, skipped };

inline const char* to_string(StepStatus s) {
    switch (s) {
        case StepStatus::pass: return "pass";
        case StepStatus::fail: return "fail";
        case StepStatus::skipped: return "skipped";
    }
    return "?";
}

/// One evaluated set identity inside a claim replay. `rhs` is null for bare
/// cardinality assertions ("this polar is a singleton").
struct ClaimStep {
    int claim = 0;
    std::string identity;
    Json lhs;
    Json rhs;
    StepStatus status = StepStatus::pass;
};

/// Replay of a proof: the input configuration, every evaluated step in claim
/// order, and the derived element ids. A failing step halts the claims that
/// depend on it; those are recorded as skipped.
struct ClaimTrace {
    Json config;
    std::vector<ClaimStep> steps;
    Json derived;

    bool all_passed() const {
        for (const auto& s : steps) {
            if (s.status != StepStatus::pass) return false;
        }
        return !steps.empty();
    }

    bool claim_passed(int claim) const {
        bool any = false;
        for (const auto& s : steps) {
            if (s.claim != claim) continue;
            any = true;
            if (s.status != StepStatus::pass) return false;
        }
        return any;
    }

    bool claim_failed(int claim) const {
        for (const auto& s : steps) {
            if (s.claim == claim && s.status == StepStatus::fail) return true;
        }
        return false;
    }
};

inline Json to_json(const ClaimTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json j;
        j["claim"] = s.claim;
        j["identity"] = s.identity;
        j["lhs"] = s.lhs;
        j["rhs"] = s.rhs;
        j["status"] = to_string(s.status);
        steps.push_back(std::move(j));
    }
    Json j;
    j["config"] = t.config;
    j["steps"] = std::move(steps);
    j["derived"] = t.derived;
    j["all_passed"] = t.all_passed();
    return j;
}

/// Canonical report order: the axiom label taxonomy, verbatim.
inline const std::vector<std::string>& axiom_label_order() {
    static const std::vector<std::string> order = {"1p", "1π", "2p", "2π", "3p", "3π",
                                                   "4",  "H",  "Hdual", "P", "Pdual"};
    return order;
}

inline int axiom_label_rank(const std::string& label) {
    const auto& order = axiom_label_order();
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == label) return static_cast<int>(i);
    }
    return static_cast<int>(order.size());
}

}  // namespace pgdual
