// pgdual: build desk-scale models of three-dimensional point-plane
// projective space, decide the incidence axioms on them (or on imported
// structures), and replay the duality proofs as verifiable traces.
//
// Exit codes: 0 = every requested check holds or is vacuous, 1 = some axiom
// or claim fails, 2 = usage, I/O or non-model error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgdual/axioms.hpp"
#include "pgdual/harmonicity.hpp"
#include "pgdual/json_io.hpp"
#include "pgdual/pg3.hpp"
#include "pgdual/polarity.hpp"
#include "pgdual/projectivity.hpp"
#include "pgdual/report.hpp"
#include "pgdual/rng.hpp"
#include "pgdual/stats.hpp"
#include "pgdual/version.hpp"

namespace {

using pgdual::AxiomReport;
using pgdual::AxiomStatus;
using pgdual::ClaimTrace;
using pgdual::Id;
using pgdual::IncidenceSpace;
using pgdual::Json;
using pgdual::SearchMode;

struct ModelSource {
    IncidenceSpace space;
    Json descriptor;
    std::string model_flags;  // normalized flags that select this model
};

ModelSource load_model(std::optional<int> q, const std::string& path) {
    if (q && !path.empty()) throw pgdual::usage_error("pass either --q or --model, not both");
    if (q) {
        IncidenceSpace s = pgdual::build_pg3(*q);
        Json d;
        d["provenance"] = "pg3";
        d["q"] = *q;
        d["num_points"] = s.num_points();
        d["num_planes"] = s.num_planes();
        return ModelSource{std::move(s), std::move(d), "--q " + std::to_string(*q)};
    }
    if (path.empty()) throw pgdual::usage_error("a model is required: --q <prime> or --model <path>");
    std::string text = pgdual::read_file(path);
    IncidenceSpace s = pgdual::from_incidence_json(pgdual::parse_json_text(text));
    Json d;
    d["provenance"] = s.provenance() == pgdual::Provenance::pg3 ? "pg3" : "imported";
    d["q"] = s.q() ? Json(*s.q()) : Json();
    d["file_hash"] = "fnv1a64:" + pgdual::fnv1a64_hex(text);
    d["num_points"] = s.num_points();
    d["num_planes"] = s.num_planes();
    return ModelSource{std::move(s), std::move(d), "--model " + path};
}

/// Large search spaces (q >= 5) default to seeded sampling for the
/// quadruple/quadrangle/hexagon checkers; everything else is exhaustive.
bool defaults_to_sampling(const IncidenceSpace& s) { return s.q() && *s.q() >= 5; }

Json make_envelope(const std::string& command, const Json& model, std::uint64_t seed) {
    Json j;
    j["format"] = "report-v1";
    j["version"] = pgdual::kVersion;
    j["command"] = command;
    j["model"] = model;
    j["seed"] = seed;
    j["generator"] = pgdual::kGeneratorName;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code_for(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports) {
        if (r.status == AxiomStatus::fails) return 1;
    }
    return 0;
}

std::vector<std::string> parse_axiom_list(const std::string& csv) {
    static const std::vector<std::string> canonical = {"1", "2", "3", "4",
                                                       "H", "Hdual", "P", "Pdual"};
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::vector<std::string> out;
    auto want = [&](const std::string& t) {
        for (const auto& have : out) {
            if (have == t) return;
        }
        out.push_back(t);
    };
    for (const auto& t : tokens) {
        if (t == "all") {
            for (const auto& c : canonical) want(c);
        } else {
            bool known = false;
            for (const auto& c : canonical) {
                if (c == t) known = true;
            }
            if (!known) throw pgdual::usage_error("unknown axiom label: " + t);
            want(t);
        }
    }
    if (out.empty()) throw pgdual::usage_error("no axioms requested");
    // canonical order, independent of how the user listed them
    std::vector<std::string> ordered;
    for (const auto& c : canonical) {
        for (const auto& t : out) {
            if (t == c) ordered.push_back(c);
        }
    }
    return ordered;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

// ---------------------------------------------------------------- build ----

int cmd_build(int q, const std::string& out_path) {
    IncidenceSpace s = pgdual::build_pg3(q);
    std::string text = pgdual::to_incidence_json(s).dump() + "\n";
    if (out_path == "-") {
        std::cout << text;
    } else {
        pgdual::write_file(out_path, text);
    }
    return 0;
}

// ---------------------------------------------------------------- check ----

struct CheckFlags {
    std::string axioms = "all";
    bool exhaustive = false;
    std::int64_t samples = 2000;
    bool samples_given = false;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    bool ordered = false;
};

std::vector<AxiomReport> run_checks(const IncidenceSpace& s,
                                    const std::vector<std::string>& axioms,
                                    const CheckFlags& f, unsigned workers) {
    bool sample_default = defaults_to_sampling(s) && !f.exhaustive;
    bool sampled = f.samples_given ? !f.exhaustive : sample_default;
    SearchMode heavy = sampled ? SearchMode::sample(f.samples, f.seed)
                               : SearchMode::exhaustive_mode();

    std::vector<AxiomReport> reports;
    for (const auto& a : axioms) {
        if (a == "1") {
            for (auto& r : pgdual::check_axiom1(s, workers)) reports.push_back(std::move(r));
        } else if (a == "2") {
            auto all = pgdual::check_axiom2(s, false, workers);
            auto distinct = pgdual::check_axiom2(s, true, workers);
            reports.push_back(std::move(all[0]));
            reports.push_back(std::move(distinct[0]));
            reports.push_back(std::move(all[1]));
            reports.push_back(std::move(distinct[1]));
        } else if (a == "3") {
            for (auto& r : pgdual::check_axiom3(s, workers)) reports.push_back(std::move(r));
        } else if (a == "4") {
            reports.push_back(pgdual::check_axiom4(s, heavy, workers));
        } else if (a == "H") {
            reports.push_back(pgdual::check_axiom_h(s, heavy, workers));
        } else if (a == "Hdual") {
            reports.push_back(pgdual::check_axiom_h_dual(s, heavy, workers));
        } else if (a == "P") {
            reports.push_back(pgdual::check_axiom_p(s, heavy, workers, f.ordered));
        } else if (a == "Pdual") {
            reports.push_back(pgdual::check_axiom_p_dual(s, heavy, workers, f.ordered));
        }
    }
    return reports;
}

int cmd_check(const ModelSource& model, const CheckFlags& f) {
    auto started = std::chrono::steady_clock::now();
    unsigned workers = pgdual::resolve_workers(f.jobs);
    auto axioms = parse_axiom_list(f.axioms);
    if (f.exhaustive && defaults_to_sampling(model.space)) {
        std::cerr << "warning: exhaustive search on q >= 5 spaces can take minutes\n";
    }

    auto reports = run_checks(model.space, axioms, f, workers);

    std::string command = "check " + model.model_flags + " --axioms " + join(axioms, ",");
    if (f.exhaustive) command += " --exhaustive";
    bool any_sampled = false;
    for (const auto& r : reports) any_sampled |= !r.exhaustive;
    if (any_sampled) command += " --samples " + std::to_string(f.samples);
    if (f.ordered) command += " --ordered";
    command += " --seed " + std::to_string(f.seed);

    Json out = make_envelope(command, model.descriptor, f.seed);
    Json rj = Json::array();
    for (const auto& r : reports) rj.push_back(pgdual::to_json(r));
    out["reports"] = std::move(rj);
    emit(out);

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed_ms: " << elapsed << "\n";
    return exit_code_for(reports);
}

// ---------------------------------------------------------------- claims ----

struct ClaimsFlags {
    std::string which;
    std::int64_t samples = 100;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    // explicit configuration (optional)
    std::optional<Id> point;
    std::vector<Id> faces;
    std::optional<Id> omega;
    std::vector<Id> planes1;
    std::vector<Id> planes2;
    std::optional<Id> pi;
};

std::vector<ClaimTrace> harmonicity_traces(const IncidenceSpace& s, const ClaimsFlags& f) {
    std::vector<ClaimTrace> traces;
    if (f.point || !f.faces.empty()) {
        if (!f.point || f.faces.size() != 4) {
            throw pgdual::usage_error("an explicit configuration needs --point and four --faces");
        }
        std::array<Id, 4> faces{f.faces[0], f.faces[1], f.faces[2], f.faces[3]};
        Id omega = f.omega ? *f.omega : pgdual::least_nonincident_plane(s, *f.point);
        traces.push_back(pgdual::replay_harmonicity_claims(s, *f.point, faces, omega));
        return traces;
    }
    pgdual::SplitMix64 rng(f.seed);
    for (std::int64_t k = 0; k < f.samples; ++k) {
        auto dq = pgdual::sample_dual_quadrangle(s, rng);
        if (!dq) break;
        Id omega = pgdual::least_nonincident_plane(s, dq->point);
        traces.push_back(pgdual::replay_harmonicity_claims(s, dq->point, dq->faces, omega));
    }
    return traces;
}

std::vector<ClaimTrace> projectivity_traces(const IncidenceSpace& s, const ClaimsFlags& f) {
    std::vector<ClaimTrace> traces;
    if (!f.planes1.empty() || !f.planes2.empty()) {
        if (f.planes1.size() != 3 || f.planes2.size() != 3) {
            throw pgdual::usage_error(
                "an explicit configuration needs three --planes1 and three --planes2");
        }
        pgdual::Line l1 = pgdual::line_from_pair(s, f.planes1[0], f.planes1[1], pgdual::Side::planes);
        pgdual::Line l2 = pgdual::line_from_pair(s, f.planes2[0], f.planes2[1], pgdual::Side::planes);
        if (!l1.planes.bits.test(f.planes1[2]) || !l2.planes.bits.test(f.planes2[2])) {
            throw pgdual::usage_error("--planes1/--planes2 must each be collinear plane triples");
        }
        auto pair = pgdual::make_incident_pair(s, std::move(l1), std::move(l2));
        Id o = pair.o;
        auto dh = pgdual::make_dual_hexagon(s, std::move(pair), f.planes1[0], f.planes1[1],
                                            f.planes1[2], f.planes2[0], f.planes2[1], f.planes2[2]);
        Id pi = f.pi ? *f.pi : pgdual::least_nonincident_plane(s, o);
        traces.push_back(pgdual::replay_section_trace(s, dh, pi));
        return traces;
    }
    auto lines = pgdual::all_lines(s);
    pgdual::SplitMix64 rng(f.seed);
    for (std::int64_t k = 0; k < f.samples; ++k) {
        auto dh = pgdual::sample_dual_hexagon(s, lines, rng);
        if (!dh) break;
        Id pi = pgdual::least_nonincident_plane(s, dh->pair.o);
        traces.push_back(pgdual::replay_section_trace(s, *dh, pi));
    }
    return traces;
}

int cmd_claims(const ModelSource& model, const ClaimsFlags& f) {
    unsigned workers = pgdual::resolve_workers(f.jobs);
    const IncidenceSpace& s = model.space;

    SearchMode a4 = defaults_to_sampling(s) ? SearchMode::sample(2000, f.seed)
                                            : SearchMode::exhaustive_mode();
    auto foundation = pgdual::check_foundation(s, a4, workers);
    std::string command = "claims " + model.model_flags + " --which " + f.which + " --samples " +
                          std::to_string(f.samples) + " --seed " + std::to_string(f.seed);
    Json out = make_envelope(command, model.descriptor, f.seed);

    if (auto failing = pgdual::failing_foundation(foundation)) {
        out["error"] = "not a model of the foundation axioms";
        out["failing_axiom"] = failing->axiom;
        out["reports"] = Json::array({pgdual::to_json(*failing)});
        emit(out);
        std::cerr << "error: AXIOM [" << failing->axiom << "] fails on this structure\n";
        return 2;
    }

    std::vector<ClaimTrace> traces;
    if (f.which == "harmonicity") {
        traces = harmonicity_traces(s, f);
    } else if (f.which == "projectivity") {
        traces = projectivity_traces(s, f);
    } else {
        throw pgdual::usage_error("--which must be harmonicity or projectivity");
    }

    Json tj = Json::array();
    bool all_pass = true;
    for (const auto& t : traces) {
        all_pass &= t.all_passed();
        tj.push_back(pgdual::to_json(t));
    }
    out["traces"] = std::move(tj);
    if (traces.empty()) out["note"] = "no configurations exist in this model";
    emit(out);
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- stats ----

int cmd_stats(const ModelSource& model, unsigned jobs) {
    unsigned workers = pgdual::resolve_workers(jobs);
    Json out;
    out["format"] = "report-v1";
    out["version"] = pgdual::kVersion;
    out["command"] = "stats " + model.model_flags;
    out["model"] = model.descriptor;
    out["stats"] = pgdual::compute_stats(model.space, workers);
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point-plane incidence geometry: models, axiom checks, proof traces"};
    app.require_subcommand(1);

    // build
    int build_q = 0;
    std::string build_out = "-";
    auto* build = app.add_subcommand("build", "write a pg3(q) model as incidence-v1 JSON");
    build->add_option("--q", build_q, "prime order of the coordinate field")->required();
    build->add_option("--out", build_out, "output path, or - for stdout");

    // shared model selection
    std::optional<int> q;
    std::string model_path;
    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "use the model pg3(q)");
        cmd->add_option("--model", model_path, "load an incidence-v1 JSON file");
    };

    // check
    CheckFlags cf;
    auto* check = app.add_subcommand("check", "run axiom checkers and print a JSON report");
    add_model_flags(check);
    check->add_option("--axioms", cf.axioms, "comma list from 1,2,3,4,H,Hdual,P,Pdual or all");
    auto* ex_flag = check->add_flag("--exhaustive", cf.exhaustive, "force exhaustive search");
    check->add_option("--samples", cf.samples, "sample size for the heavy checkers")
        ->excludes(ex_flag);
    check->add_option("--seed", cf.seed, "seed for the documented generator");
    check->add_option("--jobs", cf.jobs, "worker threads (0 = auto)");
    check->add_flag("--ordered", cf.ordered, "enumerate hexagons without symmetry reduction");

    // claims
    ClaimsFlags lf;
    auto* claims = app.add_subcommand("claims", "replay the duality proofs as traces");
    add_model_flags(claims);
    claims->add_option("--which", lf.which, "harmonicity or projectivity")->required();
    claims->add_option("--samples", lf.samples, "number of seeded configurations");
    claims->add_option("--seed", lf.seed, "seed for the documented generator");
    claims->add_option("--jobs", lf.jobs, "worker threads (0 = auto)");
    std::optional<Id> point_opt, omega_opt, pi_opt;
    claims->add_option("--point", point_opt, "explicit configuration: the point P");
    claims->add_option("--faces", lf.faces, "explicit configuration: four plane ids")->delimiter(',');
    claims->add_option("--omega", omega_opt, "section plane for harmonicity (default: least)");
    claims->add_option("--planes1", lf.planes1, "three collinear plane ids on line 1")->delimiter(',');
    claims->add_option("--planes2", lf.planes2, "three collinear plane ids on line 2")->delimiter(',');
    claims->add_option("--pi", pi_opt, "section plane for projectivity (default: least)");

    // stats
    unsigned stats_jobs = 0;
    auto* stats = app.add_subcommand("stats", "print model statistics");
    add_model_flags(stats);
    stats->add_option("--jobs", stats_jobs, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_q, build_out);
        ModelSource model = load_model(q, model_path);
        if (check->parsed()) {
            cf.samples_given = check->count("--samples") > 0;
            return cmd_check(model, cf);
        }
        if (claims->parsed()) {
            lf.point = point_opt;
            lf.omega = omega_opt;
            lf.pi = pi_opt;
            return cmd_claims(model, lf);
        }
        if (stats->parsed()) return cmd_stats(model, stats_jobs);
        return 2;
    } catch (const pgdual::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pgdual::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pgdual::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pgdual::structure_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
