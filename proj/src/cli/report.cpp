#include "tilt/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>

namespace tilt::cli {

using axioms::Status;
using axioms::Verdict;
using axioms::Witness;
using axioms::WitnessKind;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const std::optional<std::uint64_t>& job) {
    if (flag) return *flag;
    if (job) return *job;
    if (const char* env = std::getenv("TILTBENCH_SEED")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::char_traits<char>::length(env)) return v;
        } catch (const std::exception&) {
        }
        throw SchemaError("TILTBENCH_SEED", "expected a non-negative integer");
    }
    return kDefaultSeed;
}

approx::SubcategoryX subcategory(const JobSpec& spec) {
    return approx::SubcategoryX::from_modules(spec.algebra, spec.generators);
}

namespace {

std::size_t check_rank(const std::string& check) {
    const auto& names = known_checks();
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), check) - names.begin());
}

std::vector<Verdict> run_check(axioms::Suite& s, const std::string& check, std::size_t d) {
    auto pair = [](const axioms::VerdictPair& p) { return std::vector<Verdict>{p.plain, p.op}; };
    if (check == "A0") return {s.a0()};
    if (check == "A1") return pair(s.a1());
    if (check == "A2") return pair(s.a2());
    if (check == "A3") return pair(s.a3());
    if (check == "d-rigid") return {s.d_rigid(d)};
    if (check == "A4") return pair(s.a4(d));
    if (check == "d-kernels") return pair(s.d_kernels(d));
    if (check == "gen-cogen-ff") return {s.gen_cogen_ff()};
    if (check == "d-precluster") return {s.d_precluster(d)};
    if (check == "d-cluster-tilting") return {s.d_cluster_tilting(d)};
    if (check == "d-abelian") return {s.d_abelian(d)};
    throw std::logic_error("unknown check " + check);
}

Json route_to_json(const axioms::RouteResult& r) {
    return Json{{"route", r.route}, {"status", axioms::to_string(r.status)}, {"detail", r.detail}};
}

std::optional<WitnessKind> kind_from_string(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(WitnessKind::GammaInvariant); ++k)
        if (axioms::to_string(static_cast<WitnessKind>(k)) == s) return static_cast<WitnessKind>(k);
    return std::nullopt;
}

Json module_to_json(const quiver::Representation& m) {
    Json maps = Json::object();
    const auto& arrows = m.algebra()->quiver().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) maps[arrows[a].name] = matrix_to_json(m.map(a));
    return Json{{"dims", m.dims()}, {"maps", maps}};
}

std::vector<std::size_t> parts_from_json(const approx::SubcategoryX& x, const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where, "expected an array of summand indices");
    std::vector<std::size_t> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::size_t>() >= x.size()) throw SchemaError(where, "bad summand index");
        parts.push_back(v.get<std::size_t>());
    }
    return parts;
}

std::string witness_summary(const Witness& w) {
    std::string s = axioms::to_string(w.kind);
    if (w.morphism)
        s += " " + w.morphism->source.module().dim_vector() + "->" + w.morphism->target.module().dim_vector();
    if (w.module) s += " " + w.module->dim_vector();
    return s;
}

}  // namespace

CheckReport run(const JobSpec& spec, const RunOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.job_name = spec.name;
    report.job = spec.source;
    report.seed = resolve_seed(opt.seed, spec.seed);
    report.trials = opt.trials.value_or(spec.trials.value_or(kDefaultTrials));

    std::vector<CheckRequest> requests = spec.checks;
    for (auto& r : requests) {
        if (!r.seed) r.seed = report.seed;
        if (!r.trials) r.trials = report.trials;
    }
    auto key = [](const CheckRequest& r) { return std::tuple(check_rank(r.check), r.d, *r.seed, *r.trials); };
    std::sort(requests.begin(), requests.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    requests.erase(std::unique(requests.begin(), requests.end(), [&](const auto& a, const auto& b) { return key(a) == key(b); }),
                   requests.end());

    if (!requests.empty()) {
        const auto x = subcategory(spec);
        std::map<std::pair<std::uint64_t, std::size_t>, axioms::Suite> suites;
        for (const auto& r : requests) {
            auto it = suites.find({*r.seed, *r.trials});
            if (it == suites.end()) {
                axioms::ClassifyOptions co;
                co.sample.seed = *r.seed;
                co.sample.trials = *r.trials;
                co.cap = spec.resolution_cap;
                co.declared_indecomposables = spec.declared_indecomposables;
                it = suites.emplace(std::pair{*r.seed, *r.trials}, axioms::Suite(x, co)).first;
            }
            ReportEntry e{r.check, r.d, *r.seed, *r.trials, {}, std::nullopt, {}};
            try {
                e.verdicts = run_check(it->second, r.check, r.d);
            } catch (const axioms::RouteDisagreement& ex) {
                e.disagreement = ex.what();
                e.disagreement_routes = ex.routes();
            }
            report.entries.push_back(std::move(e));
        }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

int exit_code(const CheckReport& report) {
    bool failed = false;
    for (const auto& e : report.entries) {
        if (e.disagreement) return kRouteDisagreement;
        for (const auto& v : e.verdicts) failed = failed || !v.pass();
    }
    return failed ? kCheckFailed : kAllPass;
}

std::string overall_status(const CheckReport& report) {
    switch (exit_code(report)) {
        case kAllPass: return "pass";
        case kCheckFailed: return "fail";
        default: return "route-disagreement";
    }
}

Json witness_to_json(const Witness& w) {
    Json j{{"kind", axioms::to_string(w.kind)}, {"d", w.d}, {"indices", w.indices}, {"detail", w.detail}};
    if (w.morphism) {
        Json maps = Json::array();
        for (const auto& m : w.morphism->map.maps()) maps.push_back(matrix_to_json(m));
        j["morphism"] = Json{{"source", w.morphism->source.parts}, {"target", w.morphism->target.parts}, {"maps", maps}};
    }
    if (w.module) j["module"] = module_to_json(*w.module);
    return j;
}

Witness witness_from_json(const approx::SubcategoryX& x, const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw SchemaError("/kind", "missing witness kind");
    auto kind = kind_from_string(j["kind"].get<std::string>());
    if (!kind) throw SchemaError("/kind", "unknown witness kind");
    Witness w{*kind, std::nullopt, std::nullopt, {}, 0, j.value("detail", std::string())};
    if (j.contains("d")) w.d = j["d"].get<std::size_t>();
    if (j.contains("indices")) w.indices = j["indices"].get<std::vector<std::size_t>>();
    if (j.contains("morphism")) {
        const auto& mj = j["morphism"];
        auto src = x.object(parts_from_json(x, mj.at("source"), "/morphism/source"));
        auto tgt = x.object(parts_from_json(x, mj.at("target"), "/morphism/target"));
        const auto& maps = mj.at("maps");
        const std::size_t nv = x.algebra()->quiver().num_vertices();
        if (!maps.is_array() || maps.size() != nv) throw SchemaError("/morphism/maps", "expected one matrix per vertex");
        std::vector<ff::Matrix> ms;
        for (std::size_t v = 0; v < nv; ++v)
            ms.push_back(matrix_from_json(maps[v], tgt.module().dim(v), src.module().dim(v), x.p(),
                                          "/morphism/maps/" + std::to_string(v)));
        try {
            w.morphism = approx::XMorphism{src, tgt, quiver::Morphism(src.module(), tgt.module(), ms)};
        } catch (const quiver::InvalidMorphism& e) {
            throw SchemaError("/morphism", e.what());
        }
    }
    if (j.contains("module")) w.module = parse_module(x.algebra(), j["module"], "/module");
    return w;
}

Json verdict_to_json(const Verdict& v) {
    Json routes = Json::array();
    for (const auto& r : v.routes) routes.push_back(route_to_json(r));
    Json j{{"name", v.name},   {"d", v.d},         {"status", axioms::to_string(v.status)},
           {"route", v.route}, {"seed", v.seed},   {"trials", v.trials},
           {"routes", routes}, {"note", v.note}};
    j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
    return j;
}

Json to_json(const CheckReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json verdicts = Json::array();
        for (const auto& v : e.verdicts) verdicts.push_back(verdict_to_json(v));
        Json j{{"check", e.check}, {"d", e.d}, {"seed", e.seed}, {"trials", e.trials}, {"verdicts", verdicts}};
        if (e.disagreement) {
            Json routes = Json::array();
            for (const auto& r : e.disagreement_routes) routes.push_back(route_to_json(r));
            j["disagreement"] = Json{{"message", *e.disagreement}, {"routes", routes}};
        }
        entries.push_back(std::move(j));
    }
    return Json{{"schema", kReportSchema}, {"tool", "tiltbench"},          {"version", kVersion},
                {"job", report.job},       {"seed", report.seed},          {"trials", report.trials},
                {"status", overall_status(report)}, {"exit_code", exit_code(report)}, {"checks", entries}};
}

std::string to_text(const CheckReport& report) {
    std::ostringstream out;
    out << "tiltbench " << kVersion << "  job " << report.job_name << "  seed " << report.seed << "  trials "
        << report.trials << "\n";
    out << std::left << std::setw(20) << "check" << std::setw(4) << "d" << std::setw(16) << "status" << std::setw(34)
        << "route" << "witness\n";
    for (const auto& e : report.entries) {
        if (e.disagreement) {
            out << std::setw(20) << e.check << std::setw(4) << (e.d ? std::to_string(e.d) : "-") << std::setw(16)
                << "disagreement" << std::setw(34) << "-" << *e.disagreement << "\n";
            continue;
        }
        for (const auto& v : e.verdicts) {
            out << std::setw(20) << v.name << std::setw(4) << (v.d ? std::to_string(v.d) : "-") << std::setw(16)
                << axioms::to_string(v.status) << std::setw(34) << v.route
                << (v.witness ? witness_summary(*v.witness) : "-") << "\n";
        }
    }
    out << "status " << overall_status(report) << "  " << std::fixed << std::setprecision(1) << report.elapsed_ms
        << " ms\n";
    return out.str();
}

}  // namespace tilt::cli
