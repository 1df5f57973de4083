#include "tilt/cli/job.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tilt/approx/homological.hpp"
#include "tilt/ff/field.hpp"
#include "tilt/quiver/operations.hpp"

namespace tilt::cli {

using quiver::PathAlgebra;
using quiver::Representation;

SchemaError::SchemaError(const std::string& field, const std::string& message, std::size_t line)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? "" : field + ": ") + message),
      field_(field),
      line_(line) {}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"A0",     "A1", "A2",        "A3",           "d-rigid",          "A4",
                                                "d-kernels", "gen-cogen-ff", "d-precluster", "d-cluster-tilting", "d-abelian"};
    return names;
}

bool check_takes_d(const std::string& check) {
    return check == "d-rigid" || check == "A4" || check == "d-kernels" || check == "d-precluster" ||
           check == "d-cluster-tilting" || check == "d-abelian";
}

namespace {

const Json& member(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + "/" + key, "missing field");
    return *it;
}

std::uint64_t unsigned_value(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw SchemaError(where, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

std::string string_value(const Json& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where, "expected a string");
    return v.get<std::string>();
}

const Json& array_value(const Json& v, const std::string& where) {
    if (!v.is_array()) throw SchemaError(where, "expected an array");
    return v;
}

std::size_t vertex_of(const PathAlgebra::Ptr& alg, const Json& v, const std::string& where) {
    const auto& names = alg->quiver().vertices();
    if (v.is_string()) {
        auto it = std::find(names.begin(), names.end(), v.get<std::string>());
        if (it == names.end()) throw SchemaError(where, "unknown vertex '" + v.get<std::string>() + "'");
        return static_cast<std::size_t>(it - names.begin());
    }
    throw SchemaError(where, "expected a vertex name");
}

std::string pointer(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

quiver::Quiver parse_quiver(const Json& q, const std::string& where) {
    std::vector<std::string> vertices;
    const auto& vs = array_value(member(q, "vertices", where), where + "/vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto name = string_value(vs[i], pointer(where + "/vertices", i));
        if (std::find(vertices.begin(), vertices.end(), name) != vertices.end())
            throw SchemaError(pointer(where + "/vertices", i), "duplicate vertex '" + name + "'");
        vertices.push_back(name);
    }
    if (vertices.empty()) throw SchemaError(where + "/vertices", "at least one vertex required");
    std::vector<quiver::Arrow> arrows;
    if (q.contains("arrows")) {
        const auto& as = array_value(q["arrows"], where + "/arrows");
        for (std::size_t i = 0; i < as.size(); ++i) {
            const auto at = pointer(where + "/arrows", i);
            auto name = string_value(member(as[i], "name", at), at + "/name");
            auto index = [&](const char* key) {
                auto v = string_value(member(as[i], key, at), at + "/" + key);
                auto it = std::find(vertices.begin(), vertices.end(), v);
                if (it == vertices.end()) throw SchemaError(at + "/" + key, "unknown vertex '" + v + "'");
                return static_cast<std::size_t>(it - vertices.begin());
            };
            for (const auto& a : arrows)
                if (a.name == name) throw SchemaError(at + "/name", "duplicate arrow '" + name + "'");
            arrows.push_back({name, index("source"), index("target")});
        }
    }
    return quiver::Quiver(vertices, arrows);
}

std::vector<quiver::Relation> parse_relations(const Json& rels, const quiver::Quiver& q, const std::string& where) {
    std::vector<quiver::Relation> out;
    const auto& rs = array_value(rels, where);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto at = pointer(where, i);
        quiver::Relation rel;
        const auto& terms = array_value(rs[i], at);
        if (terms.empty()) throw SchemaError(at, "empty relation");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const auto tat = pointer(at, t);
            const auto& c = member(terms[t], "coeff", tat);
            if (!c.is_number_integer()) throw SchemaError(tat + "/coeff", "expected an integer");
            quiver::RelationTerm term{c.get<std::int64_t>(), {}};
            const auto& path = array_value(member(terms[t], "path", tat), tat + "/path");
            for (std::size_t k = 0; k < path.size(); ++k) {
                auto name = string_value(path[k], pointer(tat + "/path", k));
                const auto& arrows = q.arrows();
                if (std::none_of(arrows.begin(), arrows.end(), [&](const quiver::Arrow& a) { return a.name == name; }))
                    throw SchemaError(pointer(tat + "/path", k), "unknown arrow '" + name + "'");
                term.path.push_back(name);
            }
            rel.push_back(std::move(term));
        }
        out.push_back(std::move(rel));
    }
    return out;
}

Representation explicit_module(const PathAlgebra::Ptr& alg, const Json& spec, const std::string& where) {
    const auto& q = alg->quiver();
    const auto& dj = array_value(member(spec, "dims", where), where + "/dims");
    if (dj.size() != q.num_vertices())
        throw SchemaError(where + "/dims", "expected " + std::to_string(q.num_vertices()) + " entries");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < dj.size(); ++i) dims.push_back(unsigned_value(dj[i], pointer(where + "/dims", i)));
    const Json empty = Json::object();
    const Json& mj = spec.contains("maps") ? spec["maps"] : empty;
    if (!mj.is_object()) throw SchemaError(where + "/maps", "expected an object keyed by arrow name");
    for (const auto& [name, value] : mj.items()) {
        (void)value;
        const auto& arrows = q.arrows();
        if (std::none_of(arrows.begin(), arrows.end(), [&](const quiver::Arrow& a) { return a.name == name; }))
            throw SchemaError(where + "/maps/" + name, "unknown arrow");
    }
    std::vector<ff::Matrix> maps;
    for (const auto& a : q.arrows()) {
        const auto at = where + "/maps/" + a.name;
        if (!mj.contains(a.name)) {
            maps.emplace_back(dims[a.target], dims[a.source], alg->p());
            continue;
        }
        maps.push_back(matrix_from_json(mj[a.name], dims[a.target], dims[a.source], alg->p(), at));
    }
    try {
        return Representation(alg, dims, maps);
    } catch (const quiver::InvalidRepresentation& e) {
        throw SchemaError(where, e.what());
    }
}

}  // namespace

Json matrix_to_json(const ff::Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ff::Matrix matrix_from_json(const Json& rows, std::size_t nrows, std::size_t ncols, std::uint32_t p,
                            const std::string& where) {
    ff::Matrix m(nrows, ncols, p);
    const auto field = ff::PrimeField::unchecked(p);
    if (!rows.is_array() || rows.size() != nrows)
        throw SchemaError(where, "expected " + std::to_string(nrows) + " rows of " + std::to_string(ncols));
    for (std::size_t i = 0; i < nrows; ++i) {
        if (!rows[i].is_array() || rows[i].size() != ncols)
            throw SchemaError(pointer(where, i), "expected a row of " + std::to_string(ncols) + " integers");
        for (std::size_t j = 0; j < ncols; ++j) {
            const auto& v = rows[i][j];
            if (!v.is_number_integer()) throw SchemaError(pointer(pointer(where, i), j), "expected an integer");
            m(i, j) = field.reduce(v.get<std::int64_t>());
        }
    }
    return m;
}

Representation parse_module(const PathAlgebra::Ptr& alg, const Json& spec, const std::string& where) {
    if (!spec.is_object()) throw SchemaError(where, "expected a module object");
    if (spec.contains("projective")) return quiver::projective(alg, vertex_of(alg, spec["projective"], where + "/projective"));
    if (spec.contains("injective")) return quiver::injective(alg, vertex_of(alg, spec["injective"], where + "/injective"));
    if (spec.contains("simple")) return quiver::simple(alg, vertex_of(alg, spec["simple"], where + "/simple"));
    if (spec.contains("regular")) return quiver::regular(alg);
    if (spec.contains("dual_regular")) return quiver::dual_regular(alg);
    if (spec.contains("dims")) return explicit_module(alg, spec, where);
    if (spec.contains("syzygy_of")) return approx::syzygy(parse_module(alg, spec["syzygy_of"], where + "/syzygy_of"));
    if (spec.contains("cosyzygy_of"))
        return approx::cosyzygy(parse_module(alg, spec["cosyzygy_of"], where + "/cosyzygy_of"));
    if (spec.contains("tau_of")) return approx::tau(parse_module(alg, spec["tau_of"], where + "/tau_of"));
    if (spec.contains("tau_inverse_of"))
        return approx::tau_inverse(parse_module(alg, spec["tau_inverse_of"], where + "/tau_inverse_of"));
    // The inner module lives over the opposite algebra.
    if (spec.contains("dual_of")) return quiver::dualize(parse_module(alg->op(), spec["dual_of"], where + "/dual_of"));
    throw SchemaError(where, "unknown module construction");
}

JobSpec ingest(const Json& job, const IngestOptions& opt) {
    if (!job.is_object()) throw SchemaError("", "job must be a JSON object");
    if (job.contains("schema") && job["schema"] != kJobSchema)
        throw SchemaError("/schema", std::string("expected \"") + kJobSchema + "\"");
    JobSpec spec;
    spec.source = job;
    spec.name = job.contains("name") ? string_value(job["name"], "/name") : "job";
    const auto p = unsigned_value(member(job, "p", ""), "/p");
    if (p < 3 || p >= (1ull << 31) || !ff::is_prime(p)) throw SchemaError("/p", "characteristic must be an odd prime");
    auto q = parse_quiver(member(job, "quiver", ""), "/quiver");
    std::vector<quiver::Relation> rels;
    if (job.contains("relations")) rels = parse_relations(job["relations"], q, "/relations");
    if (job.contains("max_path_len")) spec.max_path_len = unsigned_value(job["max_path_len"], "/max_path_len");
    if (opt.max_path_len) spec.max_path_len = *opt.max_path_len;
    if (job.contains("resolution_cap")) spec.resolution_cap = unsigned_value(job["resolution_cap"], "/resolution_cap");
    if (opt.resolution_cap) spec.resolution_cap = *opt.resolution_cap;
    spec.algebra = PathAlgebra::build(q, rels, static_cast<std::uint32_t>(p), spec.max_path_len);

    const auto& ms = array_value(member(job, "module", ""), "/module");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        auto m = parse_module(spec.algebra, ms[i], pointer("/module", i));
        if (!m.is_zero()) spec.generators.push_back(std::move(m));
    }
    if (job.contains("declared_indecomposables")) {
        const auto& ds = array_value(job["declared_indecomposables"], "/declared_indecomposables");
        for (std::size_t i = 0; i < ds.size(); ++i)
            spec.declared_indecomposables.push_back(parse_module(spec.algebra, ds[i], pointer("/declared_indecomposables", i)));
    }
    if (job.contains("seed")) spec.seed = unsigned_value(job["seed"], "/seed");
    if (job.contains("trials")) spec.trials = unsigned_value(job["trials"], "/trials");

    if (job.contains("checks")) {
        const auto& cs = array_value(job["checks"], "/checks");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const auto at = pointer("/checks", i);
            CheckRequest r;
            r.check = string_value(member(cs[i], "check", at), at + "/check");
            const auto& names = known_checks();
            if (std::find(names.begin(), names.end(), r.check) == names.end())
                throw SchemaError(at + "/check", "unknown check '" + r.check + "'");
            if (check_takes_d(r.check)) {
                r.d = unsigned_value(member(cs[i], "d", at), at + "/d");
                if (r.d == 0) throw SchemaError(at + "/d", "d must be at least 1");
            } else if (cs[i].contains("d")) {
                throw SchemaError(at + "/d", "check '" + r.check + "' takes no d");
            }
            if (cs[i].contains("seed")) r.seed = unsigned_value(cs[i]["seed"], at + "/seed");
            if (cs[i].contains("trials")) r.trials = unsigned_value(cs[i]["trials"], at + "/trials");
            spec.checks.push_back(std::move(r));
        }
    }
    return spec;
}

JobSpec ingest_text(const std::string& text, const IngestOptions& opt) {
    Json job;
    try {
        job = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
        throw SchemaError("", "invalid JSON", line);
    }
    return ingest(job, opt);
}

JobSpec ingest_file(const std::filesystem::path& path, const IngestOptions& opt) {
    std::ifstream in(path);
    if (!in) throw SchemaError("", "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ingest_text(ss.str(), opt);
}

}  // namespace tilt::cli
