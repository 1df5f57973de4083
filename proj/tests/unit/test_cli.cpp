#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tilt/cli/report.hpp"

using namespace tilt;
using namespace tilt::cli;

namespace {

const std::filesystem::path corpus = TILT_CORPUS_DIR;

Json a2_job(const Json& module, const Json& checks) {
    return Json{{"schema", kJobSchema},
                {"name", "a2"},
                {"p", 31},
                {"quiver", {{"vertices", {"1", "2"}}, {"arrows", {{{"name", "a"}, {"source", "1"}, {"target", "2"}}}}}},
                {"module", module},
                {"checks", checks}};
}

Json projectives() { return Json::array({{{"projective", "1"}}, {{"projective", "2"}}}); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_tool(const std::string& args, const std::string& out, const std::string& env = "") {
    const std::string cmd = env + " \"" + std::string(TILTBENCH_EXE) + "\" " + args + " > \"" + out + "\" 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("corpus jobs parse") {
    auto spec = ingest_file(corpus / "auslander_x3.json");
    CHECK(spec.name == "auslander_x3");
    CHECK(spec.algebra->dim() == 3);
    REQUIRE(spec.generators.size() == 3);
    CHECK(spec.generators[1].dims() == std::vector<std::size_t>{2});
    CHECK(subcategory(spec).size() == 3);
    for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
        CAPTURE(entry.path().string());
        CHECK_NOTHROW(ingest_file(entry.path()));
    }
}

TEST_CASE("schema errors name the field") {
    auto bad = a2_job(projectives(), Json::array());
    bad["p"] = 4;
    CHECK_THROWS_WITH_AS(ingest(bad), doctest::Contains("/p"), SchemaError);

    auto missing = a2_job(Json::array({{{"projective", "3"}}}), Json::array());
    try {
        ingest(missing);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.field() == "/module/0/projective");
    }

    auto arrow = a2_job(projectives(), Json::array());
    arrow["quiver"]["arrows"][0]["target"] = "7";
    CHECK_THROWS_AS(ingest(arrow), SchemaError);

    auto check = a2_job(projectives(), Json::array({{{"check", "A9"}}}));
    CHECK_THROWS_AS(ingest(check), SchemaError);

    auto nod = a2_job(projectives(), Json::array({{{"check", "d-abelian"}}}));
    CHECK_THROWS_WITH_AS(ingest(nod), doctest::Contains("/checks/0/d"), SchemaError);

    try {
        ingest_text("{\n  \"p\": 5,\n  \"quiver\": [\n");
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.line() == 4);
    }

    auto wrong_shape = a2_job(Json::array({{{"dims", {1, 1}}, {"maps", {{"a", {{1, 0}}}}}}}), Json::array());
    CHECK_THROWS_AS(ingest(wrong_shape), SchemaError);
}

TEST_CASE("named module constructions") {
    auto job = a2_job(Json::array({{{"dual_of", {{"projective", "1"}}}},
                                   {{"tau_of", {{"simple", "1"}}}},
                                   {{"syzygy_of", {{"simple", "1"}}}},
                                   {{"dims", {1, 1}}, {"maps", {{"a", {{32}}}}}}}),
                      Json::array());
    auto spec = ingest(job);
    REQUIRE(spec.generators.size() == 4);
    CHECK(spec.generators[0] == quiver::injective(spec.algebra, 0));
    CHECK(spec.generators[1] == quiver::simple(spec.algebra, 1));
    CHECK(spec.generators[2] == quiver::simple(spec.algebra, 1));
    CHECK(spec.generators[3] == quiver::projective(spec.algebra, 0));
    CHECK(subcategory(spec).size() == 3);
}

TEST_CASE("empty check list gives an empty passing report") {
    auto report = run(ingest(a2_job(projectives(), Json::array())));
    CHECK(report.entries.empty());
    CHECK(exit_code(report) == kAllPass);
    CHECK(to_json(report)["checks"].empty());
}

TEST_CASE("additive generator job passes every requested check") {
    auto mod = Json::array({{{"projective", "1"}}, {{"projective", "2"}}, {{"injective", "1"}}});
    auto checks = Json::array({{{"check", "A1"}}, {{"check", "A2"}}, {{"check", "A3"}}, {{"check", "gen-cogen-ff"}},
                               {{"check", "d-cluster-tilting"}, {"d", 1}}, {{"check", "d-abelian"}, {"d", 1}}});
    auto report = run(ingest(a2_job(mod, checks)), {std::nullopt, std::size_t{20}});
    CHECK(exit_code(report) == kAllPass);
    CHECK(overall_status(report) == "pass");
    // checks run in dependency order regardless of the job order
    CHECK(report.entries.front().check == "A1");
    CHECK(report.entries.back().check == "d-abelian");
}

TEST_CASE("M = Lambda with A2 requested fails with a witness") {
    auto report = run(ingest(a2_job(projectives(), Json::array({{{"check", "A2"}}}))), {std::nullopt, std::size_t{20}});
    CHECK(exit_code(report) == kCheckFailed);
    REQUIRE(report.entries.size() == 1);
    const auto& op = report.entries[0].verdicts[1];
    CHECK(op.name == "A2op");
    REQUIRE(op.witness);
    auto j = to_json(report)["checks"][0]["verdicts"][1]["witness"];
    CHECK(j["kind"] == "mono-not-weak-kernel");
    // S2 -> P1: zero at vertex 1 (a 1 x 0 block), identity at vertex 2
    const auto x = subcategory(ingest(a2_job(projectives(), Json::array())));
    const std::size_t s2 = x.summand(0).dim() == 1 ? 0 : 1;
    CHECK(j["morphism"]["source"] == Json::array({s2}));
    CHECK(j["morphism"]["target"] == Json::array({1 - s2}));
    CHECK(j["morphism"]["maps"].dump() == "[[[]],[[1]]]");
}

TEST_CASE("witnesses round-trip through JSON and replay") {
    for (const char* name : {"a2_projectives.json", "a3_projectives.json", "kx3_nonrigid.json"}) {
        CAPTURE(name);
        auto spec = ingest_file(corpus / name);
        auto report = run(spec, {std::nullopt, std::size_t{20}});
        const auto x = subcategory(spec);
        std::size_t seen = 0;
        const auto j = to_json(report);
        for (const auto& entry : j["checks"])
            for (const auto& v : entry["verdicts"]) {
                if (v["witness"].is_null()) continue;
                auto w = witness_from_json(x, v["witness"]);
                CHECK(witness_to_json(w) == v["witness"]);
                CHECK(axioms::replay(x, w));
                ++seen;
            }
        CHECK(seen > 0);
    }
}

TEST_CASE("json output round-trips and is deterministic") {
    auto spec = ingest_file(corpus / "a2_additive.json");
    auto a = to_json(run(spec, {std::nullopt, std::size_t{10}}));
    auto b = to_json(run(spec, {std::nullopt, std::size_t{10}}));
    CHECK(a.dump(2) == b.dump(2));
    CHECK(Json::parse(a.dump()) == a);
    CHECK(a["job"] == spec.source);
    CHECK_FALSE(a.contains("elapsed_ms"));
}

TEST_CASE("text report has one line per verdict") {
    auto spec = ingest_file(corpus / "kx2_generator.json");
    auto report = run(spec, {std::nullopt, std::size_t{10}});
    std::size_t verdicts = 0;
    for (const auto& e : report.entries) verdicts += e.verdicts.size();
    auto text = to_text(report);
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == verdicts + 3);  // header, column names, status
    CHECK(text.find("d-precluster        1   certified-pass") != std::string::npos);
}

TEST_CASE("seed precedence") {
    CHECK(resolve_seed(5, 6) == 5);
    CHECK(resolve_seed(std::nullopt, 6) == 6);
    ::setenv("TILTBENCH_SEED", "77", 1);
    CHECK(resolve_seed(std::nullopt, std::nullopt) == 77);
    ::setenv("TILTBENCH_SEED", "seven", 1);
    CHECK_THROWS_AS(resolve_seed(std::nullopt, std::nullopt), SchemaError);
    ::unsetenv("TILTBENCH_SEED");
    CHECK(resolve_seed(std::nullopt, std::nullopt) == kDefaultSeed);
}

TEST_CASE("tiltbench exit codes and byte-identical reports") {
    const auto out = temp_path("tiltbench_out.txt");
    const auto r1 = temp_path("tiltbench_r1.json");
    const auto r2 = temp_path("tiltbench_r2.json");
    CHECK(run_tool("check \"" + (corpus / "semisimple_2.json").string() + "\" --trials 10", out.string()) == 0);
    CHECK(run_tool("check \"" + (corpus / "a2_projectives.json").string() + "\" --trials 10 --report json --out \"" +
                       r1.string() + "\"",
                   out.string()) == 1);
    CHECK(run_tool("check \"" + (corpus / "a2_projectives.json").string() + "\" --trials 10 --report json --out \"" +
                       r2.string() + "\"",
                   out.string()) == 1);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(run_tool("replay \"" + (corpus / "a2_projectives.json").string() + "\" \"" + r1.string() + "\"", out.string()) == 0);
    CHECK(slurp(out).find("witnesses reproduced") != std::string::npos);

    const auto bad = temp_path("tiltbench_bad.json");
    std::ofstream(bad) << R"({"p": 4, "quiver": {"vertices": ["1"]}, "module": []})";
    CHECK(run_tool("check \"" + bad.string() + "\"", out.string()) == 2);
    CHECK(slurp(out).find("odd prime") != std::string::npos);

    CHECK(run_tool("check \"" + (corpus / "semisimple_2.json").string() + "\" --trials 5 --report json",
                   out.string(), "TILTBENCH_SEED=9") == 0);
    CHECK(Json::parse(slurp(out))["seed"] == 9);
}
