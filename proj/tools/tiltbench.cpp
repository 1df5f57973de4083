#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tilt/cli/report.hpp"
#include "tilt/gamma/abstract_algebra.hpp"

using namespace tilt;

namespace {

int fail_input(const std::string& message) {
    std::cerr << "tiltbench: " << message << "\n";
    return cli::kInputError;
}

int write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) return fail_input("cannot write " + out);
    f << text;
    return 0;
}

template <class Body>
int guarded(Body body) {
    try {
        return body();
    } catch (const cli::SchemaError& e) {
        return fail_input(std::string("schema error: ") + e.what());
    } catch (const gamma::RadicalPreconditionViolated& e) {
        return fail_input(std::string(e.what()) + " (suggested prime " + std::to_string(e.suggested_prime()) + ")");
    } catch (const quiver::NotAdmissible& e) {
        return fail_input(std::string("ideal not admissible: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    } catch (const ff::FieldError& e) {
        return fail_input(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks axioms for subcategories add(M) of mod kQ/I over F_p"};
    app.set_version_flag("--version", cli::kVersion);
    app.require_subcommand(1);

    std::string job_path, report_format = "text", out_path, report_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials, max_path_len, resolution_cap;

    auto* check = app.add_subcommand("check", "Run the checks listed in a job file");
    check->add_option("file", job_path, "Job file (JSON)")->required()->check(CLI::ExistingFile);
    check->add_option("--report", report_format, "Report format")->check(CLI::IsMember({"text", "json"}));
    check->add_option("--seed", seed, "Sampling seed (default: job seed, then TILTBENCH_SEED, then 42)");
    check->add_option("--trials", trials, "Random morphisms per sampled check");
    check->add_option("--max-path-len", max_path_len, "Longest path kept when building kQ/I");
    check->add_option("--resolution-cap", resolution_cap, "Cap for dimension computations over End(M)");
    check->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* replay = app.add_subcommand("replay", "Rerun every witness of a JSON report through its definitional test");
    replay->add_option("file", job_path, "Job file (JSON)")->required()->check(CLI::ExistingFile);
    replay->add_option("report", report_path, "JSON report from `check`")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    if (*check) {
        return guarded([&] {
            auto spec = cli::ingest_file(job_path, {max_path_len, resolution_cap});
            auto report = cli::run(spec, {seed, trials});
            const auto text = report_format == "json" ? cli::to_json(report).dump(2) + "\n" : cli::to_text(report);
            if (int rc = write_output(text, out_path)) return rc;
            return cli::exit_code(report);
        });
    }
    return guarded([&] {
        auto spec = cli::ingest_file(job_path);
        const auto x = cli::subcategory(spec);
        std::ifstream in(report_path);
        cli::Json report;
        try {
            report = cli::Json::parse(in);
        } catch (const cli::Json::parse_error&) {
            throw cli::SchemaError("", "report is not valid JSON");
        }
        std::size_t total = 0, reproduced = 0;
        for (const auto& entry : report.at("checks"))
            for (const auto& v : entry.at("verdicts")) {
                if (v.at("witness").is_null()) continue;
                auto w = cli::witness_from_json(x, v["witness"]);
                const bool ok = axioms::replay(x, w);
                ++total;
                reproduced += ok;
                std::cout << v["name"].get<std::string>() << " " << axioms::to_string(w.kind) << " "
                          << (ok ? "reproduced" : "not reproduced") << "\n";
            }
        std::cout << reproduced << "/" << total << " witnesses reproduced\n";
        return reproduced == total ? 0 : 1;
    });
}
