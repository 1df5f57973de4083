// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "tilt/approx/homological.hpp"
#include "tilt/axioms/classify.hpp"
#include "tilt/cli/report.hpp"
#include "tilt/functors/coherent.hpp"
#include "tilt/gamma/invariants.hpp"

using namespace tilt;
using axioms::Status;
using axioms::Verdict;

namespace {

// Pinned thresholds.
constexpr double kMaxSecondsPerAuslanderCase = 5.0;
constexpr std::uint32_t kAuslanderPrime = 31;
constexpr std::size_t kMinCorrespondenceEntries = 6;
constexpr std::size_t kTrials = 100;
constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kMinNegatives = 2;
constexpr std::size_t kMinRigidEntriesPerD = 4;
constexpr std::size_t kMinFunctors = 50;
constexpr std::size_t kMaxViolations = 0;
const std::vector<std::size_t> kDs{1, 2, 3};

const std::filesystem::path corpus_dir = TILT_CORPUS_DIR;

struct Entry {
    std::string name;
    cli::JobSpec spec;
    approx::SubcategoryX x;
    std::vector<std::size_t> ds;  // d values requested by the job
};

std::vector<Entry> load_corpus() {
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(corpus_dir))
        if (f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    std::vector<Entry> out;
    for (const auto& f : files) {
        auto spec = cli::ingest_file(f);
        std::vector<std::size_t> ds;
        for (const auto& c : spec.checks)
            if (c.d && std::find(ds.begin(), ds.end(), c.d) == ds.end()) ds.push_back(c.d);
        std::sort(ds.begin(), ds.end());
        auto x = cli::subcategory(spec);
        out.push_back({spec.name, std::move(spec), std::move(x), ds});
    }
    return out;
}

axioms::ClassifyOptions options(const Entry& e) {
    axioms::ClassifyOptions o;
    o.sample.trials = kTrials;
    o.sample.seed = kSeed;
    o.cap = e.spec.resolution_cap;
    o.declared_indecomposables = e.spec.declared_indecomposables;
    return o;
}

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;
    void fail(const std::string& why) {
        pass = false;
        problems.push_back(why);
    }
};

void report(int id, const std::string& title, const Outcome& o) {
    std::printf("[%s] %d %s: %s", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    if (!o.problems.empty()) {
        std::printf(" | ");
        for (std::size_t i = 0; i < o.problems.size(); ++i) std::printf("%s%s", i ? "; " : "", o.problems[i].c_str());
    }
    std::printf("\n");
    std::fflush(stdout);
}

Outcome guard(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        Outcome o;
        o.fail(std::string("exception: ") + e.what());
        return o;
    }
}

// k[x]/(x^n) with M = sum of k[x]/(x^i).
approx::SubcategoryX truncated_generator(std::size_t n) {
    using namespace quiver;
    std::vector<std::string> xs(n, "x");
    auto alg = PathAlgebra::build(Quiver::from_names({"1"}, {{"x", "1", "1"}}), {{{1, xs}}}, kAuslanderPrime, n + 1);
    std::vector<Representation> gens;
    for (std::size_t i = 1; i <= n; ++i) {
        Matrix m(i, i, kAuslanderPrime);
        for (std::size_t r = 1; r < i; ++r) m(r, r - 1) = 1;
        gens.push_back(Representation(alg, {i}, {m}));
    }
    return approx::SubcategoryX::from_modules(alg, gens);
}

Outcome criterion1() {
    Outcome o;
    std::string detail;
    for (std::size_t n : {2, 3, 4}) {
        const auto start = std::chrono::steady_clock::now();
        auto x = truncated_generator(n);
        auto form = gamma::endomorphism_quiver(x);
        auto gl = gamma::global_dimension(form.algebra);
        auto dom = gamma::dominant_dimension(form.algebra);
        axioms::ClassifyOptions opt;
        opt.sample.trials = kTrials;
        auto ct = axioms::classify_d_cluster_tilting(x, 1, opt);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string tag = "n=" + std::to_string(n);
        if (ct.status != Status::CertifiedPass) o.fail(tag + " classify_d_cluster_tilting(1) = " + axioms::to_string(ct.status));
        if (gl.value != std::optional<std::size_t>(2)) o.fail(tag + " gldim = " + gl.to_string());
        if (!dom.at_least_value(2)) o.fail(tag + " domdim = " + dom.to_string());
        if (form.algebra->dim() >= kAuslanderPrime) o.fail(tag + " p does not exceed dim Gamma");
        if (secs >= kMaxSecondsPerAuslanderCase) o.fail(tag + " took " + std::to_string(secs) + " s");
        char buf[160];
        std::snprintf(buf, sizeof buf, "%sn=%zu dim Gamma %zu gldim %s domdim %s %s %.2fs", detail.empty() ? "" : ", ", n,
                      form.algebra->dim(), gl.to_string().c_str(), dom.to_string().c_str(),
                      axioms::to_string(ct.status).c_str(), secs);
        detail += buf;
    }
    o.detail = detail;
    return o;
}

Outcome criterion2(const std::vector<Entry>& corpus) {
    Outcome o;
    std::size_t agree = 0;
    for (const auto& e : corpus) {
        axioms::Suite s(e.x, options(e));
        const bool cert = s.certificate().holds();
        const bool dom = s.gamma().dominant.at_least_value(2);
        if (cert == dom) {
            ++agree;
        } else {
            o.fail(e.name + ": certificate " + (cert ? "holds" : "fails") + " but domdim End(M) = " +
                   s.gamma().dominant.to_string());
        }
    }
    if (corpus.size() < kMinCorrespondenceEntries) o.fail("only " + std::to_string(corpus.size()) + " entries");
    o.detail = std::to_string(agree) + "/" + std::to_string(corpus.size()) + " entries agree";
    return o;
}

Outcome criterion3(const std::vector<Entry>& corpus) {
    Outcome o;
    std::size_t agree = 0, negatives = 0;
    for (const auto& e : corpus) {
        try {
            axioms::Suite s(e.x, options(e));
            const bool cert = s.certificate().holds();
            std::vector<const Verdict*> vs{&s.a1().plain, &s.a1().op, &s.a2().plain,
                                           &s.a2().op,    &s.a3().plain, &s.a3().op};
            bool sampled = true;
            bool replayable = true;
            for (const auto* v : vs) {
                if (v->pass()) continue;
                sampled = false;
                replayable = replayable && v->witness && axioms::replay(e.x, *v->witness);
            }
            if (sampled != cert) {
                o.fail(e.name + ": sampled A1-A3op " + (sampled ? "pass" : "fail") + ", certificate " +
                       (cert ? "holds" : "fails"));
                continue;
            }
            ++agree;
            if (!cert) {
                if (replayable) ++negatives;
                else o.fail(e.name + ": witness does not replay");
            }
        } catch (const axioms::RouteDisagreement& ex) {
            o.fail(e.name + ": " + ex.what());
        }
    }
    if (negatives < kMinNegatives) o.fail("only " + std::to_string(negatives) + " negative entries with replayable witnesses");
    o.detail = std::to_string(agree) + "/" + std::to_string(corpus.size()) + " entries agree, " +
               std::to_string(negatives) + " negatives with replayable witnesses";
    return o;
}

Outcome criterion4(const std::vector<Entry>& corpus) {
    Outcome o;
    std::string detail;
    bool found_sequence = false;
    for (std::size_t d : kDs) {
        std::size_t entries = 0, agree = 0;
        for (const auto& e : corpus) {
            axioms::Suite s(e.x, options(e));
            // The equivalence is stated for generating-cogenerating subcategories.
            if (!s.certificate().holds()) continue;
            ++entries;
            const bool ext_zero = !axioms::ext_rigidity_witness(e.x, d);
            try {
                const auto& v = s.d_rigid(d);
                if (v.pass() != ext_zero) {
                    o.fail(e.name + " d=" + std::to_string(d) + ": routes differ");
                    continue;
                }
                ++agree;
                if (!ext_zero && v.witness && v.witness->kind == axioms::WitnessKind::RigidSequence &&
                    axioms::replay(e.x, *v.witness))
                    found_sequence = true;
            } catch (const axioms::RouteDisagreement& ex) {
                o.fail(e.name + ": " + ex.what());
            }
        }
        if (entries < kMinRigidEntriesPerD) o.fail("d=" + std::to_string(d) + ": only " + std::to_string(entries) + " entries");
        detail += (detail.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + " " + std::to_string(agree) + "/" +
                  std::to_string(entries);
    }
    if (!found_sequence) o.fail("no Ext^1 != 0 entry produced a replayable failing sequence");
    o.detail = detail + (found_sequence ? ", failing sequence found and replayed" : "");
    return o;
}

Outcome criterion5(const std::vector<Entry>& corpus) {
    Outcome o;
    std::size_t functors_total = 0, violations = 0, outside = 0, min_per_entry = SIZE_MAX;
    for (const auto& e : corpus) {
        const auto& x = e.x;
        const auto xd = x.dual();
        axioms::Suite suite(x, options(e));
        // Ker psi_tilde = eff X needs X generating-cogenerating in mod Lambda.
        const bool gen_cogen = suite.certificate().holds();
        axioms::SampleOptions so;
        so.trials = kMinFunctors;
        so.seed = kSeed;
        so.max_parts = 2;
        auto maps = axioms::random_morphisms(x, so, "functors");
        for (std::size_t i = 0; i < x.size(); ++i)
            maps.push_back({x.single(i), x.single(i), quiver::Morphism::zero(x.summand(i), x.summand(i))});
        std::size_t count = 0, bad_a = 0, bad_b = 0, bad_c = 0;
        for (const auto& f : maps) {
            functors::CoherentFunctor F{f};
            ++count;
            const bool zero = functors::psi_tilde(F).is_zero();
            if (zero != functors::is_effaceable(x, F)) ++(gen_cogen ? bad_a : outside);
            for (std::size_t i = 0; i < x.size(); ++i) {
                auto lhs = functors::hom_functors(x, F, functors::yoneda(x, x.single(i))).size();
                if (lhs != quiver::hom_dim(functors::psi_tilde(F), x.summand(i))) ++bad_b;
            }
            for (const auto& pt : functors::star_adjunction_terms(x, xd, F)) bad_c += !pt.exact();
        }
        // the sequence for functors on the opposite side
        const auto xdd = xd.dual();
        for (const auto& g : axioms::random_morphisms(xd, so, "functors-op")) {
            ++count;
            for (const auto& pt : functors::star_adjunction_terms(xd, xdd, functors::CoherentFunctor{g}))
                bad_c += !pt.exact();
        }
        if (bad_a + bad_b + bad_c)
            o.fail(e.name + ": " + std::to_string(bad_a) + " (a), " + std::to_string(bad_b) + " (b), " +
                   std::to_string(bad_c) + " (c) violations");
        violations += bad_a + bad_b + bad_c;
        functors_total += count;
        min_per_entry = std::min(min_per_entry, count);
    }
    if (violations > kMaxViolations) o.pass = false;
    if (min_per_entry < kMinFunctors) o.fail("fewer than " + std::to_string(kMinFunctors) + " functors on some entry");
    o.detail = std::to_string(functors_total) + " functors over " + std::to_string(corpus.size()) + " entries (min " +
               std::to_string(min_per_entry) + " per entry), " + std::to_string(violations) + " violations; " +
               std::to_string(outside) + " (a) mismatches on entries that are not generating-cogenerating";
    return o;
}

Outcome criterion6(const std::vector<Entry>& corpus) {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& e : corpus) {
        axioms::Suite s(e.x, options(e));
        std::vector<std::size_t> ds;
        if (e.name == "kx2_generator") ds.push_back(1);
        for (std::size_t d : e.ds) {
            try {
                if (s.d_cluster_tilting(d).pass() && std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
            } catch (const axioms::RouteDisagreement&) {
            }
        }
        for (std::size_t d : ds) {
            const std::string tag = e.name + " d=" + std::to_string(d);
            try {
                const auto& v = s.d_precluster(d);
                ++checked;
                if (v.routes.size() != 3) {
                    o.fail(tag + ": " + v.route);
                    continue;
                }
                for (const auto& r : v.routes)
                    if (axioms::passed(r.status) != axioms::passed(v.routes[0].status))
                        o.fail(tag + ": " + r.route + " differs");
                if (!v.pass()) o.fail(tag + ": not d-precluster");
            } catch (const axioms::RouteDisagreement& ex) {
                o.fail(tag + ": " + ex.what());
            }
        }
    }
    o.detail = std::to_string(checked) + " (entry, d) pairs, three routes each";
    return o;
}

Outcome criterion7(const std::vector<Entry>& corpus) {
    Outcome o;
    std::size_t pairs = 0, agree = 0;
    for (const auto& e : corpus) {
        axioms::Suite s(e.x, options(e));
        for (std::size_t d : e.ds) {
            ++pairs;
            const std::string tag = e.name + " d=" + std::to_string(d);
            try {
                const auto& ab = s.d_abelian(d);
                const auto& ct = s.d_cluster_tilting(d);
                if (ab.pass() == ct.pass()) {
                    ++agree;
                } else {
                    o.fail(tag + ": d-abelian " + axioms::to_string(ab.status) + ", d-cluster-tilting " +
                           axioms::to_string(ct.status) + " (" + ct.route + ")");
                }
            } catch (const axioms::RouteDisagreement& ex) {
                o.fail(tag + ": " + ex.what());
            }
        }
    }
    o.detail = std::to_string(agree) + "/" + std::to_string(pairs) + " (entry, d) pairs agree";
    return o;
}

Outcome criterion8(const std::vector<Entry>& corpus) {
    Outcome o;
    std::size_t witnesses = 0, replayed = 0;
    for (const auto& e : corpus) {
        cli::RunOptions ro{kSeed, kTrials};
        const auto first = cli::to_json(cli::run(e.spec, ro)).dump(2);
        const auto second = cli::to_json(cli::run(e.spec, ro)).dump(2);
        if (first != second) o.fail(e.name + ": reports differ");
        const auto j = cli::Json::parse(first);
        for (const auto& entry : j["checks"])
            for (const auto& v : entry["verdicts"]) {
                if (v["witness"].is_null()) continue;
                ++witnesses;
                auto w = cli::witness_from_json(e.x, v["witness"]);
                if (axioms::replay(e.x, w)) ++replayed;
                else o.fail(e.name + ": " + v["name"].get<std::string>() + " witness does not replay");
            }
    }
    o.detail = std::to_string(corpus.size()) + " byte-identical report pairs, " + std::to_string(replayed) + "/" +
               std::to_string(witnesses) + " witnesses replay";
    return o;
}

}  // namespace

int main() {
    std::vector<Entry> corpus;
    try {
        corpus = load_corpus();
    } catch (const std::exception& e) {
        std::printf("cannot load corpus: %s\n", e.what());
        return 2;
    }
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Auslander correspondence for k[x]/(x^n)", criterion1},
        {"generating-cogenerating iff domdim End(M) >= 2", [&] { return criterion2(corpus); }},
        {"sampled A1-A3op agree with the gen-cogen certificate", [&] { return criterion3(corpus); }},
        {"sampled d-Rigid agrees with Ext vanishing", [&] { return criterion4(corpus); }},
        {"localization suite on coherent functors", [&] { return criterion5(corpus); }},
        {"d-precluster route agreement", [&] { return criterion6(corpus); }},
        {"d-abelian iff d-cluster tilting", [&] { return criterion7(corpus); }},
        {"determinism and witness replay", [&] { return criterion8(corpus); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto o = guard(criteria[i].second);
        report(static_cast<int>(i + 1), criteria[i].first, o);
        failed += !o.pass;
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed ? 1 : 0;
}
