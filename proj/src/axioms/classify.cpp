#include "tilt/axioms/classify.hpp"

#include "tilt/approx/approximation.hpp"
#include "tilt/approx/homological.hpp"

namespace tilt::axioms {

using approx::rank_after;
using approx::rank_before;

namespace {

std::string summand_name(std::size_t i) { return "X" + std::to_string(i + 1); }

Witness module_witness(WitnessKind kind, const Representation& a, std::vector<std::size_t> indices, std::size_t d,
                       std::string detail) {
    return Witness{kind, std::nullopt, a, std::move(indices), d, std::move(detail)};
}

Witness index_witness(WitnessKind kind, std::vector<std::size_t> indices, std::size_t d, std::string detail) {
    return Witness{kind, std::nullopt, std::nullopt, std::move(indices), d, std::move(detail)};
}

Verdict base_verdict(std::string name, std::size_t d, const SampleOptions& opt) {
    Verdict v;
    v.name = std::move(name);
    v.d = d;
    v.seed = opt.seed;
    v.trials = opt.trials;
    return v;
}

Witness precondition_witness(const GenCogenCertificate& c) {
    if (c.missing_projective)
        return index_witness(WitnessKind::MissingProjective, {*c.missing_projective}, 0,
                             "P(" + std::to_string(*c.missing_projective + 1) + ") is not in add(M)");
    return index_witness(WitnessKind::MissingInjective, {*c.missing_injective}, 0,
                         "I(" + std::to_string(*c.missing_injective + 1) + ") is not in add(M)");
}

Verdict precondition_failure(Verdict v, const std::string& route, Witness w) {
    v.status = Status::Fail;
    v.route = route;
    v.routes.push_back({route, Status::Fail, w.detail});
    v.witness = std::move(w);
    return v;
}

// First witness over a module list, or none.
template <class Test>
std::optional<Witness> first_witness(const std::vector<Representation>& modules, Test test) {
    for (const auto& a : modules)
        if (auto w = test(a)) return w;
    return std::nullopt;
}

std::string gamma_summary(const GammaData& g) {
    return "gldim " + g.global.to_string() + ", domdim " + g.dominant.to_string() + ", injdim " +
           g.selfinjective.left.to_string() + "/" + g.selfinjective.right.to_string();
}

}  // namespace

GammaData gamma_data(const SubcategoryX& x, std::size_t cap) {
    auto form = gamma::endomorphism_quiver(x);
    return {gamma::global_dimension(form.algebra, cap), gamma::dominant_dimension(form.algebra, cap),
            gamma::selfinjective_dimension(form.algebra, cap), form.algebra->dim()};
}

TestSet make_test_set(const SubcategoryX& x, const std::vector<Representation>& declared) {
    if (declared.empty()) return {generated_test_modules(x), false};
    auto all = declared;
    for (const auto& s : x.summands()) all.push_back(s);
    return {indecomposable_classes(all), true};
}

std::optional<Witness> test_tau_d(const SubcategoryX& x, std::size_t a, std::size_t d) {
    auto t = approx::strip_injectives(approx::tau_d(x.summand(a), d));
    if (!t.is_zero() && !x.contains(t))
        return index_witness(WitnessKind::TauDNotInX, {a}, d,
                             "tau_d(" + summand_name(a) + ") has dimension vector " + t.dim_vector() +
                                 " and is not in add(M) modulo injectives");
    auto u = approx::strip_projectives(approx::tau_d_inverse(x.summand(a), d));
    if (!u.is_zero() && !x.contains(u))
        return index_witness(WitnessKind::TauDInverseNotInX, {a}, d,
                             "tau_d^-(" + summand_name(a) + ") has dimension vector " + u.dim_vector() +
                                 " and is not in add(M) modulo projectives");
    return std::nullopt;
}

std::optional<Witness> test_approximation_sequence(const SubcategoryX& x, const Representation& a, std::size_t d,
                                                   bool left_side) {
    Representation cur = a;
    XObject last = x.zero_object();
    Morphism end;
    for (std::size_t k = 0; k < d; ++k) {
        if (!left_side) {
            auto ap = approx::right_approximation(x, cur, true);
            auto ker = quiver::kernel(ap.map);
            last = ap.object;
            end = ker.inclusion;
            cur = ker.module;
        } else {
            auto ap = approx::left_approximation(x, cur, true);
            auto cok = quiver::cokernel(ap.map);
            last = ap.object;
            end = cok.projection;
            cur = cok.module;
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!left_side) {
            // f_{d+1}: M' -> X_d must be a left approximation
            if (rank_before(x.hom_to_summand(last, i), end) != quiver::hom_dim(cur, x.summand(i)))
                return module_witness(WitnessKind::ApproximationSequence, a, {0, i}, d,
                                      "(a): f_{d+1} is not a left approximation against " + summand_name(i));
        } else {
            // f_1: X_1 -> A must be a right approximation
            if (rank_after(x.hom_from_summand(i, last), end) != quiver::hom_dim(x.summand(i), cur))
                return module_witness(WitnessKind::ApproximationSequence, a, {1, i}, d,
                                      "(b): f_1 is not a right approximation against " + summand_name(i));
        }
    }
    return std::nullopt;
}

std::optional<Witness> test_resolution(const SubcategoryX& x, const Representation& a, std::size_t d, bool co) {
    Representation cur = a;
    for (std::size_t k = 1; k < d; ++k) {
        if (!co) {
            cur = quiver::kernel(approx::right_approximation(x, cur, true).map).module;
        } else {
            cur = quiver::cokernel(approx::left_approximation(x, cur, true).map).module;
        }
    }
    if (!cur.is_zero() && !x.contains(cur))
        return module_witness(WitnessKind::ResolutionNotInX, a, {co ? 1u : 0u}, d,
                              std::string(co ? "coresolution" : "resolution") + " of the module with dimension vector " +
                                  a.dim_vector() + " does not end in add(M) after " + std::to_string(d) + " terms");
    return std::nullopt;
}

std::optional<Witness> test_perp(const SubcategoryX& x, const Representation& a, std::size_t d) {
    const bool in = a.is_zero() || x.contains(a);
    bool left = true, right = true;
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (left && approx::ext_dim(a, x.summand(b), i) != 0) left = false;
            if (right && approx::ext_dim(x.summand(b), a, i) != 0) right = false;
        }
    auto text = [&](const char* side, bool perp) {
        return std::string("module ") + a.dim_vector() + (in ? " in" : " not in") + " add(M) but" +
               (perp ? " in " : " not in ") + side + " perpendicular category";
    };
    if (left != in) return module_witness(WitnessKind::PerpMismatch, a, {0}, d, text("the left", left));
    if (right != in) return module_witness(WitnessKind::PerpMismatch, a, {1}, d, text("the right", right));
    return std::nullopt;
}

Suite::Suite(SubcategoryX x, ClassifyOptions opt) : x_(std::move(x)), opt_(std::move(opt)) {}

const GenCogenCertificate& Suite::certificate() {
    if (!cert_) cert_ = gen_cogen_certificate(x_);
    return *cert_;
}

const GammaData& Suite::gamma() {
    if (!gamma_) gamma_ = gamma_data(x_, opt_.cap);
    return *gamma_;
}

const TestSet& Suite::tests() {
    if (!tests_) tests_ = make_test_set(x_, opt_.declared_indecomposables);
    return *tests_;
}

const Verdict& Suite::a0() {
    if (!a0_) a0_ = check_A0(x_, opt_.sample);
    return *a0_;
}

const VerdictPair& Suite::a1() {
    if (!a1_) a1_ = check_A1_A1op(x_, opt_.sample);
    return *a1_;
}

const VerdictPair& Suite::a2() {
    if (!a2_) a2_ = check_A2_A2op(x_, opt_.sample);
    return *a2_;
}

const VerdictPair& Suite::a3() {
    if (!a3_) a3_ = check_A3_A3op(x_, opt_.sample);
    return *a3_;
}

const Verdict& Suite::d_rigid(std::size_t d) {
    auto it = rigid_.find(d);
    if (it == rigid_.end()) it = rigid_.emplace(d, check_d_rigid(x_, d, opt_.sample)).first;
    return it->second;
}

const VerdictPair& Suite::a4(std::size_t d) {
    auto it = a4_.find(d);
    if (it == a4_.end()) it = a4_.emplace(d, check_A4d(x_, d, opt_.sample)).first;
    return it->second;
}

const VerdictPair& Suite::d_kernels(std::size_t d) {
    auto it = kernels_.find(d);
    if (it == kernels_.end()) it = kernels_.emplace(d, check_d_kernels(x_, d, opt_.sample)).first;
    return it->second;
}

const Verdict& Suite::gen_cogen_ff() {
    if (gen_cogen_) return *gen_cogen_;
    Verdict v = base_verdict("gen-cogen-ff", 0, opt_.sample);
    const auto& c = certificate();
    v.route = "gen-cogen certificate";
    if (c.holds()) {
        v.status = Status::CertifiedPass;
        v.routes.push_back({v.route, Status::CertifiedPass, "Lambda and D Lambda in add(M)"});
    } else {
        v.status = Status::Fail;
        v.witness = precondition_witness(c);
        v.routes.push_back({v.route, Status::Fail, v.witness->detail});
    }
    const auto& g = gamma();
    const bool dom = g.dominant.at_least_value(2);
    v.routes.push_back({"domdim Gamma >= 2", dom ? Status::CertifiedPass : Status::Fail,
                        "domdim Gamma = " + g.dominant.to_string()});
    std::string failing;
    for (const VerdictPair* p : {&a1(), &a2(), &a3()})
        for (const Verdict* a : {&p->plain, &p->op})
            if (!a->pass()) failing += (failing.empty() ? "" : ", ") + a->name;
    const bool sampled = failing.empty();
    v.routes.push_back({"sampled A1-A3op", sampled ? Status::SampledPass : Status::Fail,
                        sampled ? "all six axioms pass" : "failing: " + failing});
    std::string disagree;
    if (dom != c.holds()) disagree += " domdim route";
    if (sampled != c.holds()) disagree += " sampled route";
    if (!disagree.empty()) v.note = "routes disagree with the certificate:" + disagree;
    gen_cogen_ = std::move(v);
    return *gen_cogen_;
}

const Verdict& Suite::d_precluster(std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    if (auto it = precluster_.find(d); it != precluster_.end()) return it->second;
    Verdict v = base_verdict("d-precluster", d, opt_.sample);
    auto store = [&](Verdict out) -> const Verdict& { return precluster_.emplace(d, std::move(out)).first->second; };
    if (!certificate().holds()) return store(precondition_failure(std::move(v), "precondition: gen-cogen", precondition_witness(certificate())));
    if (auto ext = ext_rigidity_witness(x_, d)) return store(precondition_failure(std::move(v), "precondition: d-rigid", *ext));

    std::optional<Witness> tau;
    for (std::size_t a = 0; a < x_.size() && !tau; ++a) tau = test_tau_d(x_, a, d);
    RouteResult tau_route{"tau_d membership", tau ? Status::Fail : Status::CertifiedPass,
                          tau ? tau->detail : "tau_d and tau_d^- preserve add(M) stably"};

    const auto& g = gamma();
    const bool gam = g.dominant.at_least_value(d + 1) && g.selfinjective.left.at_most(d + 1) &&
                     g.selfinjective.right.at_most(d + 1);
    RouteResult gamma_route{"Gamma invariants", gam ? Status::CertifiedPass : Status::Fail,
                            "domdim >= " + std::to_string(d + 1) + " and injdim <= " + std::to_string(d + 1) +
                                " required; " + gamma_summary(g)};

    std::vector<Representation> modules = tests().modules;
    SampleOptions few = opt_.sample;
    few.trials = std::max<std::size_t>(opt_.sample.trials / 4, 1);
    for (const auto& f : random_morphisms(x_, few, "d-precluster/" + std::to_string(d)))
        modules.push_back(quiver::cokernel(f.map).module);
    std::optional<Witness> seq;
    for (const auto& a : modules) {
        if (!seq) seq = test_approximation_sequence(x_, a, d, false);
        if (!seq) seq = test_approximation_sequence(x_, a, d, true);
        if (seq) break;
    }
    const bool exhaustive = tests().complete;
    RouteResult seq_route{"approximation sequences",
                          seq ? Status::Fail : (exhaustive ? Status::CertifiedPass : Status::SampledPass),
                          seq ? seq->detail : std::to_string(modules.size()) + " modules"};

    v.routes = {tau_route, gamma_route, seq_route};
    const bool tau_ok = !tau;
    if (tau_ok != gam || (seq && tau_ok) || (!seq && !tau_ok && exhaustive)) throw RouteDisagreement("d-precluster", v.routes);
    if (!seq && !tau_ok) v.note = "approximation-sequence sampling found no witness";
    v.route = "tau_d membership";
    v.status = tau_ok ? Status::CertifiedPass : Status::Fail;
    if (tau) v.witness = tau;
    return store(std::move(v));
}

const Verdict& Suite::d_cluster_tilting(std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    if (auto it = cluster_tilting_.find(d); it != cluster_tilting_.end()) return it->second;
    Verdict v = base_verdict("d-cluster-tilting", d, opt_.sample);
    auto store = [&](Verdict out) -> const Verdict& { return cluster_tilting_.emplace(d, std::move(out)).first->second; };
    if (!certificate().holds()) return store(precondition_failure(std::move(v), "precondition: gen-cogen", precondition_witness(certificate())));

    const auto& g = gamma();
    const bool gam = g.global.at_most(d + 1) && g.dominant.at_least_value(d + 1);
    RouteResult gamma_route{"Gamma invariants", gam ? Status::CertifiedPass : Status::Fail,
                            "gldim <= " + std::to_string(d + 1) + " and domdim >= " + std::to_string(d + 1) +
                                " required; " + gamma_summary(g)};

    const auto& ts = tests();
    const Status test_pass = ts.complete ? Status::CertifiedPass : Status::SampledPass;
    std::optional<Witness> res = ext_rigidity_witness(x_, d);
    if (!res)
        res = first_witness(ts.modules, [&](const Representation& a) {
            auto w = test_resolution(x_, a, d, false);
            return w ? w : test_resolution(x_, a, d, true);
        });
    RouteResult res_route{"resolutions", res ? Status::Fail : test_pass,
                          res ? res->detail : std::to_string(ts.modules.size()) + " test modules"};
    auto perp = first_witness(ts.modules, [&](const Representation& a) { return test_perp(x_, a, d); });
    RouteResult perp_route{"perpendicular categories", perp ? Status::Fail : test_pass,
                           perp ? perp->detail : std::to_string(ts.modules.size()) + " test modules"};

    v.routes = {gamma_route, res_route, perp_route};
    for (const auto* w : {&res, &perp}) {
        const bool route_ok = !w->has_value();
        if (route_ok != gam && (!route_ok || ts.complete)) throw RouteDisagreement("d-cluster-tilting", v.routes);
        if (route_ok && !gam) v.note = "test set found no witness";
    }
    v.route = "Gamma invariants";
    v.status = gam ? Status::CertifiedPass : Status::Fail;
    if (!gam) {
        if (res) v.witness = res;
        else if (perp) v.witness = perp;
        else v.witness = index_witness(WitnessKind::GammaInvariant, {0}, d, gamma_route.detail);
    }
    return store(std::move(v));
}

const Verdict& Suite::d_abelian(std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    if (auto it = abelian_.find(d); it != abelian_.end()) return it->second;
    Verdict v = base_verdict("d-abelian", d, opt_.sample);
    std::vector<const Verdict*> parts{&a0(), &a1().plain, &a1().op, &a2().plain, &a2().op, &a3().plain,
                                      &a3().op, &d_rigid(d), &d_kernels(d).plain, &d_kernels(d).op};
    v.status = Status::CertifiedPass;
    v.route = "conjunction";
    for (const Verdict* p : parts) {
        v.routes.push_back({p->name, p->status, p->note});
        if (p->status == Status::Fail && v.status != Status::Fail) {
            v.status = Status::Fail;
            v.witness = p->witness;
            v.route = "conjunction: " + p->name;
        } else if (p->status == Status::SampledPass && v.status == Status::CertifiedPass) {
            v.status = Status::SampledPass;
        }
    }
    if (certificate().holds()) cross_check_abelian_cluster_tilting(v, d_cluster_tilting(d), true);
    return abelian_.emplace(d, std::move(v)).first->second;
}

Verdict classify_gen_cogen_ff(const SubcategoryX& x, const ClassifyOptions& opt) { return Suite(x, opt).gen_cogen_ff(); }
Verdict classify_d_precluster(const SubcategoryX& x, std::size_t d, const ClassifyOptions& opt) {
    return Suite(x, opt).d_precluster(d);
}
Verdict classify_d_cluster_tilting(const SubcategoryX& x, std::size_t d, const ClassifyOptions& opt) {
    return Suite(x, opt).d_cluster_tilting(d);
}
Verdict classify_d_abelian(const SubcategoryX& x, std::size_t d, const ClassifyOptions& opt) {
    return Suite(x, opt).d_abelian(d);
}

void cross_check_abelian_cluster_tilting(const Verdict& abelian, const Verdict& cluster_tilting, bool gen_cogen) {
    if (!gen_cogen || abelian.pass() == cluster_tilting.pass()) return;
    throw RouteDisagreement("d-abelian vs d-cluster-tilting",
                            {{"d-abelian", abelian.status, abelian.route},
                             {"d-cluster-tilting", cluster_tilting.status, cluster_tilting.route}});
}

}  // namespace tilt::axioms
