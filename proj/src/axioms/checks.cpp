#include "tilt/axioms/checks.hpp"

#include "tilt/approx/approximation.hpp"
#include "tilt/approx/homological.hpp"

namespace tilt::axioms {

using approx::block_injection;
using approx::block_projection;
using approx::weak_cokernel;
using approx::weak_kernel;
using ff::Matrix;

namespace {

std::string summand_name(std::size_t i) { return "X" + std::to_string(i + 1); }

Matrix columns(const std::vector<Morphism>& fs, std::size_t height, std::uint32_t p) {
    std::vector<Matrix> cols;
    for (const auto& f : fs) cols.push_back(f.to_vector());
    if (cols.empty()) return Matrix(height, 0, p);
    return ff::hstack(cols, height, p);
}

std::optional<Morphism> solve_in(const std::vector<Morphism>& basis, const std::vector<Morphism>& images,
                                 const Morphism& target, const Representation& a, const Representation& b) {
    if (target.is_zero()) return Morphism::zero(a, b);
    if (basis.empty()) return std::nullopt;
    const std::size_t len = target.to_vector().rows();
    auto sol = ff::solve(columns(images, len, target.source().p()), target.to_vector());
    if (!sol) return std::nullopt;
    return quiver::combine(basis, sol->particular.column(0), a, b);
}

Witness morphism_witness(WitnessKind kind, const XMorphism& f, std::size_t d, std::string detail) {
    Witness w{kind, f, std::nullopt, {}, d, std::move(detail)};
    return w;
}

std::string violation_text(const approx::Violation& v) {
    if (v.kind == approx::Violation::Kind::NonzeroComposite) return "composite is nonzero";
    return "not exact against " + summand_name(v.test_object);
}

struct SampledRun {
    std::size_t applicable = 0;
    std::optional<Witness> witness;
};

template <class Test, class Applies>
SampledRun run_samples(const std::vector<XMorphism>& samples, Test test, Applies applies) {
    SampledRun r;
    for (const auto& f : samples) {
        if (!applies(f)) continue;
        ++r.applicable;
        if (auto w = test(f)) {
            r.witness = std::move(w);
            return r;
        }
    }
    return r;
}

Verdict sampled_verdict(std::string name, std::size_t d, const SampleOptions& opt, const SampledRun& run,
                        std::size_t total, const std::string& applicable_label) {
    Verdict v;
    v.name = std::move(name);
    v.d = d;
    v.seed = opt.seed;
    v.trials = opt.trials;
    v.route = "sampled";
    v.note = std::to_string(total) + " morphisms";
    if (!applicable_label.empty()) v.note += ", " + std::to_string(run.applicable) + " " + applicable_label;
    if (run.witness) {
        v.status = Status::Fail;
        v.witness = run.witness;
        v.routes.push_back({"sampled", Status::Fail, run.witness->detail});
    } else {
        v.status = Status::SampledPass;
        v.routes.push_back({"sampled", Status::SampledPass, v.note});
    }
    return v;
}

// Upgrades a sampled verdict to certified when the gen-cogen certificate makes it a theorem.
void apply_certificate(Verdict& v, const GenCogenCertificate& cert) {
    if (!cert.holds()) {
        v.routes.push_back({"gen-cogen certificate", Status::Fail, "not applicable: add(M) is not generating-cogenerating"});
        return;
    }
    v.routes.insert(v.routes.begin(), {"gen-cogen certificate", Status::CertifiedPass, "Lambda and D Lambda in add(M)"});
    if (!v.pass()) throw RouteDisagreement(v.name, v.routes);
    v.status = Status::CertifiedPass;
    v.route = "gen-cogen certificate";
}

auto always = [](const XMorphism&) { return true; };

std::string stream_name(const std::string& name, std::size_t d) { return d ? name + "/" + std::to_string(d) : name; }

}  // namespace

GenCogenCertificate gen_cogen_certificate(const SubcategoryX& x) {
    GenCogenCertificate c;
    const auto& alg = x.algebra();
    for (std::size_t v = 0; v < alg->quiver().num_vertices() && !c.missing_projective; ++v)
        if (!x.contains(quiver::projective(alg, v))) c.missing_projective = v;
    for (std::size_t v = 0; v < alg->quiver().num_vertices() && !c.missing_injective; ++v)
        if (!x.contains(quiver::injective(alg, v))) c.missing_injective = v;
    return c;
}

std::optional<Morphism> factor_through_target(const SubcategoryX& x, const XMorphism& f, const XMorphism& h) {
    auto basis = x.hom_basis(f.source, h.source);
    std::vector<Morphism> images;
    for (const auto& b : basis) images.push_back(h.map * b);
    return solve_in(basis, images, f.map, f.source.module(), h.source.module());
}

std::optional<Morphism> factor_through_source(const SubcategoryX& x, const XMorphism& f, const XMorphism& h) {
    auto basis = x.hom_basis(h.target, f.target);
    std::vector<Morphism> images;
    for (const auto& b : basis) images.push_back(b * h.map);
    return solve_in(basis, images, f.map, h.target.module(), f.target.module());
}

std::optional<Witness> test_A1(const SubcategoryX& x, const XMorphism& g) {
    auto w = weak_kernel(x, g, true);
    if (auto v = approx::weak_kernel_violation(x, w, g))
        return morphism_witness(WitnessKind::WeakKernelTest, g, 0, "constructed weak kernel: " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_A1op(const SubcategoryX& x, const XMorphism& f) {
    auto w = weak_cokernel(x, f, true);
    if (auto v = approx::weak_cokernel_violation(x, f, w))
        return morphism_witness(WitnessKind::WeakCokernelTest, f, 0, "constructed weak cokernel: " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_A2(const SubcategoryX& x, const XMorphism& f) {
    if (!approx::is_epi_in_x(x, f)) return std::nullopt;
    auto g = weak_kernel(x, f, true);
    if (auto v = approx::weak_cokernel_violation(x, g, f))
        return morphism_witness(WitnessKind::EpiNotWeakCokernel, f, 0,
                                "epi in X but not a weak cokernel of its weak kernel: " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_A2op(const SubcategoryX& x, const XMorphism& f) {
    if (!approx::is_mono_in_x(x, f)) return std::nullopt;
    auto g = weak_cokernel(x, f, true);
    if (auto v = approx::weak_kernel_violation(x, f, g))
        return morphism_witness(WitnessKind::MonoNotWeakKernel, f, 0,
                                "mono in X but not a weak kernel of its weak cokernel: " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_A3(const SubcategoryX& x, const XMorphism& f) {
    auto g = weak_cokernel(x, f, true);
    auto h = weak_kernel(x, g, true);
    auto l = factor_through_target(x, f, h);
    if (!l) throw std::logic_error("A3: f does not factor through the weak kernel of its weak cokernel");
    auto k = weak_kernel(x, h, true);
    XObject src = x.concat(f.source, k.source);
    Morphism m = *l * block_projection(src, f.source, 0) + k.map * block_projection(src, k.source, f.source.parts.size());
    if (auto v = approx::epi_in_x_violation(x, {src, h.source, m}))
        return morphism_witness(WitnessKind::A3NotEpi, f, 0, "[l k] is not epi in X: Hom(-, " + summand_name(*v) + ") not injective");
    return std::nullopt;
}

std::optional<Witness> test_A3op(const SubcategoryX& x, const XMorphism& f) {
    auto g = weak_kernel(x, f, true);
    auto h = weak_cokernel(x, g, true);
    auto l = factor_through_source(x, f, h);
    if (!l) throw std::logic_error("A3op: f does not factor through the weak cokernel of its weak kernel");
    auto k = weak_cokernel(x, h, true);
    XObject tgt = x.concat(f.target, k.target);
    Morphism m = block_injection(f.target, tgt, 0) * *l + block_injection(k.target, tgt, f.target.parts.size()) * k.map;
    if (auto v = approx::mono_in_x_violation(x, {h.target, tgt, m}))
        return morphism_witness(WitnessKind::A3opNotMono, f, 0, "[l; k] is not mono in X: Hom(" + summand_name(*v) + ", -) not injective");
    return std::nullopt;
}

std::optional<Witness> test_d_rigid(const SubcategoryX& x, const XMorphism& f1, std::size_t d) {
    if (!approx::is_epi_in_x(x, f1)) return std::nullopt;
    std::vector<XMorphism> chain{f1};
    for (std::size_t i = 1; i <= d; ++i) chain.push_back(weak_kernel(x, chain.back(), true));
    for (std::size_t i = 1; i <= d; ++i)
        if (auto v = approx::weak_cokernel_violation(x, chain[i], chain[i - 1]))
            return morphism_witness(WitnessKind::RigidSequence, f1, d,
                                    "f_" + std::to_string(i) + " is not a weak cokernel of f_" + std::to_string(i + 1) +
                                        ": " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_A4(const SubcategoryX& x, const XMorphism& f0, std::size_t d) {
    XMorphism f = f0;
    for (std::size_t i = 0; i <= d; ++i) f = weak_kernel(x, f, true);
    auto w = weak_kernel(x, f, true);
    if (auto v = approx::weak_cokernel_violation(x, w, f))
        return morphism_witness(WitnessKind::A4Chain, f0, d,
                                "f_" + std::to_string(d + 1) + " is not a weak cokernel: " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_A4op(const SubcategoryX& x, const XMorphism& fd1, std::size_t d) {
    XMorphism f = fd1;
    for (std::size_t i = 0; i <= d; ++i) f = weak_cokernel(x, f, true);
    auto w = weak_cokernel(x, f, true);
    if (auto v = approx::weak_kernel_violation(x, f, w))
        return morphism_witness(WitnessKind::A4opChain, fd1, d, "f_0 is not a weak kernel: " + violation_text(*v));
    return std::nullopt;
}

std::optional<Witness> test_d_kernel(const SubcategoryX& x, const XMorphism& f, std::size_t d) {
    try {
        approx::d_kernel(x, f, d);
    } catch (const approx::DKernelNotLeftExact& e) {
        return morphism_witness(WitnessKind::NoDKernel, f, d, std::string("no d-kernel: ") + e.what());
    }
    return std::nullopt;
}

std::optional<Witness> test_d_cokernel(const SubcategoryX& x, const XMorphism& f, std::size_t d) {
    try {
        approx::d_cokernel(x, f, d);
    } catch (const approx::DKernelNotLeftExact& e) {
        return morphism_witness(WitnessKind::NoDCokernel, f, d, std::string("no d-cokernel: ") + e.what());
    }
    return std::nullopt;
}

std::optional<Witness> test_idempotent(const SubcategoryX& x, const XMorphism& e) {
    if (!(e.map * e.map == e.map)) throw std::invalid_argument("test_idempotent: not an idempotent");
    auto im = quiver::image(e.map).module;
    auto ker = quiver::kernel(e.map).module;
    if (!x.contains(im) || !x.contains(ker))
        return morphism_witness(WitnessKind::IdempotentNotSplit, e, 0, "image or kernel of e is not in add(M)");
    return std::nullopt;
}

Verdict check_A0(const SubcategoryX& x, const SampleOptions& opt) {
    std::vector<XMorphism> idem;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto s = x.single(i);
        idem.push_back({s, s, Morphism::identity(s.module())});
        idem.push_back({s, s, Morphism::zero(s.module(), s.module())});
    }
    auto rng = stream_rng(opt.seed, "A0");
    const std::size_t conjugated = x.size() ? std::min<std::size_t>(opt.trials, 20) : 0;
    for (std::size_t t = 0; t < conjugated; ++t) {
        auto obj = x.object({rng() % x.size(), rng() % x.size()});
        auto first = x.single(obj.parts[0]);
        Morphism pi = block_injection(first, obj, 0) * block_projection(obj, first, 0);
        for (int attempt = 0; attempt < 20; ++attempt) {
            auto u = approx::random_morphism(x, obj, obj, rng).map;
            if (!u.is_iso()) continue;
            std::vector<Matrix> inv;
            for (std::size_t v = 0; v < u.maps().size(); ++v) inv.push_back(*ff::inverse(u.map(v)));
            Morphism uinv = Morphism::unchecked(obj.module(), obj.module(), inv);
            idem.push_back({obj, obj, u * pi * uinv});
            break;
        }
    }
    auto run = run_samples(idem, [&](const XMorphism& e) { return test_idempotent(x, e); }, always);
    Verdict v = sampled_verdict("A0", 0, opt, run, idem.size(), "");
    v.note = "add(M) is closed under summands; " + std::to_string(idem.size()) + " idempotents split";
    if (v.pass()) {
        v.status = Status::CertifiedPass;
        v.route = "construction";
        v.routes.insert(v.routes.begin(), {"construction", Status::CertifiedPass, "add(M) built from indecomposable summands"});
    }
    return v;
}

VerdictPair check_A1_A1op(const SubcategoryX& x, const SampleOptions& opt) {
    auto samples = sample_morphisms(x, opt, "A1");
    auto plain = sampled_verdict("A1", 0, opt, run_samples(samples, [&](const XMorphism& g) { return test_A1(x, g); }, always),
                                 samples.size(), "");
    auto op = sampled_verdict("A1op", 0, opt,
                              run_samples(samples, [&](const XMorphism& f) { return test_A1op(x, f); }, always),
                              samples.size(), "");
    for (auto* v : {&plain, &op})
        if (v->pass()) {
            v->status = Status::CertifiedPass;
            v->route = "construction";
            v->routes.insert(v->routes.begin(),
                             {"construction", Status::CertifiedPass, "kernel or cokernel followed by an add(M)-approximation"});
        }
    return {plain, op};
}

VerdictPair check_A2_A2op(const SubcategoryX& x, const SampleOptions& opt) {
    auto cert = gen_cogen_certificate(x);
    auto samples = sample_morphisms(x, opt, "A2");
    auto plain = sampled_verdict(
        "A2", 0, opt,
        run_samples(samples, [&](const XMorphism& f) { return test_A2(x, f); },
                    [&](const XMorphism& f) { return approx::is_epi_in_x(x, f); }),
        samples.size(), "epi in X");
    auto op = sampled_verdict(
        "A2op", 0, opt,
        run_samples(samples, [&](const XMorphism& f) { return test_A2op(x, f); },
                    [&](const XMorphism& f) { return approx::is_mono_in_x(x, f); }),
        samples.size(), "mono in X");
    apply_certificate(plain, cert);
    apply_certificate(op, cert);
    return {plain, op};
}

VerdictPair check_A3_A3op(const SubcategoryX& x, const SampleOptions& opt) {
    auto cert = gen_cogen_certificate(x);
    auto samples = sample_morphisms(x, opt, "A3");
    auto plain = sampled_verdict("A3", 0, opt, run_samples(samples, [&](const XMorphism& f) { return test_A3(x, f); }, always),
                                 samples.size(), "");
    auto op = sampled_verdict("A3op", 0, opt,
                              run_samples(samples, [&](const XMorphism& f) { return test_A3op(x, f); }, always),
                              samples.size(), "");
    apply_certificate(plain, cert);
    apply_certificate(op, cert);
    return {plain, op};
}

std::optional<Witness> ext_rigidity_witness(const SubcategoryX& x, std::size_t d) {
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = 0; b < x.size(); ++b) {
                std::size_t e = approx::ext_dim(x.summand(a), x.summand(b), i);
                if (e != 0) {
                    Witness w{WitnessKind::ExtNonzero, std::nullopt, std::nullopt, {a, b, i}, d, ""};
                    w.detail = "dim Ext^" + std::to_string(i) + "(" + summand_name(a) + ", " + summand_name(b) +
                               ") = " + std::to_string(e);
                    return w;
                }
            }
    return std::nullopt;
}

Verdict check_d_rigid(const SubcategoryX& x, std::size_t d, const SampleOptions& opt) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    auto cert = gen_cogen_certificate(x);
    auto ext = ext_rigidity_witness(x, d);
    auto samples = sample_morphisms(x, opt, stream_name("d-Rigid", d));
    auto v = sampled_verdict(
        "d-Rigid", d, opt,
        run_samples(samples, [&](const XMorphism& f) { return test_d_rigid(x, f, d); },
                    [&](const XMorphism& f) { return approx::is_epi_in_x(x, f); }),
        samples.size(), "epi in X");
    RouteResult ext_route{"Ext certificate", ext ? Status::Fail : Status::CertifiedPass,
                          ext ? ext->detail : "Ext^i(M, M) = 0 for 0 < i < " + std::to_string(d)};
    if (!cert.holds()) {
        ext_route.detail += " (not decisive: add(M) is not generating-cogenerating)";
        v.routes.push_back(ext_route);
        return v;
    }
    v.routes.insert(v.routes.begin(), ext_route);
    if (v.pass() == static_cast<bool>(ext)) throw RouteDisagreement("d-Rigid", v.routes);
    if (v.pass()) {
        v.status = Status::CertifiedPass;
        v.route = "Ext certificate";
    } else {
        v.note += "; " + ext->detail;
    }
    return v;
}

VerdictPair check_A4d(const SubcategoryX& x, std::size_t d, const SampleOptions& opt) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    auto samples = sample_morphisms(x, opt, stream_name("A4.d", d));
    auto plain = sampled_verdict("A4.d", d, opt,
                                 run_samples(samples, [&](const XMorphism& f) { return test_A4(x, f, d); }, always),
                                 samples.size(), "");
    auto op = sampled_verdict("A4.d-op", d, opt,
                              run_samples(samples, [&](const XMorphism& f) { return test_A4op(x, f, d); }, always),
                              samples.size(), "");
    return {plain, op};
}

VerdictPair check_d_kernels(const SubcategoryX& x, std::size_t d, const SampleOptions& opt) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    auto samples = sample_morphisms(x, opt, stream_name("d-Ker", d));
    auto plain = sampled_verdict("d-Ker", d, opt,
                                 run_samples(samples, [&](const XMorphism& f) { return test_d_kernel(x, f, d); }, always),
                                 samples.size(), "");
    auto op = sampled_verdict("d-Coker", d, opt,
                              run_samples(samples, [&](const XMorphism& f) { return test_d_cokernel(x, f, d); }, always),
                              samples.size(), "");
    return {plain, op};
}

}  // namespace tilt::axioms
