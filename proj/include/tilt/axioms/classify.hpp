#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tilt/axioms/checks.hpp"
#include "tilt/gamma/invariants.hpp"

namespace tilt::axioms {

// Homological invariants of Gamma = End(basic M).
struct GammaData {
    gamma::DimensionBound global;
    gamma::DimensionBound dominant;
    gamma::SidedDimension selfinjective;
    std::size_t dim = 0;
};
GammaData gamma_data(const SubcategoryX& x, std::size_t cap = gamma::kDefaultCap);

// Modules used by the perpendicular, resolution and approximation-sequence routes. `complete`
// records that the list was declared to contain every indecomposable.
struct TestSet {
    std::vector<Representation> modules;
    bool complete = false;
};
TestSet make_test_set(const SubcategoryX& x, const std::vector<Representation>& declared = {});

struct ClassifyOptions {
    SampleOptions sample;
    std::size_t cap = gamma::kDefaultCap;
    std::vector<Representation> declared_indecomposables;
};

// Runs checks on one subcategory, computing each shared ingredient (certificate, Gamma, test
// set, axiom verdicts) at most once.
class Suite {
public:
    explicit Suite(SubcategoryX x, ClassifyOptions opt = {});

    const SubcategoryX& x() const { return x_; }
    const ClassifyOptions& options() const { return opt_; }
    const GenCogenCertificate& certificate();
    const GammaData& gamma();
    const TestSet& tests();

    const Verdict& a0();
    const VerdictPair& a1();
    const VerdictPair& a2();
    const VerdictPair& a3();
    const Verdict& d_rigid(std::size_t d);
    const VerdictPair& a4(std::size_t d);
    const VerdictPair& d_kernels(std::size_t d);

    // Certificate Lambda, D Lambda in add(M); reported next to domdim Gamma >= 2 and the sampled
    // A1-A3op verdicts. Disagreements between these routes are recorded in the note.
    const Verdict& gen_cogen_ff();
    // Routes: tau_d membership, Gamma (domdim >= d+1, injdim <= d+1), sampled approximation
    // sequences. Requires the gen-cogen certificate and d-rigidity.
    const Verdict& d_precluster(std::size_t d);
    // Routes: Gamma (gldim <= d+1, domdim >= d+1), resolutions and perpendicular categories on
    // the test set. Requires the gen-cogen certificate.
    const Verdict& d_cluster_tilting(std::size_t d);
    // A0, A1/A1op, A2/A2op, A3/A3op, d-Rigid, d-kernels and d-cokernels. Checked against
    // d_cluster_tilting when the gen-cogen certificate holds.
    const Verdict& d_abelian(std::size_t d);

private:
    SubcategoryX x_;
    ClassifyOptions opt_;
    std::optional<GenCogenCertificate> cert_;
    std::optional<GammaData> gamma_;
    std::optional<TestSet> tests_;
    std::optional<Verdict> a0_;
    std::optional<VerdictPair> a1_, a2_, a3_;
    std::optional<Verdict> gen_cogen_;
    std::map<std::size_t, Verdict> rigid_, precluster_, cluster_tilting_, abelian_;
    std::map<std::size_t, VerdictPair> a4_, kernels_;
};

Verdict classify_gen_cogen_ff(const SubcategoryX& x, const ClassifyOptions& opt = {});
Verdict classify_d_precluster(const SubcategoryX& x, std::size_t d, const ClassifyOptions& opt = {});
Verdict classify_d_cluster_tilting(const SubcategoryX& x, std::size_t d, const ClassifyOptions& opt = {});
Verdict classify_d_abelian(const SubcategoryX& x, std::size_t d, const ClassifyOptions& opt = {});

// The two verdicts must agree when add(M) is generating-cogenerating in mod Lambda, since the
// ambient abelian category is then the canonical one. Raises RouteDisagreement otherwise.
void cross_check_abelian_cluster_tilting(const Verdict& abelian, const Verdict& cluster_tilting, bool gen_cogen);

// The approximation-sequence conditions (a) and (b) with A as the right-hand (resp. left-hand)
// end; returns a witness when the induced map is not an approximation.
std::optional<Witness> test_approximation_sequence(const SubcategoryX& x, const Representation& a, std::size_t d,
                                                   bool left_side);
// The d-1 step minimal resolution (coresolution) of A by approximations ends in add(M).
std::optional<Witness> test_resolution(const SubcategoryX& x, const Representation& a, std::size_t d, bool co);
// A in add(M) iff A is in the left (right) perpendicular category in degrees 0 < i < d.
std::optional<Witness> test_perp(const SubcategoryX& x, const Representation& a, std::size_t d);
// tau_d(X_a) in add(M) modulo injectives, tau_d^-(X_a) in add(M) modulo projectives.
std::optional<Witness> test_tau_d(const SubcategoryX& x, std::size_t a, std::size_t d);

}  // namespace tilt::axioms
