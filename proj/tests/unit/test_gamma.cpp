#include <doctest.h>

#include "fixtures.hpp"
#include "tilt/approx/subcategory.hpp"
#include "tilt/gamma/abstract_algebra.hpp"
#include "tilt/gamma/invariants.hpp"

using namespace tilt;
using namespace tilt::quiver;
using namespace tilt::gamma;
using fixtures::a2;
using fixtures::jordan_block;
using fixtures::linear;
using fixtures::truncated_poly;

namespace {

approx::SubcategoryX jordan_generator(std::size_t n, std::uint32_t p) {
    auto alg = truncated_poly(n, p);
    std::vector<Representation> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(jordan_block(alg, i));
    return approx::SubcategoryX::from_modules(alg, gens);
}

PathAlgebra::Ptr semisimple(std::size_t n, std::uint32_t p) {
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    return PathAlgebra::build(Quiver::from_names(vs, {}), {}, p, 2);
}

}  // namespace

TEST_CASE("endomorphism algebras") {
    auto alg = a2(7);
    auto e = endomorphism_algebra(simple(alg, 0));
    CHECK(e.algebra.dim() == 1);

    auto ss = endomorphism_algebra(direct_sum_module({simple(alg, 0), simple(alg, 1)}, alg));
    CHECK(ss.algebra.dim() == 2);
    CHECK(radical(ss.algebra).cols() == 0);

    auto k = truncated_poly(2, 7);
    auto ek = endomorphism_algebra(regular(k));
    CHECK(ek.algebra.dim() == 2);
    CHECK(radical(ek.algebra).cols() == 1);
    ek.algebra.verify();
}

TEST_CASE("radical of upper triangular matrices") {
    // basis E11, E12, E22; column j of left[i] holds b_i b_j
    const std::uint32_t p = 7;
    auto col = [&](std::vector<std::vector<Elem>> cols) { return Matrix::from_columns(cols, 3, p); };
    std::vector<Matrix> left{
        col({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),  // E11 E11 = E11, E11 E12 = E12, E11 E22 = 0
        col({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}),  // E12 E22 = E12
        col({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}),  // E22 E22 = E22
    };
    AbstractAlgebra t(p, left, {1, 0, 1}, {"E11", "E12", "E22"});
    t.verify();
    Matrix r = radical(t);
    REQUIRE(r.cols() == 1);
    CHECK(r.column(0) == std::vector<Elem>{0, r(1, 0), 0});
    CHECK(r(1, 0) != 0);

    CHECK_THROWS_AS(radical(AbstractAlgebra(3, left, {1, 0, 1})), RadicalPreconditionViolated);
    try {
        radical(AbstractAlgebra(3, left, {1, 0, 1}));
    } catch (const RadicalPreconditionViolated& e) {
        CHECK(e.suggested_prime() == 5);
    }
}

TEST_CASE("quiver form of the Auslander algebra of k[x]/(x^2)") {
    auto x = jordan_generator(2, 7);
    auto form = endomorphism_quiver(x);
    CHECK(form.algebra->quiver().num_vertices() == 2);
    CHECK(form.algebra->quiver().num_arrows() == 2);
    CHECK(form.algebra->dim() == 5);
    CHECK(form.elements.size() == 5);
}

TEST_CASE("homological invariants of small algebras") {
    auto s = semisimple(2, 7);
    CHECK(global_dimension(s).value == 0u);
    CHECK(!dominant_dimension(s).is_exact());
    CHECK(dominant_dimension(s).lower_bound == kDefaultCap);
    CHECK(selfinjective_dimension(s).left.value == 0u);

    auto k = truncated_poly(2, 7);
    auto g = global_dimension(k, 10);
    CHECK(!g.is_exact());
    CHECK(g.lower_bound == 11);
    CHECK(g.to_string() == ">= 11");
    CHECK(!dominant_dimension(k).is_exact());
    CHECK(selfinjective_dimension(k).left.value == 0u);
    CHECK(selfinjective_dimension(k).right.value == 0u);

    auto a = a2(7);
    CHECK(global_dimension(a).value == 1u);
    CHECK(selfinjective_dimension(a).left.value == 1u);
    CHECK(selfinjective_dimension(a).right.value == 1u);
    CHECK(dominant_dimension(a).value == 1u);
}

TEST_CASE("Auslander algebras of truncated polynomial rings") {
    for (std::size_t n : {2, 3, 4}) {
        auto x = jordan_generator(n, 31);
        REQUIRE(x.size() == n);
        auto gamma = endomorphism_quiver(x).algebra;
        CHECK(global_dimension(gamma).value == 2u);
        CHECK(dominant_dimension(gamma).value == 2u);
        auto id = selfinjective_dimension(gamma);
        CHECK(id.left.value == 2u);
        CHECK(id.right.value == 2u);
    }
}

TEST_CASE("endomorphism quiver requires a large prime") {
    auto x = jordan_generator(3, 7);  // dim Gamma = 1 + 2 + 3 + 2 + 3 + 3 + 3 + ... > 7
    CHECK_THROWS_AS(endomorphism_quiver(x), RadicalPreconditionViolated);
}

TEST_CASE("A_n with the regular module") {
    auto alg = linear(3, 11);
    auto x = approx::SubcategoryX::from_modules(alg, {regular(alg)});
    auto gamma = endomorphism_quiver(x).algebra;
    CHECK(gamma->dim() == alg->dim());
    CHECK(global_dimension(gamma).value == 1u);
    CHECK(dominant_dimension(gamma).value == 1u);
}
