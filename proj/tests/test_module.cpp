#include <doctest.h>

#include "cleftlab/module.hpp"
#include "fixtures.hpp"
#include "oracle_helpers.hpp"

using namespace cleftlab;
using namespace cleftlab::fixtures;

namespace {
Config cfg;
}

TEST_CASE("regular module and simples satisfy the module law") {
    auto pa = kA(2);
    CHECK(check_module(Module::regular(pa.algebra)));
    CHECK(check_module(simple_module(pa, 0)));
    CHECK(check_module(projective_at(pa, 0)));
}

TEST_CASE("hom dimensions over kA_2, against the full-matrix sweep") {
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0), p2 = projective_at(pa, 1);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);

    CHECK(hom_dim(p1, s2) == 0);
    CHECK(hom_dim(p2, p1) == 1);
    CHECK(hom_dim(p1, p1) == 1);
    CHECK(hom_dim(s1, s2) == 0);

    CHECK(hom_dim(p1, s2) == oracle::hom_dim_by_enumeration(p1, s2));
    CHECK(hom_dim(p2, p1) == oracle::hom_dim_by_enumeration(p2, p1));
    CHECK(hom_dim(p1, p1) == oracle::hom_dim_by_enumeration(p1, p1));
    CHECK(hom_dim(p1, p2) == oracle::hom_dim_by_enumeration(p1, p2));

    // End(x) always contains the identity
    CHECK(try_isomorphism(p1, p1, cfg).verdict == Ternary::yes);
}

TEST_CASE("kernel, cokernel, image") {
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0), p2 = projective_at(pa, 1);
    Module s1 = simple_module(pa, 0);

    CHECK(cokernel_module(identity_morphism(p1)).module.dim == 0);
    CHECK(kernel_module(zero_morphism(p1, s1)).module.dim == p1.dim);

    // the socle inclusion P(2) -> P(1) has cokernel S_1
    auto homs = hom_basis(p2, p1);
    REQUIRE(homs.size() == 1);
    auto coker = cokernel_module(homs[0]);
    CHECK(coker.module.dim == 1);
    CHECK(is_isomorphic(coker.module, s1, cfg));

    auto img = image_module(homs[0]);
    CHECK(img.module.dim == 1);
    CHECK(compose(img.inclusion, img.onto).matrix == homs[0].matrix);
}

TEST_CASE("direct sums are biproducts") {
    auto pa = kA(2);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);
    auto sum = direct_sum(pa.algebra, {s1, s2});
    CHECK(sum.module.dim == 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Matrix comp = compose(sum.projections[i], sum.injections[j]).matrix;
            if (i == j)
                CHECK(comp.is_identity());
            else
                CHECK(comp.is_zero());
        }
    Matrix total(sum.module.dim, sum.module.dim, 2);
    for (size_t i = 0; i < 2; ++i) total = total + compose(sum.injections[i], sum.projections[i]).matrix;
    CHECK(total.is_identity());

    // arrow acts by zero on S_1 + S_2
    CHECK(sum.module.action[2].is_zero());
}

TEST_CASE("decompose: semisimple split, indecomposables, regular module") {
    auto pa = kA(2);
    Module s1 = simple_module(pa, 0);
    Module p1 = projective_at(pa, 0);

    auto two = decompose(direct_sum(pa.algebra, {s1, s1}).module, cfg);
    REQUIRE(two.size() == 2);
    CHECK(is_isomorphic(two[0], s1, cfg));
    CHECK(is_isomorphic(two[1], s1, cfg));

    CHECK(decompose(p1, cfg).size() == 1);  // End is one-dimensional, hence local

    auto reg = decompose(Module::regular(pa.algebra), cfg);
    REQUIRE(reg.size() == 2);
    CHECK(reg[0].dim + reg[1].dim == 3);
    CHECK(is_isomorphic(reg[1], p1, cfg));
    CHECK(is_isomorphic(reg[0], projective_at(pa, 1), cfg));

    CHECK(decompose(Module::zero(pa.algebra), cfg).empty());
}

TEST_CASE("decompose certifies k[x]/(x^2) regular module via the idempotent sweep") {
    auto pa = dual_numbers();
    Module reg = Module::regular(pa.algebra);
    CHECK(hom_dim(reg, reg) == 2);  // End = k[x]/(x^2) itself
    auto parts = decompose(reg, cfg);
    CHECK(parts.size() == 1);
}

TEST_CASE("is_isomorphic: base change, negatives, distinct simples") {
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);

    CHECK_FALSE(is_isomorphic(s1, s2, cfg));

    // same module in a different basis
    Matrix g({{1, 1}, {0, 1}}, 2);
    Matrix ginv({{1, 1}, {0, 1}}, 2);  // self-inverse over F_2
    Module p1b = p1;
    for (auto& act : p1b.action) act = ginv * act * g;
    REQUIRE(check_module(p1b));
    CHECK(is_isomorphic(p1, p1b, cfg));

    CHECK_FALSE(is_isomorphic(p1, direct_sum(pa.algebra, {s1, s2}).module, cfg));
}

TEST_CASE("dual module") {
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0);
    Module d = dual_module(p1);
    CHECK(d.dim == p1.dim);
    CHECK(check_module(d));

    Module dd = dual_module(d);
    CHECK(same_algebra(dd.algebra, p1.algebra));
    CHECK(dd.action == p1.action);

    CHECK(dual_module(Module::zero(pa.algebra)).dim == 0);

    // the dual of P(1) is the 2-dimensional indecomposable over the reversed quiver
    Quiver rev;
    rev.vertices = {"1", "2"};
    rev.arrows = {{"b", 1, 0}};
    auto pb = path_algebra(rev, {}, 2, 2);
    Module p2_rev = projective_at(pb, 1);
    REQUIRE(same_algebra(d.algebra, pb.algebra));
    Module d_over_rev = d;
    d_over_rev.algebra = pb.algebra;
    CHECK(is_isomorphic(d_over_rev, p2_rev, cfg));
}

TEST_CASE("trace and Gen membership") {
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);

    CHECK(trace_of_in(p1, p1).is_all);
    CHECK(trace_of_in(s2, s1).subspace.count() == 0);
    CHECK(trace_of_in(p1, s1).is_all);

    // cross-check against brute-force search over quotients of x^n
    std::vector<Module> mods = {s1, s2, p1};
    for (const auto& x : mods)
        for (const auto& l : mods)
            CHECK(trace_of_in(x, l).is_all == oracle::in_gen_by_quotient_search(x, l, 3));
}

TEST_CASE("extensions from cocycle data") {
    auto pa = kA(2);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);
    Module p1 = projective_at(pa, 0);
    const Algebra& a = *pa.algebra;

    std::vector<Matrix> zero_cocycle(a.dim, Matrix(1, 1, 2));
    auto split = build_extension(s1, s2, zero_cocycle);
    CHECK(is_isomorphic(split.total, direct_sum(pa.algebra, {s1, s2}).module, cfg));
    CHECK(compose(split.proj_quot, split.incl_sub).matrix.is_zero());

    // a cocycle with nonzero arrow corner produces P(1)
    auto space = extension_cocycle_space(s1, s2);
    REQUIRE_FALSE(space.empty());
    bool found_p1 = false;
    for (const auto& c : space) {
        auto e = build_extension(s1, s2, c);
        if (try_isomorphism(e.total, p1, cfg).verdict == Ternary::yes) found_p1 = true;
    }
    CHECK(found_p1);

    // an invalid cocycle is rejected with the failing pair
    std::vector<Matrix> bad = zero_cocycle;
    bad[0].set(0, 0, 1);  // corner at e_1 alone breaks the unit law
    CHECK_THROWS_AS(build_extension(s1, s2, bad), invariant_error);

    // over the ground field the cocycle space is trivial
    auto k = ground_field();
    Module kk = Module::regular(k.algebra);
    CHECK(extension_cocycle_space(kk, kk).empty());
}

TEST_CASE("restrict_to_quotient reinterprets annihilated modules") {
    auto pa = kA(2);
    Module s1 = simple_module(pa, 0);
    auto quo = quotient_by_ideal(pa.algebra, {pa.algebra->idempotents[1]});
    Module over_b = restrict_to_quotient(s1, quo);
    CHECK(over_b.dim == 1);
    CHECK(check_module(over_b));
    CHECK(over_b.algebra->dim == 1);

    // P(1) is not annihilated by (e_2)
    CHECK_THROWS_AS(restrict_to_quotient(projective_at(pa, 0), quo), invariant_error);
}

TEST_CASE("dual is exact and contravariant on a test short exact sequence") {
    // 0 -> S_2 -> P(1) -> S_1 -> 0 over kA_2
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0), s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);
    auto incl = hom_basis(s2, p1);
    REQUIRE(incl.size() == 1);
    auto proj = hom_basis(p1, s1);
    REQUIRE(proj.size() == 1);
    REQUIRE(rank(incl[0].matrix) == 1);
    REQUIRE(rank(proj[0].matrix) == 1);
    REQUIRE(compose(proj[0], incl[0]).matrix.is_zero());

    Morphism d_incl = dual_morphism(incl[0]);  // dual(P(1)) -> dual(S_2)
    Morphism d_proj = dual_morphism(proj[0]);  // dual(S_1) -> dual(P(1))
    CHECK(rank(d_proj.matrix) == 1);           // monic now
    CHECK(rank(d_incl.matrix) == 1);           // epic now
    CHECK(compose(d_incl, d_proj).matrix.is_zero());
    CHECK(kernel(d_incl.matrix).count() == 1);  // exact in the middle
}

TEST_CASE("decompose then direct_sum reproduces the module") {
    auto pa = kA(3);
    Module reg = Module::regular(pa.algebra);
    auto parts = decompose(reg, cfg);
    auto back = direct_sum(pa.algebra, parts);
    CHECK(is_isomorphic(back.module, reg, cfg));
}
