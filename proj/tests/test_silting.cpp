#include <doctest.h>

#include "cleftlab/silting.hpp"
#include "fixtures.hpp"

using namespace cleftlab;
using namespace cleftlab::fixtures;

namespace {

Config cfg;

Catalog ka2_catalog(const PathAlgebra& pa) {
    std::vector<Module> entries = {simple_module(pa, 0), simple_module(pa, 1), projective_at(pa, 0)};
    return make_catalog(pa.algebra, std::move(entries), 2, Catalog::Provenance::analytic, cfg);
}

}  // namespace

TEST_CASE("in_d_sigma") {
    auto pa = kA(2);
    Module p1 = projective_at(pa, 0);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1);

    // presentation with P1 = 0 accepts everything
    auto pres_proj = minimal_presentation(p1);
    REQUIRE(pres_proj.p1_data->module.dim == 0);
    for (const Module& l : {s1, s2, p1}) CHECK(in_d_sigma(pres_proj.sigma, l));

    auto pres_s1 = minimal_presentation(s1);
    CHECK(in_d_sigma(pres_s1.sigma, s1));
    CHECK_FALSE(in_d_sigma(pres_s1.sigma, s2));
    CHECK(in_d_sigma(pres_s1.sigma, p1));  // D_sigma is Gen(P(1) + S_1) here
}

TEST_CASE("in_gen") {
    auto pa = kA(2);
    Module reg = Module::regular(pa.algebra);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1), p1 = projective_at(pa, 0);
    CHECK(in_gen(s1, s1));
    for (const Module& l : {s1, s2, p1}) CHECK(in_gen(reg, l));
    CHECK_FALSE(in_gen(s2, s1));
    CHECK_FALSE(in_gen(s1, p1));
}

TEST_CASE("tau-rigidity") {
    auto pa = kA(2);
    CHECK(is_tau_rigid(projective_at(pa, 0)));
    CHECK(is_tau_rigid(simple_module(pa, 0)));

    auto dn = dual_numbers();
    Module k_simple = simple_module(dn, 0);
    Module bad = direct_sum(dn.algebra, {k_simple, Module::regular(dn.algebra)}).module;
    CHECK_FALSE(is_tau_rigid(bad));  // Hom(k, tau k) = Hom(k, k) != 0
    CHECK_FALSE(is_tau_rigid(k_simple));
}

TEST_CASE("support vertices") {
    auto pa = kA(2);
    auto none = support_vertices(Module::zero(pa.algebra));
    CHECK(none.vertices.empty());

    auto s1 = support_vertices(simple_module(pa, 0));
    CHECK(s1.vertices == std::vector<int>{0});
    CHECK(s1.complement_idempotent == pa.algebra->idempotents[1]);

    auto full = support_vertices(Module::regular(pa.algebra));
    CHECK(full.vertices == std::vector<int>{0, 1});
    CHECK(vec_is_zero(full.complement_idempotent));
}

TEST_CASE("support tau-tilting over kA_2") {
    auto pa = kA(2);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1), p1 = projective_at(pa, 0);

    CHECK(is_support_tau_tilting(Module::regular(pa.algebra), cfg));
    CHECK(is_support_tau_tilting(s1, cfg));
    CHECK(is_support_tau_tilting(s2, cfg));
    CHECK(is_support_tau_tilting(Module::zero(pa.algebra), cfg));
    CHECK(is_support_tau_tilting(direct_sum(pa.algebra, {p1, s1}).module, cfg));

    CHECK_FALSE(is_support_tau_tilting(direct_sum(pa.algebra, {s1, s2}).module, cfg));
    CHECK_FALSE(is_support_tau_tilting(p1, cfg));  // tau-rigid but only one summand on full support
}

TEST_CASE("silting with respect to a given presentation") {
    auto pa = kA(2);
    Catalog cat = ka2_catalog(pa);
    Module reg = Module::regular(pa.algebra);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1), p1 = projective_at(pa, 0);

    CHECK(is_silting(reg, minimal_presentation(reg), cat));

    // the tau-tilting module P(1) + S_1 is silting with its minimal presentation
    Module pt = direct_sum(pa.algebra, {p1, s1}).module;
    CHECK(is_silting(pt, minimal_presentation(pt), cat));

    // S_1 is NOT silting w.r.t. its minimal presentation (P(1) lies in
    // D_sigma but not in Gen(S_1)); it is silting w.r.t. the support-augmented one
    CHECK_FALSE(is_silting(s1, minimal_presentation(s1), cat));
    CHECK(is_silting(s1, support_augmented_presentation(s1), cat));
    CHECK(is_silting_module(s1, cat, cfg));

    // S_2 + S_2 with minimal presentation: P1 = 0, so D is everything
    Module s2s2 = direct_sum(pa.algebra, {s2, s2}).module;
    CHECK_FALSE(is_silting(s2s2, minimal_presentation(s2s2), cat));
}

TEST_CASE("the silting-module set over kA_2 equals the support tau-tilting set") {
    auto pa = kA(2);
    Catalog cat = ka2_catalog(pa);
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<Module> parts;
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) parts.push_back(cat.entries[b]);
        Module y = direct_sum(pa.algebra, parts).module;
        CHECK(is_silting_module(y, cat, cfg) == is_support_tau_tilting(y, cfg));
    }
}

TEST_CASE("partial silting cross-checks tau-rigidity on minimal presentations") {
    auto pa = kA(2);
    Catalog cat = ka2_catalog(pa);
    Module s1 = simple_module(pa, 0), p1 = projective_at(pa, 0);

    CHECK(is_partial_silting(p1, minimal_presentation(p1), cat, cfg));
    CHECK(is_partial_silting(s1, minimal_presentation(s1), cat, cfg));

    auto dn = dual_numbers();
    Module k_simple = simple_module(dn, 0);
    Catalog dcat = make_catalog(dn.algebra, {k_simple, Module::regular(dn.algebra)}, 2,
                                Catalog::Provenance::brute_force, cfg);
    CHECK_FALSE(is_partial_silting(k_simple, minimal_presentation(k_simple), dcat, cfg));
}

TEST_CASE("equivalence: tau-rigid iff partial silting, over all basic kA_2 sums") {
    auto pa = kA(2);
    Catalog cat = ka2_catalog(pa);
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<Module> parts;
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) parts.push_back(cat.entries[b]);
        Module y = direct_sum(pa.algebra, parts).module;
        // is_partial_silting throws logic_error if the two ever disagree
        CHECK(is_partial_silting(y, minimal_presentation(y), cat, cfg) == is_tau_rigid(y));
    }
}

TEST_CASE("n-tilting") {
    auto pa = kA(2);
    Module reg = Module::regular(pa.algebra);
    Module s1 = simple_module(pa, 0), p1 = projective_at(pa, 0);

    CHECK(is_n_tilting(reg, 0, cfg));
    CHECK(is_n_tilting(reg, 1, cfg));

    Module pt = direct_sum(pa.algebra, {p1, s1}).module;
    CHECK(is_n_tilting(pt, 1, cfg));
    CHECK_FALSE(is_n_tilting(pt, 0, cfg));  // S_1 is not projective
    CHECK(is_n_tilting(pt, 2, cfg));        // monotone in n

    CHECK_FALSE(is_n_tilting(s1, 1, cfg));  // no injection P(2) -> S_1^m
}

TEST_CASE("1-tilting bridge: silting w.r.t. a monic minimal presentation") {
    auto pa = kA(2);
    Catalog cat = ka2_catalog(pa);
    Module reg = Module::regular(pa.algebra);
    Module pt = direct_sum(pa.algebra, {projective_at(pa, 0), simple_module(pa, 0)}).module;
    for (const Module& y : {reg, pt}) {
        auto pres = minimal_presentation(y);
        REQUIRE(kernel(pres.sigma.matrix).count() == 0);  // sigma monic
        CHECK(is_silting(y, pres, cat) == is_n_tilting(y, 1, cfg));
    }
}

TEST_CASE("cosilting via duality, cross-checked against the direct definition") {
    auto pa = kA(2);
    Catalog cat = ka2_catalog(pa);
    Module s1 = simple_module(pa, 0), s2 = simple_module(pa, 1), p1 = projective_at(pa, 0);

    // all injectives: I(1) = S_1, I(2) = P(1)
    Module inj = direct_sum(pa.algebra, {s1, p1}).module;
    CHECK(is_cosilting(inj, cat, cfg));

    // one simple is not cosilting w.r.t. its minimal copresentation
    CHECK_FALSE(is_cosilting(s2, cat, cfg));
    CHECK_FALSE(is_cosilting(direct_sum(pa.algebra, {s1, s1}).module, cat, cfg));

    // direct-oracle agreement: Cogen(x) = C_xi checked inside mod A itself,
    // with xi the dual of the minimal presentation of dual(x)
    for (const Module& x : {s1, s2, p1, inj}) {
        Module d = dual_module(x);
        auto pres = minimal_presentation(d);
        Morphism xi = dual_morphism(pres.sigma);
        Module xi_src = xi.source, xi_dst = xi.target;  // injectives over the double opposite
        bool direct = true;
        for (const auto& l : cat.entries) {
            Morphism xi_here = make_morphism(
                [&] { Module m = xi_src; m.algebra = pa.algebra; return m; }(),
                [&] { Module m = xi_dst; m.algebra = pa.algebra; return m; }(), xi.matrix);
            if (in_cogen(x, l) != in_c_xi(xi_here, l)) direct = false;
        }
        CHECK(is_cosilting(x, cat, cfg) == direct);
    }
}

TEST_CASE("catalog invariants are enforced") {
    auto pa = kA(2);
    Module s1 = simple_module(pa, 0);
    CHECK_THROWS_AS(make_catalog(pa.algebra, {s1, simple_module(pa, 0)}, 2, Catalog::Provenance::analytic, cfg),
                    invariant_error);
    CHECK_THROWS_AS(
        make_catalog(pa.algebra, {Module::regular(pa.algebra)}, 2, Catalog::Provenance::analytic, cfg),
        invariant_error);
}
