#include <doctest.h>

#include "cleftlab/algebra.hpp"

using namespace cleftlab;

namespace {

Quiver linear_quiver(int n) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return q;
}

PathAlgebra make_kA(int n, unsigned p = 2) { return path_algebra(linear_quiver(n), {}, n, p); }

PathAlgebra make_dual_numbers(unsigned p = 2) {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    Relation r;
    r.terms.push_back({1, {0, 0}});
    return path_algebra(q, {r}, 2, p);
}

}  // namespace

TEST_CASE("path algebra of A_2") {
    auto pa = make_kA(2);
    const Algebra& a = *pa.algebra;
    CHECK(a.dim == 3);
    CHECK(a.basis_labels == std::vector<std::string>{"e_1", "e_2", "a1"});
    CHECK(a.idempotents.size() == 2);
    CHECK(a.radical.count() == 1);
    CHECK(validate(a).all_pass());

    // arrow sits in e_2 A e_1: e_2 * a = a = a * e_1, other corners vanish
    Vec arrow(3, 0);
    arrow[2] = 1;
    CHECK(a.multiply(a.idempotents[1], arrow) == arrow);
    CHECK(a.multiply(arrow, a.idempotents[0]) == arrow);
    CHECK(vec_is_zero(a.multiply(a.idempotents[0], arrow)));
    CHECK(vec_is_zero(a.multiply(arrow, arrow)));
}

TEST_CASE("path algebra with a relation: k[x]/(x^2)") {
    auto pa = make_dual_numbers();
    CHECK(pa.algebra->dim == 2);
    CHECK(validate(*pa.algebra).all_pass());
    Vec x(2, 0);
    x[1] = 1;
    CHECK(vec_is_zero(pa.algebra->multiply(x, x)));
}

TEST_CASE("one vertex, no arrows: the ground field") {
    Quiver q;
    q.vertices = {"1"};
    auto pa = path_algebra(q, {}, 1, 3);
    CHECK(pa.algebra->dim == 1);
    CHECK(pa.algebra->radical.count() == 0);
    CHECK(validate(*pa.algebra).all_pass());
}

TEST_CASE("linear quiver dimension formula") {
    for (int n = 1; n <= 4; ++n) {
        auto pa = make_kA(n);
        CHECK(pa.algebra->dim == n * (n + 1) / 2);
        CHECK(validate(*pa.algebra).all_pass());
    }
}

TEST_CASE("inadmissible bound reports a witness path") {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    CHECK_THROWS_WITH_AS(path_algebra(q, {}, 3, 2), doctest::Contains("witness path x*x*x"), invariant_error);
}

TEST_CASE("quotient by the empty ideal is an isomorphic copy") {
    auto pa = make_kA(2);
    auto quo = quotient_by_ideal(pa.algebra, {});
    CHECK(quo.algebra->dim == 3);
    CHECK(quo.projection.is_identity());
    CHECK(quo.algebra->mult == pa.algebra->mult);
}

TEST_CASE("quotient of A_2 by the second vertex kills the arrow too") {
    auto pa = make_kA(2);
    auto quo = quotient_by_ideal(pa.algebra, {pa.algebra->idempotents[1]});
    CHECK(quo.algebra->dim == 1);
    CHECK(quo.algebra->idempotents.size() == 1);
    CHECK(quo.kept_idempotents == std::vector<int>{0});
    CHECK(validate(*quo.algebra).all_pass());
}

TEST_CASE("quotient of k[x]/(x^2) by (x)") {
    auto pa = make_dual_numbers();
    Vec x(2, 0);
    x[1] = 1;
    auto quo = quotient_by_ideal(pa.algebra, {x});
    CHECK(quo.algebra->dim == 1);
    CHECK(quo.algebra->radical.count() == 0);
}

TEST_CASE("quotient by the whole algebra is signaled distinctly") {
    auto pa = make_kA(2);
    CHECK_THROWS_AS(quotient_by_ideal(pa.algebra, {pa.algebra->unit}), whole_algebra_error);
}

TEST_CASE("quotient projection is an algebra homomorphism") {
    for (unsigned p : {2u, 3u}) {
        auto pa = make_kA(3, p);
        auto quo = quotient_by_ideal(pa.algebra, {pa.algebra->idempotents[2]});
        const Algebra& a = *pa.algebra;
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                Vec ei(a.dim, 0), ej(a.dim, 0);
                ei[i] = 1;
                ej[j] = 1;
                Vec lhs = quo.projection.apply(a.multiply(ei, ej));
                Vec rhs = quo.algebra->multiply(quo.projection.apply(ei), quo.projection.apply(ej));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("opposite algebra") {
    auto pa = make_kA(2);
    auto op = opposite(pa.algebra);
    CHECK(validate(*op).all_pass());
    CHECK(same_algebra(opposite(op), pa.algebra));

    // reversing A_2 gives the path algebra of the reversed quiver on the nose
    Quiver rev;
    rev.vertices = {"1", "2"};
    rev.arrows = {{"b", 1, 0}};
    auto pb = path_algebra(rev, {}, 2, 2);
    CHECK(op->mult == pb.algebra->mult);

    Quiver single;
    single.vertices = {"1"};
    auto k = path_algebra(single, {}, 1, 2);
    CHECK(same_algebra(opposite(k.algebra), k.algebra));
}

TEST_CASE("validate flags corrupted data with witnesses") {
    auto pa = make_kA(2);
    Algebra bad = *pa.algebra;
    bad.mult[2][0][0] = 1;  // a * e_1 picks up a spurious e_1 component
    auto rep = validate(bad);
    CHECK_FALSE(rep.all_pass());
    bool assoc_or_unit_failed = false;
    for (const auto& c : rep.checks)
        if ((c.name == "associativity" || c.name == "unit-law") && !c.pass) assoc_or_unit_failed = true;
    CHECK(assoc_or_unit_failed);

    Algebra missing_rad = *pa.algebra;
    missing_rad.radical = Basis::empty(3, 2);
    auto rep2 = validate(missing_rad);
    CHECK_FALSE(rep2.all_pass());
    bool split_failed = false;
    for (const auto& c : rep2.checks)
        if (c.name == "split-basic-semisimple-quotient" && !c.pass) split_failed = true;
    CHECK(split_failed);
}

TEST_CASE("product algebra k x k") {
    Quiver single;
    single.vertices = {"1"};
    auto k = path_algebra(single, {}, 1, 2);
    auto prod = product_algebra(k.algebra, k.algebra);
    CHECK(prod.algebra->dim == 2);
    CHECK(prod.algebra->idempotents.size() == 2);
    CHECK(prod.algebra->radical.count() == 0);
    CHECK(validate(*prod.algebra).all_pass());
}
