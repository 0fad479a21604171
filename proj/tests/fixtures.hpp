#pragma once

// Shared constructions for the test suites: small quivers and their standard
// modules.

#include <string>

#include "cleftlab/algebra.hpp"
#include "cleftlab/module.hpp"

namespace cleftlab::fixtures {

inline Quiver linear_quiver(int n) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return q;
}

inline PathAlgebra kA(int n, unsigned p = 2) { return path_algebra(linear_quiver(n), {}, n, p); }

inline PathAlgebra dual_numbers(unsigned p = 2) {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    Relation r;
    r.terms.push_back({1, {0, 0}});
    return path_algebra(q, {r}, 2, p);
}

inline PathAlgebra ground_field(unsigned p = 2) {
    Quiver q;
    q.vertices = {"1"};
    return path_algebra(q, {}, 1, p);
}

/// Indecomposable projective A e_v as a submodule of the regular module.
inline Module projective_at(const PathAlgebra& pa, int vertex) {
    Module reg = Module::regular(pa.algebra);
    const Algebra& a = *pa.algebra;
    std::vector<Vec> cols;
    for (int i = 0; i < a.dim; ++i) {
        Vec e(a.dim, 0);
        e[i] = 1;
        cols.push_back(a.multiply(e, a.idempotents[vertex]));
    }
    Basis span = row_space(Matrix::from_rows(cols, a.dim, a.p));
    return submodule(reg, span).module;
}

}  // namespace cleftlab::fixtures
