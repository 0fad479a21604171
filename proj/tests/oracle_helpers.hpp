#pragma once

// Test-only oracles. Everything here decides questions by exhaustive
// enumeration over F_p, independently of the elimination-based code paths it
// is used to check. Sizes must stay tiny; callers guard that.

#include <cstdint>
#include <vector>

#include "cleftlab/matrix.hpp"
#include "cleftlab/module.hpp"

namespace cleftlab::oracle {

inline uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Enumerate all F_p-combinations of the rows of m and count distinct vectors.
/// The span size is p^rank, so this gives rank without elimination.
inline int rank_by_enumeration(const Matrix& m) {
    const unsigned p = m.prime();
    const int n = m.rows();
    std::vector<Vec> seen;
    uint64_t total = ipow(p, unsigned(n));
    for (uint64_t code = 0; code < total; ++code) {
        Vec acc(m.cols(), 0);
        uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            uint8_t coef = uint8_t(c % p);
            c /= p;
            if (coef) acc = vec_add(acc, vec_scale(coef, m.row(i), p), p);
        }
        bool found = false;
        for (const auto& s : seen)
            if (s == acc) { found = true; break; }
        if (!found) seen.push_back(acc);
    }
    uint64_t size = seen.size();
    int r = 0;
    while (size > 1) { size /= p; ++r; }
    return r;
}

/// Count solutions of m v = 0 by sweeping all of F_p^cols; the nullity is
/// log_p of the count.
inline int nullity_by_enumeration(const Matrix& m) {
    const unsigned p = m.prime();
    uint64_t total = ipow(p, unsigned(m.cols()));
    uint64_t count = 0;
    for (uint64_t code = 0; code < total; ++code) {
        Vec v(m.cols());
        uint64_t c = code;
        for (int j = 0; j < m.cols(); ++j) { v[j] = uint8_t(c % p); c /= p; }
        if (vec_is_zero(m.apply(v))) ++count;
    }
    int r = 0;
    while (count > 1) { count /= p; ++r; }
    return r;
}

/// Does a x = b have any solution at all? Decided by sweeping every x.
inline bool solvable_by_enumeration(const Matrix& a, const Vec& b) {
    const unsigned p = a.prime();
    uint64_t total = ipow(p, unsigned(a.cols()));
    for (uint64_t code = 0; code < total; ++code) {
        Vec v(a.cols());
        uint64_t c = code;
        for (int j = 0; j < a.cols(); ++j) { v[j] = uint8_t(c % p); c /= p; }
        if (a.apply(v) == b) return true;
    }
    return false;
}

/// Hom dimension by sweeping every target.dim x source.dim matrix and testing
/// the intertwining identity directly. Exponential; keep dims tiny.
inline int hom_dim_by_enumeration(const Module& x, const Module& y) {
    const unsigned p = x.algebra->p;
    const int cells = x.dim * y.dim;
    uint64_t total = ipow(p, unsigned(cells));
    uint64_t count = 0;
    for (uint64_t code = 0; code < total; ++code) {
        Matrix f(y.dim, x.dim, p);
        uint64_t c = code;
        for (int i = 0; i < y.dim; ++i)
            for (int j = 0; j < x.dim; ++j) {
                f.set(i, j, int(c % p));
                c /= p;
            }
        Morphism m{x, y, f};
        if (is_module_map(m)) ++count;
    }
    int r = 0;
    while (count > 1) { count /= p; ++r; }
    return r;
}

/// Membership of l in Gen(x) decided by searching for a surjection from x^n,
/// sweeping every candidate n-tuple of linear maps. Exponential; tiny only.
inline bool in_gen_by_quotient_search(const Module& x, const Module& l, int max_copies) {
    const unsigned p = x.algebra->p;
    if (l.dim == 0) return true;
    for (int n = 1; n <= max_copies; ++n) {
        const int cells = n * x.dim * l.dim;
        uint64_t total = ipow(p, unsigned(cells));
        for (uint64_t code = 0; code < total; ++code) {
            Matrix f(l.dim, n * x.dim, p);
            uint64_t c = code;
            bool all_maps = true;
            for (int copy = 0; copy < n && all_maps; ++copy) {
                Matrix slot(l.dim, x.dim, p);
                for (int i = 0; i < l.dim; ++i)
                    for (int j = 0; j < x.dim; ++j) {
                        slot.set(i, j, int(c % p));
                        c /= p;
                    }
                Morphism m{x, l, slot};
                if (!is_module_map(m)) all_maps = false;
                f.set_block(0, copy * x.dim, slot);
            }
            if (all_maps && rank(f) == l.dim) return true;
        }
    }
    return false;
}

}  // namespace cleftlab::oracle
