#include "cleftlab/module.hpp"

#include <algorithm>
#include <random>

namespace cleftlab {

Module Module::zero(AlgebraPtr a) {
    Module m;
    m.dim = 0;
    m.action.assign(a->dim, Matrix(0, 0, a->p));
    m.algebra = std::move(a);
    return m;
}

Module Module::regular(const AlgebraPtr& a) {
    Module m;
    m.algebra = a;
    m.dim = a->dim;
    m.action = a->left_mult;
    return m;
}

Matrix Module::act(const Vec& x) const {
    Matrix m(dim, dim, algebra->p);
    for (int i = 0; i < algebra->dim; ++i)
        if (x[i]) m = m + action[i].scaled(x[i]);
    return m;
}

bool check_module(const Module& m, std::string* why) {
    const Algebra& a = *m.algebra;
    if (int(m.action.size()) != a.dim) {
        if (why) *why = "action table size != algebra dim";
        return false;
    }
    for (const auto& mat : m.action)
        if (mat.rows() != m.dim || mat.cols() != m.dim) {
            if (why) *why = "action matrix shape mismatch";
            return false;
        }
    if (!m.act(a.unit).is_identity()) {
        if (why) *why = "unit does not act as identity";
        return false;
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            if (m.action[i] * m.action[j] != m.act(a.mult[i][j])) {
                if (why) *why = "structure constants violated at (" + a.basis_labels[i] + "," + a.basis_labels[j] + ")";
                return false;
            }
        }
    return true;
}

Morphism make_morphism(Module source, Module target, Matrix m, bool check) {
    Morphism f{std::move(source), std::move(target), std::move(m)};
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim)
        throw dimension_mismatch("morphism matrix shape mismatch");
    if (check) {
        std::string why;
        if (!is_module_map(f, &why)) throw invariant_error("not a module morphism: " + why);
    }
    return f;
}

bool is_module_map(const Morphism& f, std::string* why) {
    if (!same_algebra(f.source.algebra, f.target.algebra)) {
        if (why) *why = "source and target over different algebras";
        return false;
    }
    const Algebra& a = *f.source.algebra;
    for (int i = 0; i < a.dim; ++i)
        if (f.matrix * f.source.action[i] != f.target.action[i] * f.matrix) {
            if (why) *why = "fails to intertwine " + a.basis_labels[i];
            return false;
        }
    return true;
}

Morphism identity_morphism(const Module& x) {
    return make_morphism(x, x, Matrix::identity(x.dim, x.algebra->p), false);
}

Morphism zero_morphism(const Module& x, const Module& y) {
    return make_morphism(x, y, Matrix(y.dim, x.dim, x.algebra->p), false);
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.source.dim != g.target.dim) throw dimension_mismatch("compose: inner dimensions differ");
    return make_morphism(g.source, f.target, f.matrix * g.matrix, false);
}

std::vector<Vec> generating_set(const Algebra& a) {
    std::vector<Vec> sq;
    for (int i = 0; i < a.radical.count(); ++i)
        for (int j = 0; j < a.radical.count(); ++j)
            sq.push_back(a.multiply(a.radical.vectors.row(i), a.radical.vectors.row(j)));
    Basis rad_sq = sq.empty() ? Basis::empty(a.dim, a.p) : row_space(Matrix::from_rows(sq, a.dim, a.p));

    std::vector<Vec> gens = a.idempotents;
    Basis span = rad_sq;
    for (int i = 0; i < a.radical.count(); ++i) {
        Vec v = a.radical.vectors.row(i);
        if (!in_span(span, v)) {
            gens.push_back(v);
            span = extend_basis(span, Matrix::from_rows({v}, a.dim, a.p));
        }
    }
    return gens;
}

std::vector<Morphism> hom_basis(const Module& x, const Module& y) {
    if (!same_algebra(x.algebra, y.algebra)) throw invariant_error("hom_basis: algebra mismatch");
    const Algebra& a = *x.algebra;
    const unsigned p = a.p;
    const int dx = x.dim, dy = y.dim;
    if (dx == 0 || dy == 0) return {};

    std::vector<Vec> gens = generating_set(a);
    Matrix constraints(int(gens.size()) * dx * dy, dx * dy, p);
    int row = 0;
    for (const auto& g : gens) {
        Matrix xg = x.act(g), yg = y.act(g);
        // (f * xg - yg * f)_{ij} = 0, unknown f_{rs} at index r*dx + s
        for (int i = 0; i < dy; ++i)
            for (int j = 0; j < dx; ++j) {
                for (int s = 0; s < dx; ++s)
                    constraints.set(row, i * dx + s, xg.at(s, j));
                for (int r = 0; r < dy; ++r) {
                    int c = r * dx + j;
                    constraints.set(row, c, fp_sub(constraints.at(row, c), yg.at(i, r), p));
                }
                ++row;
            }
    }
    Basis ker = kernel(constraints);
    std::vector<Morphism> out;
    for (int k = 0; k < ker.count(); ++k) {
        Matrix f(dy, dx, p);
        Vec v = ker.vectors.row(k);
        for (int r = 0; r < dy; ++r)
            for (int s = 0; s < dx; ++s) f.set(r, s, v[r * dx + s]);
        out.push_back(make_morphism(x, y, std::move(f)));
    }
    return out;
}

int hom_dim(const Module& x, const Module& y) { return int(hom_basis(x, y).size()); }

SubmoduleResult submodule(const Module& x, const Basis& vectors) {
    Matrix incl = vectors.inclusion();  // x.dim x k
    Module sub;
    sub.algebra = x.algebra;
    sub.dim = vectors.count();
    for (const auto& act : x.action) {
        auto coords = solve_matrix(incl, act * incl);
        if (!coords) throw invariant_error("subspace is not action-stable");
        sub.action.push_back(std::move(*coords));
    }
    SubmoduleResult res{std::move(sub), {}};
    res.inclusion = make_morphism(res.module, x, incl);
    return res;
}

QuotientModuleResult quotient_module(const Module& x, const Basis& sub) {
    auto qm = quotient(x.dim, sub);
    Module q;
    q.algebra = x.algebra;
    q.dim = qm.dim;
    for (const auto& act : x.action) {
        Matrix qa = qm.projection * act * qm.section;
        if (qa * qm.projection != qm.projection * act)
            throw invariant_error("subspace is not action-stable; quotient action undefined");
        q.action.push_back(std::move(qa));
    }
    QuotientModuleResult res{std::move(q), {}, qm.section};
    res.projection = make_morphism(x, res.module, qm.projection);
    return res;
}

SubmoduleResult kernel_module(const Morphism& f) { return submodule(f.source, kernel(f.matrix)); }

QuotientModuleResult cokernel_module(const Morphism& f) {
    return quotient_module(f.target, row_space(f.matrix.transpose()));
}

ImageResult image_module(const Morphism& f) {
    Basis img = row_space(f.matrix.transpose());
    auto sub = submodule(f.target, img);
    auto coords = solve_matrix(sub.inclusion.matrix, f.matrix);
    if (!coords) throw invariant_error("internal: image factorization failed");
    ImageResult res{sub.module, sub.inclusion, make_morphism(f.source, sub.module, std::move(*coords))};
    if (compose(res.inclusion, res.onto).matrix != f.matrix)
        throw invariant_error("internal: image factorization does not recompose");
    return res;
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& xs) {
    const unsigned p = a->p;
    int total = 0;
    for (const auto& x : xs) {
        if (!same_algebra(x.algebra, a)) throw invariant_error("direct_sum: algebra mismatch");
        total += x.dim;
    }
    Module sum;
    sum.algebra = a;
    sum.dim = total;
    for (int i = 0; i < a->dim; ++i) {
        Matrix block(total, total, p);
        int off = 0;
        for (const auto& x : xs) {
            block.set_block(off, off, x.action[i]);
            off += x.dim;
        }
        sum.action.push_back(std::move(block));
    }
    DirectSum res{std::move(sum), {}, {}};
    int off = 0;
    for (const auto& x : xs) {
        Matrix inj(total, x.dim, p), proj(x.dim, total, p);
        for (int i = 0; i < x.dim; ++i) {
            inj.set(off + i, i, 1);
            proj.set(i, off + i, 1);
        }
        res.injections.push_back(make_morphism(x, res.module, std::move(inj), false));
        res.projections.push_back(make_morphism(res.module, x, std::move(proj), false));
        off += x.dim;
    }
    return res;
}

namespace {

Matrix combo_matrix(const std::vector<Morphism>& basis, uint64_t code, unsigned p, int dim) {
    Matrix f(dim, dim, p);
    for (const auto& b : basis) {
        uint8_t c = uint8_t(code % p);
        code /= p;
        if (c) f = f + b.matrix.scaled(c);
    }
    return f;
}

/// x = ker(g) (+) column-span(g) for g a high power of an endomorphism.
bool fitting_split(const Module& x, const Matrix& g, std::vector<Module>& out, const Config& cfg) {
    int r = rank(g);
    if (r == 0 || r == x.dim) return false;
    auto part1 = submodule(x, kernel(g));
    auto part2 = submodule(x, row_space(g.transpose()));
    auto d1 = decompose(part1.module, cfg);
    auto d2 = decompose(part2.module, cfg);
    out.insert(out.end(), d1.begin(), d1.end());
    out.insert(out.end(), d2.begin(), d2.end());
    return true;
}

void sort_summands(std::vector<Module>& mods) {
    std::sort(mods.begin(), mods.end(), [](const Module& a, const Module& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (size_t i = 0; i < a.action.size(); ++i)
            if (a.action[i].data() != b.action[i].data()) return a.action[i].data() < b.action[i].data();
        return false;
    });
}

}  // namespace

std::vector<Module> decompose(const Module& x, const Config& cfg) {
    if (x.dim == 0) return {};
    const unsigned p = x.algebra->p;
    std::vector<Morphism> ends = hom_basis(x, x);
    if (ends.size() == 1) return {x};  // End(x) = k, local

    std::vector<Module> out;

    // Fitting splittings from spanning endomorphisms, eigenvalue shifts, and
    // seeded random combinations.
    Matrix id = Matrix::identity(x.dim, p);
    std::mt19937_64 rng(cfg.seed ^ (uint64_t(x.dim) << 32) ^ ends.size());
    std::vector<Matrix> candidates;
    for (const auto& e : ends) candidates.push_back(e.matrix);
    for (int t = 0; t < cfg.fitting_tries; ++t) {
        Matrix f(x.dim, x.dim, p);
        for (const auto& e : ends)
            if (uint8_t c = uint8_t(rng() % p)) f = f + e.matrix.scaled(c);
        candidates.push_back(std::move(f));
    }
    for (const auto& f : candidates) {
        for (unsigned lam = 0; lam < p; ++lam) {
            Matrix g = (f - id.scaled(uint8_t(lam))).pow(uint64_t(x.dim));
            if (fitting_split(x, g, out, cfg)) {
                sort_summands(out);
                return out;
            }
        }
    }

    // Exhaustive idempotent sweep: x splits iff End(x) contains an idempotent
    // other than 0 and 1, so a full sweep finding none is a certificate.
    const int d = int(ends.size());
    uint64_t space = 1;
    for (int i = 0; i < d; ++i) {
        space *= p;
        if (space > cfg.budget_sweep)
            throw certification_error("indecomposability not certified: endomorphism sweep of size p^" +
                                      std::to_string(d) + " exceeds budget");
    }
    for (uint64_t code = 1; code < space; ++code) {
        Matrix f = combo_matrix(ends, code, p, x.dim);
        if (f.is_identity() || f.is_zero()) continue;
        if (f * f != f) continue;
        if (fitting_split(x, f, out, cfg)) {  // idempotent: ker/im split directly
            sort_summands(out);
            return out;
        }
    }
    return {x};
}

std::vector<int> module_fingerprint(const Module& x) {
    std::vector<int> fp;
    fp.push_back(x.dim);
    for (const auto& e : x.algebra->idempotents) fp.push_back(rank(x.act(e)));
    fp.push_back(radical_subspace(x).count());
    fp.push_back(hom_dim(x, x));
    return fp;
}

IsoResult try_isomorphism(const Module& x, const Module& y, const Config& cfg) {
    if (!same_algebra(x.algebra, y.algebra)) throw invariant_error("is_isomorphic: algebra mismatch");
    const unsigned p = x.algebra->p;
    if (x.dim != y.dim) return {Ternary::no, std::nullopt};
    if (x.dim == 0) return {Ternary::yes, Matrix(0, 0, p)};
    if (module_fingerprint(x) != module_fingerprint(y)) return {Ternary::no, std::nullopt};

    std::vector<Morphism> homs = hom_basis(x, y);
    if (homs.empty()) return {Ternary::no, std::nullopt};
    if (hom_dim(y, x) != int(homs.size())) return {Ternary::no, std::nullopt};

    const int d = int(homs.size());
    uint64_t space = 1;
    bool exhaustive = true;
    for (int i = 0; i < d; ++i) {
        space *= p;
        if (space > cfg.budget_sweep) {
            exhaustive = false;
            break;
        }
    }
    if (exhaustive) {
        for (uint64_t code = 1; code < space; ++code) {
            Matrix f = combo_matrix(homs, code, p, x.dim);
            if (rank(f) == x.dim) return {Ternary::yes, f};
        }
        return {Ternary::no, std::nullopt};
    }
    // random phase under budget; a miss here is inconclusive, not "no"
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < cfg.fitting_tries * 16; ++t) {
        Matrix f(x.dim, x.dim, p);
        for (const auto& h : homs)
            if (uint8_t c = uint8_t(rng() % p)) f = f + h.matrix.scaled(c);
        if (rank(f) == x.dim) return {Ternary::yes, f};
    }
    return {Ternary::unknown, std::nullopt};
}

bool is_isomorphic(const Module& x, const Module& y, const Config& cfg) {
    auto r = try_isomorphism(x, y, cfg);
    if (r.verdict == Ternary::unknown)
        throw budget_error("isomorphism test inconclusive: hom space too large for the sweep budget");
    return r.verdict == Ternary::yes;
}

Module dual_module(const Module& x) {
    Module d;
    d.algebra = opposite(x.algebra);
    d.dim = x.dim;
    for (const auto& act : x.action) d.action.push_back(act.transpose());
    return d;
}

Morphism dual_morphism(const Morphism& f) {
    return make_morphism(dual_module(f.target), dual_module(f.source), f.matrix.transpose());
}

TraceResult trace_of_in(const Module& x, const Module& l) {
    if (!same_algebra(x.algebra, l.algebra)) throw invariant_error("trace_of_in: algebra mismatch");
    const unsigned p = x.algebra->p;
    std::vector<Morphism> homs = hom_basis(x, l);
    Matrix stacked(0, l.dim, p);
    for (const auto& f : homs) stacked = stacked.vstack(f.matrix.transpose());
    TraceResult res;
    res.subspace = row_space(stacked);
    res.is_all = (res.subspace.count() == l.dim);
    submodule(l, res.subspace);  // the trace is a submodule; this asserts it
    return res;
}

Basis radical_subspace(const Module& x) {
    const Algebra& a = *x.algebra;
    Matrix stacked(0, x.dim, a.p);
    for (int r = 0; r < a.radical.count(); ++r)
        stacked = stacked.vstack(x.act(a.radical.vectors.row(r)).transpose());
    return row_space(stacked);
}

Basis submodule_closure(const Module& x, const Matrix& generators) {
    Basis span = row_space(generators);
    for (;;) {
        Matrix next(0, x.dim, x.algebra->p);
        for (int i = 0; i < span.count(); ++i) {
            Vec v = span.vectors.row(i);
            for (const auto& act : x.action)
                next = next.vstack(Matrix::from_rows({act.apply(v)}, x.dim, x.algebra->p));
        }
        Basis grown = extend_basis(span, next);
        if (grown.count() == span.count()) return span;
        span = grown;
    }
}

ExtensionResult build_extension(const Module& z, const Module& x, const std::vector<Matrix>& cocycle) {
    if (!same_algebra(z.algebra, x.algebra)) throw invariant_error("build_extension: algebra mismatch");
    const Algebra& a = *x.algebra;
    const unsigned p = a.p;
    if (int(cocycle.size()) != a.dim) throw dimension_mismatch("cocycle needs one matrix per basis element");

    Module e;
    e.algebra = x.algebra;
    e.dim = x.dim + z.dim;
    for (int i = 0; i < a.dim; ++i) {
        if (cocycle[i].rows() != x.dim || cocycle[i].cols() != z.dim)
            throw dimension_mismatch("cocycle matrix shape mismatch");
        Matrix m(e.dim, e.dim, p);
        m.set_block(0, 0, x.action[i]);
        m.set_block(0, x.dim, cocycle[i]);
        m.set_block(x.dim, x.dim, z.action[i]);
        e.action.push_back(std::move(m));
    }
    std::string why;
    if (!check_module(e, &why)) throw invariant_error("cocycle incompatible with the algebra: " + why);

    Matrix incl(e.dim, x.dim, p), proj(z.dim, e.dim, p);
    for (int i = 0; i < x.dim; ++i) incl.set(i, i, 1);
    for (int i = 0; i < z.dim; ++i) proj.set(i, x.dim + i, 1);
    ExtensionResult res{std::move(e), {}, {}};
    res.incl_sub = make_morphism(x, res.total, std::move(incl));
    res.proj_quot = make_morphism(res.total, z, std::move(proj));
    return res;
}

std::vector<std::vector<Matrix>> extension_cocycle_space(const Module& z, const Module& x) {
    if (!same_algebra(z.algebra, x.algebra)) throw invariant_error("extension_cocycle_space: algebra mismatch");
    const Algebra& a = *x.algebra;
    const unsigned p = a.p;
    const int dx = x.dim, dz = z.dim, n = a.dim;
    const int vars = n * dx * dz;
    if (vars == 0) return {};
    auto var = [&](int b, int r, int c) { return b * dx * dz + r * dz + c; };

    std::vector<Vec> rows;
    // corner of the module law: X_i C_j + C_i Z_j = sum_k c[i][j][k] C_k
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < dx; ++r)
                for (int c = 0; c < dz; ++c) {
                    Vec row(vars, 0);
                    for (int s = 0; s < dx; ++s) {
                        int v = var(j, s, c);
                        row[v] = fp_add(row[v], x.action[i].at(r, s), p);
                    }
                    for (int s = 0; s < dz; ++s) {
                        int v = var(i, r, s);
                        row[v] = fp_add(row[v], z.action[j].at(s, c), p);
                    }
                    for (int k = 0; k < n; ++k)
                        if (a.mult[i][j][k]) {
                            int v = var(k, r, c);
                            row[v] = fp_sub(row[v], a.mult[i][j][k], p);
                        }
                    if (!vec_is_zero(row)) rows.push_back(std::move(row));
                }
    // unit constraint: sum_i unit_i C_i = 0
    for (int r = 0; r < dx; ++r)
        for (int c = 0; c < dz; ++c) {
            Vec row(vars, 0);
            for (int i = 0; i < n; ++i)
                if (a.unit[i]) row[var(i, r, c)] = a.unit[i];
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }

    Matrix system = rows.empty() ? Matrix(0, vars, p) : Matrix::from_rows(rows, vars, p);
    Basis ker = kernel(system);
    std::vector<std::vector<Matrix>> out;
    for (int k = 0; k < ker.count(); ++k) {
        Vec v = ker.vectors.row(k);
        std::vector<Matrix> tuple;
        for (int b = 0; b < n; ++b) {
            Matrix m(dx, dz, p);
            for (int r = 0; r < dx; ++r)
                for (int c = 0; c < dz; ++c) m.set(r, c, v[var(b, r, c)]);
            tuple.push_back(std::move(m));
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

Module restrict_to_quotient(const Module& x, const AlgebraQuotient& q) {
    Module out;
    out.algebra = q.algebra;
    out.dim = x.dim;
    for (int k = 0; k < q.algebra->dim; ++k) out.action.push_back(x.act(q.section.col(k)));
    std::string why;
    if (!check_module(out, &why))
        throw invariant_error("module does not factor through the quotient algebra: " + why);
    // factoring requires the ideal to annihilate x; verify against the projection
    for (int i = 0; i < x.algebra->dim; ++i) {
        Vec e(x.algebra->dim, 0);
        e[i] = 1;
        if (out.act(q.projection.apply(e)) != x.action[i])
            throw invariant_error("module is not annihilated by the ideal");
    }
    return out;
}

Module restrict_along(const Module& x, const Matrix& algebra_map, const AlgebraPtr& source_algebra) {
    if (algebra_map.cols() != source_algebra->dim || algebra_map.rows() != x.algebra->dim)
        throw dimension_mismatch("restrict_along: algebra map shape mismatch");
    Module out;
    out.algebra = source_algebra;
    out.dim = x.dim;
    for (int i = 0; i < source_algebra->dim; ++i) out.action.push_back(x.act(algebra_map.col(i)));
    std::string why;
    if (!check_module(out, &why)) throw invariant_error("restriction is not a module: " + why);
    return out;
}

Module module_from_representation(const PathAlgebra& pa, const std::vector<int>& vertex_dims,
                                  const std::vector<Matrix>& arrow_maps) {
    const Quiver& q = pa.quiver;
    const unsigned p = pa.algebra->p;
    if (vertex_dims.size() != q.vertices.size()) throw schema_error("one dimension per vertex required");
    if (arrow_maps.size() != q.arrows.size()) throw schema_error("one matrix per arrow required");
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (arrow_maps[a].rows() != vertex_dims[q.arrows[a].target] ||
            arrow_maps[a].cols() != vertex_dims[q.arrows[a].source])
            throw schema_error("arrow map '" + q.arrows[a].name + "' has wrong shape");

    std::vector<int> offset(q.vertices.size() + 1, 0);
    for (size_t v = 0; v < q.vertices.size(); ++v) offset[v + 1] = offset[v] + vertex_dims[v];

    Module m;
    m.algebra = pa.algebra;
    m.dim = offset.back();
    for (int b = 0; b < pa.algebra->dim; ++b) {
        int src = pa.basis_path_source[b];
        Matrix blockmap = Matrix::identity(vertex_dims[src], p);
        int cur = src;
        for (int ai : pa.basis_path[b]) {
            blockmap = arrow_maps[ai] * blockmap;
            cur = q.arrows[ai].target;
        }
        Matrix act(m.dim, m.dim, p);
        act.set_block(offset[cur], offset[src], blockmap);
        m.action.push_back(std::move(act));
    }
    std::string why;
    if (!check_module(m, &why)) throw invariant_error("representation data violates the relations: " + why);
    return m;
}

Module simple_module(const PathAlgebra& pa, int vertex) {
    std::vector<int> dims(pa.quiver.vertices.size(), 0);
    dims[vertex] = 1;
    std::vector<Matrix> maps;
    for (const auto& a : pa.quiver.arrows) maps.push_back(Matrix(dims[a.target], dims[a.source], pa.algebra->p));
    return module_from_representation(pa, dims, maps);
}

}  // namespace cleftlab
