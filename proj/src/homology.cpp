#include "cleftlab/homology.hpp"

#include <algorithm>

namespace cleftlab {

std::vector<ProjectiveData> indecomposable_projectives(const AlgebraPtr& a) {
    std::vector<ProjectiveData> out;
    Module reg = Module::regular(a);
    for (const auto& e : a->idempotents) {
        // A e = span of b_k * e
        std::vector<Vec> rows;
        for (int k = 0; k < a->dim; ++k) {
            Vec b(a->dim, 0);
            b[k] = 1;
            rows.push_back(a->multiply(b, e));
        }
        Basis span = row_space(Matrix::from_rows(rows, a->dim, a->p));
        auto sub = submodule(reg, span);
        ProjectiveData d;
        d.module = sub.module;
        d.inclusion = sub.inclusion.matrix;
        auto coords = coordinates_in(span, e);
        if (!coords) throw invariant_error("internal: idempotent not inside its own left ideal");
        d.generator = *coords;
        out.push_back(std::move(d));
    }
    return out;
}

Module indecomposable_injective(const AlgebraPtr& a, int vertex) {
    // e_i A as a right module, then transpose the action
    const Vec& e = a->idempotents[vertex];
    std::vector<Vec> rows;
    for (int k = 0; k < a->dim; ++k) {
        Vec b(a->dim, 0);
        b[k] = 1;
        rows.push_back(a->multiply(e, b));
    }
    Basis span = row_space(Matrix::from_rows(rows, a->dim, a->p));
    Matrix incl = span.inclusion();  // a.dim x d
    Module inj;
    inj.algebra = a;
    inj.dim = span.count();
    for (int i = 0; i < a->dim; ++i) {
        // right multiplication by e_i restricted to e A, in span coordinates
        auto coords = solve_matrix(incl, a->right_mult[i] * incl);
        if (!coords) throw invariant_error("internal: right ideal not stable under right multiplication");
        inj.action.push_back(coords->transpose());
    }
    std::string why;
    if (!check_module(inj, &why)) throw invariant_error("internal: injective module law fails: " + why);
    return inj;
}

ProjectiveModule projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices) {
    auto projs = indecomposable_projectives(a);
    std::vector<Module> parts;
    ProjectiveModule out;
    int off = 0;
    for (int v : vertices) {
        parts.push_back(projs[v].module);
        out.vertex.push_back(v);
        out.offset.push_back(off);
        off += projs[v].module.dim;
    }
    out.module = direct_sum(a, parts).module;
    return out;
}

ProjectiveCover projective_cover(const Module& x) {
    const AlgebraPtr& a = x.algebra;
    const unsigned p = a->p;
    auto projs = indecomposable_projectives(a);

    Basis rad = radical_subspace(x);
    auto top = quotient_module(x, rad);

    // pick columns of act(e_i) whose images form a basis of e_i * top(x);
    // those columns live in e_i * x and generate x over the radical
    std::vector<int> vertices;
    std::vector<Vec> gens;
    for (size_t i = 0; i < a->idempotents.size(); ++i) {
        Matrix cols = x.act(a->idempotents[i]);
        Matrix chosen(0, top.module.dim, p);
        for (int c = 0; c < cols.cols(); ++c) {
            Vec v = cols.col(c);  // lies in e_i * x
            Vec tv = top.projection.matrix.apply(v);
            Matrix cand = chosen.vstack(Matrix::from_rows({tv}, top.module.dim, p));
            if (rank(cand) > chosen.rows()) {
                chosen = row_space(cand).vectors;
                vertices.push_back(int(i));
                gens.push_back(v);
            }
        }
    }

    ProjectiveModule P = projective_sum(a, vertices);
    Matrix epi(x.dim, P.module.dim, p);
    for (size_t s = 0; s < vertices.size(); ++s) {
        const ProjectiveData& pd = projs[vertices[s]];
        // column t of the block: (basis vector t of A e_i) acting on the chosen generator
        for (int t = 0; t < pd.module.dim; ++t) {
            Vec elem = pd.inclusion.col(t);  // as an element of A
            Vec img = x.act(elem).apply(gens[s]);
            for (int r = 0; r < x.dim; ++r) epi.set(r, P.offset[s] + t, img[r]);
        }
    }
    Morphism epi_m = make_morphism(P.module, x, std::move(epi));
    ProjectiveCover res{std::move(P), std::move(epi_m)};

    if (rank(res.epi.matrix) != x.dim) throw invariant_error("internal: projective cover not surjective");
    Basis ker = kernel(res.epi.matrix);
    Basis radP = radical_subspace(res.p.module);
    for (int i = 0; i < ker.count(); ++i)
        if (!in_span(radP, ker.vectors.row(i)))
            throw invariant_error("internal: cover kernel escapes the radical");
    return res;
}

Presentation minimal_presentation(const Module& x) {
    auto c0 = projective_cover(x);
    auto k = kernel_module(c0.epi);
    auto c1 = projective_cover(k.module);

    Presentation pres;
    pres.sigma = compose(k.inclusion, c1.epi);
    pres.x = x;
    pres.minimal = true;
    pres.p1_data = c1.p;
    pres.p0_data = c0.p;

    auto coker = cokernel_module(pres.sigma);
    Matrix h = c0.epi.matrix * coker.section;
    if (h * coker.projection.matrix != c0.epi.matrix)
        throw invariant_error("internal: presentation cokernel does not match the cover");
    pres.coker_iso = make_morphism(coker.module, x, h);
    if (rank(h) != x.dim) throw invariant_error("internal: cokernel identification not invertible");

    // minimality: image of sigma inside rad P0
    Basis radP0 = radical_subspace(c0.p.module);
    for (int c = 0; c < pres.sigma.matrix.cols(); ++c)
        if (!in_span(radP0, pres.sigma.matrix.col(c)))
            throw invariant_error("internal: presentation not minimal");
    return pres;
}

Resolution resolution(const Module& x, int n) {
    Resolution res;
    res.x = x;
    auto c0 = projective_cover(x);
    res.terms.push_back(c0.p);
    res.augmentation = c0.epi;
    Morphism last_epi = c0.epi;
    for (int j = 1; j <= n; ++j) {
        auto k = kernel_module(last_epi);
        if (k.module.dim == 0) {
            res.terminated = true;
            return res;
        }
        auto c = projective_cover(k.module);
        res.diff.push_back(compose(k.inclusion, c.epi));
        res.terms.push_back(c.p);
        last_epi = c.epi;
    }
    res.terminated = (kernel_module(last_epi).module.dim == 0);
    return res;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v[size_t(i) * m.cols() + j] = m.at(i, j);
    return v;
}

/// Matrix of the linear map Hom(P, y) -> Hom(P', y), f -> f ∘ d, in the
/// bases produced by hom_basis.
Matrix hom_complex_map(const std::vector<Morphism>& from_basis, const std::vector<Morphism>& to_basis,
                       const Morphism& d, unsigned p, int to_rows, int to_cols) {
    Matrix to_mat(to_rows * to_cols, int(to_basis.size()), p);
    for (size_t c = 0; c < to_basis.size(); ++c) {
        Vec v = flatten(to_basis[c].matrix);
        for (size_t r = 0; r < v.size(); ++r) to_mat.set(int(r), int(c), v[r]);
    }
    Matrix out(int(to_basis.size()), int(from_basis.size()), p);
    for (size_t c = 0; c < from_basis.size(); ++c) {
        Matrix composed = from_basis[c].matrix * d.matrix;
        auto coords = solve(to_mat, flatten(composed));
        if (!coords) throw invariant_error("internal: composed hom not in hom basis span");
        for (size_t r = 0; r < coords->size(); ++r) out.set(int(r), int(c), (*coords)[r]);
    }
    return out;
}

}  // namespace

int ext_dim(const Module& x, const Module& y, int j) {
    if (j < 0) throw invariant_error("ext_dim: negative degree");
    if (j == 0) return hom_dim(x, y);
    Resolution res = resolution(x, j + 1);
    int len = int(res.terms.size()) - 1;
    if (j > len) return 0;  // resolution terminated earlier

    const unsigned p = x.algebra->p;
    auto homs_j = hom_basis(res.terms[j].module, y);

    // incoming differential d_j^* : Hom(P_{j-1}, y) -> Hom(P_j, y)
    auto homs_jm1 = hom_basis(res.terms[j - 1].module, y);
    Matrix d_in = hom_complex_map(homs_jm1, homs_j, res.diff[j - 1], p, y.dim, res.terms[j].module.dim);

    // outgoing differential d_{j+1}^* : Hom(P_j, y) -> Hom(P_{j+1}, y)
    int ker_dim;
    if (j + 1 > len) {
        ker_dim = int(homs_j.size());  // next term is zero, everything is a cocycle
    } else {
        auto homs_jp1 = hom_basis(res.terms[j + 1].module, y);
        Matrix d_out =
            hom_complex_map(homs_j, homs_jp1, res.diff[j], p, y.dim, res.terms[j + 1].module.dim);
        ker_dim = kernel(d_out).count();
    }
    return ker_dim - rank(d_in);
}

int tor_dim(const Bimodule& m, const Module& y, int j) {
    if (j < 0) throw invariant_error("tor_dim: negative degree");
    if (!same_algebra(m.right_algebra, y.algebra)) throw invariant_error("tor_dim: algebra mismatch");
    if (j == 0) return tensor(m, y).module.dim;
    Resolution res = resolution(y, j + 1);
    int len = int(res.terms.size()) - 1;
    if (j > len) return 0;

    std::vector<TensorResult> tensors;
    for (const auto& t : res.terms) tensors.push_back(tensor(m, t.module));

    // t_j : M (x) P_j -> M (x) P_{j-1}
    Morphism t_j = tensor_map(m, tensors[j], tensors[j - 1], res.diff[j - 1]);
    int ker_dim = kernel(t_j.matrix).count();
    int im_next = 0;
    if (j + 1 <= len) {
        Morphism t_j1 = tensor_map(m, tensors[j + 1], tensors[j], res.diff[j]);
        im_next = rank(t_j1.matrix);
    }
    return ker_dim - im_next;
}

std::optional<int> pd_upto(const Module& x, int bound) {
    Resolution res = resolution(x, bound);
    if (!res.terminated) return std::nullopt;
    return int(res.terms.size()) - 1;
}

bool is_projective(const Module& x) {
    auto c = projective_cover(x);
    return c.p.module.dim == x.dim;  // the cover is an isomorphism
}

Module nakayama(const AlgebraPtr& a, const ProjectiveModule& p) {
    std::vector<Module> parts;
    for (int v : p.vertex) parts.push_back(indecomposable_injective(a, v));
    return direct_sum(a, parts).module;
}

Morphism nakayama_map(const AlgebraPtr& a, const ProjectiveModule& src, const ProjectiveModule& dst,
                      const Morphism& f) {
    const unsigned p = a->p;
    auto projs = indecomposable_projectives(a);

    // right ideals e_i A with their spans, reused per vertex
    std::vector<Basis> right_ideal(a->idempotents.size(), Basis::empty(a->dim, p));
    for (size_t i = 0; i < a->idempotents.size(); ++i) {
        std::vector<Vec> rows;
        for (int k = 0; k < a->dim; ++k) {
            Vec b(a->dim, 0);
            b[k] = 1;
            rows.push_back(a->multiply(a->idempotents[i], b));
        }
        right_ideal[i] = row_space(Matrix::from_rows(rows, a->dim, p));
    }

    Module nu_src = nakayama(a, src);
    Module nu_dst = nakayama(a, dst);
    std::vector<int> src_off, dst_off;
    {
        int off = 0;
        for (int v : src.vertex) {
            src_off.push_back(off);
            off += right_ideal[v].count();
        }
        off = 0;
        for (int v : dst.vertex) {
            dst_off.push_back(off);
            off += right_ideal[v].count();
        }
    }

    Matrix out(nu_dst.dim, nu_src.dim, p);
    for (size_t s = 0; s < src.vertex.size(); ++s) {
        int is = src.vertex[s];
        const ProjectiveData& ps = projs[is];
        for (size_t t = 0; t < dst.vertex.size(); ++t) {
            int jt = dst.vertex[t];
            const ProjectiveData& pt = projs[jt];
            // the block component A e_{is} -> A e_{jt} of f is right
            // multiplication by its value on the generator
            Vec gen_img(pt.module.dim, 0);
            for (int r = 0; r < pt.module.dim; ++r) {
                unsigned acc = 0;
                for (int c = 0; c < ps.module.dim; ++c)
                    acc += f.matrix.at(dst.offset[t] + r, src.offset[s] + c) * ps.generator[c];
                gen_img[r] = uint8_t(acc % p);
            }
            Vec xel = pt.inclusion.apply(gen_img);  // element of e_{is} A e_{jt} inside A

            // left multiplication by xel : e_{jt} A -> e_{is} A, then transpose
            const Basis& from = right_ideal[jt];
            const Basis& to = right_ideal[is];
            Matrix lmul(to.count(), from.count(), p);
            for (int c = 0; c < from.count(); ++c) {
                Vec prod = a->multiply(xel, from.vectors.row(c));
                auto coords = coordinates_in(to, prod);
                if (!coords) throw invariant_error("internal: left multiplication leaves the right ideal");
                for (int r = 0; r < to.count(); ++r) lmul.set(r, c, (*coords)[r]);
            }
            out.set_block(dst_off[t], src_off[s], lmul.transpose());
        }
    }
    return make_morphism(nu_src, nu_dst, std::move(out));
}

Module tau(const Module& x) {
    if (x.dim == 0) return Module::zero(x.algebra);
    Presentation pres = minimal_presentation(x);
    if (pres.p1_data->module.dim == 0) return Module::zero(x.algebra);  // projective
    Morphism nu_sigma = nakayama_map(x.algebra, *pres.p1_data, *pres.p0_data, pres.sigma);
    return kernel_module(nu_sigma).module;
}

}  // namespace cleftlab
