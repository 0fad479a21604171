#include "cleftlab/cleft.hpp"

#include <algorithm>

namespace cleftlab {

Matrix CleftInstance::theta_left(int j) const {
    const int d = m_dim();
    Matrix t(d, d, base->p);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) t.set(k, i, theta.table[j][i][k]);
    return t;
}

CleftInstance theta_extension(const AlgebraPtr& r, const ThetaData& th) {
    if (!same_algebra(th.bimodule.left_algebra, r) || !same_algebra(th.bimodule.right_algebra, r))
        throw invariant_error("theta_extension: bimodule is not over (R, R)");
    if (!th.nilpotency)
        throw invariant_error("theta_extension: nilpotency index required (rad T = rad R + M needs it)");
    {
        auto rep = validate_theta(th);
        if (!rep.all_pass()) throw invariant_error("theta data invalid:\n" + rep.to_string());
    }
    const unsigned p = r->p;
    const int dr = r->dim, dm = th.bimodule.dim, n = dr + dm;

    Algebra t;
    t.p = p;
    t.dim = n;
    t.basis_labels = r->basis_labels;
    for (int j = 0; j < dm; ++j) t.basis_labels.push_back("m" + std::to_string(j));

    auto lift_r = [&](const Vec& v) {
        Vec out(n, 0);
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    };
    auto lift_m = [&](const Vec& v) {
        Vec out(n, 0);
        std::copy(v.begin(), v.end(), out.begin() + dr);
        return out;
    };

    t.mult.assign(n, std::vector<Vec>(n, Vec(n, 0)));
    for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dr; ++j) t.mult[i][j] = lift_r(r->mult[i][j]);
    for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dm; ++j) {
            t.mult[i][dr + j] = lift_m(th.bimodule.left_action[i].col(j));   // (r,0)(0,m) = (0, r m)
            t.mult[dr + j][i] = lift_m(th.bimodule.right_action[i].col(j));  // (0,m)(r,0) = (0, m r)
        }
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) t.mult[dr + i][dr + j] = lift_m(th.table[i][j]);

    t.unit = lift_r(r->unit);
    for (const auto& e : r->idempotents) t.idempotents.push_back(lift_r(e));

    std::vector<Vec> rad_rows;
    for (int i = 0; i < r->radical.count(); ++i) rad_rows.push_back(lift_r(r->radical.vectors.row(i)));
    for (int j = 0; j < dm; ++j) {
        Vec e(n, 0);
        e[dr + j] = 1;
        rad_rows.push_back(std::move(e));
    }
    t.radical = Basis(rad_rows.empty() ? Matrix(0, n, p) : Matrix::from_rows(rad_rows, n, p));

    CleftInstance c;
    c.base = r;
    c.theta = th;
    c.total = finish_algebra(std::move(t));
    {
        auto rep = validate(*c.total);
        if (!rep.all_pass()) throw invariant_error("theta extension fails algebra validation:\n" + rep.to_string());
    }
    c.injection = Matrix(n, dr, p);
    for (int i = 0; i < dr; ++i) c.injection.set(i, i, 1);
    c.projection = Matrix(dr, n, p);
    for (int i = 0; i < dr; ++i) c.projection.set(i, i, 1);
    return c;
}

CleftInstance trivial_extension(const AlgebraPtr& r, const Bimodule& m) {
    return theta_extension(r, zero_theta(m, m.dim == 0 ? 1 : 2));
}

CleftInstance tensor_ring(const AlgebraPtr& r, const Bimodule& n, int m) {
    if (m < 1) throw invariant_error("tensor_ring: nilpotency index must be >= 1");
    if (!same_algebra(n.left_algebra, r) || !same_algebra(n.right_algebra, r))
        throw invariant_error("tensor_ring: bimodule is not over (R, R)");
    const unsigned p = r->p;
    // powers N, N^2, ..., N^m; the last must vanish
    std::vector<Bimodule> powers{n};          // powers[k-1] = N^k
    std::vector<BimoduleTensorResult> built;  // built[k-2] realizes N^k = N (x) N^(k-1)
    for (int k = 2; k <= m; ++k) {
        built.push_back(tensor_bimodules(n, powers.back()));
        powers.push_back(built.back().module);
    }
    if (powers[m - 1].dim != 0)
        throw invariant_error("tensor_ring: bimodule is not nilpotent at index " + std::to_string(m));

    // concatenation tables conc[k][l] : N^k basis x N^l basis -> N^(k+l),
    // built by lifting the left factor through N (x) N^(k-1)
    const int top = m - 1;  // highest surviving degree
    std::vector<std::vector<std::vector<std::vector<Vec>>>> conc(
        top + 1, std::vector<std::vector<std::vector<Vec>>>(top + 1));
    for (int k = 1; k <= top; ++k)
        for (int l = 1; k + l <= top; ++l) {
            const Bimodule& nk = powers[k - 1];
            const Bimodule& nl = powers[l - 1];
            const Bimodule& nkl = powers[k + l - 1];
            conc[k][l].assign(nk.dim, std::vector<Vec>(nl.dim, Vec(nkl.dim, 0)));
            if (k == 1) {
                const BimoduleTensorResult& data = built[l - 1];  // N^(1+l) = N (x) N^l
                for (int i = 0; i < nk.dim; ++i)
                    for (int j = 0; j < nl.dim; ++j) conc[k][l][i][j] = data.projection.col(i * nl.dim + j);
            } else {
                const BimoduleTensorResult& data = built[k - 2];       // N^k = N (x) N^(k-1)
                const BimoduleTensorResult& embed = built[k + l - 2];  // N^(k+l) = N (x) N^(k-1+l)
                const Bimodule& nk1 = powers[k - 2];
                const Bimodule& nk1l = powers[k - 1 + l - 1];
                for (int u = 0; u < nk.dim; ++u)
                    for (int v = 0; v < nl.dim; ++v) {
                        Vec plain = data.section.col(u);
                        Vec acc(nkl.dim, 0);
                        for (int i = 0; i < n.dim; ++i)
                            for (int j = 0; j < nk1.dim; ++j) {
                                uint8_t coef = plain[i * nk1.dim + j];
                                if (!coef) continue;
                                const Vec& inner = conc[k - 1][l][j][v];
                                for (int w = 0; w < nk1l.dim; ++w) {
                                    if (!inner[w]) continue;
                                    uint8_t cc = fp_mul(coef, inner[w], p);
                                    acc = vec_add(acc, vec_scale(cc, embed.projection.col(i * nk1l.dim + w), p), p);
                                }
                            }
                        conc[k][l][u][v] = std::move(acc);
                    }
            }
        }

    // assemble M' = N (+) ... (+) N^(m-1) with concatenation theta
    std::vector<Bimodule> parts;
    std::vector<int> deg_offset(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        parts.push_back(powers[k - 1]);
        deg_offset[k + 1] = deg_offset[k] + powers[k - 1].dim;
    }
    Bimodule mprime = direct_sum_bimodules(r, r, parts);

    ThetaData th;
    th.bimodule = std::move(mprime);
    th.nilpotency = m;
    const int dm = th.bimodule.dim;
    th.table.assign(dm, std::vector<Vec>(dm, Vec(dm, 0)));
    for (int k = 1; k <= top; ++k)
        for (int l = 1; l <= top; ++l) {
            if (k + l > top) continue;  // degree at least m: zero in M'
            for (int i = 0; i < powers[k - 1].dim; ++i)
                for (int j = 0; j < powers[l - 1].dim; ++j) {
                    const Vec& prod = conc[k][l][i][j];
                    Vec& cell = th.table[deg_offset[k] + i][deg_offset[l] + j];
                    for (int w = 0; w < powers[k + l - 1].dim; ++w) cell[deg_offset[k + l] + w] = prod[w];
                }
        }
    return theta_extension(r, th);
}

CleftInstance triangular_matrix(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& m) {
    if (!same_algebra(m.left_algebra, a) || !same_algebra(m.right_algebra, b))
        throw invariant_error("triangular_matrix: bimodule is not over (a, b)");
    ProductAlgebra prod = product_algebra(a, b);
    Bimodule ext;
    ext.left_algebra = prod.algebra;
    ext.right_algebra = prod.algebra;
    ext.dim = m.dim;
    for (int i = 0; i < a->dim; ++i) ext.left_action.push_back(m.left_action[i]);
    for (int i = 0; i < b->dim; ++i) ext.left_action.push_back(Matrix(m.dim, m.dim, a->p));
    for (int i = 0; i < a->dim; ++i) ext.right_action.push_back(Matrix(m.dim, m.dim, a->p));
    for (int i = 0; i < b->dim; ++i) ext.right_action.push_back(m.right_action[i]);
    std::string why;
    if (!check_bimodule(ext, &why)) throw invariant_error("triangular_matrix: extended bimodule invalid: " + why);
    return trivial_extension(prod.algebra, ext);
}

bool check_pair(const CleftInstance& c, const PairModule& pm, std::string* why) {
    const unsigned p = c.base->p;
    const int dm = c.m_dim(), dx = pm.x.dim;
    Matrix alpha_plain = pm.alpha.matrix * pm.mx.projection;  // plain M (x) X -> X
    // both sides of alpha(1(x)alpha) = alpha(theta(x)1) on m_i (x) m_j (x) x_l
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j)
            for (int l = 0; l < dx; ++l) {
                Vec inner = alpha_plain.col(j * dx + l);  // alpha(m_j (x) x_l)
                Vec lhs(dx, 0);
                for (int s = 0; s < dx; ++s) {
                    if (!inner[s]) continue;
                    lhs = vec_add(lhs, vec_scale(inner[s], alpha_plain.col(i * dx + s), p), p);
                }
                Vec rhs(dx, 0);
                const Vec& th = c.theta.table[i][j];
                for (int k = 0; k < dm; ++k) {
                    if (!th[k]) continue;
                    rhs = vec_add(rhs, vec_scale(th[k], alpha_plain.col(k * dx + l), p), p);
                }
                if (lhs != rhs) {
                    if (why)
                        *why = "pair law fails on (m" + std::to_string(i) + ", m" + std::to_string(j) + ", x" +
                               std::to_string(l) + ")";
                    return false;
                }
            }
    return true;
}

Module to_total_module(const CleftInstance& c, const PairModule& pm) {
    const unsigned p = c.base->p;
    const int dr = c.base->dim, dm = c.m_dim(), dx = pm.x.dim;
    Module z;
    z.algebra = c.total;
    z.dim = dx;
    for (int i = 0; i < dr; ++i) z.action.push_back(pm.x.action[i]);
    for (int j = 0; j < dm; ++j) {
        // x -> alpha(m_j (x) x)
        Matrix act(dx, dx, p);
        Matrix alpha_plain = pm.alpha.matrix * pm.mx.projection;
        for (int l = 0; l < dx; ++l) {
            Vec img = alpha_plain.col(j * dx + l);
            for (int r = 0; r < dx; ++r) act.set(r, l, img[r]);
        }
        z.action.push_back(std::move(act));
    }
    std::string why;
    if (!check_module(z, &why)) throw invariant_error("pair does not define a module over T: " + why);
    return z;
}

PairModule from_total_module(const CleftInstance& c, const Module& t_module) {
    if (!same_algebra(t_module.algebra, c.total)) throw invariant_error("from_total_module: not a T-module");
    const int dr = c.base->dim, dm = c.m_dim(), dx = t_module.dim;
    PairModule pm;
    pm.x = restrict_along(t_module, c.injection, c.base);
    pm.mx = tensor(c.theta.bimodule, pm.x);

    Matrix alpha_plain(dx, dm * dx, c.base->p);
    for (int j = 0; j < dm; ++j) {
        const Matrix& act = t_module.action[dr + j];
        for (int l = 0; l < dx; ++l)
            for (int r = 0; r < dx; ++r) alpha_plain.set(r, j * dx + l, act.at(r, l));
    }
    Matrix alpha = alpha_plain * pm.mx.section;
    if (alpha * pm.mx.projection != alpha_plain)
        throw invariant_error("T-module action does not factor through the balanced tensor");
    pm.alpha = make_morphism(pm.mx.module, pm.x, std::move(alpha));

    std::string why;
    if (!check_pair(c, pm, &why)) throw invariant_error("extracted pair fails the associativity law: " + why);
    return pm;
}

Module functor_l_total(const CleftInstance& c, const Module& y) {
    if (!same_algebra(y.algebra, c.base)) throw invariant_error("functor_l: module not over R");
    const unsigned p = c.base->p;
    const int dr = c.base->dim, dm = c.m_dim(), dy = y.dim;
    TensorResult f = tensor(c.theta.bimodule, y);
    const int df = f.module.dim, dz = dy + df;

    Module z;
    z.algebra = c.total;
    z.dim = dz;
    for (int i = 0; i < dr; ++i) {
        Matrix act(dz, dz, p);
        act.set_block(0, 0, y.action[i]);
        act.set_block(dy, dy, f.module.action[i]);
        z.action.push_back(std::move(act));
    }
    for (int j = 0; j < dm; ++j) {
        Matrix act(dz, dz, p);
        // y-part goes to the class of m_j (x) y
        for (int l = 0; l < dy; ++l) {
            Vec cls = f.projection.col(j * dy + l);
            for (int r = 0; r < df; ++r) act.set(dy + r, l, cls[r]);
        }
        // f-part maps by theta(m_j (x) -) (x) 1, descended
        Matrix plain(dm * dy, dm * dy, p);
        Matrix tj = c.theta_left(j);
        for (int i = 0; i < dm; ++i)
            for (int k = 0; k < dm; ++k) {
                uint8_t coef = tj.at(k, i);
                if (!coef) continue;
                for (int l = 0; l < dy; ++l) plain.set(k * dy + l, i * dy + l, coef);
            }
        Matrix theta_f = f.projection * plain * f.section;
        if (theta_f * f.projection != f.projection * plain)
            throw invariant_error("internal: theta action does not descend to the tensor");
        act.set_block(dy, dy, theta_f);
        z.action.push_back(std::move(act));
    }
    std::string why;
    if (!check_module(z, &why)) throw invariant_error("internal: l(Y) fails the T-module law: " + why);
    return z;
}

PairModule functor_l(const CleftInstance& c, const Module& y) {
    return from_total_module(c, functor_l_total(c, y));
}

Morphism functor_l_map(const CleftInstance& c, const Morphism& f) {
    Module ldst = functor_l_total(c, f.target);
    // compose f with the unit embedding Y' -> e(l(Y')) and transport
    Matrix emb(ldst.dim, f.target.dim, c.base->p);
    for (int i = 0; i < f.target.dim; ++i) emb.set(i, i, 1);
    Module e_ldst = restrict_along(ldst, c.injection, c.base);
    Morphism g = make_morphism(f.source, e_ldst, emb * f.matrix);
    return adjunction_transport(c, g, ldst);
}

PairModule functor_i(const CleftInstance& c, const Module& y) {
    PairModule pm;
    pm.x = y;
    pm.mx = tensor(c.theta.bimodule, y);
    pm.alpha = zero_morphism(pm.mx.module, y);
    return pm;
}

Module functor_i_total(const CleftInstance& c, const Module& y) { return to_total_module(c, functor_i(c, y)); }

QData functor_q(const CleftInstance& c, const PairModule& pm) {
    (void)c;
    QData q;
    q.pm = pm;
    auto coker = cokernel_module(pm.alpha);
    q.module = coker.module;
    q.projection = coker.projection;
    q.section = coker.section;
    return q;
}

QData functor_q_total(const CleftInstance& c, const Module& t_module) {
    return functor_q(c, from_total_module(c, t_module));
}

Morphism q_map(const CleftInstance& c, const QData& src, const QData& dst, const Morphism& f_total) {
    (void)c;
    // e(f) maps im(alpha_src) into im(alpha_dst), so it descends to cokernels
    Matrix qf = dst.projection.matrix * f_total.matrix * src.section;
    if (qf * src.projection.matrix != dst.projection.matrix * f_total.matrix)
        throw invariant_error("q_map: morphism does not descend to the cokernels");
    return make_morphism(src.module, dst.module, std::move(qf));
}

Module functor_F(const CleftInstance& c, const Module& y) { return tensor(c.theta.bimodule, y).module; }
TensorResult functor_F_data(const CleftInstance& c, const Module& y) { return tensor(c.theta.bimodule, y); }

Morphism adjunction_transport(const CleftInstance& c, const Morphism& g_to_eZ, const Module& z_total) {
    const Module& y = g_to_eZ.source;
    Module ly = functor_l_total(c, y);
    PairModule pmz = from_total_module(c, z_total);
    TensorResult fy = tensor(c.theta.bimodule, y);

    // phi(y (+) w) = g(y) + alpha_Z((1 (x) g) w)
    Morphism g_as_map = make_morphism(y, pmz.x, g_to_eZ.matrix);
    Morphism omg = tensor_map(c.theta.bimodule, fy, pmz.mx, g_as_map);
    Matrix phi(z_total.dim, ly.dim, c.base->p);
    phi.set_block(0, 0, g_to_eZ.matrix);
    phi.set_block(0, y.dim, pmz.alpha.matrix * omg.matrix);

    Module ly_named = ly;
    return make_morphism(ly_named, z_total, std::move(phi));
}

Morphism counit_mu(const CleftInstance& c, const Module& z_total) {
    PairModule pmz = from_total_module(c, z_total);
    Morphism id_g = make_morphism(pmz.x, pmz.x, Matrix::identity(pmz.x.dim, c.base->p));
    Morphism mu = adjunction_transport(c, id_g, z_total);
    if (rank(mu.matrix) != z_total.dim) throw invariant_error("internal: counit not epic");
    return mu;
}

Morphism unit_eta(const CleftInstance& c, const Module& y) {
    QData q = functor_q(c, functor_i(c, y));
    auto inv = solve_matrix(q.projection.matrix, Matrix::identity(y.dim, c.base->p));
    if (!inv || q.module.dim != y.dim) throw invariant_error("internal: unit identification not invertible");
    return make_morphism(q.module, y, *inv);
}

Presentation lift_presentation(const CleftInstance& c, const Presentation& pres) {
    Presentation out;
    out.sigma = functor_l_map(c, pres.sigma);
    out.x = functor_l_total(c, pres.x);

    // the lifted terms are projective over T
    if (!is_projective(out.sigma.source) || !is_projective(out.sigma.target))
        throw invariant_error("internal: l-image of a projective is not projective");

    // coker(l(sigma)) = l(coker(sigma)) via l of the augmentation
    auto coker_sigma = cokernel_module(pres.sigma);
    Morphism aug = make_morphism(pres.sigma.target, pres.x,
                                 pres.coker_iso.matrix * coker_sigma.projection.matrix);
    Morphism l_aug = functor_l_map(c, aug);
    auto coker_l = cokernel_module(out.sigma);
    Matrix h = l_aug.matrix * coker_l.section;
    if (h * coker_l.projection.matrix != l_aug.matrix)
        throw invariant_error("internal: lifted augmentation does not factor");
    if (rank(h) != out.x.dim || coker_l.module.dim != out.x.dim)
        throw invariant_error("internal: coker(l sigma) is not l(coker sigma)");
    out.coker_iso = make_morphism(coker_l.module, out.x, std::move(h));

    // minimality is inherited here iff both radical conditions survive
    Basis rad_p0 = radical_subspace(out.sigma.target);
    bool minimal = true;
    for (int col = 0; col < out.sigma.matrix.cols() && minimal; ++col)
        if (!in_span(rad_p0, out.sigma.matrix.col(col))) minimal = false;
    if (minimal) {
        Basis rad_p1 = radical_subspace(out.sigma.source);
        Basis ker = kernel(out.sigma.matrix);
        for (int i = 0; i < ker.count() && minimal; ++i)
            if (!in_span(rad_p1, ker.vectors.row(i))) minimal = false;
    }
    out.minimal = minimal;
    return out;
}

LiftedPresentation l_image_presentation(const CleftInstance& c, const Module& a_total) {
    if (!same_algebra(a_total.algebra, c.total)) throw invariant_error("l_image_presentation: not a T-module");
    Presentation min_t = minimal_presentation(a_total);
    auto projs_R = indecomposable_projectives(c.base);
    auto projs_T = indecomposable_projectives(c.total);

    LiftedPresentation lp;
    lp.p1_R = projective_sum(c.base, min_t.p1_data->vertex);
    lp.p0_R = projective_sum(c.base, min_t.p0_data->vertex);

    // u_j : l(P_j^R) -> Q_j, from the R-map sending generators to generators
    auto build_u = [&](const ProjectiveModule& p_R, const ProjectiveModule& q_T) {
        Module e_q = restrict_along(q_T.module, c.injection, c.base);
        Matrix g(q_T.module.dim, p_R.module.dim, c.base->p);
        for (size_t s = 0; s < q_T.vertex.size(); ++s) {
            int v = q_T.vertex[s];
            const ProjectiveData& pr = projs_R[v];
            const ProjectiveData& pt = projs_T[v];
            // generator of the T-side block, in Q_j coordinates
            Vec gen(q_T.module.dim, 0);
            for (int r = 0; r < pt.module.dim; ++r) gen[q_T.offset[s] + r] = pt.generator[r];
            for (int t = 0; t < pr.module.dim; ++t) {
                Vec elem_R = pr.inclusion.col(t);  // basis element of A e_v as an element of R
                Vec img = e_q.act(elem_R).apply(gen);
                for (int r = 0; r < q_T.module.dim; ++r) g.set(r, p_R.offset[s] + t, img[r]);
            }
        }
        Morphism gm = make_morphism(p_R.module, e_q, std::move(g));
        Morphism u = adjunction_transport(c, gm, q_T.module);
        if (rank(u.matrix) != q_T.module.dim)
            throw invariant_error("internal: l(projective) -> T-projective transport not invertible");
        return u;
    };
    Morphism u1 = build_u(lp.p1_R, *min_t.p1_data);
    Morphism u0 = build_u(lp.p0_R, *min_t.p0_data);
    lp.lt1 = u1.source;
    lp.lt0 = u0.source;

    auto delta_mat = solve_matrix(u0.matrix, min_t.sigma.matrix * u1.matrix);
    if (!delta_mat) throw invariant_error("internal: could not conjugate the presentation");
    lp.delta.sigma = make_morphism(lp.lt1, lp.lt0, std::move(*delta_mat));
    lp.delta.x = a_total;
    lp.delta.minimal = min_t.minimal;

    // coker(delta) -> coker(sigma_T) -> A
    auto coker_d = cokernel_module(lp.delta.sigma);
    auto coker_s = cokernel_module(min_t.sigma);
    Matrix v = coker_s.projection.matrix * u0.matrix * coker_d.section;
    if (v * coker_d.projection.matrix != coker_s.projection.matrix * u0.matrix)
        throw invariant_error("internal: cokernel comparison does not commute");
    Matrix h = min_t.coker_iso.matrix * v;
    if (rank(h) != a_total.dim) throw invariant_error("internal: lifted presentation does not present A");
    lp.delta.coker_iso = make_morphism(coker_d.module, a_total, std::move(h));
    return lp;
}

Presentation q_of_lifted(const CleftInstance& c, const LiftedPresentation& lp, const QData& qa) {
    QData q1 = functor_q_total(c, lp.lt1);
    QData q0 = functor_q_total(c, lp.lt0);
    // q(l(P)) is literally P in these coordinates
    if (q1.module.action != lp.p1_R.module.action || q0.module.action != lp.p0_R.module.action)
        throw invariant_error("internal: q(l(P)) is not the expected projective");

    Presentation out;
    out.sigma = make_morphism(lp.p1_R.module, lp.p0_R.module, q_map(c, q1, q0, lp.delta.sigma).matrix);
    out.x = qa.module;
    out.minimal = false;
    out.p1_data = lp.p1_R;
    out.p0_data = lp.p0_R;

    // coker(q delta) -> q(A), via q of the chain coker(delta) -> A
    auto coker_qd = cokernel_module(out.sigma);
    auto coker_d = cokernel_module(lp.delta.sigma);
    QData q_cd = functor_q_total(c, coker_d.module);
    Morphism q_proj = q_map(c, q0, q_cd, coker_d.projection);
    QData q_a = qa;
    Morphism q_iso = q_map(c, q_cd, q_a, lp.delta.coker_iso);

    Matrix h = q_iso.matrix * q_proj.matrix * coker_qd.section;
    if (h * coker_qd.projection.matrix != q_iso.matrix * q_proj.matrix)
        throw invariant_error("internal: q of the presentation chain does not commute");
    if (rank(h) != qa.module.dim || coker_qd.module.dim != qa.module.dim)
        throw invariant_error("internal: coker(q delta) is not q(A)");
    out.coker_iso = make_morphism(coker_qd.module, qa.module, std::move(h));
    return out;
}

CleftInstance opposite_instance(const CleftInstance& c) {
    CleftInstance op = theta_extension(opposite(c.base), swap_theta(c.theta));
    if (!same_algebra(op.total, opposite(c.total)))
        throw invariant_error("internal: opposite instance does not match the opposite algebra");
    return op;
}

}  // namespace cleftlab
