#include "cleftlab/bimodule.hpp"

namespace cleftlab {

Matrix Bimodule::left_act(const Vec& x) const {
    Matrix m(dim, dim, left_algebra->p);
    for (int i = 0; i < left_algebra->dim; ++i)
        if (x[i]) m = m + left_action[i].scaled(x[i]);
    return m;
}

Matrix Bimodule::right_act(const Vec& x) const {
    Matrix m(dim, dim, right_algebra->p);
    for (int i = 0; i < right_algebra->dim; ++i)
        if (x[i]) m = m + right_action[i].scaled(x[i]);
    return m;
}

Bimodule Bimodule::zero(AlgebraPtr l, AlgebraPtr r) {
    Bimodule m;
    m.dim = 0;
    m.left_action.assign(l->dim, Matrix(0, 0, l->p));
    m.right_action.assign(r->dim, Matrix(0, 0, r->p));
    m.left_algebra = std::move(l);
    m.right_algebra = std::move(r);
    return m;
}

bool check_bimodule(const Bimodule& m, std::string* why) {
    const Algebra& l = *m.left_algebra;
    const Algebra& r = *m.right_algebra;
    if (l.p != r.p) {
        if (why) *why = "left and right algebras over different fields";
        return false;
    }
    Module as_left;
    as_left.algebra = m.left_algebra;
    as_left.dim = m.dim;
    as_left.action = m.left_action;
    std::string inner;
    if (!check_module(as_left, &inner)) {
        if (why) *why = "left action: " + inner;
        return false;
    }
    // right module law via the opposite algebra
    Module as_right;
    as_right.algebra = opposite(m.right_algebra);
    as_right.dim = m.dim;
    as_right.action = m.right_action;
    if (!check_module(as_right, &inner)) {
        if (why) *why = "right action: " + inner;
        return false;
    }
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < r.dim; ++j)
            if (m.left_action[i] * m.right_action[j] != m.right_action[j] * m.left_action[i]) {
                if (why)
                    *why = "left/right actions do not commute at (" + l.basis_labels[i] + "," + r.basis_labels[j] + ")";
                return false;
            }
    return true;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    Bimodule m;
    m.left_algebra = a;
    m.right_algebra = a;
    m.dim = a->dim;
    m.left_action = a->left_mult;
    m.right_action = a->right_mult;
    return m;
}

Bimodule dual_regular_bimodule(const AlgebraPtr& a) {
    Bimodule m;
    m.left_algebra = a;
    m.right_algebra = a;
    m.dim = a->dim;
    // (a f)(c) = f(c a) and (f a)(c) = f(a c) in the dual basis
    for (int i = 0; i < a->dim; ++i) m.left_action.push_back(a->right_mult[i].transpose());
    for (int i = 0; i < a->dim; ++i) m.right_action.push_back(a->left_mult[i].transpose());
    return m;
}

Module underlying_left_module(const Bimodule& m) {
    Module x;
    x.algebra = m.left_algebra;
    x.dim = m.dim;
    x.action = m.left_action;
    return x;
}

Bimodule swap_sides(const Bimodule& m) {
    Bimodule s;
    s.left_algebra = opposite(m.right_algebra);
    s.right_algebra = opposite(m.left_algebra);
    s.dim = m.dim;
    s.left_action = m.right_action;
    s.right_action = m.left_action;
    return s;
}

Bimodule direct_sum_bimodules(const AlgebraPtr& l, const AlgebraPtr& r, const std::vector<Bimodule>& parts) {
    const unsigned p = l->p;
    int total = 0;
    for (const auto& m : parts) total += m.dim;
    Bimodule sum;
    sum.left_algebra = l;
    sum.right_algebra = r;
    sum.dim = total;
    for (int i = 0; i < l->dim; ++i) {
        Matrix block(total, total, p);
        int off = 0;
        for (const auto& m : parts) {
            block.set_block(off, off, m.left_action[i]);
            off += m.dim;
        }
        sum.left_action.push_back(std::move(block));
    }
    for (int i = 0; i < r->dim; ++i) {
        Matrix block(total, total, p);
        int off = 0;
        for (const auto& m : parts) {
            block.set_block(off, off, m.right_action[i]);
            off += m.dim;
        }
        sum.right_action.push_back(std::move(block));
    }
    return sum;
}

namespace {

/// Span of the balancing relations m*b (x) y - m (x) b*y inside the plain
/// tensor, over a multiplicative generating set of the middle algebra.
Basis balancing_subspace(const Bimodule& m, const std::vector<Matrix>& y_action_of_gens,
                         const std::vector<Vec>& gens, int ydim) {
    const unsigned p = m.left_algebra->p;
    const int plain = m.dim * ydim;
    std::vector<Vec> rows;
    for (size_t g = 0; g < gens.size(); ++g) {
        Matrix rb = m.right_act(gens[g]);
        const Matrix& yb = y_action_of_gens[g];
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < ydim; ++j) {
                Vec v(plain, 0);
                for (int k = 0; k < m.dim; ++k)
                    if (rb.at(k, i)) v[k * ydim + j] = fp_add(v[k * ydim + j], rb.at(k, i), p);
                for (int l = 0; l < ydim; ++l)
                    if (yb.at(l, j)) v[i * ydim + l] = fp_sub(v[i * ydim + l], yb.at(l, j), p);
                if (!vec_is_zero(v)) rows.push_back(std::move(v));
            }
    }
    return rows.empty() ? Basis::empty(plain, p) : row_space(Matrix::from_rows(rows, plain, p));
}

}  // namespace

TensorResult tensor(const Bimodule& m, const Module& y) {
    if (!same_algebra(m.right_algebra, y.algebra)) throw invariant_error("tensor: algebra mismatch");
    const unsigned p = m.left_algebra->p;
    const int plain = m.dim * y.dim;

    std::vector<Vec> gens = generating_set(*m.right_algebra);
    std::vector<Matrix> ygens;
    for (const auto& g : gens) ygens.push_back(y.act(g));
    Basis bal = balancing_subspace(m, ygens, gens, y.dim);
    auto qm = quotient(plain, bal);

    TensorResult res;
    res.projection = qm.projection;
    res.section = qm.section;
    res.module.algebra = m.left_algebra;
    res.module.dim = qm.dim;
    for (int s = 0; s < m.left_algebra->dim; ++s) {
        // plain action L(s) (x) id descends to the quotient
        Matrix plain_act(plain, plain, p);
        for (int i = 0; i < m.dim; ++i)
            for (int k = 0; k < m.dim; ++k) {
                uint8_t c = m.left_action[s].at(k, i);
                if (!c) continue;
                for (int j = 0; j < y.dim; ++j)
                    plain_act.set(k * y.dim + j, i * y.dim + j, c);
            }
        Matrix act = qm.projection * plain_act * qm.section;
        if (act * qm.projection != qm.projection * plain_act)
            throw invariant_error("internal: tensor action does not descend");
        res.module.action.push_back(std::move(act));
    }
    std::string why;
    if (!check_module(res.module, &why)) throw invariant_error("internal: tensor module law fails: " + why);
    return res;
}

Morphism tensor_map(const Bimodule& m, const TensorResult& ty, const TensorResult& ty2, const Morphism& f) {
    const unsigned p = m.left_algebra->p;
    const int dy = f.source.dim, dy2 = f.target.dim;
    Matrix plain_f(m.dim * dy2, m.dim * dy, p);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < dy; ++j)
            for (int l = 0; l < dy2; ++l)
                if (f.matrix.at(l, j)) plain_f.set(i * dy2 + l, i * dy + j, f.matrix.at(l, j));
    Matrix induced = ty2.projection * plain_f * ty.section;
    if (induced * ty.projection != ty2.projection * plain_f)
        throw invariant_error("internal: tensor_map does not descend");
    return make_morphism(ty.module, ty2.module, std::move(induced));
}

BimoduleTensorResult tensor_bimodules(const Bimodule& m, const Bimodule& n) {
    if (!same_algebra(m.right_algebra, n.left_algebra)) throw invariant_error("tensor_bimodules: algebra mismatch");
    const unsigned p = m.left_algebra->p;
    const int plain = m.dim * n.dim;

    std::vector<Vec> gens = generating_set(*m.right_algebra);
    std::vector<Matrix> ngens;
    for (const auto& g : gens) ngens.push_back(n.left_act(g));
    Basis bal = balancing_subspace(m, ngens, gens, n.dim);
    auto qm = quotient(plain, bal);

    BimoduleTensorResult res;
    res.projection = qm.projection;
    res.section = qm.section;
    res.module.left_algebra = m.left_algebra;
    res.module.right_algebra = n.right_algebra;
    res.module.dim = qm.dim;

    auto descend = [&](const Matrix& plain_act, const char* what) {
        Matrix act = qm.projection * plain_act * qm.section;
        if (act * qm.projection != qm.projection * plain_act)
            throw invariant_error(std::string("internal: ") + what + " does not descend");
        return act;
    };
    for (int s = 0; s < m.left_algebra->dim; ++s) {
        Matrix plain_act(plain, plain, p);
        for (int i = 0; i < m.dim; ++i)
            for (int k = 0; k < m.dim; ++k) {
                uint8_t c = m.left_action[s].at(k, i);
                if (!c) continue;
                for (int j = 0; j < n.dim; ++j) plain_act.set(k * n.dim + j, i * n.dim + j, c);
            }
        res.module.left_action.push_back(descend(plain_act, "bimodule tensor left action"));
    }
    for (int s = 0; s < n.right_algebra->dim; ++s) {
        Matrix plain_act(plain, plain, p);
        for (int j = 0; j < n.dim; ++j)
            for (int l = 0; l < n.dim; ++l) {
                uint8_t c = n.right_action[s].at(l, j);
                if (!c) continue;
                for (int i = 0; i < m.dim; ++i) plain_act.set(i * n.dim + l, i * n.dim + j, c);
            }
        res.module.right_action.push_back(descend(plain_act, "bimodule tensor right action"));
    }
    std::string why;
    if (!check_bimodule(res.module, &why)) throw invariant_error("internal: bimodule tensor law fails: " + why);
    return res;
}

Vec ThetaData::theta_of(const Vec& u, const Vec& v) const {
    const unsigned p = bimodule.left_algebra->p;
    Vec r(bimodule.dim, 0);
    for (int i = 0; i < bimodule.dim; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < bimodule.dim; ++j) {
            if (!v[j]) continue;
            uint8_t c = fp_mul(u[i], v[j], p);
            for (int k = 0; k < bimodule.dim; ++k) r[k] = fp_add(r[k], fp_mul(c, table[i][j][k], p), p);
        }
    }
    return r;
}

ThetaData zero_theta(Bimodule m, int nilpotency_index) {
    ThetaData t;
    t.table.assign(m.dim, std::vector<Vec>(m.dim, Vec(m.dim, 0)));
    t.nilpotency = nilpotency_index;
    t.bimodule = std::move(m);
    return t;
}

ValidationReport validate_theta(const ThetaData& t) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };
    const Bimodule& m = t.bimodule;
    const unsigned p = m.left_algebra->p;
    const int d = m.dim;

    {
        std::string why;
        bool ok = check_bimodule(m, &why);
        add("bimodule-laws", ok, why);
    }
    bool shape = int(t.table.size()) == d;
    for (const auto& row : t.table)
        if (int(row.size()) != d) shape = false;
    add("theta-table-shape", shape);
    if (!shape) return rep;

    auto basis_vec = [d](int i) {
        Vec e(d, 0);
        e[i] = 1;
        return e;
    };

    {
        bool ok = true;
        std::string w;
        for (int a = 0; a < m.left_algebra->dim && ok; ++a) {
            Matrix la = m.left_action[a];
            for (int i = 0; i < d && ok; ++i)
                for (int j = 0; j < d; ++j) {
                    // theta((a m_i) (x) m_j) = a theta(m_i (x) m_j)
                    Vec lhs = t.theta_of(la.col(i), basis_vec(j));
                    Vec rhs = la.apply(t.table[i][j]);
                    if (lhs != rhs) {
                        ok = false;
                        w = "left basis " + m.left_algebra->basis_labels[a] + " at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
                        break;
                    }
                }
        }
        add("theta-left-linear", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int a = 0; a < m.right_algebra->dim && ok; ++a) {
            Matrix ra = m.right_action[a];
            for (int i = 0; i < d && ok; ++i)
                for (int j = 0; j < d; ++j) {
                    Vec lhs = t.theta_of(basis_vec(i), ra.col(j));
                    Vec rhs = ra.apply(t.table[i][j]);
                    if (lhs != rhs) {
                        ok = false;
                        w = "right basis " + m.right_algebra->basis_labels[a] + " at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
                        break;
                    }
                }
        }
        add("theta-right-linear", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int a = 0; a < m.right_algebra->dim && ok; ++a) {
            Matrix ra = m.right_act([&] {
                Vec e(m.right_algebra->dim, 0);
                e[a] = 1;
                return e;
            }());
            Matrix la = m.left_action[a];
            for (int i = 0; i < d && ok; ++i)
                for (int j = 0; j < d; ++j) {
                    // theta((m_i a) (x) m_j) = theta(m_i (x) (a m_j))
                    Vec lhs = t.theta_of(ra.col(i), basis_vec(j));
                    Vec rhs = t.theta_of(basis_vec(i), la.col(j));
                    if (lhs != rhs) {
                        ok = false;
                        w = "middle basis " + m.right_algebra->basis_labels[a] + " at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
                        break;
                    }
                }
        }
        add("theta-balanced", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
                for (int k = 0; k < d; ++k) {
                    Vec lhs = t.theta_of(t.table[i][j], basis_vec(k));
                    Vec rhs = t.theta_of(basis_vec(i), t.table[j][k]);
                    if (lhs != rhs) {
                        ok = false;
                        w = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                        break;
                    }
                }
        add("theta-associative", ok, w);
    }
    if (t.nilpotency) {
        // span of r-fold products must vanish at r = nilpotency
        bool ok = false;
        Basis power(Matrix::identity(d, p));
        for (int r = 2; r <= *t.nilpotency; ++r) {
            std::vector<Vec> prods;
            for (int i = 0; i < power.count(); ++i)
                for (int j = 0; j < d; ++j) prods.push_back(t.theta_of(power.vectors.row(i), basis_vec(j)));
            Matrix stacked = prods.empty() ? Matrix(0, d, p) : Matrix::from_rows(prods, d, p);
            power = row_space(stacked);
            if (r == *t.nilpotency) ok = (power.count() == 0);
        }
        if (*t.nilpotency == 1) ok = (d == 0);
        add("theta-nilpotent", ok, ok ? "" : "products of length " + std::to_string(*t.nilpotency) + " do not vanish");
    }
    return rep;
}

ThetaData swap_theta(const ThetaData& t) {
    ThetaData s;
    s.bimodule = swap_sides(t.bimodule);
    s.nilpotency = t.nilpotency;
    s.table.assign(t.bimodule.dim, std::vector<Vec>(t.bimodule.dim));
    for (int i = 0; i < t.bimodule.dim; ++i)
        for (int j = 0; j < t.bimodule.dim; ++j) s.table[i][j] = t.table[j][i];
    return s;
}

}  // namespace cleftlab
