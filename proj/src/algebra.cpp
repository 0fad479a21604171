#include "cleftlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cleftlab {

int Quiver::vertex_index(const std::string& label) const {
    for (int i = 0; i < int(vertices.size()); ++i)
        if (vertices[i] == label) return i;
    throw schema_error("unknown vertex '" + label + "'");
}

void Quiver::check() const {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j]) throw schema_error("duplicate vertex label '" + vertices[i] + "'");
    for (const auto& a : arrows) {
        if (a.source < 0 || a.source >= int(vertices.size()) || a.target < 0 || a.target >= int(vertices.size()))
            throw schema_error("arrow '" + a.name + "' has endpoint outside the vertex list");
    }
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    Vec r(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!y[j]) continue;
            uint8_t c = fp_mul(x[i], y[j], p);
            for (int k = 0; k < dim; ++k) r[k] = fp_add(r[k], fp_mul(c, mult[i][j][k], p), p);
        }
    }
    return r;
}

Matrix Algebra::left_action_of(const Vec& x) const {
    Matrix m(dim, dim, p);
    for (int i = 0; i < dim; ++i)
        if (x[i]) m = m + left_mult[i].scaled(x[i]);
    return m;
}

Matrix Algebra::right_action_of(const Vec& x) const {
    Matrix m(dim, dim, p);
    for (int i = 0; i < dim; ++i)
        if (x[i]) m = m + right_mult[i].scaled(x[i]);
    return m;
}

AlgebraPtr finish_algebra(Algebra a) {
    const int n = a.dim;
    if (int(a.basis_labels.size()) != n || int(a.mult.size()) != n || int(a.unit.size()) != n)
        throw invariant_error("algebra table sizes inconsistent with dim");
    a.left_mult.clear();
    a.right_mult.clear();
    for (int i = 0; i < n; ++i) {
        Matrix l(n, n, a.p), r(n, n, a.p);
        for (int j = 0; j < n; ++j) {
            if (int(a.mult[i].size()) != n || int(a.mult[i][j].size()) != n)
                throw invariant_error("structure constant table ragged");
            for (int k = 0; k < n; ++k) {
                l.set(k, j, a.mult[i][j][k]);
                r.set(k, j, a.mult[j][i][k]);
            }
        }
        a.left_mult.push_back(std::move(l));
        a.right_mult.push_back(std::move(r));
    }
    return std::make_shared<const Algebra>(std::move(a));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->p == b->p && a->dim == b->dim && a->mult == b->mult && a->unit == b->unit &&
           a->idempotents == b->idempotents && a->radical.vectors == b->radical.vectors;
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

ValidationReport validate(const Algebra& a) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };
    const int n = a.dim;
    auto basis_vec = [n](int i) {
        Vec e(n, 0);
        e[i] = 1;
        return e;
    };

    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i) {
            Vec e = basis_vec(i);
            if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e) {
                ok = false;
                w = "basis element " + a.basis_labels[i];
            }
        }
        add("unit-law", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec lhs = a.multiply(a.mult[i][j], basis_vec(k));
                    Vec rhs = a.multiply(basis_vec(i), a.mult[j][k]);
                    if (lhs != rhs) {
                        ok = false;
                        w = "(" + a.basis_labels[i] + "," + a.basis_labels[j] + "," + a.basis_labels[k] + ")";
                        break;
                    }
                }
        add("associativity", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        Vec sum(n, 0);
        for (size_t s = 0; s < a.idempotents.size() && ok; ++s) {
            sum = vec_add(sum, a.idempotents[s], a.p);
            for (size_t t = 0; t < a.idempotents.size() && ok; ++t) {
                Vec prod = a.multiply(a.idempotents[s], a.idempotents[t]);
                Vec want = (s == t) ? a.idempotents[s] : Vec(n, 0);
                if (prod != want) {
                    ok = false;
                    w = "e_" + std::to_string(s) + " * e_" + std::to_string(t);
                }
            }
        }
        if (ok && sum != a.unit) {
            ok = false;
            w = "sum of idempotents differs from the unit";
        }
        add("idempotents-orthogonal-complete", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int r = 0; r < a.radical.count() && ok; ++r) {
            Vec rv = a.radical.vectors.row(r);
            for (int i = 0; i < n; ++i) {
                if (!in_span(a.radical, a.multiply(basis_vec(i), rv)) ||
                    !in_span(a.radical, a.multiply(rv, basis_vec(i)))) {
                    ok = false;
                    w = "radical vector " + std::to_string(r) + " times " + a.basis_labels[i];
                    break;
                }
            }
        }
        add("radical-two-sided-ideal", ok, w);
    }
    {
        // powers of the radical span must reach zero
        bool ok = false;
        Basis power = a.radical;
        for (int step = 0; step <= n; ++step) {
            if (power.count() == 0) {
                ok = true;
                break;
            }
            std::vector<Vec> prods;
            for (int i = 0; i < power.count(); ++i)
                for (int j = 0; j < a.radical.count(); ++j)
                    prods.push_back(a.multiply(power.vectors.row(i), a.radical.vectors.row(j)));
            Matrix stacked = prods.empty() ? Matrix(0, n, a.p) : Matrix::from_rows(prods, n, a.p);
            power = row_space(stacked);
        }
        add("radical-nilpotent", ok, ok ? "" : "no power of the radical span vanishes");
    }
    {
        // split basic: modulo the radical, e_i A e_j must have dimension
        // delta_ij. A missing radical vector or a merged idempotent shows up here.
        bool ok = true;
        std::string w;
        auto q = quotient(n, a.radical);
        for (size_t s = 0; s < a.idempotents.size() && ok; ++s)
            for (size_t t = 0; t < a.idempotents.size() && ok; ++t) {
                std::vector<Vec> images;
                for (int b = 0; b < n; ++b)
                    images.push_back(
                        q.projection.apply(a.multiply(a.idempotents[s], a.multiply(basis_vec(b), a.idempotents[t]))));
                int d = rank(Matrix::from_rows(images, q.dim, a.p));
                int want = (s == t) ? 1 : 0;
                if (d != want) {
                    ok = false;
                    w = "dim e_" + std::to_string(s) + "(A/rad)e_" + std::to_string(t) + " = " + std::to_string(d);
                }
            }
        add("split-basic-semisimple-quotient", ok, w);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// path algebras

namespace {

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // traversal order

    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (source != o.source) return source < o.source;
        return arrows < o.arrows;
    }
    bool operator==(const Path& o) const = default;
};

std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertices[p.source];
    std::string s;
    // function-composition order: last traversed arrow on the left
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].name;
    }
    return s;
}

/// All paths of length <= maxlen, sorted by (length, source, arrows).
std::vector<Path> enumerate_paths(const Quiver& q, int maxlen) {
    std::vector<Path> all;
    std::vector<Path> frontier;
    for (int v = 0; v < int(q.vertices.size()); ++v) frontier.push_back({v, v, {}});
    all = frontier;
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (int ai = 0; ai < int(q.arrows.size()); ++ai)
                if (q.arrows[ai].source == p.target) {
                    Path np = p;
                    np.arrows.push_back(ai);
                    np.target = q.arrows[ai].target;
                    next.push_back(std::move(np));
                }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

PathAlgebra path_algebra(const Quiver& q, const std::vector<Relation>& rels, int length_bound, unsigned p) {
    q.check();
    if (length_bound < 1) throw schema_error("length_bound must be >= 1");
    for (const auto& rel : rels) {
        if (rel.terms.empty()) throw schema_error("empty relation");
        for (const auto& t : rel.terms)
            if (t.arrows.size() < 2) throw schema_error("relation path of length < 2");
    }

    // paths up to the bound itself; the top layer feeds the admissibility check
    std::vector<Path> paths = enumerate_paths(q, length_bound);
    auto index_of = [&paths](const Path& p) -> int {
        auto it = std::lower_bound(paths.begin(), paths.end(), p);
        if (it == paths.end() || !(*it == p)) return -1;
        return int(it - paths.begin());
    };
    const int n_all = int(paths.size());

    struct RelPaths {
        std::vector<std::pair<uint8_t, Path>> terms;
        int source = 0, target = 0;
    };
    std::vector<RelPaths> rel_paths;
    for (const auto& rel : rels) {
        RelPaths rp;
        bool first = true;
        for (const auto& t : rel.terms) {
            Path pa;
            pa.source = q.arrows[t.arrows.front()].source;
            int cur = pa.source;
            for (int ai : t.arrows) {
                if (q.arrows[ai].source != cur)
                    throw schema_error("relation path is not composable at arrow '" + q.arrows[ai].name + "'");
                cur = q.arrows[ai].target;
            }
            pa.target = cur;
            pa.arrows = t.arrows;
            if (first) {
                rp.source = pa.source;
                rp.target = pa.target;
                first = false;
            } else if (rp.source != pa.source || rp.target != pa.target) {
                throw schema_error("relation terms are not parallel paths");
            }
            rp.terms.push_back({uint8_t(t.coeff % p), pa});
        }
        rel_paths.push_back(std::move(rp));
    }

    // Ideal elements u * rel * w truncated at the bound; terms of length
    // exactly length_bound belong to the admissibility span only.
    std::vector<Vec> gens_below;
    std::vector<Vec> gens_upto;
    for (const auto& rp : rel_paths) {
        size_t min_len = SIZE_MAX;
        for (const auto& [c, pa] : rp.terms) min_len = std::min(min_len, pa.arrows.size());
        for (const auto& w : paths) {
            if (w.target != rp.source) continue;
            if (int(w.arrows.size() + min_len) > length_bound) continue;
            for (const auto& u : paths) {
                if (u.source != rp.target) continue;
                if (int(w.arrows.size() + min_len + u.arrows.size()) > length_bound) continue;
                Vec below(n_all, 0), upto(n_all, 0);
                for (const auto& [c, pa] : rp.terms) {
                    Path full;
                    full.source = w.source;
                    full.target = u.target;
                    full.arrows = w.arrows;
                    full.arrows.insert(full.arrows.end(), pa.arrows.begin(), pa.arrows.end());
                    full.arrows.insert(full.arrows.end(), u.arrows.begin(), u.arrows.end());
                    if (int(full.arrows.size()) > length_bound) continue;
                    int idx = index_of(full);
                    if (idx < 0) throw invariant_error("internal: concatenated path not enumerated");
                    upto[idx] = fp_add(upto[idx], c, p);
                    if (int(full.arrows.size()) < length_bound) below[idx] = fp_add(below[idx], c, p);
                }
                if (!vec_is_zero(below)) gens_below.push_back(std::move(below));
                if (!vec_is_zero(upto)) gens_upto.push_back(std::move(upto));
            }
        }
    }

    // admissibility: every path of length == bound must reduce to zero
    {
        Basis span_upto =
            gens_upto.empty() ? Basis::empty(n_all, p) : row_space(Matrix::from_rows(gens_upto, n_all, p));
        for (int i = 0; i < n_all; ++i) {
            if (int(paths[i].arrows.size()) != length_bound) continue;
            Vec v(n_all, 0);
            v[i] = 1;
            if (!in_span(span_upto, v))
                throw invariant_error("arrow ideal not nilpotent modulo relations at length " +
                                      std::to_string(length_bound) + "; witness path " + path_label(q, paths[i]));
        }
    }

    // basis of the quotient: paths of length < bound outside the pivot set
    int n_short = 0;
    while (n_short < n_all && int(paths[n_short].arrows.size()) < length_bound) ++n_short;
    std::vector<Vec> gens_short;
    for (auto& g : gens_below) gens_short.push_back(Vec(g.begin(), g.begin() + n_short));
    Matrix w = gens_short.empty() ? Matrix(0, n_short, p) : Matrix::from_rows(gens_short, n_short, p);
    std::vector<int> piv;
    Matrix wr = rref(w, &piv);
    std::vector<bool> is_pivot(n_short, false);
    for (int c : piv) is_pivot[c] = true;

    std::vector<int> basis_paths;  // indices into `paths`
    std::vector<int> path_to_basis(n_all, -1);
    for (int i = 0; i < n_short; ++i)
        if (!is_pivot[i]) {
            path_to_basis[i] = int(basis_paths.size());
            basis_paths.push_back(i);
        }
    const int n = int(basis_paths.size());

    // normal form of each short path in quotient coordinates
    std::vector<Vec> nf(n_short, Vec(n, 0));
    for (int i = 0; i < n_short; ++i) {
        if (!is_pivot[i]) {
            nf[i][path_to_basis[i]] = 1;
            continue;
        }
        int row = int(std::lower_bound(piv.begin(), piv.end(), i) - piv.begin());
        for (int c = 0; c < n_short; ++c) {
            if (c == i || !wr.at(row, c)) continue;
            nf[i][path_to_basis[c]] = fp_neg(wr.at(row, c), p);  // other pivot columns are zero in rref
        }
    }

    Algebra alg;
    alg.p = p;
    alg.dim = n;
    for (int bi : basis_paths) alg.basis_labels.push_back(path_label(q, paths[bi]));
    alg.mult.assign(n, std::vector<Vec>(n, Vec(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Path& pi = paths[basis_paths[i]];
            const Path& pj = paths[basis_paths[j]];
            if (pi.source != pj.target) continue;  // product is zero
            Path prod;
            prod.source = pj.source;
            prod.target = pi.target;
            prod.arrows = pj.arrows;
            prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
            if (int(prod.arrows.size()) >= length_bound) continue;  // lies in the killed ideal
            int idx = index_of(prod);
            alg.mult[i][j] = nf[idx];
        }

    alg.unit.assign(n, 0);
    PathAlgebra pa;
    pa.quiver = q;
    pa.vertex_basis_index.assign(q.vertices.size(), -1);
    pa.arrow_basis_index.assign(q.arrows.size(), -1);
    for (int i = 0; i < n; ++i) {
        const Path& path = paths[basis_paths[i]];
        pa.basis_path.push_back(path.arrows);
        pa.basis_path_source.push_back(path.source);
        if (path.arrows.empty()) {
            pa.vertex_basis_index[path.source] = i;
            alg.unit[i] = 1;
            Vec e(n, 0);
            e[i] = 1;
            alg.idempotents.push_back(std::move(e));
        } else if (path.arrows.size() == 1) {
            pa.arrow_basis_index[path.arrows[0]] = i;
        }
    }
    for (int v = 0; v < int(q.vertices.size()); ++v)
        if (pa.vertex_basis_index[v] < 0) throw invariant_error("internal: vertex path eliminated");

    // the arrow ideal survives as the span of the non-vertex basis paths
    std::vector<Vec> rad_rows;
    for (int i = 0; i < n; ++i)
        if (!pa.basis_path[i].empty()) {
            Vec e(n, 0);
            e[i] = 1;
            rad_rows.push_back(std::move(e));
        }
    alg.radical = Basis(rad_rows.empty() ? Matrix(0, n, p) : Matrix::from_rows(rad_rows, n, p));

    pa.algebra = finish_algebra(std::move(alg));
    return pa;
}

Basis ideal_closure(const Algebra& a, const std::vector<Vec>& gens) {
    Basis span = gens.empty() ? Basis::empty(a.dim, a.p) : row_space(Matrix::from_rows(gens, a.dim, a.p));
    for (;;) {
        std::vector<Vec> next;
        for (int g = 0; g < span.count(); ++g) {
            Vec gv = span.vectors.row(g);
            for (int i = 0; i < a.dim; ++i) {
                Vec e(a.dim, 0);
                e[i] = 1;
                next.push_back(a.multiply(e, gv));
                next.push_back(a.multiply(gv, e));
            }
        }
        Basis grown =
            extend_basis(span, next.empty() ? Matrix(0, a.dim, a.p) : Matrix::from_rows(next, a.dim, a.p));
        if (grown.count() == span.count()) return span;
        span = grown;
    }
}

AlgebraQuotient quotient_by_ideal(const AlgebraPtr& a, const std::vector<Vec>& gens) {
    Basis ideal = ideal_closure(*a, gens);
    if (in_span(ideal, a->unit))
        throw whole_algebra_error("ideal closure contains the unit; quotient is the zero ring");

    auto qm = quotient(a->dim, ideal);
    Algebra out;
    out.p = a->p;
    out.dim = qm.dim;

    // quotient coordinates are a subset of the ambient coordinates (the
    // section embeds them); reuse those labels
    for (int k = 0; k < qm.dim; ++k) {
        Vec col = qm.section.col(k);
        int amb = int(std::find(col.begin(), col.end(), 1) - col.begin());
        out.basis_labels.push_back(a->basis_labels[amb]);
    }

    out.mult.assign(qm.dim, std::vector<Vec>(qm.dim, Vec(qm.dim, 0)));
    for (int i = 0; i < qm.dim; ++i)
        for (int j = 0; j < qm.dim; ++j)
            out.mult[i][j] = qm.projection.apply(a->multiply(qm.section.col(i), qm.section.col(j)));
    out.unit = qm.projection.apply(a->unit);

    AlgebraQuotient res;
    for (size_t s = 0; s < a->idempotents.size(); ++s) {
        Vec img = qm.projection.apply(a->idempotents[s]);
        if (!vec_is_zero(img)) {
            out.idempotents.push_back(img);
            res.kept_idempotents.push_back(int(s));
        }
    }

    std::vector<Vec> rad_rows;
    for (int r = 0; r < a->radical.count(); ++r) rad_rows.push_back(qm.projection.apply(a->radical.vectors.row(r)));
    Matrix rad_m = rad_rows.empty() ? Matrix(0, qm.dim, a->p) : Matrix::from_rows(rad_rows, qm.dim, a->p);
    out.radical = row_space(rad_m);

    res.algebra = finish_algebra(std::move(out));
    res.projection = qm.projection;
    res.section = qm.section;
    return res;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    Algebra out;
    out.p = a->p;
    out.dim = a->dim;
    out.basis_labels = a->basis_labels;
    out.unit = a->unit;
    out.idempotents = a->idempotents;
    out.radical = a->radical;
    out.mult.assign(a->dim, std::vector<Vec>(a->dim));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) out.mult[i][j] = a->mult[j][i];
    return finish_algebra(std::move(out));
}

ProductAlgebra product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->p != b->p) throw invariant_error("product of algebras over different fields");
    const unsigned p = a->p;
    const int n = a->dim + b->dim;
    Algebra out;
    out.p = p;
    out.dim = n;
    for (const auto& l : a->basis_labels) out.basis_labels.push_back(l + ".l");
    for (const auto& l : b->basis_labels) out.basis_labels.push_back(l + ".r");

    auto lift_a = [&](const Vec& v) {
        Vec r(n, 0);
        std::copy(v.begin(), v.end(), r.begin());
        return r;
    };
    auto lift_b = [&](const Vec& v) {
        Vec r(n, 0);
        std::copy(v.begin(), v.end(), r.begin() + a->dim);
        return r;
    };

    out.mult.assign(n, std::vector<Vec>(n, Vec(n, 0)));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) out.mult[i][j] = lift_a(a->mult[i][j]);
    for (int i = 0; i < b->dim; ++i)
        for (int j = 0; j < b->dim; ++j) out.mult[a->dim + i][a->dim + j] = lift_b(b->mult[i][j]);

    out.unit = vec_add(lift_a(a->unit), lift_b(b->unit), p);
    for (const auto& e : a->idempotents) out.idempotents.push_back(lift_a(e));
    for (const auto& e : b->idempotents) out.idempotents.push_back(lift_b(e));

    std::vector<Vec> rad;
    for (int r = 0; r < a->radical.count(); ++r) rad.push_back(lift_a(a->radical.vectors.row(r)));
    for (int r = 0; r < b->radical.count(); ++r) rad.push_back(lift_b(b->radical.vectors.row(r)));
    out.radical = Basis(rad.empty() ? Matrix(0, n, p) : Matrix::from_rows(rad, n, p));

    ProductAlgebra res;
    res.embed_left = Matrix(n, a->dim, p);
    for (int i = 0; i < a->dim; ++i) res.embed_left.set(i, i, 1);
    res.embed_right = Matrix(n, b->dim, p);
    for (int i = 0; i < b->dim; ++i) res.embed_right.set(a->dim + i, i, 1);
    res.algebra = finish_algebra(std::move(out));
    return res;
}

}  // namespace cleftlab
