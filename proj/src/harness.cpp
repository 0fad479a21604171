#include "cleftlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace cleftlab {

int VerificationReport::checked() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.skipped) ++n;
    return n;
}

int VerificationReport::skipped() const { return int(cases.size()) - checked(); }

int VerificationReport::non_vacuous() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.skipped && c.detail.find("vacuous") == std::string::npos) ++n;
    return n;
}

std::vector<int> VerificationReport::counterexamples() const {
    std::vector<int> out;
    for (const auto& c : cases)
        if (!c.skipped && !c.pass) out.push_back(c.index);
    return out;
}

bool VerificationReport::pass() const { return counterexamples().empty(); }

std::string VerificationReport::summary_line() const {
    std::ostringstream os;
    os << theorem << " on " << instance << ": " << (pass() ? "PASS" : "FAIL") << " (" << checked() << " checked, "
       << non_vacuous() << " non-vacuous, " << skipped() << " skipped, " << counterexamples().size()
       << " counterexamples, " << runtime_ms << " ms)";
    return os.str();
}

void parallel_for_cases(int n, const std::function<void(int)>& fn) {
    int threads = int(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (const char* env = std::getenv("CLEFTLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < threads) threads = cap;
    }
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// catalogs

Catalog catalog_typeA(int n, const std::vector<bool>& orientation, unsigned p, const Config& cfg) {
    if (n < 1 || n > 6) throw invariant_error("catalog_typeA: n out of range");
    std::vector<bool> orient = orientation;
    if (orient.empty()) orient.assign(size_t(n - 1), true);
    if (int(orient.size()) != n - 1) throw invariant_error("catalog_typeA: orientation length mismatch");

    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) {
        if (orient[i])
            q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
        else
            q.arrows.push_back({"a" + std::to_string(i + 1), i + 1, i});
    }
    PathAlgebra pa = path_algebra(q, {}, n, p);

    std::vector<Module> entries;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<int> dims(n, 0);
            for (int v = i; v <= j; ++v) dims[v] = 1;
            std::vector<Matrix> maps;
            for (const auto& ar : q.arrows) {
                int rows = dims[ar.target], cols = dims[ar.source];
                Matrix m(rows, cols, p);
                if (rows == 1 && cols == 1) m.set(0, 0, 1);
                maps.push_back(std::move(m));
            }
            entries.push_back(module_from_representation(pa, dims, maps));
        }
    Catalog cat = make_catalog(pa.algebra, std::move(entries), n, Catalog::Provenance::analytic, cfg);
    if (int(cat.entries.size()) != n * (n + 1) / 2)
        throw invariant_error("catalog_typeA: interval count mismatch");
    return cat;
}

namespace {

uint64_t checked_pow(uint64_t base, uint64_t exp, uint64_t cap) {
    uint64_t r = 1;
    while (exp--) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

/// Deduplicating collector for indecomposables.
struct IndecPool {
    const Config& cfg;
    std::vector<Module> reps;
    std::vector<std::vector<int>> prints;

    explicit IndecPool(const Config& c) : cfg(c) {}
    void offer(const Module& x) {
        auto fp = module_fingerprint(x);
        for (size_t i = 0; i < reps.size(); ++i)
            if (prints[i] == fp && is_isomorphic(reps[i], x, cfg)) return;
        reps.push_back(x);
        prints.push_back(std::move(fp));
    }
};

/// All submodules of w (as bases in its own coordinates), by closing under
/// cyclic extensions.
std::vector<Basis> all_submodules(const Module& w, const Config& cfg) {
    const unsigned p = w.algebra->p;
    if (checked_pow(p, unsigned(w.dim), cfg.budget_enumeration) > cfg.budget_enumeration)
        throw budget_error("submodule enumeration space exceeds budget");
    uint64_t vectors = 1;
    for (int i = 0; i < w.dim; ++i) vectors *= p;

    std::map<std::vector<uint8_t>, Basis> seen;
    auto key = [](const Basis& b) {
        std::vector<uint8_t> k;
        k.push_back(uint8_t(b.count()));
        k.insert(k.end(), b.vectors.data().begin(), b.vectors.data().end());
        return k;
    };
    std::vector<Basis> queue{Basis::empty(w.dim, p)};
    seen[key(queue[0])] = queue[0];
    for (size_t head = 0; head < queue.size(); ++head) {
        Basis cur = queue[head];
        for (uint64_t code = 1; code < vectors; ++code) {
            Vec v(w.dim);
            uint64_t c = code;
            for (int i = 0; i < w.dim; ++i) {
                v[i] = uint8_t(c % p);
                c /= p;
            }
            if (in_span(cur, v)) continue;
            Matrix gens = cur.vectors.vstack(Matrix::from_rows({v}, w.dim, p));
            Basis grown = submodule_closure(w, gens);
            auto k = key(grown);
            if (!seen.count(k)) {
                seen[k] = grown;
                queue.push_back(grown);
            }
        }
    }
    return queue;
}

void enumerate_compositions(int total, int parts, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        enumerate_compositions(total - first, parts - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

Catalog catalog_bruteforce(const AlgebraPtr& a, int total_dim_bound, const Config& cfg) {
    const unsigned p = a->p;
    uint64_t space = 0;
    for (int d = 1; d <= total_dim_bound; ++d) {
        space += checked_pow(p, uint64_t(a->dim) * d * d, cfg.budget_enumeration);
        if (space > cfg.budget_enumeration)
            throw budget_error("catalog_bruteforce: action-tuple space exceeds the enumeration budget");
    }

    IndecPool pool(cfg);
    for (int d = 1; d <= total_dim_bound; ++d) {
        uint64_t total = 1;
        for (int i = 0; i < a->dim * d * d; ++i) total *= p;
        for (uint64_t code = 0; code < total; ++code) {
            Module x;
            x.algebra = a;
            x.dim = d;
            uint64_t c = code;
            for (int b = 0; b < a->dim; ++b) {
                Matrix act(d, d, p);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        act.set(i, j, int(c % p));
                        c /= p;
                    }
                x.action.push_back(std::move(act));
            }
            if (!check_module(x)) continue;
            if (decompose(x, cfg).size() != 1) continue;
            pool.offer(x);
        }
    }
    return make_catalog(a, std::move(pool.reps), total_dim_bound, Catalog::Provenance::brute_force, cfg);
}

Catalog catalog_by_covers(const AlgebraPtr& a, int total_dim_bound, const Config& cfg) {
    IndecPool pool(cfg);
    const int k = a->num_idempotents();
    for (int top_dim = 1; top_dim <= total_dim_bound; ++top_dim) {
        std::vector<int> cur;
        enumerate_compositions(top_dim, k, cur, [&](const std::vector<int>& mult) {
            std::vector<int> vertices;
            for (int v = 0; v < k; ++v)
                for (int c = 0; c < mult[v]; ++c) vertices.push_back(v);
            ProjectiveModule pm = projective_sum(a, vertices);
            if (pm.module.dim == 0) return;

            Basis radw = radical_subspace(pm.module);
            auto w = submodule(pm.module, radw);
            for (const Basis& sub_w : all_submodules(w.module, cfg)) {
                int quotient_dim = pm.module.dim - sub_w.count();
                if (quotient_dim < 1 || quotient_dim > total_dim_bound) continue;
                // lift the submodule into the projective's coordinates
                Matrix lifted = sub_w.vectors * w.inclusion.matrix.transpose();
                Module x = quotient_module(pm.module, Basis(row_space(lifted))).module;
                if (decompose(x, cfg).size() != 1) continue;
                pool.offer(x);
            }
        });
    }
    return make_catalog(a, std::move(pool.reps), total_dim_bound, Catalog::Provenance::brute_force, cfg);
}

std::vector<Module> enumerate_support_tau_tilting(const AlgebraPtr& a, const Catalog& cat, const Config& cfg) {
    if (!same_algebra(cat.algebra, a)) throw invariant_error("enumerate_support_tau_tilting: catalog mismatch");
    const int n = int(cat.entries.size());
    if (n > 20) throw budget_error("enumerate_support_tau_tilting: catalog too large to sweep");
    std::vector<Module> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        if (int(std::popcount(mask)) > a->num_idempotents()) continue;
        std::vector<Module> parts;
        for (int b = 0; b < n; ++b)
            if (mask & (uint64_t(1) << b)) parts.push_back(cat.entries[b]);
        Module y = direct_sum(a, parts).module;
        if (is_support_tau_tilting(y, cfg)) out.push_back(std::move(y));
    }
    return out;
}

// ---------------------------------------------------------------------------
// shipped instances

namespace {

PathAlgebra make_field_algebra(unsigned p) {
    Quiver q;
    q.vertices = {"1"};
    return path_algebra(q, {}, 1, p);
}

PathAlgebra make_semisimple(int k, unsigned p) {
    Quiver q;
    for (int i = 1; i <= k; ++i) q.vertices.push_back(std::to_string(i));
    return path_algebra(q, {}, 1, p);
}

PathAlgebra make_linear_quiver_algebra(int n, unsigned p) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return path_algebra(q, {}, n, p);
}

Bimodule arrow_bimodule(const AlgebraPtr& prod, const std::vector<std::pair<int, int>>& arrows) {
    Bimodule m;
    m.left_algebra = prod;
    m.right_algebra = prod;
    m.dim = int(arrows.size());
    for (int v = 0; v < prod->dim; ++v) {
        Matrix l(m.dim, m.dim, prod->p), r(m.dim, m.dim, prod->p);
        for (int a = 0; a < m.dim; ++a) {
            if (arrows[a].second == v) l.set(a, a, 1);
            if (arrows[a].first == v) r.set(a, a, 1);
        }
        m.left_action.push_back(std::move(l));
        m.right_action.push_back(std::move(r));
    }
    if (!check_bimodule(m)) throw invariant_error("internal: arrow bimodule invalid");
    return m;
}

Catalog retarget_catalog(Catalog cat, const AlgebraPtr& a) {
    if (!same_algebra(cat.algebra, a)) throw invariant_error("retarget_catalog: algebras differ structurally");
    cat.algebra = a;
    for (auto& e : cat.entries) e.algebra = a;
    return cat;
}

}  // namespace

std::vector<std::string> shipped_instance_names() {
    return {"k-dual", "ka2-trivial", "tensor-a2", "tensor-a3", "triangular"};
}

Instance shipped_instance(const std::string& name, unsigned p, const Config& cfg) {
    Instance inst;
    inst.name = name;
    if (name == "k-dual") {
        auto k = make_field_algebra(p);
        Bimodule line;
        line.left_algebra = k.algebra;
        line.right_algebra = k.algebra;
        line.dim = 1;
        line.left_action = {Matrix::identity(1, p)};
        line.right_action = {Matrix::identity(1, p)};
        inst.description = "trivial extension of the ground field by itself (dual numbers)";
        inst.cleft = trivial_extension(k.algebra, line);
        inst.cat_r = catalog_by_covers(k.algebra, 2, cfg);
        inst.cat_t = catalog_by_covers(inst.cleft.total, 2, cfg);
    } else if (name == "ka2-trivial") {
        auto r = make_linear_quiver_algebra(2, p);
        inst.description = "trivial extension of the A_2 path algebra by its dual bimodule";
        inst.cleft = trivial_extension(r.algebra, dual_regular_bimodule(r.algebra));
        inst.cat_r = retarget_catalog(catalog_typeA(2, {}, p, cfg), r.algebra);
        inst.cat_t = catalog_by_covers(inst.cleft.total, 3, cfg);
    } else if (name == "tensor-a2") {
        auto r = make_semisimple(2, p);
        Bimodule n = arrow_bimodule(r.algebra, {{0, 1}});
        inst.description = "tensor ring of the A_2 arrow bimodule over k x k";
        inst.cleft = tensor_ring(r.algebra, n, 2);
        inst.tensor_powers = {n};
        inst.cat_r = catalog_by_covers(r.algebra, 2, cfg);
        inst.cat_t = catalog_by_covers(inst.cleft.total, 2, cfg);
    } else if (name == "tensor-a3") {
        auto r = make_semisimple(3, p);
        Bimodule n = arrow_bimodule(r.algebra, {{0, 1}, {1, 2}});
        inst.description = "tensor ring of the A_3 arrow bimodule over k x k x k";
        inst.cleft = tensor_ring(r.algebra, n, 3);
        inst.tensor_powers = {n, tensor_bimodules(n, n).module};
        inst.cat_r = catalog_by_covers(r.algebra, 2, cfg);
        inst.cat_t = catalog_by_covers(inst.cleft.total, 3, cfg);
    } else if (name == "triangular") {
        auto a = make_linear_quiver_algebra(2, p);
        auto k = make_field_algebra(p);
        // P(1) over kA_2 as a (kA_2, k)-bimodule
        auto projs = indecomposable_projectives(a.algebra);
        Bimodule m;
        m.left_algebra = a.algebra;
        m.right_algebra = k.algebra;
        m.dim = projs[0].module.dim;
        m.left_action = projs[0].module.action;
        m.right_action = {Matrix::identity(m.dim, p)};
        inst.description = "one-point-extension-shaped triangular matrix algebra of kA_2 and k along P(1)";
        inst.cleft = triangular_matrix(a.algebra, k.algebra, m);
        inst.cat_r = catalog_by_covers(inst.cleft.base, 2, cfg);
        inst.cat_t = catalog_by_covers(inst.cleft.total, 3, cfg);
    } else {
        throw schema_error("unknown instance '" + name + "'");
    }
    return inst;
}

Instance instance_from_cleft(std::string name, CleftInstance c, const Config& cfg, int bound_r, int bound_t) {
    Instance inst;
    inst.name = std::move(name);
    inst.description = "user instance";
    inst.cat_r = catalog_by_covers(c.base, bound_r, cfg);
    inst.cat_t = catalog_by_covers(c.total, bound_t, cfg);
    inst.cleft = std::move(c);
    return inst;
}

// ---------------------------------------------------------------------------
// verification engines

namespace {

struct NamedModule {
    Module module;
    std::string desc;
};

std::vector<NamedModule> basic_sums(const Catalog& cat, bool include_empty) {
    std::vector<NamedModule> out;
    const int n = int(cat.entries.size());
    for (uint64_t mask = include_empty ? 0 : 1; mask < (uint64_t(1) << n); ++mask) {
        std::vector<Module> parts;
        std::string desc;
        for (int b = 0; b < n; ++b)
            if (mask & (uint64_t(1) << b)) {
                parts.push_back(cat.entries[b]);
                desc += (desc.empty() ? "E" : "+E") + std::to_string(b);
            }
        if (desc.empty()) desc = "0";
        out.push_back({direct_sum(cat.algebra, parts).module, desc});
    }
    return out;
}

std::string bs(bool b) { return b ? "true" : "false"; }

void fill_report_frame(VerificationReport& rep, const Instance& inst, const Config& cfg) {
    rep.instance = inst.name + " (" + inst.description + ")";
    rep.field = inst.cleft.base->p;
    rep.seed = cfg.seed;
    rep.catalog_bound_r = inst.cat_r.complete_up_to;
    rep.catalog_bound_t = inst.cat_t.complete_up_to;
    rep.catalog_provenance_r =
        inst.cat_r.provenance == Catalog::Provenance::analytic ? "analytic" : "brute-force";
    rep.catalog_provenance_t =
        inst.cat_t.provenance == Catalog::Provenance::analytic ? "analytic" : "brute-force";
}

}  // namespace

VerificationReport verify_silting_lift(const Instance& inst, const Config& cfg) {
    VerificationReport rep;
    rep.theorem = "thm3.3";
    fill_report_frame(rep, inst, cfg);
    rep.preamble =
        "coproduct preservation by i and e holds automatically in module categories and is not "
        "re-checked per case; quantifiers run over the certified catalogs";

    const CleftInstance& c = inst.cleft;
    auto ys = basic_sums(inst.cat_r, true);  // the zero module is a legitimate degenerate case
    rep.cases.resize(ys.size());
    parallel_for_cases(int(ys.size()), [&](int i) {
        CaseResult cr;
        cr.index = i;
        cr.desc = "Y = " + ys[i].desc;
        const Module& y = ys[i].module;

        Presentation sigma = minimal_presentation(y);
        Module fy = functor_F(c, y);
        bool right_partial = is_partial_silting(y, sigma, inst.cat_r, cfg) && in_d_sigma(sigma.sigma, fy);
        bool right_silting = is_silting(y, sigma, inst.cat_r) && in_gen(y, fy);

        Module ly = functor_l_total(c, y);
        Presentation lsigma = lift_presentation(c, sigma);
        bool left_partial = is_partial_silting(ly, lsigma, inst.cat_t, cfg);
        bool left_silting = is_silting(ly, lsigma, inst.cat_t);

        cr.left = left_silting;
        cr.right = right_silting;
        cr.pass = (left_partial == right_partial) && (left_silting == right_silting);
        cr.detail = "partial: l(Y)-side " + bs(left_partial) + ", Y-side " + bs(right_partial) +
                    "; silting: l(Y)-side " + bs(left_silting) + ", Y-side " + bs(right_silting);
        rep.cases[i] = std::move(cr);
    });
    return rep;
}

VerificationReport verify_tilting_lift(const Instance& inst, int n, const Config& cfg) {
    VerificationReport rep;
    rep.theorem = "thm3.5";
    fill_report_frame(rep, inst, cfg);
    rep.preamble =
        "the bimodule is nilpotent by instance data, which forces Ker q = 0; Tor hypotheses are "
        "checked per case and failures are itemized as skipped";

    const CleftInstance& c = inst.cleft;
    const Bimodule& m = c.theta.bimodule;
    auto xs = basic_sums(inst.cat_r, true);
    rep.cases.resize(xs.size());
    parallel_for_cases(int(xs.size()), [&](int i) {
        CaseResult cr;
        cr.index = i;
        cr.desc = "X = " + xs[i].desc + ", n = " + std::to_string(n);
        const Module& x = xs[i].module;

        for (int t = 1; t <= n + 1; ++t)
            if (tor_dim(m, x, t) != 0) {
                cr.skipped = true;
                cr.skip_reason = "Tor_" + std::to_string(t) + "(M, X) != 0";
                rep.cases[i] = std::move(cr);
                return;
            }

        Module fx = functor_F(c, x);
        bool fcond = true;
        for (int j = 1; j <= n; ++j)
            if (ext_dim(x, fx, j) != 0) fcond = false;

        auto partial_tilting = [&](const Module& mod) {
            if (!pd_upto(mod, n).has_value()) return false;
            for (int j = 1; j <= n; ++j)
                if (ext_dim(mod, mod, j) != 0) return false;
            return true;
        };

        Module lx = functor_l_total(c, x);
        bool left_partial = partial_tilting(lx);
        bool right_partial = partial_tilting(x) && fcond;
        bool left_full = is_n_tilting(lx, n, cfg);
        bool right_full = is_n_tilting(x, n, cfg) && fcond;

        cr.left = left_full;
        cr.right = right_full;
        cr.pass = (left_partial == right_partial) && (left_full == right_full);
        cr.detail = "partial: l(X)-side " + bs(left_partial) + ", X-side " + bs(right_partial) +
                    "; tilting: l(X)-side " + bs(left_full) + ", X-side " + bs(right_full);
        if (left_full && right_full) cr.detail += "; positive tilting lift";
        rep.cases[i] = std::move(cr);
    });
    return rep;
}

namespace {

VerificationReport descent_engine(const Instance& inst, const Config& cfg, bool do_silting, bool do_stt,
                                  const std::string& theorem_id) {
    VerificationReport rep;
    rep.theorem = theorem_id;
    fill_report_frame(rep, inst, cfg);
    rep.preamble =
        "one-directional transfer from T-modules to R-modules along q; converse failures are not "
        "counterexamples; presentations are by l-images of projectives";

    const CleftInstance& c = inst.cleft;
    auto as = basic_sums(inst.cat_t, true);
    rep.cases.resize(as.size());
    parallel_for_cases(int(as.size()), [&](int i) {
        CaseResult cr;
        cr.index = i;
        cr.desc = "A = " + as[i].desc;
        const Module& a = as[i].module;

        QData qa = functor_q_total(c, a);
        bool any_hyp = false;
        bool ok = true;
        std::ostringstream detail;

        if (do_silting) {
            LiftedPresentation lp = l_image_presentation(c, a);
            Presentation qpres = q_of_lifted(c, lp, qa);
            bool a_silting = is_silting(a, lp.delta, inst.cat_t);
            bool a_partial = is_partial_silting(a, lp.delta, inst.cat_t, cfg);
            detail << "A silting " << bs(a_silting) << ", partial " << bs(a_partial);
            if (a_silting) {
                any_hyp = true;
                bool q_silting = is_silting(qa.module, qpres, inst.cat_r);
                detail << "; q(A) silting " << bs(q_silting);
                ok = ok && q_silting;
            }
            if (a_partial) {
                any_hyp = true;
                bool q_partial = is_partial_silting(qa.module, qpres, inst.cat_r, cfg);
                detail << "; q(A) partial " << bs(q_partial);
                ok = ok && q_partial;
            }
        }
        if (do_stt) {
            bool a_rigid = is_tau_rigid(a);
            bool a_stt = is_support_tau_tilting(a, cfg);
            detail << (detail.str().empty() ? "" : "; ") << "A tau-rigid " << bs(a_rigid) << ", stt "
                   << bs(a_stt);
            if (a_rigid) {
                any_hyp = true;
                bool q_rigid = is_tau_rigid(qa.module);
                detail << "; Coker(alpha) tau-rigid " << bs(q_rigid);
                ok = ok && q_rigid;
            }
            if (a_stt) {
                any_hyp = true;
                bool q_stt = is_support_tau_tilting(qa.module, cfg);
                detail << "; Coker(alpha) stt " << bs(q_stt);
                ok = ok && q_stt;
            }
        }
        if (!any_hyp) detail << "; vacuous (no hypothesis holds)";
        cr.left = any_hyp;
        cr.right = ok;
        cr.pass = !any_hyp || ok;
        cr.detail = detail.str();
        rep.cases[i] = std::move(cr);
    });
    return rep;
}

}  // namespace

VerificationReport verify_silting_descent(const Instance& inst, const Config& cfg) {
    return descent_engine(inst, cfg, true, true, "thm3.8");
}

VerificationReport verify_stt_descent(const Instance& inst, const Config& cfg) {
    return descent_engine(inst, cfg, false, true, "cor4.7");
}

VerificationReport verify_stt_lift(const Instance& inst, const Config& cfg) {
    VerificationReport rep;
    rep.theorem = "cor4.6";
    fill_report_frame(rep, inst, cfg);
    rep.preamble =
        "support tau-tilting and tau-rigid lifting along l, with the Hom(M (x) Y, tau Y) criterion; "
        "the final clause cross-checks that criterion against membership of M (x) Y in D_sigma";

    const CleftInstance& c = inst.cleft;
    auto ys = basic_sums(inst.cat_r, true);  // the zero module is a legitimate case here
    rep.cases.resize(ys.size());
    parallel_for_cases(int(ys.size()), [&](int i) {
        CaseResult cr;
        cr.index = i;
        cr.desc = "Y = " + ys[i].desc;
        const Module& y = ys[i].module;

        Module fy = functor_F(c, y);
        Module tau_y = tau(y);
        bool hom_cond = hom_dim(fy, tau_y) == 0;

        Module ly = functor_l_total(c, y);
        bool left_stt = is_support_tau_tilting(ly, cfg);
        bool right_stt = is_support_tau_tilting(y, cfg) && hom_cond;
        bool left_rigid = is_tau_rigid(ly);
        bool right_rigid = is_tau_rigid(y) && hom_cond;

        Presentation sigma = minimal_presentation(y);
        bool bridge_ok = in_d_sigma(sigma.sigma, fy) == hom_cond;

        // informational: the strengthened right side F(Y) in Gen(Y), which is
        // what the silting-lift statement produces for the augmented
        // presentation; recorded so report readers can see where the stated
        // criterion and the strengthened one part ways
        bool right_stt_strong = is_support_tau_tilting(y, cfg) && in_gen(y, fy);

        cr.left = left_stt;
        cr.right = right_stt;
        cr.pass = (left_stt == right_stt) && (left_rigid == right_rigid) && bridge_ok;
        cr.detail = "stt: l(Y)-side " + bs(left_stt) + ", Y-side " + bs(right_stt) + "; tau-rigid: l(Y)-side " +
                    bs(left_rigid) + ", Y-side " + bs(right_rigid) + "; Hom(F(Y), tau Y)=0 is " + bs(hom_cond) +
                    "; D_sigma bridge " + (bridge_ok ? "agrees" : "DISAGREES") +
                    "; strengthened right side (F(Y) in Gen(Y)) " + bs(right_stt_strong) +
                    (right_stt_strong == left_stt ? " agrees with l(Y)-side" : " ALSO disagrees");
        rep.cases[i] = std::move(cr);
    });
    return rep;
}

VerificationReport verify_tensor_transfer(const Instance& inst, int n, const Config& cfg) {
    if (inst.tensor_powers.empty())
        throw invariant_error("verify cor4.4 requires a tensor-ring instance with stored powers");
    VerificationReport rep;
    rep.theorem = "cor4.4";
    fill_report_frame(rep, inst, cfg);
    rep.preamble = "per-degree transfer over the tensor ring: conditions on N^i (x) Y for each power";

    const CleftInstance& c = inst.cleft;
    auto ys = basic_sums(inst.cat_r, true);
    rep.cases.resize(ys.size());
    parallel_for_cases(int(ys.size()), [&](int i) {
        CaseResult cr;
        cr.index = i;
        cr.desc = "Y = " + ys[i].desc + ", n = " + std::to_string(n);
        const Module& y = ys[i].module;

        Presentation sigma = minimal_presentation(y);
        std::vector<Module> powers_y;
        for (const auto& pw : inst.tensor_powers) powers_y.push_back(tensor(pw, y).module);

        bool gen_cond = true, d_cond = true;
        for (const auto& py : powers_y) {
            if (!in_gen(y, py)) gen_cond = false;
            if (!in_d_sigma(sigma.sigma, py)) d_cond = false;
        }
        Module ly = functor_l_total(c, y);
        Presentation lsigma = lift_presentation(c, sigma);
        bool left_silting = is_silting(ly, lsigma, inst.cat_t);
        bool right_silting = is_silting(y, sigma, inst.cat_r) && gen_cond;
        bool left_partial = is_partial_silting(ly, lsigma, inst.cat_t, cfg);
        bool right_partial = is_partial_silting(y, sigma, inst.cat_r, cfg) && d_cond;

        std::ostringstream detail;
        detail << "silting: l(Y)-side " << bs(left_silting) << ", Y-side " << bs(right_silting)
               << "; partial: l(Y)-side " << bs(left_partial) << ", Y-side " << bs(right_partial);
        bool pass = (left_silting == right_silting) && (left_partial == right_partial);

        bool tor_ok = true;
        for (const auto& pw : inst.tensor_powers)
            for (int t = 1; t <= n + 1 && tor_ok; ++t)
                if (tor_dim(pw, y, t) != 0) tor_ok = false;
        if (tor_ok) {
            bool ext_cond = true;
            for (const auto& py : powers_y)
                for (int j = 1; j <= n; ++j)
                    if (ext_dim(y, py, j) != 0) ext_cond = false;
            bool left_tilt = is_n_tilting(ly, n, cfg);
            bool right_tilt = is_n_tilting(y, n, cfg) && ext_cond;
            pass = pass && (left_tilt == right_tilt);
            detail << "; tilting: l(Y)-side " << bs(left_tilt) << ", Y-side " << bs(right_tilt);
        } else {
            detail << "; tilting clause skipped (Tor obstruction)";
        }

        cr.left = left_silting;
        cr.right = right_silting;
        cr.pass = pass;
        cr.detail = detail.str();
        rep.cases[i] = std::move(cr);
    });
    return rep;
}

VerificationReport verify_lemma_suite(const Instance& inst, const Config& cfg) {
    VerificationReport rep;
    rep.theorem = "lemmas";
    fill_report_frame(rep, inst, cfg);
    rep.preamble = "supporting identities battery over the catalog entries of both sides";

    const CleftInstance& c = inst.cleft;
    const Catalog& catR = inst.cat_r;
    const Catalog& catT = inst.cat_t;

    struct Task {
        std::string desc;
        std::function<std::pair<bool, std::string>()> run;
    };
    std::vector<Task> tasks;

    // adjunction dimension identities
    for (size_t yi = 0; yi < catR.entries.size(); ++yi)
        for (size_t zi = 0; zi < catT.entries.size(); ++zi) {
            tasks.push_back({"adjoint-dims(l,e) y=E" + std::to_string(yi) + " Z=F" + std::to_string(zi), [&, yi, zi] {
                                 const Module& y = catR.entries[yi];
                                 const Module& z = catT.entries[zi];
                                 int lhs = hom_dim(functor_l_total(c, y), z);
                                 int rhs = hom_dim(y, restrict_along(z, c.injection, c.base));
                                 return std::make_pair(lhs == rhs,
                                                       "dims " + std::to_string(lhs) + "/" + std::to_string(rhs));
                             }});
            tasks.push_back({"adjoint-dims(q,i) y=E" + std::to_string(yi) + " Z=F" + std::to_string(zi), [&, yi, zi] {
                                 const Module& y = catR.entries[yi];
                                 const Module& z = catT.entries[zi];
                                 int lhs = hom_dim(functor_q_total(c, z).module, y);
                                 int rhs = hom_dim(z, functor_i_total(c, y));
                                 return std::make_pair(lhs == rhs,
                                                       "dims " + std::to_string(lhs) + "/" + std::to_string(rhs));
                             }});
        }

    // projectives of T are the l-images of projectives of R
    for (int v = 0; v < c.base->num_idempotents(); ++v)
        tasks.push_back({"l(P_" + std::to_string(v) + ") is the T-projective at " + std::to_string(v), [&, v] {
                             Module lp = functor_l_total(c, projective_sum(c.base, {v}).module);
                             bool indec = decompose(lp, cfg).size() == 1;
                             bool iso = is_isomorphic(lp, projective_sum(c.total, {v}).module, cfg);
                             return std::make_pair(indec && iso, std::string(indec ? "" : "decomposes; ") +
                                                                     (iso ? "matches" : "wrong class"));
                         }});

    // D_sigma transport along (l, e)
    for (size_t yi = 0; yi < catR.entries.size(); ++yi)
        tasks.push_back({"dsigma-transport-l y=E" + std::to_string(yi), [&, yi] {
                             const Module& y = catR.entries[yi];
                             Presentation sigma = minimal_presentation(y);
                             Presentation lsigma = lift_presentation(c, sigma);
                             for (const auto& z : catT.entries) {
                                 bool lhs = in_d_sigma(lsigma.sigma, z);
                                 bool rhs = in_d_sigma(sigma.sigma, restrict_along(z, c.injection, c.base));
                                 if (lhs != rhs) return std::make_pair(false, std::string("mismatch"));
                             }
                             return std::make_pair(true, std::string());
                         }});

    // D_delta transport along (q, i)
    for (size_t ai = 0; ai < catT.entries.size(); ++ai)
        tasks.push_back({"dsigma-transport-qi A=F" + std::to_string(ai), [&, ai] {
                             const Module& a = catT.entries[ai];
                             LiftedPresentation lp = l_image_presentation(c, a);
                             QData qa = functor_q_total(c, a);
                             Presentation qpres = q_of_lifted(c, lp, qa);
                             for (const auto& b : catR.entries) {
                                 bool lhs = in_d_sigma(lp.delta.sigma, functor_i_total(c, b));
                                 bool rhs = in_d_sigma(qpres.sigma, b);
                                 if (lhs != rhs) return std::make_pair(false, std::string("mismatch"));
                             }
                             return std::make_pair(true, std::string());
                         }});

    // derived tensor agreement: Tor_j(M, Y) vs homology of the l-lifted complex
    for (size_t yi = 0; yi < catR.entries.size(); ++yi)
        for (int j = 1; j <= 2; ++j)
            tasks.push_back({"derived-F-agreement y=E" + std::to_string(yi) + " j=" + std::to_string(j),
                             [&, yi, j] {
                                 // two independent routes: tensor M over the R-resolution
                                 // versus homology of the l-lifted complex, restricted by e
                                 const Module& y = catR.entries[yi];
                                 int direct = tor_dim(c.theta.bimodule, y, j);
                                 Resolution res = resolution(y, j + 1);
                                 int len = int(res.terms.size()) - 1;
                                 int lifted = 0;
                                 if (j <= len) {
                                     Morphism dj = functor_l_map(c, res.diff[j - 1]);
                                     int ker = kernel(dj.matrix).count();
                                     int im = (j + 1 <= len) ? rank(functor_l_map(c, res.diff[j]).matrix) : 0;
                                     // the resolution itself is exact at interior degrees, so
                                     // the identity summand of e l contributes nothing here
                                     lifted = ker - im;
                                 }
                                 return std::make_pair(direct == lifted, "Tor " + std::to_string(direct) +
                                                                             ", lifted homology " +
                                                                             std::to_string(lifted));
                             }});

    // e after l splits as identity plus F
    for (size_t yi = 0; yi < catR.entries.size(); ++yi)
        tasks.push_back({"restriction-splits y=E" + std::to_string(yi), [&, yi] {
                             const Module& y = catR.entries[yi];
                             PairModule pm = functor_l(c, y);
                             Module f = functor_F(c, y);
                             for (int i = 0; i < c.base->dim; ++i) {
                                 if (pm.x.action[i].block(0, 0, y.dim, y.dim) != y.action[i])
                                     return std::make_pair(false, std::string("identity block broken"));
                                 if (pm.x.action[i].block(y.dim, y.dim, f.dim, f.dim) != f.action[i])
                                     return std::make_pair(false, std::string("F block broken"));
                             }
                             bool iso = is_isomorphic(pm.x, direct_sum(c.base, {y, f}).module, cfg);
                             return std::make_pair(iso, std::string(iso ? "" : "not a direct sum"));
                         }});

    // right-exactness of l and q on catalog morphisms; exactness of e
    for (size_t yi = 0; yi < catR.entries.size(); ++yi)
        for (size_t yj = 0; yj < catR.entries.size(); ++yj)
            tasks.push_back({"l-right-exact E" + std::to_string(yi) + "->E" + std::to_string(yj), [&, yi, yj] {
                                 const Module& y = catR.entries[yi];
                                 const Module& y2 = catR.entries[yj];
                                 for (const auto& f : hom_basis(y, y2)) {
                                     Module coker_l = cokernel_module(functor_l_map(c, f)).module;
                                     Module l_coker = functor_l_total(c, cokernel_module(f).module);
                                     if (!is_isomorphic(coker_l, l_coker, cfg))
                                         return std::make_pair(false, std::string("coker(l f) != l(coker f)"));
                                 }
                                 return std::make_pair(true, std::string());
                             }});
    for (size_t zi = 0; zi < catT.entries.size(); ++zi)
        for (size_t zj = 0; zj < catT.entries.size(); ++zj)
            tasks.push_back({"q-right-exact,e-exact F" + std::to_string(zi) + "->F" + std::to_string(zj),
                             [&, zi, zj] {
                                 const Module& z = catT.entries[zi];
                                 const Module& z2 = catT.entries[zj];
                                 QData qz = functor_q_total(c, z);
                                 QData qz2 = functor_q_total(c, z2);
                                 for (const auto& g : hom_basis(z, z2)) {
                                     // e is exact: the same matrix is an R-morphism
                                     make_morphism(restrict_along(z, c.injection, c.base),
                                                   restrict_along(z2, c.injection, c.base), g.matrix);
                                     Module coker_q = cokernel_module(q_map(c, qz, qz2, g)).module;
                                     Module q_coker = functor_q_total(c, cokernel_module(g).module).module;
                                     if (!is_isomorphic(coker_q, q_coker, cfg))
                                         return std::make_pair(false, std::string("coker(q g) != q(coker g)"));
                                 }
                                 return std::make_pair(true, std::string());
                             }});

    // cosilting transfer through the opposite instance
    {
        CleftInstance op = opposite_instance(c);
        for (size_t yi = 0; yi < catR.entries.size(); ++yi)
            tasks.push_back({"cosilting-transfer y=E" + std::to_string(yi), [&, yi, op] {
                                 const Module& y = catR.entries[yi];
                                 Module dual_y = dual_module(y);
                                 dual_y.algebra = op.base;
                                 Module r_y = dual_module(functor_l_total(op, dual_y));
                                 r_y.algebra = c.total;
                                 if (!check_module(r_y)) return std::make_pair(false, std::string("r(y) invalid"));
                                 Module fprime = dual_module(functor_F(op, dual_y));
                                 fprime.algebra = c.base;
                                 bool lhs = is_cosilting(r_y, catT, cfg);
                                 bool rhs = is_cosilting(y, catR, cfg) && in_cogen(y, fprime);
                                 return std::make_pair(lhs == rhs,
                                                       "r(B)-side " + bs(lhs) + ", B-side " + bs(rhs));
                             }});
    }

    // tau-rigidity against the exhaustive Gen/D_sigma oracle
    for (size_t yi = 0; yi < catR.entries.size(); ++yi)
        tasks.push_back({"tau-rigid-oracle y=E" + std::to_string(yi), [&, yi] {
                             const Module& y = catR.entries[yi];
                             bool rigid = is_tau_rigid(y);
                             Presentation sigma = minimal_presentation(y);
                             bool oracle = true;
                             for (const auto& l : catR.entries)
                                 if (in_gen(y, l) && !in_d_sigma(sigma.sigma, l)) oracle = false;
                             return std::make_pair(rigid == oracle, "rigid " + bs(rigid) + ", Gen<=D " + bs(oracle));
                         }});

    rep.cases.resize(tasks.size());
    parallel_for_cases(int(tasks.size()), [&](int i) {
        CaseResult cr;
        cr.index = i;
        cr.desc = tasks[i].desc;
        auto [ok, detail] = tasks[i].run();
        cr.pass = ok;
        cr.left = ok;
        cr.right = ok;
        cr.detail = detail;
        rep.cases[i] = std::move(cr);
    });
    return rep;
}

}  // namespace cleftlab
