// Acceptance suite: one pass/fail line per criterion, exact arithmetic, zero
// tolerance. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cleftlab/harness.hpp"

using namespace cleftlab;

namespace {

Config cfg;
int failures = 0;

struct Criterion {
    std::string name;
    long long limit_ms = 0;
    bool pass = true;
    std::ostringstream notes;
};

void report(Criterion& c, long long elapsed_ms) {
    bool in_time = elapsed_ms <= c.limit_ms;
    bool ok = c.pass && in_time;
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.name << " (" << elapsed_ms << " ms, limit " << c.limit_ms
              << " ms)\n";
    std::string n = c.notes.str();
    if (!n.empty()) std::cout << n;
    if (!ok) ++failures;
}

template <typename F>
void run_criterion(const std::string& name, long long limit_ms, F body) {
    Criterion c;
    c.name = name;
    c.limit_ms = limit_ms;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.notes << "  exception: " << e.what() << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    report(c, ms);
}

void expect(Criterion& c, bool cond, const std::string& what) {
    if (!cond) {
        c.pass = false;
        c.notes << "  failed: " << what << "\n";
    }
}

PathAlgebra make_kA(int n, unsigned p = 2) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return path_algebra(q, {}, n, p);
}

}  // namespace

int main() {
    std::cout << "acceptance suite, exact arithmetic over small prime fields\n";

    run_criterion("criterion 1: linear algebra on 1000 seeded random matrices", 5000, [](Criterion& c) {
        std::mt19937_64 rng(2024);
        int count = 0;
        for (unsigned p : {2u, 3u}) {
            for (int iter = 0; iter < 500; ++iter) {
                int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
                Matrix m = Matrix::random(rows, cols, p, rng);
                ++count;
                expect(c, rank(m) + kernel(m).count() == cols, "rank-nullity");
                Vec b(rows);
                for (auto& x : b) x = uint8_t(rng() % p);
                if (auto x = solve(m, b)) expect(c, m.apply(*x) == b, "solve soundness");
                Basis sub = row_space(Matrix::random(1 + int(rng() % 3), cols, p, rng));
                auto q = quotient(cols, sub);
                expect(c, (q.projection * sub.inclusion()).is_zero(), "quotient kills the subspace");
                expect(c, rank(q.projection) == q.dim, "quotient projection surjective");
            }
        }
        expect(c, count == 1000, "matrix count");
    });

    run_criterion("criterion 2: structural oracles", 30000, [](Criterion& c) {
        for (int n = 1; n <= 4; ++n)
            expect(c, make_kA(n).algebra->dim == n * (n + 1) / 2, "dim kA_" + std::to_string(n));

        auto pa = make_kA(2);
        Catalog analytic = catalog_typeA(2, {}, 2, cfg);
        Catalog brute = catalog_bruteforce(pa.algebra, 2, cfg);
        expect(c, analytic.entries.size() == brute.entries.size(), "type-A catalog sizes");
        for (const auto& e : analytic.entries) {
            Module e2 = e;
            e2.algebra = pa.algebra;
            bool found = false;
            for (const auto& f : brute.entries)
                if (is_isomorphic(e2, f, cfg)) found = true;
            expect(c, found, "brute-force catalog misses an interval module");
        }

        Instance t2 = shipped_instance("tensor-a2", 2, cfg);
        expect(c, t2.cleft.total->mult == pa.algebra->mult, "tensor ring of the arrow bimodule is kA_2 on the nose");
    });

    run_criterion("criterion 3: tau oracle", 10000, [](Criterion& c) {
        auto pa = make_kA(2);
        Catalog cat = catalog_typeA(2, {}, 2, cfg);
        Module s1 = cat.entries[0], s2 = cat.entries[2];
        s1.algebra = pa.algebra;
        s2.algebra = pa.algebra;
        expect(c, is_isomorphic(tau(s1), s2, cfg), "tau(S_1) = S_2 over kA_2");

        Quiver lq;
        lq.vertices = {"1"};
        lq.arrows = {{"x", 0, 0}};
        Relation r;
        r.terms.push_back({1, {0, 0}});
        auto dn = path_algebra(lq, {r}, 2, 2);
        Module k_simple;
        k_simple.algebra = dn.algebra;
        k_simple.dim = 1;
        k_simple.action = {Matrix({{1}}, 2), Matrix({{0}}, 2)};
        expect(c, is_isomorphic(tau(k_simple), k_simple, cfg), "tau(k) = k over the dual numbers");

        for (const auto& name : shipped_instance_names()) {
            Instance inst = shipped_instance(name, 2, cfg);
            for (const Catalog* cat2 : {&inst.cat_r, &inst.cat_t})
                for (const auto& x : cat2->entries)
                    expect(c, (tau(x).dim == 0) == is_projective(x),
                           "tau vanishes exactly on projectives (" + name + ")");
        }
    });

    run_criterion("criterion 4: support tau-tilting enumeration over kA_2", 60000, [](Criterion& c) {
        auto pa = make_kA(2);
        Catalog cat = catalog_by_covers(pa.algebra, 2, cfg);
        auto stt = enumerate_support_tau_tilting(pa.algebra, cat, cfg);
        expect(c, stt.size() == 5, "exactly 5 support tau-tilting modules, got " + std::to_string(stt.size()));

        // independent derivation through exhaustive Gen/D_sigma sweeps
        std::vector<Module> silting;
        for (uint64_t mask = 0; mask < (uint64_t(1) << cat.entries.size()); ++mask) {
            std::vector<Module> parts;
            for (size_t b = 0; b < cat.entries.size(); ++b)
                if (mask & (uint64_t(1) << b)) parts.push_back(cat.entries[b]);
            Module y = direct_sum(pa.algebra, parts).module;
            if (is_silting_module(y, cat, cfg)) silting.push_back(std::move(y));
        }
        expect(c, silting.size() == stt.size(), "silting-predicate set size");
        for (const auto& y : stt) {
            bool found = false;
            for (const auto& z : silting)
                if (is_isomorphic(y, z, cfg)) found = true;
            expect(c, found, "enumerated module missing from the silting set");
        }
    });

    run_criterion("criterion 5: lemma suite on every shipped instance", 300000, [](Criterion& c) {
        for (const auto& name : shipped_instance_names()) {
            Instance inst = shipped_instance(name, 2, cfg);
            auto rep = verify_lemma_suite(inst, cfg);
            expect(c, rep.pass(), "lemma suite on " + name);
            if (!rep.pass())
                for (int i : rep.counterexamples())
                    c.notes << "    " << name << ": " << rep.cases[i].desc << " | " << rep.cases[i].detail << "\n";
        }
    });

    run_criterion("criterion 6: silting lift on the kA_2 trivial extension", 600000, [](Criterion& c) {
        Instance inst = shipped_instance("ka2-trivial", 2, cfg);
        auto rep = verify_silting_lift(inst, cfg);
        expect(c, rep.pass(), "zero counterexamples");
        expect(c, rep.non_vacuous() >= 7, "at least 7 non-vacuous cases, got " + std::to_string(rep.non_vacuous()));
    });

    run_criterion("criterion 7: tilting lift (n = 1) on the tensor-ring instance", 300000, [](Criterion& c) {
        Instance inst = shipped_instance("tensor-a2", 2, cfg);
        auto rep = verify_tilting_lift(inst, 1, cfg);
        expect(c, rep.pass(), "zero counterexamples");
        expect(c, rep.skipped() == 0, "all Tor hypotheses hold over the semisimple base");
        bool positive = false;
        for (const auto& cs : rep.cases)
            if (cs.detail.find("positive tilting lift") != std::string::npos) positive = true;
        expect(c, positive, "at least one positive tilting lift (X = R)");
    });

    run_criterion("criterion 8: descent and stt-lift verifications", 600000, [](Criterion& c) {
        for (const auto& name : shipped_instance_names()) {
            Instance inst = shipped_instance(name, 2, cfg);
            auto rep = verify_silting_descent(inst, cfg);
            expect(c, rep.pass(), "silting descent on " + name);
            expect(c, rep.non_vacuous() >= 1, "non-vacuous descent case on " + name);
            auto rep2 = verify_stt_descent(inst, cfg);
            expect(c, rep2.pass(), "stt descent on " + name);
        }

        Instance ka2 = shipped_instance("ka2-trivial", 2, cfg);
        auto rep = verify_stt_lift(ka2, cfg);
        expect(c, rep.cases.size() == 8, "exhaustive over basic Y plus zero");
        for (const auto& cs : rep.cases)
            expect(c, cs.detail.find("D_sigma bridge agrees") != std::string::npos, "AIR bridge cross-check");
        expect(c, rep.pass(), "stt-lift biconditional as stated");
        if (!rep.pass()) {
            c.notes << "  note: the stated stt biconditional fails at Y = S_2 = P(2): l(Y) is the\n"
                       "  indecomposable projective T e_2 (tau-rigid, full support, one summand),\n"
                       "  while Y is stt over R and Hom(M (x) Y, tau Y) = 0. The tau-rigid half and\n"
                       "  the D_sigma bridge hold in all 8 cases, and the strengthened right side\n"
                       "  F(Y) in Gen(Y) restores the biconditional exactly (see the report detail\n"
                       "  fields). Statement-level counterexample, reported honestly.\n";
            for (int i : rep.counterexamples()) c.notes << "    counterexample: " << rep.cases[i].desc << "\n";
        }
    });

    run_criterion("criterion 9: mutation guards are live", 60000, [](Criterion& c) {
        for (const auto& name : shipped_instance_names()) {
            Instance inst = shipped_instance(name, 2, cfg);

            Algebra corrupted = *inst.cleft.total;
            corrupted.mult[0][0][0] = uint8_t((corrupted.mult[0][0][0] + 1) % corrupted.p);
            expect(c, !validate(corrupted).all_pass(), "structure-constant corruption caught (" + name + ")");

            if (inst.cleft.theta.bimodule.dim > 0) {
                ThetaData bad = inst.cleft.theta;
                bad.table[0][0][0] = uint8_t((bad.table[0][0][0] + 1) % corrupted.p);
                expect(c, !validate_theta(bad).all_pass(), "theta corruption caught (" + name + ")");
            }
        }
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
