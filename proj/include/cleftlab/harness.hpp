#pragma once

#include <functional>
#include <optional>

#include "cleftlab/cleft.hpp"

namespace cleftlab {

struct CaseResult {
    int index = 0;
    std::string desc;
    bool skipped = false;
    std::string skip_reason;
    std::optional<bool> left, right;  // the two sides, always computed independently
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::string theorem;   // check id as exposed by the CLI
    std::string instance;
    std::string preamble;  // hypotheses that hold structurally and are not re-checked per case
    unsigned field = 2;
    uint64_t seed = 0;
    int catalog_bound_r = 0;
    int catalog_bound_t = 0;
    std::string catalog_provenance_r, catalog_provenance_t;
    std::vector<CaseResult> cases;
    long long runtime_ms = 0;  // shown in the human summary; kept out of report files

    int checked() const;
    int skipped() const;
    int non_vacuous() const;  // checked cases whose hypothesis side was live
    std::vector<int> counterexamples() const;
    bool pass() const;
    std::string summary_line() const;
};

/// Interval modules of an A_n quiver; orientation[i] says whether the arrow
/// between i and i+1 points forward. Exactly n(n+1)/2 entries.
Catalog catalog_typeA(int n, const std::vector<bool>& orientation, unsigned p, const Config& cfg);

/// Exhaustive sweep over all action-matrix tuples up to the dimension bound,
/// filtered by the module law; throws budget_error when the tuple space
/// exceeds cfg.budget_enumeration.
Catalog catalog_bruteforce(const AlgebraPtr& a, int total_dim_bound, const Config& cfg);

/// Complete catalog via projective covers: every module of dim <= bound is a
/// quotient of a projective by a radical submodule, so enumerating stable
/// subspaces of rad P over all small multiplicity vectors finds every
/// indecomposable. Much smaller search space than the tuple sweep.
Catalog catalog_by_covers(const AlgebraPtr& a, int total_dim_bound, const Config& cfg);

/// All basic sums of distinct catalog entries passing is_support_tau_tilting,
/// in deterministic bitmask order. Includes the zero module.
std::vector<Module> enumerate_support_tau_tilting(const AlgebraPtr& a, const Catalog& cat, const Config& cfg);

/// A named cleft-extension instance bundled with certified catalogs on both
/// sides (and the tensor powers when built as a tensor ring).
struct Instance {
    std::string name;
    std::string description;
    CleftInstance cleft;
    Catalog cat_r, cat_t;
    std::vector<Bimodule> tensor_powers;  // N, N^2, ... when applicable
};

std::vector<std::string> shipped_instance_names();
Instance shipped_instance(const std::string& name, unsigned p, const Config& cfg);
Instance instance_from_cleft(std::string name, CleftInstance c, const Config& cfg, int bound_r, int bound_t);

/// Lifting of (partial) silting along l: for every basic Y from the R-side
/// catalog, both biconditionals, sides computed by independent code paths.
VerificationReport verify_silting_lift(const Instance& inst, const Config& cfg);

/// Lifting of (partial) n-tilting along l under the Tor-vanishing hypothesis;
/// hypothesis failures are reported as skipped cases.
VerificationReport verify_tilting_lift(const Instance& inst, int n, const Config& cfg);

/// Descent along q: silting / partial silting / tau-rigid / support
/// tau-tilting transfer from T-modules to R-modules; one-directional.
VerificationReport verify_silting_descent(const Instance& inst, const Config& cfg);

/// The same descent restricted to the tau-side statements.
VerificationReport verify_stt_descent(const Instance& inst, const Config& cfg);

/// Lifting of (tau-rigid) support tau-tilting along l, with the
/// Hom(M (x) Y, tau Y) = 0 criterion and its D_sigma bridge cross-check.
VerificationReport verify_stt_lift(const Instance& inst, const Config& cfg);

/// Tensor-ring refinement: per-degree conditions on N^i (x) Y.
VerificationReport verify_tensor_transfer(const Instance& inst, int n, const Config& cfg);

/// The supporting identities: adjunction dimensions, projectives as l-images,
/// the D_sigma transport biconditionals, derived-functor agreement, the split
/// of e after l, right-exactness bookkeeping, and the cosilting transfer on
/// duals.
VerificationReport verify_lemma_suite(const Instance& inst, const Config& cfg);

/// Case-parallel map; thread count capped by the CLEFTLAB_THREADS environment
/// variable. Results are merged by index, so reports stay deterministic.
void parallel_for_cases(int n, const std::function<void(int)>& fn);

}  // namespace cleftlab
