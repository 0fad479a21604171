#pragma once

#include <cstdint>

namespace cleftlab {

/// Run-wide knobs. Every randomized routine takes its seed from here; there is
/// no ambient randomness anywhere in the library.
struct Config {
    uint64_t seed = 1;

    /// Exhaustive sweeps over F_p-combination spaces (isomorphism search,
    /// idempotent search in endomorphism rings) run only when the space has at
    /// most this many elements; beyond it the caller gets budget_error.
    uint64_t budget_sweep = 1u << 20;

    /// Random Fitting attempts per module in decompose() before falling back
    /// to the exhaustive idempotent sweep.
    int fitting_tries = 64;

    /// Largest tuple space catalog_bruteforce() is willing to enumerate.
    uint64_t budget_enumeration = 1u << 22;

    /// Bound used wherever a statement quantifies over all homological degrees.
    int pd_bound = 12;

    /// Total-dimension bound for brute-force catalogs.
    int catalog_bound = 3;
};

}  // namespace cleftlab
