#pragma once

#include "cleftlab/homology.hpp"

namespace cleftlab {

/// Certified finite list of pairwise non-isomorphic indecomposables standing
/// in for the module category up to a dimension bound. All "for all modules"
/// quantifiers in the predicates below run over a Catalog, and results are
/// only as complete as the catalog is; reports carry the bound.
struct Catalog {
    enum class Provenance { analytic, brute_force };

    AlgebraPtr algebra;
    std::vector<Module> entries;
    int complete_up_to = 0;
    Provenance provenance = Provenance::brute_force;
};

/// Validates the catalog invariants (entries indecomposable, pairwise
/// non-isomorphic) before wrapping them.
Catalog make_catalog(const AlgebraPtr& a, std::vector<Module> entries, int complete_up_to,
                     Catalog::Provenance provenance, const Config& cfg);

/// Entries dualized over the opposite algebra; catalogs of left modules of
/// the opposite algebra are exactly duals of right-module catalogs.
Catalog dual_catalog(const Catalog& cat, const Config& cfg);

/// L lies in D_sigma: Hom(P0, L) -> Hom(P1, L) is surjective.
bool in_d_sigma(const Morphism& sigma, const Module& l);

/// L is a quotient of a finite direct sum of copies of x.
bool in_gen(const Module& x, const Module& l);

/// Dual-side memberships, used directly by the cosilting cross-checks.
bool in_c_xi(const Morphism& xi, const Module& l);  // Hom(L, E0) -> Hom(L, E1) epi
bool in_cogen(const Module& x, const Module& l);    // L embeds into a finite power of x

bool is_tau_rigid(const Module& y);

struct SupportInfo {
    std::vector<int> vertices;   // idempotent indices acting nonzero
    Vec complement_idempotent;   // sum of the others; its ideal annihilates y
};
SupportInfo support_vertices(const Module& y);

/// tau-rigid over the support quotient with as many non-isomorphic
/// indecomposable summands as that quotient has simples.
bool is_support_tau_tilting(const Module& y, const Config& cfg);

/// Gen(y) = D_sigma, both sides decided over the catalog.
bool is_silting(const Module& y, const Presentation& pres, const Catalog& cat);

/// y in D_sigma together with catalog-level torsion-class evidence (closure
/// of D_sigma under cokernels of catalog maps and extension middle terms).
/// When pres is minimal the verdict is cross-checked against tau-rigidity;
/// disagreement is an implementation bug and throws logic_error.
bool is_partial_silting(const Module& y, const Presentation& pres, const Catalog& cat, const Config& cfg);

/// Minimal presentation padded by P(i) -> 0 for every vertex outside the
/// support of y; the presentation the support tau-tilting correspondence
/// attaches to y.
Presentation support_augmented_presentation(const Module& y);

/// Silting with respect to some presentation (the augmented one); the
/// module-level property matching support tau-tilting.
bool is_silting_module(const Module& y, const Catalog& cat, const Config& cfg);

/// pd <= n, self-orthogonal, and every indecomposable projective has an
/// add(x)-coresolution of length <= n built from universal approximations.
bool is_n_tilting(const Module& x, int n, const Config& cfg);

/// Cogen(x) = C_xi for xi the dual of the minimal presentation of dual(x);
/// computed as is_silting of the dual over the opposite algebra.
bool is_cosilting(const Module& x, const Catalog& cat, const Config& cfg);

}  // namespace cleftlab
