#pragma once

#include <optional>

#include "cleftlab/bimodule.hpp"
#include "cleftlab/module.hpp"

namespace cleftlab {

/// A e_i in fixed coordinates, with the generator e_i located.
struct ProjectiveData {
    Module module;
    Vec generator;     // coordinates of e_i in the module basis
    Matrix inclusion;  // into the regular module
};

/// One module per idempotent, with the left multiplication action.
std::vector<ProjectiveData> indecomposable_projectives(const AlgebraPtr& a);

/// dual(e_i A): the indecomposable injective at vertex i.
Module indecomposable_injective(const AlgebraPtr& a, int vertex);

/// Explicit direct sum of copies of the A e_i with the block layout kept;
/// the layout is what makes the Nakayama functor computable on maps.
struct ProjectiveModule {
    Module module;
    std::vector<int> vertex;  // block s is a copy of A e_{vertex[s]}
    std::vector<int> offset;  // start coordinate of block s
};
ProjectiveModule projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices);

struct ProjectiveCover {
    ProjectiveModule p;
    Morphism epi;  // p -> x, kernel inside rad p
};
ProjectiveCover projective_cover(const Module& x);

/// sigma : P1 -> P0 with Coker(sigma) identified with x. Canonical block
/// layouts travel along when the presentation was built by covers.
struct Presentation {
    Morphism sigma;
    Module x;
    Morphism coker_iso;  // cokernel_module(sigma).module -> x
    bool minimal = false;
    std::optional<ProjectiveModule> p1_data, p0_data;
};

Presentation minimal_presentation(const Module& x);

/// Minimal resolution ... -> P_1 -> P_0 -> x -> 0 truncated at degree n.
struct Resolution {
    std::vector<ProjectiveModule> terms;  // degree 0 .. len
    std::vector<Morphism> diff;           // diff[j] : terms[j] -> terms[j-1], j >= 1
    Morphism augmentation;                // terms[0] -> x
    Module x;
    bool terminated = false;  // the next kernel vanished
};
Resolution resolution(const Module& x, int n);

/// dim Ext^j(x, y), from the Hom complex of the minimal resolution.
int ext_dim(const Module& x, const Module& y, int j);

/// dim Tor_j(m, y), from tensoring the minimal resolution of y.
int tor_dim(const Bimodule& m, const Module& y, int j);

/// Projective dimension if it is <= bound, nullopt otherwise ("exceeds
/// bound", which is not a claim of infinity).
std::optional<int> pd_upto(const Module& x, int bound);

bool is_projective(const Module& x);

/// nu(A e_i) = dual(e_i A); functorial on maps between labelled projectives
/// via the dual of left multiplication on the right ideals.
Module nakayama(const AlgebraPtr& a, const ProjectiveModule& p);
Morphism nakayama_map(const AlgebraPtr& a, const ProjectiveModule& src, const ProjectiveModule& dst,
                      const Morphism& f);

/// Auslander-Reiten translate: kernel of nu applied to the minimal
/// presentation. Vanishes exactly on projectives.
Module tau(const Module& x);

}  // namespace cleftlab
