#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cleftlab/algebra.hpp"
#include "cleftlab/config.hpp"

namespace cleftlab {

/// Left module given by one action matrix per algebra basis element. Storing
/// the full tuple (not just generators) is redundant but turns every check
/// into a direct matrix identity.
struct Module {
    AlgebraPtr algebra;
    int dim = 0;
    std::vector<Matrix> action;

    static Module zero(AlgebraPtr a);
    static Module regular(const AlgebraPtr& a);

    /// Action of a general algebra element.
    Matrix act(const Vec& x) const;
};

/// Verifies the module law action(e_i)action(e_j) = sum_k c[i][j][k] action(e_k)
/// and action(unit) = id. Fills *why with a witness pair on failure.
bool check_module(const Module& m, std::string* why = nullptr);

struct Morphism {
    Module source;
    Module target;
    Matrix matrix;  // target.dim x source.dim, acting on column vectors
};

/// Builds a Morphism and (by default) verifies the intertwining identity
/// matrix * act_src(e_i) = act_dst(e_i) * matrix for every basis element.
Morphism make_morphism(Module source, Module target, Matrix m, bool check = true);
bool is_module_map(const Morphism& f, std::string* why = nullptr);

Morphism identity_morphism(const Module& x);
Morphism zero_morphism(const Module& x, const Module& y);
Morphism compose(const Morphism& f, const Morphism& g);  // f after g

/// Basis of Hom(x, y), solved from the intertwining conditions against a
/// multiplicative generating set of the algebra (idempotents plus lifts of
/// rad/rad^2).
std::vector<Morphism> hom_basis(const Module& x, const Module& y);
int hom_dim(const Module& x, const Module& y);

/// Multiplicative generating set used by hom_basis and friends.
std::vector<Vec> generating_set(const Algebra& a);

struct SubmoduleResult {
    Module module;
    Morphism inclusion;
};
/// vectors must span an action-stable subspace; throws otherwise.
SubmoduleResult submodule(const Module& x, const Basis& vectors);

struct QuotientModuleResult {
    Module module;
    Morphism projection;
    Matrix section;  // linear section, projection * section = id
};
QuotientModuleResult quotient_module(const Module& x, const Basis& sub);

SubmoduleResult kernel_module(const Morphism& f);
QuotientModuleResult cokernel_module(const Morphism& f);

struct ImageResult {
    Module module;
    Morphism inclusion;  // image -> target
    Morphism onto;       // source -> image; inclusion ∘ onto = f
};
ImageResult image_module(const Morphism& f);

struct DirectSum {
    Module module;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& xs);

/// Indecomposable summands, certified: either a Fitting split succeeds, or an
/// exhaustive idempotent sweep of End(x) proves there is nothing to split.
/// Throws certification_error when the sweep would exceed cfg.budget_sweep.
std::vector<Module> decompose(const Module& x, const Config& cfg);

enum class Ternary { no, yes, unknown };
struct IsoResult {
    Ternary verdict = Ternary::unknown;
    std::optional<Matrix> iso;
};
IsoResult try_isomorphism(const Module& x, const Module& y, const Config& cfg);

/// Throws budget_error when the search is inconclusive (distinct from false).
bool is_isomorphic(const Module& x, const Module& y, const Config& cfg);

/// k-linear dual as a left module over the opposite algebra.
Module dual_module(const Module& x);

/// Contravariant functoriality of the dual: dual(f) : dual(target) -> dual(source).
Morphism dual_morphism(const Morphism& f);

struct TraceResult {
    Basis subspace;  // subspace of l spanned by all images of maps x -> l
    bool is_all = false;
};
/// is_all decides membership of l in Gen(x) for finitely generated l.
TraceResult trace_of_in(const Module& x, const Module& l);

/// rad(A) * x as a subspace of x.
Basis radical_subspace(const Module& x);
/// Smallest submodule containing the given row vectors.
Basis submodule_closure(const Module& x, const Matrix& generators);

struct ExtensionResult {
    Module total;          // underlying space x (+) z, block upper-triangular action
    Morphism incl_sub;     // x -> total
    Morphism proj_quot;    // total -> z
};
/// Builds the middle term of 0 -> x -> E -> z -> 0 from per-basis corner
/// corrections; throws invariant_error naming the failing pair when the
/// cocycle data is incompatible with the algebra relations.
ExtensionResult build_extension(const Module& z, const Module& x, const std::vector<Matrix>& cocycle);

/// Basis of the linear space of valid cocycles for extensions of z by x
/// (includes the coboundaries that give split extensions).
std::vector<std::vector<Matrix>> extension_cocycle_space(const Module& z, const Module& x);

/// Cheap iso-invariants (dim, idempotent ranks, End-dim, radical layers);
/// unequal fingerprints certify non-isomorphism.
std::vector<int> module_fingerprint(const Module& x);

/// Reinterprets x over the quotient algebra; requires the ideal to annihilate x.
Module restrict_to_quotient(const Module& x, const AlgebraQuotient& q);

/// Restriction along a unital algebra morphism given by its matrix
/// (columns = images of the source algebra's basis).
Module restrict_along(const Module& x, const Matrix& algebra_map, const AlgebraPtr& source_algebra);

/// Module over a path algebra from quiver-representation data: one dimension
/// per vertex and one matrix per arrow (target_dim x source_dim). Basis
/// coordinates are grouped by vertex in quiver order.
Module module_from_representation(const PathAlgebra& pa, const std::vector<int>& vertex_dims,
                                  const std::vector<Matrix>& arrow_maps);

/// Simple module at a vertex of a path algebra.
Module simple_module(const PathAlgebra& pa, int vertex);

}  // namespace cleftlab
