#pragma once

#include "cleftlab/homology.hpp"
#include "cleftlab/silting.hpp"

namespace cleftlab {

/// The ring R (+) M with multiplication (r,m)(r',m') = (rr', rm' + mr' +
/// theta(m (x) m')), together with the split injection/projection linking it
/// to R. Basis order is R first, then M.
struct CleftInstance {
    AlgebraPtr base;   // R
    ThetaData theta;   // bimodule M with multiplication data
    AlgebraPtr total;  // T = R (+)_theta M
    Matrix injection;  // dim T x dim R
    Matrix projection; // dim R x dim T

    int m_dim() const { return theta.bimodule.dim; }
    /// theta(m_j (x) -) as a matrix on M.
    Matrix theta_left(int j) const;
};

/// Requires the theta invariants (including a declared nilpotency index, so
/// that rad T = rad R (+) M really is the radical) and certifies the result
/// with the full algebra validator.
CleftInstance theta_extension(const AlgebraPtr& r, const ThetaData& th);

/// theta = 0, nilpotency index 2.
CleftInstance trivial_extension(const AlgebraPtr& r, const Bimodule& m);

/// R (+) N (+) N^2 (+) ... with concatenation as theta; requires N to be
/// m-nilpotent (checked by computing the tensor powers).
CleftInstance tensor_ring(const AlgebraPtr& r, const Bimodule& n, int m);

/// Lower-triangular-style extension of a x b by an (a,b)-bimodule, realized
/// as the trivial extension of the product algebra.
CleftInstance triangular_matrix(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& m);

/// Modules over T seen as pairs (X, alpha) with alpha : M (x) X -> X obeying
/// alpha ∘ (1 (x) alpha) = alpha ∘ (theta (x) 1).
struct PairModule {
    Module x;         // over R
    TensorResult mx;  // M (x) x
    Morphism alpha;   // mx.module -> x
};

/// Checks the pair law exactly (as maps on the plain triple tensor).
bool check_pair(const CleftInstance& c, const PairModule& pm, std::string* why = nullptr);

Module to_total_module(const CleftInstance& c, const PairModule& pm);
/// Restricts along R -> T and extracts alpha from the M-part of the action;
/// throws invariant_error when the input is not a T-module.
PairModule from_total_module(const CleftInstance& c, const Module& t_module);

/// e(X, alpha) = X with its alpha, read off a T-module.
inline PairModule functor_e(const CleftInstance& c, const Module& t_module) {
    return from_total_module(c, t_module);
}

/// l(Y) = (Y (+) M(x)Y, [[0,0],[1, theta(x)1]]).
PairModule functor_l(const CleftInstance& c, const Module& y);
Module functor_l_total(const CleftInstance& c, const Module& y);
/// l on morphisms, as a map between the total modules.
Morphism functor_l_map(const CleftInstance& c, const Morphism& f);

PairModule functor_i(const CleftInstance& c, const Module& y);
Module functor_i_total(const CleftInstance& c, const Module& y);

/// q(X, alpha) = Coker alpha, with the quotient projection X -> q.
struct QData {
    PairModule pm;
    Module module;       // over R
    Morphism projection; // pm.x -> module
    Matrix section;
};
QData functor_q(const CleftInstance& c, const PairModule& pm);
QData functor_q_total(const CleftInstance& c, const Module& t_module);
/// Induced map on cokernels for a T-morphism.
Morphism q_map(const CleftInstance& c, const QData& src, const QData& dst, const Morphism& f_total);

/// F(Y) = M (x) Y.
Module functor_F(const CleftInstance& c, const Module& y);
TensorResult functor_F_data(const CleftInstance& c, const Module& y);

/// The T-morphism l(Y) -> Z corresponding to an R-morphism Y -> e(Z) under
/// the adjunction (l, e).
Morphism adjunction_transport(const CleftInstance& c, const Morphism& g_to_eZ, const Module& z_total);

/// Counit le(Z) -> Z, (x, m (x) x') -> x + alpha(m (x) x'); always epic, its
/// kernel realizes the endofunctor G.
Morphism counit_mu(const CleftInstance& c, const Module& z_total);

/// Unit-side identification q(i(Y)) -> Y; an isomorphism.
Morphism unit_eta(const CleftInstance& c, const Module& y);

/// Applies l to a projective presentation over R. The resulting terms are
/// certified projective over T and the cokernel is identified with l of the
/// presented module. Minimality of the result is re-checked, not assumed.
Presentation lift_presentation(const CleftInstance& c, const Presentation& pres);

/// Presentation of an arbitrary T-module by l-images of projective R-modules
/// (every T-module has one): transports the minimal T-presentation through
/// explicit isomorphisms l(R e_i) = T e_i.
struct LiftedPresentation {
    ProjectiveModule p1_R, p0_R;  // over R
    Module lt1, lt0;              // total modules of l(p1_R), l(p0_R)
    Presentation delta;           // over T, presents the given module
};
LiftedPresentation l_image_presentation(const CleftInstance& c, const Module& a_total);

/// q applied to an l-image presentation: a presentation of q(A) over R.
Presentation q_of_lifted(const CleftInstance& c, const LiftedPresentation& lp, const QData& qa);

/// The same construction on the opposite side: theta-extension of R^op by the
/// swapped bimodule. Structurally equal to opposite(c.total); asserted.
CleftInstance opposite_instance(const CleftInstance& c);

}  // namespace cleftlab
