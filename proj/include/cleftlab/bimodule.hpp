#pragma once

#include <optional>

#include "cleftlab/module.hpp"

namespace cleftlab {

/// Two-sided module. Right action matrices satisfy the right module law
/// R(b b') = R(b') R(b) (a left module over the opposite algebra), and left
/// and right actions commute.
struct Bimodule {
    AlgebraPtr left_algebra;
    AlgebraPtr right_algebra;
    int dim = 0;
    std::vector<Matrix> left_action;
    std::vector<Matrix> right_action;

    Matrix left_act(const Vec& x) const;
    Matrix right_act(const Vec& x) const;

    static Bimodule zero(AlgebraPtr l, AlgebraPtr r);
};

bool check_bimodule(const Bimodule& m, std::string* why = nullptr);

/// A as an (A,A)-bimodule.
Bimodule regular_bimodule(const AlgebraPtr& a);

/// The k-dual D(A) as an (A,A)-bimodule: (a f b)(c) = f(b c a).
Bimodule dual_regular_bimodule(const AlgebraPtr& a);

/// Left module underlying m (forget the right action).
Module underlying_left_module(const Bimodule& m);

/// Exchange the two sides; the result is a bimodule over the opposite
/// algebras. Feeds the duality route to the coextension-side statements.
Bimodule swap_sides(const Bimodule& m);

Bimodule direct_sum_bimodules(const AlgebraPtr& l, const AlgebraPtr& r, const std::vector<Bimodule>& parts);

/// M (x)_R Y with the balancing relations m*r (x) y - m (x) r*y divided out;
/// a left module over M's left algebra. The projection/section pair links the
/// plain tensor coordinates (index i*dim(Y)+j) to the quotient.
struct TensorResult {
    Module module;
    Matrix projection;
    Matrix section;
};
TensorResult tensor(const Bimodule& m, const Module& y);

/// Functoriality: M (x) f for f : Y -> Y', between precomputed tensors.
Morphism tensor_map(const Bimodule& m, const TensorResult& ty, const TensorResult& ty2, const Morphism& f);

/// M (x)_B N for M over (A,B) and N over (B,C), as an (A,C)-bimodule.
struct BimoduleTensorResult {
    Bimodule module;
    Matrix projection;
    Matrix section;
};
BimoduleTensorResult tensor_bimodules(const Bimodule& m, const Bimodule& n);

/// Associative multiplication data on a bimodule: table[i][j] = theta(m_i (x) m_j)
/// in bimodule coordinates, plus the nilpotency index when the span of iterated
/// products is known to vanish.
struct ThetaData {
    Bimodule bimodule;
    std::vector<std::vector<Vec>> table;
    std::optional<int> nilpotency;

    Vec theta_of(const Vec& u, const Vec& v) const;  // bilinear extension of the table
};

ThetaData zero_theta(Bimodule m, int nilpotency_index = 2);

/// Checks bilinearity over the outer actions, R-balancedness, associativity,
/// and the declared nilpotency index. Never throws.
ValidationReport validate_theta(const ThetaData& t);

/// theta with the two tensor slots exchanged, over the swapped bimodule.
ThetaData swap_theta(const ThetaData& t);

}  // namespace cleftlab
