#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cleftlab/matrix.hpp"

namespace cleftlab {

struct Arrow {
    std::string name;
    int source = 0;  // vertex indices
    int target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    void check() const;  // distinct labels, endpoints exist
};

/// One admissible-ideal generator: a parallel linear combination of paths of
/// length >= 2. Paths are arrow-index sequences in traversal order.
struct Relation {
    struct Term {
        uint8_t coeff = 1;
        std::vector<int> arrows;
    };
    std::vector<Term> terms;
};

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional split basic algebra presented by structure constants,
/// carrying a complete set of primitive orthogonal idempotents and a radical
/// basis as certified data (constructors know them structurally; validate()
/// re-checks everything).
struct Algebra {
    unsigned p = 2;
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Vec>> mult;  // mult[i][j] = e_i * e_j in basis coordinates
    Vec unit;
    std::vector<Vec> idempotents;
    Basis radical;

    // caches, filled by finish_algebra
    std::vector<Matrix> left_mult;   // column j of left_mult[i] = e_i * e_j
    std::vector<Matrix> right_mult;  // column j of right_mult[i] = e_j * e_i

    Vec multiply(const Vec& x, const Vec& y) const;
    Matrix left_action_of(const Vec& x) const;   // v -> x * v
    Matrix right_action_of(const Vec& x) const;  // v -> v * x
    int num_idempotents() const { return int(idempotents.size()); }
};

/// Builds the multiplication caches and returns the immutable handle every
/// other module works with.
AlgebraPtr finish_algebra(Algebra a);

/// Structural identity (same constants, unit, idempotents, radical, field).
/// Pointer equality short-circuits.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // witness on failure
};
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    std::string to_string() const;
};

/// Runs every Algebra invariant; never throws, failures carry witnesses.
ValidationReport validate(const Algebra& a);

/// The ideal closure of gens reached the unit; the quotient would be the zero
/// ring. Raised distinctly so callers can tell this apart from bad data.
struct whole_algebra_error : invariant_error {
    explicit whole_algebra_error(const std::string& w) : invariant_error(w) {}
};

/// Path algebra of q modulo (relations) + (all paths of length >= length_bound).
/// Products compose functionally: a * b means "b then a", so a vertex v's
/// indecomposable projective A e_v consists of the paths starting at v.
/// Remembers which basis elements are vertices/arrows for quiver-shaped input.
struct PathAlgebra {
    AlgebraPtr algebra;
    Quiver quiver;
    std::vector<int> vertex_basis_index;            // per vertex
    std::vector<int> arrow_basis_index;             // per arrow
    std::vector<std::vector<int>> basis_path;       // arrow sequence per basis element
    std::vector<int> basis_path_source;             // source vertex per basis element
};

/// Throws invariant_error with a witness path if the arrow ideal is not killed
/// by the relations at the given length bound.
PathAlgebra path_algebra(const Quiver& q, const std::vector<Relation>& rels, int length_bound, unsigned p);

struct AlgebraQuotient {
    AlgebraPtr algebra;
    Matrix projection;            // new dim x old dim
    Matrix section;               // old dim x new dim, projection * section = id
    std::vector<int> kept_idempotents;  // indices of idempotents with nonzero image
};

/// Quotient by the two-sided ideal generated by gens (computed by linear
/// saturation). Throws whole_algebra_error when the closure contains the unit.
AlgebraQuotient quotient_by_ideal(const AlgebraPtr& a, const std::vector<Vec>& gens);

AlgebraPtr opposite(const AlgebraPtr& a);

/// Direct product a x b, basis of a first.
struct ProductAlgebra {
    AlgebraPtr algebra;
    Matrix embed_left;   // dim(a*b) x dim(a)
    Matrix embed_right;  // dim(a*b) x dim(b)
};
ProductAlgebra product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Span of the two-sided ideal generated by gens (saturation, no quotient).
Basis ideal_closure(const Algebra& a, const std::vector<Vec>& gens);

}  // namespace cleftlab
