#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "cleftlab/fp.hpp"

namespace cleftlab {

/// Coordinate vector over F_p; the modulus is supplied by context.
using Vec = std::vector<uint8_t>;

/// Dense row-major matrix over F_p. Instances here are tiny (dims well under
/// 200), so there is no sparse path and every operation is exact.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), p_(2) {}
    Matrix(int rows, int cols, unsigned p);
    Matrix(std::initializer_list<std::initializer_list<int>> init, unsigned p);

    static Matrix identity(int n, unsigned p);
    static Matrix zero(int rows, int cols, unsigned p) { return Matrix(rows, cols, p); }
    static Matrix random(int rows, int cols, unsigned p, std::mt19937_64& rng);
    static Matrix from_columns(const std::vector<Vec>& cols, int dim, unsigned p);
    static Matrix from_rows(const std::vector<Vec>& rows, int dim, unsigned p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    unsigned prime() const { return p_; }

    uint8_t at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    void set(int i, int j, int v) {
        int r = v % int(p_);
        e_[size_t(i) * cols_ + j] = uint8_t(r < 0 ? r + int(p_) : r);
    }

    Vec row(int i) const;
    Vec col(int j) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(uint8_t c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const = default;

    bool is_zero() const;
    bool is_identity() const;

    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix pow(unsigned long long k) const;

    /// Stack o to the right / below; dimensions must agree.
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    /// Write block b with top-left corner at (i, j).
    void set_block(int i, int j, const Matrix& b);
    Matrix block(int i, int j, int rows, int cols) const;

    const std::vector<uint8_t>& data() const { return e_; }

  private:
    int rows_, cols_;
    unsigned p_;
    std::vector<uint8_t> e_;
};

/// A list of linearly independent vectors inside F_p^ambient, stored as the
/// rows of a matrix. Constructors verify independence.
struct Basis {
    Matrix vectors;  // count x ambient

    Basis() = default;
    explicit Basis(Matrix m);
    static Basis empty(int ambient, unsigned p) { return Basis(Matrix(0, ambient, p)); }

    int count() const { return vectors.rows(); }
    int ambient() const { return vectors.cols(); }

    /// Inclusion map F_p^count -> F_p^ambient (vectors as columns).
    Matrix inclusion() const { return vectors.transpose(); }
};

int rank(const Matrix& m);

/// Reduced row echelon form. Pivoting is deterministic (topmost row, leftmost
/// nonzero column), so every derived basis is reproducible.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

/// Basis of the right null space { v : m v = 0 }.
Basis kernel(const Matrix& m);

/// Row-space basis in RREF.
Basis row_space(const Matrix& m);

/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Columnwise solve of a X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// Surjection F_p^ambient -> F_p^(ambient - |sub|) whose kernel is exactly
/// span(sub), together with a section embedding the quotient back (projection
/// * section = identity).
struct QuotientMaps {
    Matrix projection;
    Matrix section;
    int dim = 0;
};
QuotientMaps quotient(int ambient_dim, const Basis& sub);

bool in_span(const Basis& basis, const Vec& v);
std::optional<Vec> coordinates_in(const Basis& basis, const Vec& v);

/// Grow `basis` by those rows of `candidates` that enlarge the span.
Basis extend_basis(const Basis& basis, const Matrix& candidates);

Vec vec_add(const Vec& a, const Vec& b, unsigned p);
Vec vec_sub(const Vec& a, const Vec& b, unsigned p);
Vec vec_scale(uint8_t c, const Vec& a, unsigned p);
bool vec_is_zero(const Vec& a);

}  // namespace cleftlab
