#include "cleftlab/matrix.hpp"

#include <algorithm>

#include "cleftlab/errors.hpp"

namespace cleftlab {

Matrix::Matrix(int rows, int cols, unsigned p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix dimension");
    if (!is_supported_prime(p)) throw invariant_error("unsupported field F_" + std::to_string(p));
    e_.assign(size_t(rows) * cols, 0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> init, unsigned p)
    : Matrix(int(init.size()), init.size() ? int(init.begin()->size()) : 0, p) {
    int i = 0;
    for (const auto& r : init) {
        if (int(r.size()) != cols_) throw dimension_mismatch("ragged initializer");
        int j = 0;
        for (int v : r) set(i, j++, v);
        ++i;
    }
}

Matrix Matrix::identity(int n, unsigned p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::random(int rows, int cols, unsigned p, std::mt19937_64& rng) {
    Matrix m(rows, cols, p);
    std::uniform_int_distribution<int> d(0, int(p) - 1);
    for (auto& x : m.e_) x = uint8_t(d(rng));
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int dim, unsigned p) {
    Matrix m(dim, int(cols.size()), p);
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != dim) throw dimension_mismatch("column length mismatch");
        for (int i = 0; i < dim; ++i) m.e_[size_t(i) * m.cols_ + j] = uint8_t(cols[j][i] % p);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int dim, unsigned p) {
    Matrix m(int(rows.size()), dim, p);
    for (int i = 0; i < int(rows.size()); ++i) {
        if (int(rows[i].size()) != dim) throw dimension_mismatch("row length mismatch");
        for (int j = 0; j < dim; ++j) m.e_[size_t(i) * dim + j] = uint8_t(rows[i][j] % p);
    }
    return m;
}

Vec Matrix::row(int i) const { return Vec(e_.begin() + size_t(i) * cols_, e_.begin() + size_t(i + 1) * cols_); }

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.prime() != b.prime())
        throw dimension_mismatch("matrix shape/field mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_shape(*this, o);
    Matrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = fp_add(e_[k], o.e_[k], p_);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_shape(*this, o);
    Matrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = fp_sub(e_[k], o.e_[k], p_);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw dimension_mismatch("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint8_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols_; ++j) {
                uint8_t& t = r.e_[size_t(i) * r.cols_ + j];
                t = uint8_t((t + a * o.at(k, j)) % p_);
            }
        }
    return r;
}

Matrix Matrix::scaled(uint8_t c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = fp_mul(x, uint8_t(c % p_), p_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[size_t(j) * rows_ + i] = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](uint8_t x) { return x == 0; });
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_, p_); }

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw dimension_mismatch("apply: vector length mismatch");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        unsigned acc = 0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        r[i] = uint8_t(acc % p_);
    }
    return r;
}

Matrix Matrix::pow(unsigned long long k) const {
    if (rows_ != cols_) throw dimension_mismatch("pow of non-square matrix");
    Matrix acc = identity(rows_, p_);
    Matrix base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_ || p_ != o.p_) throw dimension_mismatch("hstack shape mismatch");
    Matrix r(rows_, cols_ + o.cols_, p_);
    r.set_block(0, 0, *this);
    r.set_block(0, cols_, o);
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_ || p_ != o.p_) throw dimension_mismatch("vstack shape mismatch");
    Matrix r(rows_ + o.rows_, cols_, p_);
    r.set_block(0, 0, *this);
    r.set_block(rows_, 0, o);
    return r;
}

void Matrix::set_block(int i, int j, const Matrix& b) {
    if (i + b.rows_ > rows_ || j + b.cols_ > cols_) throw dimension_mismatch("set_block out of range");
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c) e_[size_t(i + r) * cols_ + (j + c)] = b.at(r, c);
}

Matrix Matrix::block(int i, int j, int rows, int cols) const {
    if (i + rows > rows_ || j + cols > cols_) throw dimension_mismatch("block out of range");
    Matrix r(rows, cols, p_);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) r.e_[size_t(a) * cols + b] = at(i + a, j + b);
    return r;
}

Basis::Basis(Matrix m) : vectors(std::move(m)) {
    if (rank(vectors) != vectors.rows()) throw invariant_error("basis vectors not linearly independent");
}

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
    Matrix a = m;
    const unsigned p = a.prime();
    int r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) {
                int t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        uint8_t inv = fp_inv(a.at(r, c), p);
        for (int j = 0; j < a.cols(); ++j) a.set(r, j, fp_mul(a.at(r, j), inv, p));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            uint8_t f = a.at(i, c);
            if (!f) continue;
            for (int j = 0; j < a.cols(); ++j) a.set(i, j, fp_sub(a.at(i, j), fp_mul(f, a.at(r, j), p), p));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return a;
}

int rank(const Matrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return int(piv.size());
}

Basis kernel(const Matrix& m) {
    const unsigned p = m.prime();
    std::vector<int> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), 0);
        v[c] = 1;
        // back-substitute: pivot row i has its pivot at piv[i]
        for (int i = 0; i < int(piv.size()); ++i) v[piv[i]] = fp_neg(r.at(i, c), p);
        rows.push_back(std::move(v));
    }
    return Basis(Matrix::from_rows(rows, m.cols(), p));
}

Basis row_space(const Matrix& m) {
    std::vector<int> piv;
    Matrix r = rref(m, &piv);
    return Basis(r.block(0, 0, int(piv.size()), m.cols()));
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (int(b.size()) != a.rows()) throw dimension_mismatch("solve: rhs length mismatch");
    Matrix aug = a.hstack(Matrix::from_columns({b}, a.rows(), a.prime()));
    std::vector<int> piv;
    Matrix r = rref(aug, &piv);
    Vec x(a.cols(), 0);
    for (int i = 0; i < int(piv.size()); ++i) {
        if (piv[i] == a.cols()) return std::nullopt;  // pivot in the rhs column
        x[piv[i]] = r.at(i, a.cols());
    }
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("solve_matrix: row mismatch");
    Matrix x(a.cols(), b.cols(), a.prime());
    for (int j = 0; j < b.cols(); ++j) {
        auto xj = solve(a, b.col(j));
        if (!xj) return std::nullopt;
        for (int i = 0; i < a.cols(); ++i) x.set(i, j, (*xj)[i]);
    }
    return x;
}

QuotientMaps quotient(int ambient_dim, const Basis& sub) {
    if (sub.ambient() != ambient_dim) throw dimension_mismatch("quotient: ambient mismatch");
    const unsigned p = sub.vectors.prime();
    std::vector<int> piv;
    Matrix r = rref(sub.vectors, &piv);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int c : piv) is_pivot[c] = true;

    // Quotient coordinates = non-pivot coordinates after reduction by the
    // subspace; the section embeds them back as plain coordinate vectors.
    std::vector<int> free_cols;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    int q = int(free_cols.size());

    QuotientMaps out;
    out.dim = q;
    out.projection = Matrix(q, ambient_dim, p);
    for (int k = 0; k < q; ++k) {
        out.projection.set(k, free_cols[k], 1);
        // reducing e_{piv[i]} introduces -r(i, free) into the free coordinates
        for (int i = 0; i < int(piv.size()); ++i)
            out.projection.set(k, piv[i], fp_neg(r.at(i, free_cols[k]), p));
    }
    out.section = Matrix(ambient_dim, q, p);
    for (int k = 0; k < q; ++k) out.section.set(free_cols[k], k, 1);
    return out;
}

bool in_span(const Basis& basis, const Vec& v) {
    return coordinates_in(basis, v).has_value();
}

std::optional<Vec> coordinates_in(const Basis& basis, const Vec& v) {
    return solve(basis.inclusion(), v);
}

Basis extend_basis(const Basis& basis, const Matrix& candidates) {
    Matrix cur = basis.vectors;
    for (int i = 0; i < candidates.rows(); ++i) {
        Matrix cand = cur.vstack(Matrix::from_rows({candidates.row(i)}, candidates.cols(), candidates.prime()));
        if (rank(cand) > cur.rows()) cur = row_space(cand).vectors;
    }
    return Basis(cur);
}

Vec vec_add(const Vec& a, const Vec& b, unsigned p) {
    if (a.size() != b.size()) throw dimension_mismatch("vec_add length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, unsigned p) {
    if (a.size() != b.size()) throw dimension_mismatch("vec_sub length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(a[i], b[i], p);
    return r;
}

Vec vec_scale(uint8_t c, const Vec& a, unsigned p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(uint8_t(c % p), a[i], p);
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](uint8_t x) { return x == 0; });
}

}  // namespace cleftlab
