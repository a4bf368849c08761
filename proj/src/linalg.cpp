#include "evo/linalg.hpp"

#include <sstream>

namespace evo {

Vector zero_vector(std::size_t n, const FieldDescriptor& field) {
    return Vector(n, FieldElement::zero(field));
}

Vector unit_vector(std::size_t n, std::size_t k, const FieldDescriptor& field) {
    Vector v = zero_vector(n, field);
    v.at(k) = FieldElement::one(field);
    return v;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) raise(ErrorCode::ShapeError, "vector lengths differ");
    Vector out = a;
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
    return out;
}

Vector scale(const FieldElement& c, const Vector& v) {
    Vector out = v;
    for (auto& x : out) x *= c;
    return out;
}

Vector axpy(const Vector& a, const FieldElement& c, const Vector& b) {
    if (a.size() != b.size()) raise(ErrorCode::ShapeError, "vector lengths differ");
    Vector out = a;
    if (c.is_zero()) return out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!b[k].is_zero()) out[k] += c * b[k];
    }
    return out;
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0) out += ",";
        out += v[k].to_string();
    }
    return out + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldDescriptor& field) {
    Matrix m(n, n, field);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = FieldElement::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, const FieldDescriptor& field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, const FieldDescriptor& field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) raise(ErrorCode::ShapeError, "ragged integer matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = FieldElement::from_int(field, rows[r][c]);
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    if (r >= rows_) raise(ErrorCode::ShapeError, "row index out of range");
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
    if (c >= cols_) raise(ErrorCode::ShapeError, "column index out of range");
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (r >= rows_ || v.size() != cols_) raise(ErrorCode::ShapeError, "row does not fit the matrix");
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!(v[c].field() == field_)) raise(ErrorCode::MixedFields, "row entry over a different field");
        (*this)(r, c) = v[c];
    }
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) raise(ErrorCode::ShapeError, "inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix aug(n, 2 * n, field_);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = FieldElement::one(field_);
    }
    RrefResult red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) raise(ErrorCode::Singular, "matrix is singular");
    Matrix inv(n, n, field_);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
    }
    return inv;
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank(*this) == rows_; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) raise(ErrorCode::ShapeError, "matrix product shape mismatch");
    if (!(a.field_ == b.field_)) raise(ErrorCode::MixedFields, "matrix product over different fields");
    Matrix out(a.rows_, b.cols_, a.field_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols_ != v.size()) raise(ErrorCode::ShapeError, "matrix-vector shape mismatch");
    Vector out = zero_vector(m.rows_, m.field_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) out << ' ';
            out << (*this)(r, c).to_string();
        }
        out << '\n';
    }
    return out.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.matrix;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < a.rows() && a(r, c).is_zero()) ++r;
        if (r == a.rows()) continue;
        if (r != pivot_row) {
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(pivot_row, k));
        }
        FieldElement inv = a(pivot_row, c).inverse();
        for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) *= inv;
        for (std::size_t rr = 0; rr < a.rows(); ++rr) {
            if (rr == pivot_row || a(rr, c).is_zero()) continue;
            FieldElement factor = a(rr, c);
            for (std::size_t k = c; k < a.cols(); ++k) {
                if (!a(pivot_row, k).is_zero()) a(rr, k) -= factor * a(pivot_row, k);
            }
        }
        res.pivots.push_back(c);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::zero(std::size_t ambient, const FieldDescriptor& field) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient, field);
    return s;
}

Subspace Subspace::full(std::size_t ambient, const FieldDescriptor& field) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient, field);
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient, const FieldDescriptor& field) {
    for (const auto& v : vectors) {
        if (v.size() != ambient) raise(ErrorCode::AmbientMismatch, "spanning vector has the wrong length");
    }
    RrefResult red = rref(Matrix::from_rows(vectors, ambient, field));
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(red.rank, ambient, field);
    for (std::size_t r = 0; r < red.rank; ++r) s.basis_.set_row(r, red.matrix.row(r));
    return s;
}

Subspace Subspace::span_of_units(const std::vector<std::size_t>& indices, std::size_t ambient, const FieldDescriptor& field) {
    std::vector<Vector> vectors;
    for (std::size_t k : indices) vectors.push_back(unit_vector(ambient, k, field));
    return span(vectors, ambient, field);
}

std::string Subspace::to_string() const {
    std::string out = "span{";
    for (std::size_t r = 0; r < dim(); ++r) {
        if (r > 0) out += ",";
        out += evo::to_string(basis_.row(r));
    }
    return out + "}";
}

Subspace kernel(const Matrix& m) {
    RrefResult red = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(n, free, m.field());
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.matrix(r, free);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(vectors, n, m.field());
}

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) raise(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t);
    std::vector<Vector> vectors = s.basis_vectors();
    for (auto& v : t.basis_vectors()) vectors.push_back(std::move(v));
    return Subspace::span(vectors, s.ambient_dim(), s.field());
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t);
    // S ∩ T is the common kernel of the annihilators of S and T.
    std::vector<Vector> constraints = kernel(s.basis()).basis_vectors();
    for (auto& v : kernel(t.basis()).basis_vectors()) constraints.push_back(std::move(v));
    return kernel(Matrix::from_rows(constraints, s.ambient_dim(), s.field()));
}

bool contains_vector(const Subspace& s, const Vector& v) {
    if (v.size() != s.ambient_dim()) raise(ErrorCode::AmbientMismatch, "vector length differs from the ambient dimension");
    Vector residual = v;
    const Matrix& b = s.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::size_t pivot = 0;
        while (b(r, pivot).is_zero()) ++pivot;
        if (!residual[pivot].is_zero()) residual = axpy(residual, -residual[pivot], b.row(r));
    }
    return is_zero_vector(residual);
}

bool is_subspace_of(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t);
    for (const auto& v : s.basis_vectors()) {
        if (!contains_vector(t, v)) return false;
    }
    return true;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) raise(ErrorCode::ShapeError, "right-hand side length differs from the row count");
    std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = rhs[r];
    }
    RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
    Vector x = zero_vector(n, m.field());
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.matrix(r, n);
    return x;
}

std::optional<Vector> coordinates(const std::vector<Vector>& vectors, const Vector& target) {
    if (vectors.empty()) {
        if (is_zero_vector(target)) return Vector{};
        return std::nullopt;
    }
    const FieldDescriptor& field = vectors.front().front().field();
    Matrix cols = Matrix::from_rows(vectors, target.size(), field).transpose();
    return solve(cols, target);
}

}  // namespace evo
