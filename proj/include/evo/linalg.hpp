#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evo/exactfield.hpp"

namespace evo {

using Vector = std::vector<FieldElement>;

Vector zero_vector(std::size_t n, const FieldDescriptor& field);
Vector unit_vector(std::size_t n, std::size_t k, const FieldDescriptor& field);
bool is_zero_vector(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const FieldElement& c, const Vector& v);
// a + c*b
Vector axpy(const Vector& a, const FieldElement& c, const Vector& b);
std::string to_string(const Vector& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field);
    static Matrix identity(std::size_t n, const FieldDescriptor& field);
    // Rows must share a length; an empty list needs the explicit column count.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, const FieldDescriptor& field);
    static Matrix from_ints(const std::vector<std::vector<long>>& rows, const FieldDescriptor& field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldDescriptor& field() const noexcept { return field_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    std::vector<Vector> row_list() const;

    Matrix transpose() const;
    // Throws Singular.
    Matrix inverse() const;
    bool is_invertible() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& m, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // One row per line, entries separated by spaces.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldDescriptor field_ = FieldDescriptor::rationals();
    std::vector<FieldElement> entries_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient, const FieldDescriptor& field);
    static Subspace full(std::size_t ambient, const FieldDescriptor& field);
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient, const FieldDescriptor& field);
    static Subspace span_of_units(const std::vector<std::size_t>& indices, std::size_t ambient, const FieldDescriptor& field);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const FieldDescriptor& field() const noexcept { return basis_.field(); }
    const Matrix& basis() const noexcept { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

// {x : m * x^T = 0}
Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);
bool contains_vector(const Subspace& s, const Vector& v);
bool is_subspace_of(const Subspace& s, const Subspace& t);

// Coefficients c with sum_k c_k * vectors[k] = target, or empty if target is
// outside the span. The vectors must be linearly independent.
std::optional<Vector> coordinates(const std::vector<Vector>& vectors, const Vector& target);

// One solution x of m * x = rhs, or empty.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

}  // namespace evo
