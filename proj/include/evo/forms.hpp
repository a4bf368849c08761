#pragma once

#include <vector>

#include "evo/linalg.hpp"

namespace evo {

// Symmetric bilinear form b(x, y) = sum_k diag[k] x_k y_k.
class DiagonalForm {
public:
    explicit DiagonalForm(Vector diag);

    std::size_t dim() const noexcept { return diag_.size(); }
    const Vector& diag() const noexcept { return diag_; }
    const FieldDescriptor& field() const { return diag_.front().field(); }

    FieldElement operator()(const Vector& x, const Vector& y) const;
    FieldElement norm(const Vector& x) const { return (*this)(x, x); }

    // Basis of {x : b(x, v) = 0 for all v in vectors}.
    std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vectors) const;
    // Pairwise orthogonal basis of span(vectors), all with nonzero norm when
    // the form restricted to the span is nondegenerate.
    std::vector<Vector> orthogonal_basis(const std::vector<Vector>& vectors) const;
    // For isotropic nonzero u: an isotropic v with b(u, v) = 1.
    Vector isotropic_partner(const Vector& u) const;
    // Some w != 0 with b(w, v) = 0, for a 2-dimensional space.
    Vector orthogonal_in_plane(const Vector& v) const;

private:
    Vector diag_;
};

}  // namespace evo
