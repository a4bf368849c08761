#include "evo/forms.hpp"

namespace evo {

DiagonalForm::DiagonalForm(Vector diag) : diag_(std::move(diag)) {
    if (diag_.empty()) raise(ErrorCode::ShapeError, "a form needs at least one coordinate");
}

FieldElement DiagonalForm::operator()(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) raise(ErrorCode::ShapeError, "form argument has the wrong length");
    FieldElement sum = FieldElement::zero(field());
    for (std::size_t k = 0; k < dim(); ++k) {
        if (!x[k].is_zero() && !y[k].is_zero()) sum += diag_[k] * x[k] * y[k];
    }
    return sum;
}

std::vector<Vector> DiagonalForm::orthogonal_complement(const std::vector<Vector>& vectors) const {
    Matrix m(vectors.size(), dim(), field());
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        for (std::size_t c = 0; c < dim(); ++c) m(r, c) = diag_[c] * vectors[r][c];
    }
    return kernel(m).basis_vectors();
}

std::vector<Vector> DiagonalForm::orthogonal_basis(const std::vector<Vector>& vectors) const {
    std::vector<Vector> work = Subspace::span(vectors, dim(), field()).basis_vectors();
    std::vector<Vector> out;
    while (!work.empty()) {
        // Pick a vector of nonzero norm, combining two basis vectors if all
        // are isotropic (possible since the characteristic is not 2).
        std::size_t pick = work.size();
        for (std::size_t k = 0; k < work.size(); ++k) {
            if (!norm(work[k]).is_zero()) {
                pick = k;
                break;
            }
        }
        if (pick == work.size()) {
            bool fixed = false;
            for (std::size_t k = 1; k < work.size() && !fixed; ++k) {
                if (!(*this)(work[0], work[k]).is_zero()) {
                    work[0] = add(work[0], work[k]);
                    fixed = true;
                }
            }
            if (!fixed) {
                // Degenerate direction: keep it and continue with the rest.
                out.push_back(work[0]);
                work.erase(work.begin());
                continue;
            }
            pick = 0;
        }
        Vector v = work[pick];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
        FieldElement nv = norm(v);
        for (auto& w : work) w = axpy(w, -((*this)(w, v) / nv), v);
        out.push_back(std::move(v));
    }
    return out;
}

Vector DiagonalForm::isotropic_partner(const Vector& u) const {
    for (std::size_t j = 0; j < dim(); ++j) {
        FieldElement c = diag_[j] * u[j];
        if (c.is_zero()) continue;
        Vector w = scale(c.inverse(), unit_vector(dim(), j, field()));
        FieldElement two = FieldElement::from_int(field(), 2);
        return axpy(w, -(norm(w) / two), u);
    }
    raise(ErrorCode::DomainError, "isotropic partner of a radical vector");
}

Vector DiagonalForm::orthogonal_in_plane(const Vector& v) const {
    auto comp = orthogonal_complement({v});
    if (comp.empty()) raise(ErrorCode::DomainError, "no orthogonal vector");
    return comp.front();
}

}  // namespace evo
