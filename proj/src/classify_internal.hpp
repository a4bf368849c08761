#pragma once

#include <optional>
#include <vector>

#include "evo/classify.hpp"

namespace evo::detail {

using Indices = std::vector<std::size_t>;

// b(v, w) = sum over the block of lam_k v_k w_k, vectors in full coordinates.
struct BlockForm {
    Indices idx;
    Vector lam;

    FieldElement operator()(const Vector& v, const Vector& w) const;
    FieldElement norm(const Vector& v) const { return (*this)(v, v); }
    // Coordinates of v outside the block set to zero.
    Vector part(const Vector& v) const;
    // Two-dimensional blocks only.
    Vector perp(const Vector& v) const;
    // Isotropic D with b(c, D) = 1 for isotropic c != 0; two-dimensional blocks only.
    Vector partner(const Vector& c) const;
    // (alpha, beta) with v = alpha c + beta d inside the block.
    std::pair<FieldElement, FieldElement> coords(const Vector& v, const Vector& c, const Vector& d) const;
};

BlockForm form_of(const EvolutionAlgebra& e, const Indices& block, std::size_t target);

// Type [1,2,2]: x^2 = a + mu s, y^2 = b + nu s.
struct Data122 {
    std::size_t x = 0, y = 0, s = 0;
    BlockForm form;
    Vector a, b;
    FieldElement mu, nu;
};
// Type [1,2,1,1]: x^2 = xi y + a + (s), y^2 = c + (s).
struct Data1211 {
    std::size_t x = 0, y = 0, s = 0;
    BlockForm form;
    FieldElement xi;
    Vector a, c;
};
// Type [1,1,2,1]: w^2 = gamma0 s, u_k^2 = lam_k w + nu_k s, x^2 = p + zeta w + (s).
struct Data1121 {
    std::size_t x = 0, w = 0, s = 0;
    BlockForm form;  // lam over U_3 (w-coefficients)
    Vector nu;
    FieldElement gamma0, zeta;
    Vector p;
    Vector g;  // nu_k / (gamma0 lam_k)
};
// Chain [1,1,1,1,1] with x^2 = a1 y + a2 z + a3 w, y^2 = b1 z + b2 w, z^2 = c1 w (mod lower terms).
struct DataChain {
    Indices order;  // x, y, z, w, s
    FieldElement a0, b0, c0;  // the three scale invariants A0, B0, C0
};

Data122 data_122(const EvolutionAlgebra& e, const AnnSeries& s);
Data1211 data_1211(const EvolutionAlgebra& e, const AnnSeries& s);
Data1121 data_1121(const EvolutionAlgebra& e, const AnnSeries& s);
DataChain data_chain(const EvolutionAlgebra& e, const AnnSeries& s);

// Both square roots of a (r and -r), or nothing.
std::vector<FieldElement> square_roots(const FieldElement& a);
FieldElement need_sqrt(const FieldElement& a, const char* what);

// Basis (rows in input coordinates) carrying e onto the template at
// label.params, which may be any member of the parameter orbit; empty when
// every normalizing map needs a root missing from the field.
std::optional<Matrix> normalize_indecomposable(const EvolutionAlgebra& e, const CanonicalLabel& label);

}  // namespace evo::detail
