#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evo/evolution.hpp"

namespace evo {

enum class FamilyKind { Ub, Ubg, Ubfg, Ubu };

std::string family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

// Diagonal data of a family algebra over an orthogonal (eigen)basis of U.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Ub;
    std::size_t n = 0;
    FieldDescriptor field = FieldDescriptor::rationals();
    Vector b_diag;
    std::optional<Vector> f_eigs;
    std::optional<Vector> g_eigs;
    std::optional<Vector> u_coords;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec make_ub(Vector b);
FamilySpec make_ubg(Vector b, Vector g);
FamilySpec make_ubfg(Vector b, Vector f, Vector g);
FamilySpec make_ubu(Vector b, Vector u);

// Throws SpecMismatch when the data does not fit the kind.
void validate_spec(const FamilySpec& spec);

// Basis order (u_1..u_n, s).
EvolutionAlgebra build_Ub(const FamilySpec& spec);
// Basis order (u_1..u_n, w, s).
EvolutionAlgebra build_Ubg(const FamilySpec& spec);
// Basis order (u_1..u_n, w, t, s).
EvolutionAlgebra build_Ubfg(const FamilySpec& spec);
// Basis order (a, u_1..u_n, s).
EvolutionAlgebra build_Ubu(const FamilySpec& spec);
EvolutionAlgebra build_family(const FamilySpec& spec);

// Matrix (columns = images of basis vectors) of an isomorphism
// E(U,b,f,g) -> E(U, alpha b, alpha f, alpha^3 g + beta id).
Matrix scaling_isomorphism(const FamilySpec& spec, const FieldElement& alpha, const FieldElement& beta);
FamilySpec scaled_spec(const FamilySpec& spec, const FieldElement& alpha, const FieldElement& beta);

// Isomorphism of the family algebras over an algebraic closure of the field.
// The caller must assert closed-field semantics; otherwise UnsupportedField.
bool family_iso_test(const FamilySpec& s1, const FamilySpec& s2, bool closed_field_semantics);

// An isomorphism build(s1) -> build(s2) over the field itself, found among maps
// that send eigenvectors to multiples of eigenvectors. Empty when the specs are
// not isomorphic over the closure; SqrtUnavailable when they are but every
// candidate needs a root missing from the field.
std::optional<Matrix> family_witness(const FamilySpec& s1, const FamilySpec& s2);

struct FamilyPresentation {
    FamilySpec spec;
    // Rows in coordinates of the input algebra; in this basis the algebra
    // has exactly the structure of build_family(spec).
    Matrix basis;
};

// Recognises nilpotent algebras of types [1,n], [1,1,n], [1,1,1,n] and
// [1,n,1] (n >= 2) as family algebras without extracting roots.
std::optional<FamilyPresentation> present_as_family(const EvolutionAlgebra& e);

}  // namespace evo
