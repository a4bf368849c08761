#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evo/evolution.hpp"
#include "evo/families.hpp"

namespace evo {

struct CanonicalLabel {
    std::size_t dim = 0;
    std::vector<std::size_t> type_vector;
    int variant = 0;
    Vector params;

    // d<dim>:[n1,...,nr]:v<variant>(p1,p2); parentheses omitted without params.
    std::string to_string() const;
    friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

using ParamOrbit = std::function<std::vector<Vector>(const Vector&)>;

struct ClassEntry {
    std::size_t dim = 0;
    std::vector<std::size_t> type_vector;
    int variant = 0;
    std::size_t arity = 0;
    bool needs_i = false;
    std::string properties;  // the distinguishing property, in words
    std::function<bool(const Vector&)> param_domain;
    std::function<Matrix(const Vector&, const FieldDescriptor&)> structure_template;
    ParamOrbit param_orbit;
    // Distinguishing condition over the invariant profile; entries whose
    // distinction is not profile-based accept every profile of their type.
    std::function<bool(const InvariantProfile&)> predicate;

    CanonicalLabel skeleton() const { return CanonicalLabel{dim, type_vector, variant, {}}; }
};

// All entries of one dimension without field checks.
const std::vector<ClassEntry>& table_entries(std::size_t dim);
// UnsupportedDim outside 1..5; FieldLacksI for dim >= 4 over fields without i.
std::vector<ClassEntry> canonical_table(std::size_t dim, const FieldDescriptor& field);
const ClassEntry& find_entry(std::size_t dim, const std::vector<std::size_t>& type_vector, int variant);
const ClassEntry& entry_of(const CanonicalLabel& label);

// Orbit minimum of params under total_order, compared lexicographically.
Vector canonical_params(const ClassEntry& entry, const Vector& params);
CanonicalLabel make_label(const ClassEntry& entry, const Vector& params);
EvolutionAlgebra template_algebra(const ClassEntry& entry, const Vector& params, const FieldDescriptor& field);
EvolutionAlgebra template_algebra(const CanonicalLabel& label, const FieldDescriptor& field);

struct ClassifyResult {
    bool decomposed = false;
    CanonicalLabel label;                      // when indecomposable
    std::vector<CanonicalLabel> parts;         // when decomposed, sorted by serialization
    bool witness_available = true;             // false when a normalizing root is missing

    std::string to_string() const;
};

ClassifyResult classify(const EvolutionAlgebra& e);
bool labels_equal(const CanonicalLabel& a, const CanonicalLabel& b);

// Columns are the images of E1's basis in E2 coordinates.
std::optional<Matrix> witness_isomorphism(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2);

// Label of an indecomposable nilpotent algebra computed from invariants only.
CanonicalLabel label_indecomposable(const EvolutionAlgebra& e);

struct Normalization {
    ClassifyResult result;
    // Rows in coordinates of the input: in this basis the algebra equals the
    // direct sum of the templates of result's labels (in that order).
    std::optional<Matrix> basis;
};

Normalization normalize(const EvolutionAlgebra& e);

// The algebra carried by a classification: a template or a direct sum of templates.
EvolutionAlgebra canonical_form(const ClassifyResult& result, const FieldDescriptor& field);

}  // namespace evo
