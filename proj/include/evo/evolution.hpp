#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evo/linalg.hpp"

namespace evo {

// Structure matrix row i holds the coordinates of e_i^2.
class EvolutionAlgebra {
public:
    EvolutionAlgebra() = default;
    EvolutionAlgebra(std::size_t dim, const Matrix& structure);

    std::size_t dim() const noexcept { return dim_; }
    const FieldDescriptor& field() const noexcept { return structure_.field(); }
    const Matrix& structure() const noexcept { return structure_; }
    Vector square_of_basis(std::size_t i) const { return structure_.row(i); }

    friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
        return a.dim_ == b.dim_ && a.structure_ == b.structure_;
    }

private:
    std::size_t dim_ = 0;
    Matrix structure_;
};

EvolutionAlgebra new_algebra(std::size_t n, const Matrix& structure, const FieldDescriptor& field);

Vector multiply(const EvolutionAlgebra& e, const Vector& x, const Vector& y);
Vector square(const EvolutionAlgebra& e, const Vector& x);

Subspace annihilator(const EvolutionAlgebra& e);

// Keeps the listed basis indices; the others must span an ideal.
EvolutionAlgebra quotient_by_block(const EvolutionAlgebra& e, const std::vector<std::size_t>& keep);

struct AnnSeries {
    std::vector<Subspace> chain;                   // ann^1, ann^2, ...
    std::vector<std::vector<std::size_t>> blocks;  // B_1, B_2, ... (0-based indices)
    std::vector<std::size_t> type_vector;
    bool nilpotent = false;

    // Indices of B_1 ∪ B_i.
    std::vector<std::size_t> block_with_ann(std::size_t i) const;
};

AnnSeries upper_series(const EvolutionAlgebra& e);
std::string format_type(const std::vector<std::size_t>& type_vector);

enum class PowerKind { Right, Plenary };

// E^1 = E first; stops after max_k members or once the chain stabilizes.
std::vector<Subspace> power_subspaces(const EvolutionAlgebra& e, PowerKind kind, std::size_t max_k);
bool power_chain_reaches_zero(const EvolutionAlgebra& e, PowerKind kind);

Subspace product_subspace(const EvolutionAlgebra& e, const Subspace& s, const Subspace& t);
Subspace relative_annihilator(const EvolutionAlgebra& e, const Subspace& inside, const Subspace& against);

struct WeightedEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    FieldElement weight;
};

struct WeightedGraph {
    std::size_t vertex_count = 0;
    std::vector<WeightedEdge> edges;  // sorted by (from, to), 0-based
};

WeightedGraph graph_of(const EvolutionAlgebra& e);

struct Component {
    EvolutionAlgebra algebra;
    std::vector<std::size_t> indices;  // positions in the parent basis
};

// Weakly connected components, ordered by smallest index.
std::vector<Component> split_components(const EvolutionAlgebra& e);

// A natural basis of an ideal, given as rows in parent coordinates, together
// with the structure of the ideal in that basis.
struct Summand {
    Matrix basis;
    EvolutionAlgebra algebra;
};

enum class Verdict { Decomposable, Indecomposable, Unknown };

struct DecompositionResult {
    Verdict verdict = Verdict::Unknown;
    std::string rule;    // short name of the rule that decided
    std::string reason;  // human-readable explanation
    std::optional<std::pair<Subspace, Subspace>> witness;
    // Natural-basis summands whose direct sum is the algebra, when known.
    std::vector<Summand> summands;
};

DecompositionResult decomposability_check(const EvolutionAlgebra& e);

// True when I ∩ J = 0, I + J = E and both are ideals.
bool is_ideal(const EvolutionAlgebra& e, const Subspace& s);
bool is_direct_ideal_split(const EvolutionAlgebra& e, const Subspace& i, const Subspace& j);

struct InvariantProfile {
    std::size_t dim_square = 0;                     // dim E^2
    std::vector<std::size_t> dim_block_square;      // dim (U_i ⊕ U_1)^2 for i = 2..r
    std::optional<std::size_t> dim_u3_square_square;  // dim ((U_3 ⊕ U_1)^2)^2
    std::optional<bool> u4_square_in_u3;            // (U_4 ⊕ U_1)^2 ⊆ U_3 ⊕ U_1
    bool ann_in_square = false;                     // ann ⊆ E^2
    std::optional<std::size_t> dim_square_cap_u3;   // dim (E^2 ∩ (U_3 ⊕ U_1))

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const EvolutionAlgebra& e);

// The algebra in the basis whose rows are given in coordinates of e.
// Throws DomainError unless the rows form a natural basis.
EvolutionAlgebra change_basis(const EvolutionAlgebra& e, const Matrix& basis);
bool is_natural_basis(const EvolutionAlgebra& e, const Matrix& basis);

// Reindexes the basis: new vector k is old vector order[k].
EvolutionAlgebra permute_basis(const EvolutionAlgebra& e, const std::vector<std::size_t>& order);

}  // namespace evo
