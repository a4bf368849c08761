#pragma once

#include <cstdint>
#include <optional>

#include "evo/evolution.hpp"

namespace evo {

enum class SearchMode { Exhaustive, Randomized };

struct SearchBudget {
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t max_trials = 0;  // Randomized: dead ends allowed in the shuffled search
    std::uint64_t seed = 0;
};

// Largest p^(free entries) an exhaustive search accepts.
inline constexpr double kExhaustiveLimit = 1e8;

// phi(x) = m x with m's columns the images of E1's basis in E2 coordinates.
// ShapeError on size mismatch, Singular when m is not invertible.
bool verify_hom(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const Matrix& m);

// Free entries of the block pattern of an isomorphism between algebras of
// this type: the diagonal blocks plus the annihilator row.
std::size_t free_entry_count(const std::vector<std::size_t>& type_vector);

// Complete search over block-patterned maps over a prime field. Empty means no
// isomorphism over that field. BudgetExceeded beyond kExhaustiveLimit.
std::optional<Matrix> exhaustive_iso(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const SearchBudget& budget);

// Seeded sampling of block-patterned maps; each trial builds one map column by
// column, drawing every column uniformly among the images that keep the
// partial map a homomorphism. Empty is not evidence of non-isomorphism.
std::optional<Matrix> randomized_iso(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const SearchBudget& budget);

}  // namespace evo
