#pragma once

#include <string>

#include "evo/evolution.hpp"

namespace evo {

// AlgebraFile: "field Q|Qi|GF <p>", "dim <n>", then n lines "row e1 ... en".
// Blank lines are skipped and '#' starts a comment. Errors carry line and column.
EvolutionAlgebra parse_algebra_text(const std::string& text);
EvolutionAlgebra parse_algebra_file(const std::string& path);

// The normalized AlgebraFile text of e; parse_algebra_text inverts it.
std::string write_algebra(const EvolutionAlgebra& e);

// Directed graph description with 1-based vertices and edges sorted by (i, j);
// weights other than 1 become labels.
std::string emit_dot(const WeightedGraph& g);

}  // namespace evo
