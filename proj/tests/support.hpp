#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "evo/classify.hpp"
#include "evo/oracle.hpp"

namespace evo::testing {

// The code of the Error thrown by f, if any.
template <class F>
std::optional<ErrorCode> error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline FieldDescriptor f13() { return FieldDescriptor::prime_field(13); }
inline FieldDescriptor qi() { return FieldDescriptor::gaussian_rationals(); }

inline FieldElement random_element(const FieldDescriptor& field, std::mt19937_64& rng, bool nonzero = false) {
    while (true) {
        FieldElement x;
        if (field.is_prime_field()) {
            x = FieldElement::from_int(field, std::uniform_int_distribution<long>(0, static_cast<long>(field.modulus()) - 1)(rng));
        } else {
            std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
            mpq_class re(num(rng), den(rng));
            mpq_class im = (field.has_i() && rng() % 2) ? mpq_class(num(rng), den(rng)) : mpq_class(0);
            re.canonicalize();
            im.canonicalize();
            x = FieldElement::from_parts(field, re, im);
        }
        if (!nonzero || !x.is_zero()) return x;
    }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Row i of the structure is supported on later indices, then the basis is
// shuffled. The listed rows are zero, so they lie in the annihilator.
inline EvolutionAlgebra random_nilpotent(std::size_t n, const FieldDescriptor& field, std::mt19937_64& rng,
                                         const std::vector<bool>& zero_rows = {}, double density = 0.6) {
    Matrix m(n, n, field);
    std::bernoulli_distribution keep(density);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = FieldElement::zero(field);
        if (!zero_rows.empty() && zero_rows[r]) continue;
        for (std::size_t c = r + 1; c < n; ++c) {
            if (keep(rng)) m(r, c) = random_element(field, rng);
        }
    }
    return permute_basis(EvolutionAlgebra(n, m), random_permutation(n, rng));
}

// Basis (s1, s2, w, z, x) with ann = span{s1, s2}, w^2 in ann, z^2 = c w + ann,
// x^2 = d z + a w + ann, then shuffled.
inline EvolutionAlgebra random_type_2111(std::mt19937_64& rng) {
    auto f = f13();
    Matrix m(5, 5, f);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) m(r, c) = FieldElement::zero(f);
    do {
        m(2, 0) = random_element(f, rng);
        m(2, 1) = random_element(f, rng);
    } while (m(2, 0).is_zero() && m(2, 1).is_zero());
    m(3, 0) = random_element(f, rng);
    m(3, 1) = random_element(f, rng);
    m(3, 2) = random_element(f, rng, true);
    m(4, 0) = random_element(f, rng);
    m(4, 1) = random_element(f, rng);
    m(4, 2) = random_element(f, rng);
    m(4, 3) = random_element(f, rng, true);
    return permute_basis(EvolutionAlgebra(5, m), random_permutation(5, rng));
}

inline Vector random_params(const ClassEntry& entry, const FieldDescriptor& field, std::mt19937_64& rng) {
    while (true) {
        Vector p;
        for (std::size_t k = 0; k < entry.arity; ++k) p.push_back(random_element(field, rng));
        if (!entry.param_domain || entry.param_domain(p)) return p;
    }
}

// A representative parameter choice inside the domain.
inline Vector sample_params(const ClassEntry& entry, const FieldDescriptor& field) {
    std::mt19937_64 rng(entry.variant * 7919 + entry.dim);
    return random_params(entry, field, rng);
}

inline std::vector<ClassEntry> entries_for(std::size_t dim, const FieldDescriptor& field) {
    std::vector<ClassEntry> out;
    for (const auto& e : table_entries(dim)) {
        if (!e.needs_i || field.has_i()) out.push_back(e);
    }
    return out;
}

// Rows of a basis change that keeps every block (in the upper series) and
// may add annihilator components, as an invertible monomial map per block.
inline Matrix random_block_change(const EvolutionAlgebra& e, std::mt19937_64& rng) {
    const auto& field = e.field();
    AnnSeries s = upper_series(e);
    std::size_t n = e.dim();
    Matrix rows(n, n, field);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) rows(r, c) = FieldElement::zero(field);
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        const auto& idx = s.blocks[b];
        auto perm = random_permutation(idx.size(), rng);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            rows(idx[k], idx[perm[k]]) = random_element(field, rng, true);
            if (b == 0) continue;
            for (std::size_t a : s.blocks[0]) rows(idx[k], a) = random_element(field, rng);
        }
    }
    return rows;
}

// Same pattern, but each block gets a general invertible matrix; the result
// is not always a natural basis.
inline Matrix random_patterned_matrix(const EvolutionAlgebra& e, std::mt19937_64& rng) {
    const auto& field = e.field();
    AnnSeries s = upper_series(e);
    std::size_t n = e.dim();
    while (true) {
        Matrix rows(n, n, field);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) rows(r, c) = FieldElement::zero(field);
        for (std::size_t b = 0; b < s.blocks.size(); ++b) {
            for (std::size_t r : s.blocks[b]) {
                for (std::size_t c : s.blocks[b]) rows(r, c) = random_element(field, rng);
                if (b == 0) continue;
                for (std::size_t a : s.blocks[0]) rows(r, a) = random_element(field, rng);
            }
        }
        if (rows.is_invertible()) return rows;
    }
}

}  // namespace evo::testing
