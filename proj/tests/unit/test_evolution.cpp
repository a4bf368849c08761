#include <gtest/gtest.h>

#include "../support.hpp"
#include "evo/io.hpp"

using namespace evo;
using namespace evo::testing;

namespace {

FieldDescriptor Q() { return FieldDescriptor::rationals(); }

EvolutionAlgebra alg(std::vector<std::vector<long>> rows, const FieldDescriptor& f = Q()) {
    return EvolutionAlgebra(rows.size(), Matrix::from_ints(rows, f));
}

Vector vec(std::vector<long> xs, const FieldDescriptor& f = Q()) {
    Vector v;
    for (long x : xs) v.push_back(FieldElement::from_int(f, x));
    return v;
}

Subspace units(std::vector<std::size_t> idx, std::size_t n, const FieldDescriptor& f = Q()) { return Subspace::span_of_units(idx, n, f); }

EvolutionAlgebra chain(std::size_t n, const FieldDescriptor& f = Q()) {
    Matrix m(n, n, f);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = FieldElement::from_int(f, c == r + 1 ? 1 : 0);
    return EvolutionAlgebra(n, m);
}

}  // namespace

TEST(Evolution, Construction) {
    EXPECT_EQ(new_algebra(1, Matrix::from_ints({{0}}, Q()), Q()).dim(), 1u);
    EXPECT_TRUE(upper_series(new_algebra(2, Matrix::from_ints({{0, 1}, {0, 0}}, Q()), Q())).nilpotent);
    EXPECT_FALSE(upper_series(new_algebra(2, Matrix::identity(2, Q()), Q())).nilpotent);
    try {
        new_algebra(3, Matrix::identity(2, Q()), Q());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeError);
    }
}

TEST(Evolution, Multiply) {
    auto e = alg({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
    EXPECT_TRUE(is_zero_vector(multiply(e, vec({1, 0, 0}), vec({0, 1, 0}))));
    EXPECT_TRUE(is_zero_vector(multiply(e, vec({1, 2, 3}), vec({0, 0, 0}))));
    EXPECT_TRUE(is_zero_vector(multiply(e, vec({1, 1, 0}), vec({1, -1, 0}))));
    EXPECT_EQ(square(e, vec({1, 1, 0})), vec({0, 0, 2}));
    EXPECT_EQ(multiply(e, vec({1, 2, 0}), vec({3, 1, 0})), multiply(e, vec({3, 1, 0}), vec({1, 2, 0})));
}

TEST(Evolution, Annihilator) {
    EXPECT_TRUE(annihilator(alg({{0, 0}, {0, 0}})).is_full());
    EXPECT_EQ(annihilator(chain(2)), units({1}, 2));
    auto g = build_family(make_ubg(vec({1, 1}), vec({0, 1})));
    EXPECT_EQ(annihilator(g), units({3}, 4));
}

TEST(Evolution, Quotient) {
    EXPECT_EQ(quotient_by_block(chain(3), {0, 1}), chain(2));
    EXPECT_EQ(quotient_by_block(chain(3), {}).dim(), 0u);
    EXPECT_EQ(quotient_by_block(alg({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}}), {0, 1}), alg({{0, 0}, {0, 0}}));
    try {
        quotient_by_block(chain(3), {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnIdeal);
    }
}

TEST(Evolution, UpperSeries) {
    auto s = upper_series(chain(4));
    EXPECT_TRUE(s.nilpotent);
    EXPECT_EQ(s.type_vector, (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_EQ(s.blocks[0], std::vector<std::size_t>{3});
    EXPECT_EQ(upper_series(alg({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}})).type_vector, (std::vector<std::size_t>{1, 2}));
    auto idem = upper_series(alg({{1}}));
    EXPECT_FALSE(idem.nilpotent);
    EXPECT_TRUE(idem.chain.empty() || idem.chain.back().is_zero());
    EXPECT_EQ(format_type({1, 2, 1}), "[1,2,1]");
}

TEST(Evolution, SeriesInvariantsOnRandomSamples) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        auto e = random_nilpotent(1 + k % 5, f13(), rng);
        auto s = upper_series(e);
        ASSERT_TRUE(s.nilpotent);
        std::size_t total = 0;
        std::vector<std::size_t> so_far;
        for (std::size_t i = 0; i < s.blocks.size(); ++i) {
            so_far.insert(so_far.end(), s.blocks[i].begin(), s.blocks[i].end());
            ASSERT_EQ(s.chain[i], Subspace::span_of_units(so_far, e.dim(), e.field()));
            ASSERT_EQ(s.type_vector[i], s.blocks[i].size());
            total += s.type_vector[i];
        }
        ASSERT_EQ(total, e.dim());
        ASSERT_EQ(s.chain[0], annihilator(e));
    }
}

TEST(Evolution, Powers) {
    auto zero = alg({{0, 0}, {0, 0}});
    EXPECT_TRUE(power_subspaces(zero, PowerKind::Right, 5).at(1).is_zero());
    auto p = power_subspaces(chain(2), PowerKind::Right, 5);
    ASSERT_GE(p.size(), 3u);
    EXPECT_EQ(p[1], units({1}, 2));
    EXPECT_TRUE(p[2].is_zero());
    EXPECT_TRUE(power_chain_reaches_zero(chain(5), PowerKind::Plenary));
    EXPECT_FALSE(power_chain_reaches_zero(alg({{1, 0}, {0, 0}}), PowerKind::Right));
    // A plenary chain that pauses: E^3 = E^4 = span{e1} and E^5 = 0.
    auto paused = alg({{0, 0, 0, 0}, {8, 0, 0, 0}, {11, 0, 0, 5}, {9, 0, 0, 0}}, f13());
    auto pl = power_subspaces(paused, PowerKind::Plenary, 10);
    ASSERT_EQ(pl.size(), 5u);
    EXPECT_EQ(pl[2], pl[3]);
    EXPECT_TRUE(pl[4].is_zero());
    EXPECT_TRUE(power_chain_reaches_zero(paused, PowerKind::Plenary));
    EXPECT_THROW(power_subspaces(chain(2), PowerKind::Right, 0), Error);
}

TEST(Evolution, ProductsAndRelativeAnnihilators) {
    auto e = chain(3);
    auto full = Subspace::full(3, Q());
    EXPECT_TRUE(product_subspace(e, units({0}, 3), Subspace::zero(3, Q())).is_zero());
    EXPECT_EQ(product_subspace(chain(2), Subspace::full(2, Q()), Subspace::full(2, Q())), units({1}, 2));
    EXPECT_EQ(relative_annihilator(e, full, full), annihilator(e));
    EXPECT_EQ(relative_annihilator(e, units({1, 2}, 3), Subspace::zero(3, Q())), units({1, 2}, 3));
    try {
        relative_annihilator(e, Subspace::full(2, Q()), full);
        FAIL();
    } catch (const Error& ex) {
        EXPECT_EQ(ex.code(), ErrorCode::AmbientMismatch);
    }
    // ((U3+U1)^2)^2 != 0 for the first [1,2,1] algebra.
    auto t = template_algebra(find_entry(4, {1, 2, 1}, 1), {}, Q());
    auto s = upper_series(t);
    auto u3 = Subspace::span_of_units(s.block_with_ann(2), 4, Q());
    auto sq = product_subspace(t, u3, u3);
    EXPECT_FALSE(product_subspace(t, sq, sq).is_zero());
}

TEST(Evolution, GraphsAndComponents) {
    EXPECT_TRUE(graph_of(alg({{0, 0}, {0, 0}})).edges.empty());
    auto g = graph_of(chain(2));
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].from, 0u);
    EXPECT_EQ(g.edges[0].to, 1u);
    EXPECT_TRUE(g.edges[0].weight.is_one());
    auto qi_ = qi();
    Matrix m(3, 3, qi_);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = FieldElement::zero(qi_);
    m(0, 1) = FieldElement::one(qi_);
    m(0, 2) = FieldElement::imaginary_unit(qi_);
    auto gi = graph_of(EvolutionAlgebra(3, m));
    ASSERT_EQ(gi.edges.size(), 2u);
    EXPECT_EQ(gi.edges[1].weight, FieldElement::imaginary_unit(qi_));

    EXPECT_EQ(split_components(alg({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}})).size(), 2u);
    EXPECT_EQ(split_components(chain(4)).size(), 1u);
    auto comps = split_components(alg({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    ASSERT_EQ(comps.size(), 4u);
    for (const auto& c : comps) EXPECT_EQ(c.algebra.dim(), 1u);
}

TEST(Evolution, DecomposabilityRules) {
    auto verdict = [](const EvolutionAlgebra& e) { return decomposability_check(e); };
    auto d1 = verdict(alg({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
    EXPECT_EQ(d1.verdict, Verdict::Decomposable);
    EXPECT_EQ(d1.rule, "components");
    // dim 3 with ann = span{e2, e3} and e1^2 = e2 + e3: connected, ann not inside E^2.
    auto d2 = verdict(alg({{0, 1, 1}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(d2.verdict, Verdict::Decomposable);
    EXPECT_EQ(d2.rule, "ann-not-in-square");
    // ann inside E^2 and dim ann >= dim/2.
    auto d3 = verdict(alg({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    EXPECT_EQ(d3.verdict, Verdict::Decomposable);
    auto t212 = template_algebra(find_entry(5, {2, 1, 2}, 1), {}, Q());
    auto d4 = verdict(t212);
    EXPECT_EQ(d4.verdict, Verdict::Indecomposable);
    EXPECT_EQ(d4.rule, "type-n1m");
    EXPECT_EQ(verdict(chain(4)).verdict, Verdict::Indecomposable);
    EXPECT_EQ(verdict(alg({{0}})).verdict, Verdict::Indecomposable);
    for (int v = 1; v <= 3; ++v) {
        const auto& entry = table_entries(5)[static_cast<std::size_t>(v - 1)];
        EXPECT_EQ(verdict(template_algebra(entry, {}, Q())).verdict, Verdict::Indecomposable) << entry.skeleton().to_string();
    }
}

TEST(Evolution, DecompositionWitnessesAndSummands) {
    std::mt19937_64 rng(4);
    std::size_t decided = 0;
    for (int k = 0; k < 400; ++k) {
        auto e = random_nilpotent(2 + k % 4, f13(), rng);
        auto d = decomposability_check(e);
        if (d.verdict != Verdict::Decomposable) continue;
        ++decided;
        ASSERT_TRUE(d.witness) << d.rule;
        ASSERT_TRUE(is_direct_ideal_split(e, d.witness->first, d.witness->second)) << d.rule;
        if (d.summands.empty()) continue;
        std::vector<Vector> rows;
        for (const auto& s : d.summands) {
            ASSERT_EQ(s.algebra.dim(), s.basis.rows());
            for (auto& r : s.basis.row_list()) rows.push_back(r);
            ASSERT_TRUE(is_ideal(e, Subspace::span(s.basis.row_list(), e.dim(), e.field())));
        }
        // Stacked summand bases give a natural basis in which e is block diagonal.
        Matrix stacked = Matrix::from_rows(rows, e.dim(), e.field());
        ASSERT_TRUE(is_natural_basis(e, stacked));
        auto moved = change_basis(e, stacked);
        std::size_t off = 0;
        for (const auto& s : d.summands) {
            for (std::size_t r = 0; r < s.algebra.dim(); ++r)
                for (std::size_t c = 0; c < s.algebra.dim(); ++c) ASSERT_EQ(moved.structure()(off + r, off + c), s.algebra.structure()(r, c));
            off += s.algebra.dim();
        }
    }
    EXPECT_GT(decided, 100u);
}

TEST(Evolution, NaturalBasisChanges) {
    auto e = alg({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
    auto rows = Matrix::from_ints({{1, 1, 0}, {1, -1, 0}, {0, 0, 1}}, Q());
    EXPECT_TRUE(is_natural_basis(e, rows));
    EXPECT_EQ(change_basis(e, rows), alg({{0, 0, 2}, {0, 0, 2}, {0, 0, 0}}));
    auto bad = Matrix::from_ints({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, Q());
    EXPECT_FALSE(is_natural_basis(e, bad));
    try {
        change_basis(e, bad);
        FAIL();
    } catch (const Error& ex) {
        EXPECT_EQ(ex.code(), ErrorCode::DomainError);
    }
    auto p = permute_basis(chain(3), {2, 1, 0});
    EXPECT_EQ(p, alg({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
}

TEST(Evolution, InvariantProfiles) {
    auto pick = [](std::vector<std::size_t> type, int v) { return invariant_profile(template_algebra(find_entry(4, type, v), {}, Q())); };
    EXPECT_EQ(pick({1, 1, 1, 1}, 2).u4_square_in_u3, std::optional<bool>(false));
    EXPECT_EQ(pick({1, 1, 1, 1}, 1).u4_square_in_u3, std::optional<bool>(true));
    EXPECT_EQ(pick({1, 1, 2}, 1).dim_block_square.back(), 1u);
    EXPECT_EQ(pick({1, 1, 2}, 2).dim_block_square.back(), 2u);
    auto z = invariant_profile(alg({{0}}));
    EXPECT_EQ(z.dim_square, 0u);
    EXPECT_TRUE(z.dim_block_square.empty());
    try {
        invariant_profile(alg({{1}}));
        FAIL();
    } catch (const Error& ex) {
        EXPECT_EQ(ex.code(), ErrorCode::NotNilpotent);
    }
    // The profile does not depend on the natural basis.
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto e = random_nilpotent(2 + k % 4, f13(), rng);
        auto moved = permute_basis(change_basis(e, random_block_change(e, rng)), random_permutation(e.dim(), rng));
        ASSERT_EQ(invariant_profile(e), invariant_profile(moved));
    }
}

TEST(Decomposability, DecidesEveryNilpotentAlgebraUpToDimFive) {
    std::mt19937_64 rng(45);
    for (const auto& f : {qi(), f13(), FieldDescriptor::prime_field(3)}) {
        for (int k = 0; k < 600; ++k) {
            std::size_t n = 1 + k % 5;
            std::vector<bool> zero_rows(n);
            for (std::size_t r = 0; r < n; ++r) zero_rows[r] = rng() % 3 == 0;
            auto e = random_nilpotent(n, f, rng, zero_rows, 0.2 + 0.1 * (k % 7));
            ASSERT_NE(decomposability_check(e).verdict, Verdict::Unknown) << write_algebra(e);
        }
    }
}
