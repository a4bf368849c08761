#include <gtest/gtest.h>

#include "../support.hpp"

using namespace evo;
using namespace evo::testing;

namespace {

FieldDescriptor F(std::uint64_t p) { return FieldDescriptor::prime_field(p); }

const SearchBudget kExhaustive{SearchMode::Exhaustive, 0, 0};

SearchBudget randomized(std::uint64_t trials, std::uint64_t seed) { return {SearchMode::Randomized, trials, seed}; }

}  // namespace

TEST(Oracle, VerifyHomErrors) {
    auto f = F(5);
    auto a = template_algebra(find_entry(2, {1, 1}, 1), {}, f);
    auto b = template_algebra(find_entry(3, {1, 2}, 1), {}, f);
    EXPECT_TRUE(verify_hom(a, a, Matrix::identity(2, f)));
    EXPECT_EQ(error_code_of([&] { verify_hom(a, b, Matrix::identity(2, f)); }), ErrorCode::ShapeError);
    EXPECT_EQ(error_code_of([&] { verify_hom(a, a, Matrix(2, 2, f)); }), ErrorCode::Singular);
    EXPECT_EQ(error_code_of([&] { verify_hom(a, a, Matrix::identity(2, F(7))); }), ErrorCode::MixedFields);
    // e1 -> 2 e1 forces e2 -> 4 e2.
    EXPECT_FALSE(verify_hom(a, a, Matrix::from_ints({{2, 0}, {0, 1}}, f)));
    EXPECT_TRUE(verify_hom(a, a, Matrix::from_ints({{2, 0}, {0, 4}}, f)));
}

TEST(Oracle, FreeEntries) {
    EXPECT_EQ(free_entry_count({1}), 1u);
    EXPECT_EQ(free_entry_count({1, 1, 1, 1}), 7u);
    EXPECT_EQ(free_entry_count({1, 2, 2}), 13u);
    EXPECT_EQ(free_entry_count({2, 3}), 19u);
}

TEST(Oracle, Refusals) {
    auto big = template_algebra(find_entry(5, {1, 4}, 1), {}, f13());
    EXPECT_EQ(error_code_of([&] { exhaustive_iso(big, big, kExhaustive); }), ErrorCode::BudgetExceeded);
    auto q = template_algebra(find_entry(2, {1, 1}, 1), {}, FieldDescriptor::rationals());
    EXPECT_EQ(error_code_of([&] { exhaustive_iso(q, q, kExhaustive); }), ErrorCode::UnsupportedField);
    EXPECT_EQ(error_code_of([&] { randomized_iso(q, q, randomized(10, 1)); }), ErrorCode::UnsupportedField);
}

TEST(Oracle, EmptyResults) {
    auto f = F(3);
    auto ub = template_algebra(find_entry(3, {1, 2}, 1), {}, f);
    auto chain = template_algebra(find_entry(3, {1, 1, 1}, 1), {}, f);
    EXPECT_FALSE(exhaustive_iso(ub, chain, kExhaustive));
    EXPECT_FALSE(exhaustive_iso(ub, template_algebra(find_entry(2, {1, 1}, 1), {}, f), kExhaustive));
    EXPECT_FALSE(randomized_iso(ub, ub, randomized(0, 1)));
    auto v1 = template_algebra(find_entry(4, {1, 1, 1, 1}, 1), {}, f);
    auto v2 = template_algebra(find_entry(4, {1, 1, 1, 1}, 2), {}, f);
    EXPECT_FALSE(exhaustive_iso(v1, v2, kExhaustive));
    EXPECT_FALSE(randomized_iso(v1, v2, randomized(100000, 3)));
}

TEST(Oracle, FindsRescaledCopies) {
    auto f = F(5);
    auto t = template_algebra(find_entry(4, {1, 2, 1}, 1), {}, f);
    Matrix two = Matrix::identity(4, f);
    for (std::size_t k = 0; k < 4; ++k) two(k, k) = FieldElement::from_int(f, 2);
    auto scaled = change_basis(t, two);
    ASSERT_NE(scaled, t);
    auto m = exhaustive_iso(t, scaled, kExhaustive);
    ASSERT_TRUE(m);
    EXPECT_TRUE(verify_hom(t, scaled, *m));
    auto r = randomized_iso(t, scaled, randomized(100000, 5));
    ASSERT_TRUE(r);
    EXPECT_TRUE(verify_hom(t, scaled, *r));
}

TEST(Oracle, RandomizedAcrossTheSignOrbit) {
    auto f = f13();
    const auto& entry = find_entry(5, {1, 2, 2}, 1);
    auto a = template_algebra(entry, {FieldElement::from_int(f, 2)}, f);
    auto b = template_algebra(entry, {FieldElement::from_int(f, 11)}, f);
    auto m = randomized_iso(a, b, randomized(1000000, 7));
    ASSERT_TRUE(m);
    EXPECT_TRUE(verify_hom(a, b, *m));
}

TEST(Oracle, AgreesWithLabelsOverF3) {
    auto f = F(3);
    std::mt19937_64 rng(31);
    std::size_t found = 0;
    for (int k = 0; k < 300; ++k) {
        std::size_t n = 1 + k % 3;
        auto a = random_nilpotent(n, f, rng), b = random_nilpotent(n, f, rng);
        auto m = exhaustive_iso(a, b, kExhaustive);
        bool same = classify(a).to_string() == classify(b).to_string();
        if (m) {
            ++found;
            ASSERT_TRUE(same) << classify(a).to_string() << " vs " << classify(b).to_string();
            ASSERT_TRUE(verify_hom(a, b, *m));
        }
        // A witness from the classifier proves isomorphism over F3 itself.
        if (same) {
            std::optional<Matrix> w;
            try {
                w = witness_isomorphism(a, b);
            } catch (const Error& e) {
                ASSERT_EQ(e.code(), ErrorCode::SqrtUnavailable);
            }
            if (w) ASSERT_TRUE(m);
        }
    }
    EXPECT_GT(found, 50u);
}

TEST(Oracle, SymmetricOverF3) {
    auto f = F(3);
    std::mt19937_64 rng(32);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + k % 4;
        auto a = random_nilpotent(n, f, rng), b = random_nilpotent(n, f, rng);
        auto ab = exhaustive_iso(a, b, kExhaustive);
        auto ba = exhaustive_iso(b, a, kExhaustive);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (ab) {
            ASSERT_TRUE(verify_hom(b, a, ab->inverse()));
        }
    }
}
