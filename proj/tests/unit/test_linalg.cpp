#include <gtest/gtest.h>

#include <random>

#include "evo/linalg.hpp"

using namespace evo;

namespace {

FieldDescriptor Q() { return FieldDescriptor::rationals(); }
FieldDescriptor F13() { return FieldDescriptor::prime_field(13); }

Vector vec(std::vector<long> xs, const FieldDescriptor& f) {
    Vector v;
    for (long x : xs) v.push_back(FieldElement::from_int(f, x));
    return v;
}

Subspace span(std::vector<std::vector<long>> rows, std::size_t n, const FieldDescriptor& f) {
    std::vector<Vector> vs;
    for (auto& r : rows) vs.push_back(vec(r, f));
    return Subspace::span(vs, n, f);
}

Matrix random_matrix(std::size_t r, std::size_t c, const FieldDescriptor& f, std::mt19937_64& rng, double density = 0.5) {
    Matrix m(r, c, f);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = keep(rng) ? FieldElement::from_int(f, std::uniform_int_distribution<long>(-5, 5)(rng)) : FieldElement::zero(f);
    return m;
}

}  // namespace

TEST(Linalg, RrefExamples) {
    auto id = Matrix::identity(3, Q());
    EXPECT_EQ(rref(id).matrix, id);
    EXPECT_EQ(rref(id).rank, 3u);
    auto r = rref(Matrix::from_ints({{2, 4}, {1, 2}}, Q()));
    EXPECT_EQ(r.matrix, Matrix::from_ints({{1, 2}, {0, 0}}, Q()));
    EXPECT_EQ(r.rank, 1u);
    auto p = rref(Matrix::from_ints({{0, 1}, {1, 0}}, F13()));
    EXPECT_EQ(p.matrix, Matrix::identity(2, F13()));
    EXPECT_EQ(p.rank, 2u);
}

TEST(Linalg, RrefIdempotentAndKernelConsistent) {
    std::mt19937_64 rng(1);
    for (const auto& f : {Q(), F13()}) {
        for (int k = 0; k < 200; ++k) {
            Matrix m = random_matrix(1 + rng() % 5, 1 + rng() % 6, f, rng);
            auto r = rref(m);
            ASSERT_EQ(rref(r.matrix).matrix, r.matrix);
            Subspace ker = kernel(m);
            ASSERT_EQ(ker.dim(), m.cols() - r.rank);
            for (const auto& v : ker.basis_vectors()) ASSERT_TRUE(is_zero_vector(m * v));
        }
    }
}

TEST(Linalg, KernelExamples) {
    EXPECT_EQ(kernel(Matrix(2, 2, Q())), Subspace::full(2, Q()));
    EXPECT_TRUE(kernel(Matrix::identity(3, Q())).is_zero());
    EXPECT_EQ(kernel(Matrix::from_ints({{1, 1}}, Q())), span({{1, -1}}, 2, Q()));
}

TEST(Linalg, InverseAndSolve) {
    Matrix a = Matrix::from_ints({{2, 1}, {1, 1}}, Q());
    EXPECT_EQ(a * a.inverse(), Matrix::identity(2, Q()));
    EXPECT_FALSE(Matrix::from_ints({{1, 2}, {2, 4}}, Q()).is_invertible());
    try {
        Matrix::from_ints({{1, 2}, {2, 4}}, Q()).inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Singular);
    }
    auto x = solve(a, vec({3, 2}, Q()));
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, vec({3, 2}, Q()));
    EXPECT_FALSE(solve(Matrix::from_ints({{1, 1}, {1, 1}}, Q()), vec({1, 2}, Q())));
    auto c = coordinates({vec({1, 0, 1}, Q()), vec({0, 1, 1}, Q())}, vec({2, 3, 5}, Q()));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, vec({2, 3}, Q()));
    EXPECT_FALSE(coordinates({vec({1, 0, 1}, Q())}, vec({0, 1, 0}, Q())));
}

TEST(Linalg, SubspaceLattice) {
    auto f = Q();
    Subspace s = span({{1, 2, 0}}, 3, f);
    EXPECT_EQ(subspace_sum(s, Subspace::zero(3, f)), s);
    EXPECT_EQ(subspace_sum(s, s), s);
    EXPECT_EQ(subspace_sum(span({{1, 0, 0}}, 3, f), span({{0, 1, 0}}, 3, f)), span({{1, 0, 0}, {0, 1, 0}}, 3, f));
    EXPECT_EQ(subspace_intersect(s, s), s);
    EXPECT_TRUE(subspace_intersect(span({{1, 0, 0}}, 3, f), span({{0, 1, 0}}, 3, f)).is_zero());
    EXPECT_EQ(subspace_intersect(span({{1, 0, 0}, {0, 1, 0}}, 3, f), span({{0, 1, 0}, {0, 0, 1}}, 3, f)), span({{0, 1, 0}}, 3, f));
    EXPECT_TRUE(contains_vector(s, vec({0, 0, 0}, f)));
    EXPECT_FALSE(contains_vector(span({{0, 1}}, 2, f), vec({1, 0}, f)));
    EXPECT_TRUE(contains_vector(span({{1, 1}}, 2, f), vec({1, 1}, f)));
    EXPECT_TRUE(is_subspace_of(s, span({{1, 0, 0}, {0, 1, 0}}, 3, f)));
    try {
        subspace_sum(s, Subspace::zero(2, f));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
    }
}

TEST(Linalg, GrassmannAndCanonicity) {
    std::mt19937_64 rng(2);
    for (const auto& f : {Q(), F13()}) {
        for (int k = 0; k < 500; ++k) {
            std::size_t n = 1 + rng() % 6;
            Matrix a = random_matrix(rng() % (n + 1), n, f, rng, 0.4);
            Matrix b = random_matrix(rng() % (n + 1), n, f, rng, 0.4);
            Subspace s = Subspace::span(a.row_list(), n, f), t = Subspace::span(b.row_list(), n, f);
            ASSERT_EQ(s.dim() + t.dim(), subspace_sum(s, t).dim() + subspace_intersect(s, t).dim());
            ASSERT_TRUE(is_subspace_of(subspace_intersect(s, t), s));
            ASSERT_TRUE(is_subspace_of(t, subspace_sum(s, t)));
            // Mixing the basis rows by an invertible matrix gives the same value.
            if (s.dim() > 0) {
                Matrix mix;
                do {
                    mix = random_matrix(s.dim(), s.dim(), f, rng, 0.8);
                } while (!mix.is_invertible());
                ASSERT_EQ(Subspace::span((mix * s.basis()).row_list(), n, f), s);
            }
        }
    }
}
