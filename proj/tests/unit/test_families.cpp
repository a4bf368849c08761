#include <gtest/gtest.h>

#include "../support.hpp"

using namespace evo;
using namespace evo::testing;

namespace {

Vector ints(std::vector<long> xs, const FieldDescriptor& f) {
    Vector v;
    for (long x : xs) v.push_back(FieldElement::from_int(f, x));
    return v;
}

using Type = std::vector<std::size_t>;

Type type_of(const EvolutionAlgebra& e) { return upper_series(e).type_vector; }

FamilySpec random_spec(FamilyKind kind, std::size_t n, const FieldDescriptor& f, std::mt19937_64& rng) {
    Vector b, fe, g, u;
    for (std::size_t k = 0; k < n; ++k) {
        b.push_back(random_element(f, rng, true));
        fe.push_back(random_element(f, rng));
        g.push_back(random_element(f, rng));
        u.push_back(random_element(f, rng));
    }
    if (std::all_of(u.begin(), u.end(), [](const FieldElement& x) { return x.is_zero(); })) u[0] = FieldElement::one(f);
    switch (kind) {
        case FamilyKind::Ub: return make_ub(b);
        case FamilyKind::Ubg: return make_ubg(b, g);
        case FamilyKind::Ubfg: return make_ubfg(b, fe, g);
        case FamilyKind::Ubu: return make_ubu(b, u);
    }
    return make_ub(b);
}

}  // namespace

TEST(Families, BuildersMatchTheirShapes) {
    auto q = FieldDescriptor::rationals();
    auto ub = build_Ub(make_ub(ints({1, 1}, q)));
    EXPECT_EQ(ub.structure(), Matrix::from_ints({{0, 0, 1}, {0, 0, 1}, {0, 0, 0}}, q));
    EXPECT_EQ(type_of(ub), (Type{1, 2}));
    EXPECT_EQ(type_of(build_Ub(make_ub(ints({1}, q)))), (Type{1, 1}));
    EXPECT_EQ(type_of(build_Ub(make_ub(ints({1, 1, 1}, q)))), (Type{1, 3}));

    auto ubg = build_Ubg(make_ubg(ints({2, 3}, q), ints({0, 5}, q)));
    EXPECT_EQ(ubg.structure(), Matrix::from_ints({{0, 0, 2, 0}, {0, 0, 3, 15}, {0, 0, 0, 1}, {0, 0, 0, 0}}, q));
    EXPECT_EQ(type_of(ubg), (Type{1, 1, 2}));

    auto ubfg = build_Ubfg(make_ubfg(ints({2}, q), ints({3}, q), ints({5}, q)));
    EXPECT_EQ(ubfg.structure(), Matrix::from_ints({{0, 2, 6, 10}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}, q));
    EXPECT_EQ(type_of(ubfg), (Type{1, 1, 1, 1}));

    auto ubu = build_Ubu(make_ubu(ints({1, 1}, q), ints({1, 0}, q)));
    EXPECT_EQ(ubu.structure(), Matrix::from_ints({{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}}, q));
    EXPECT_EQ(type_of(ubu), (Type{1, 2, 1}));
}

TEST(Families, TypesOnRandomSpecs) {
    std::mt19937_64 rng(1);
    for (const auto& f : {qi(), f13()}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int k = 0; k < 20; ++k) {
                EXPECT_EQ(type_of(build_family(random_spec(FamilyKind::Ub, n, f, rng))), (Type{1, n}));
                EXPECT_EQ(type_of(build_family(random_spec(FamilyKind::Ubg, n, f, rng))), (Type{1, 1, n}));
                EXPECT_EQ(type_of(build_family(random_spec(FamilyKind::Ubfg, n, f, rng))), (Type{1, 1, 1, n}));
                EXPECT_EQ(type_of(build_family(random_spec(FamilyKind::Ubu, n, f, rng))), (Type{1, n, 1}));
            }
        }
    }
}

TEST(Families, SpecValidation) {
    auto q = FieldDescriptor::rationals();
    EXPECT_EQ(error_code_of([&] { make_ub(ints({1, 0}, q)); }), ErrorCode::SpecMismatch);
    EXPECT_EQ(error_code_of([&] { make_ubg(ints({1, 1}, q), ints({0}, q)); }), ErrorCode::SpecMismatch);
    EXPECT_EQ(error_code_of([&] { make_ubu(ints({1}, q), ints({0}, q)); }), ErrorCode::SpecMismatch);
    EXPECT_EQ(error_code_of([&] { build_Ubg(make_ub(ints({1}, q))); }), ErrorCode::SpecMismatch);
    EXPECT_EQ(parse_family_kind("ubfg"), FamilyKind::Ubfg);
    EXPECT_EQ(family_kind_name(FamilyKind::Ubu), "ubu");
}

TEST(Families, ScalingIsomorphisms) {
    auto f = f13();
    auto spec = make_ubfg(ints({1}, f), ints({2}, f), ints({3}, f));
    auto one = FieldElement::one(f);
    auto zero = FieldElement::zero(f);
    EXPECT_EQ(scaling_isomorphism(spec, one, zero), Matrix::identity(4, f));
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        auto s = random_spec(FamilyKind::Ubfg, 1 + k % 3, f, rng);
        auto alpha = random_element(f, rng, true);
        auto beta = random_element(f, rng);
        auto m = scaling_isomorphism(s, alpha, beta);
        ASSERT_TRUE(verify_hom(build_family(s), build_family(scaled_spec(s, alpha, beta)), m));
    }
    for (long a : {1, 3, 4, 9, 10, 12}) {
        auto alpha = FieldElement::from_int(f, a);
        auto m = scaling_isomorphism(spec, alpha, FieldElement::from_int(f, 7));
        EXPECT_TRUE(verify_hom(build_family(spec), build_family(scaled_spec(spec, alpha, FieldElement::from_int(f, 7))), m));
    }
}

TEST(Families, ClosedFieldIsomorphismTest) {
    auto q = qi();
    auto g1 = make_ubg(ints({1, 1, 1}, q), ints({0, 0, 1}, q));
    auto g2 = make_ubg(ints({1, 1, 1}, q), ints({3, 3, 5}, q));
    EXPECT_TRUE(family_iso_test(g1, g2, true));
    EXPECT_FALSE(family_iso_test(g1, make_ubg(ints({1, 1, 1}, q), ints({0, 1, 2}, q)), true));
    auto iso = FieldElement::imaginary_unit(q);
    auto nonisotropic = make_ubu(ints({1, 1}, q), ints({1, 0}, q));
    auto isotropic = make_ubu(ints({1, 1}, q), Vector{FieldElement::one(q), iso});
    EXPECT_FALSE(family_iso_test(nonisotropic, isotropic, true));
    EXPECT_EQ(error_code_of([&] { family_iso_test(g1, g2, false); }), ErrorCode::UnsupportedField);
    EXPECT_EQ(error_code_of([&] { family_iso_test(g1, nonisotropic, true); }), ErrorCode::KindMismatch);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        auto kind = static_cast<FamilyKind>(k % 4);
        std::size_t n = 1 + k % 3;
        auto a = random_spec(kind, n, q, rng), b = random_spec(kind, n, q, rng);
        ASSERT_TRUE(family_iso_test(a, a, true));
        ASSERT_EQ(family_iso_test(a, b, true), family_iso_test(b, a, true));
    }
}

TEST(Families, WitnessesAgreeWithTheTest) {
    std::mt19937_64 rng(4);
    auto f = f13();
    std::size_t found = 0;
    for (int k = 0; k < 200; ++k) {
        auto kind = static_cast<FamilyKind>(k % 4);
        std::size_t n = 1 + k % 3;
        auto a = random_spec(kind, n, f, rng);
        // A spec isomorphic over the closure: a rescaled copy of a.
        auto alpha = random_element(f, rng, true);
        FamilySpec b = a;
        for (auto& x : b.b_diag) x = x * alpha * alpha;
        std::optional<Matrix> m;
        try {
            m = family_witness(a, b);
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::SqrtUnavailable);
            continue;
        }
        ASSERT_TRUE(m) << k;
        ASSERT_TRUE(verify_hom(build_family(a), build_family(b), *m));
        ++found;
    }
    EXPECT_GT(found, 100u);
}

TEST(Families, PresentationRoundTrip) {
    std::mt19937_64 rng(5);
    auto f = f13();
    for (int k = 0; k < 200; ++k) {
        auto kind = static_cast<FamilyKind>(k % 4);
        std::size_t n = 2 + k % 3;
        auto spec = random_spec(kind, n, f, rng);
        auto e = build_family(spec);
        auto moved = permute_basis(change_basis(e, random_block_change(e, rng)), random_permutation(e.dim(), rng));
        auto p = present_as_family(moved);
        ASSERT_TRUE(p) << family_kind_name(kind);
        ASSERT_EQ(p->spec.kind, kind);
        ASSERT_EQ(change_basis(moved, p->basis), build_family(p->spec));
    }
}
