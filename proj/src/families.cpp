#include "evo/families.hpp"

#include <algorithm>
#include <numeric>

#include "evo/forms.hpp"

namespace evo {

namespace {

bool all_nonzero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
}

void require(bool ok, const std::string& message) {
    if (!ok) raise(ErrorCode::SpecMismatch, message);
}

void check_length(const std::optional<Vector>& v, std::size_t n, const char* name) {
    require(v.has_value(), std::string(name) + " is required for this family");
    require(v->size() == n, std::string(name) + " must have one entry per basis vector of U");
}

FieldDescriptor field_of(const Vector& b) {
    if (b.empty()) raise(ErrorCode::SpecMismatch, "U must have dimension at least 1");
    return b.front().field();
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool all_equal(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [&](const FieldElement& x) { return x == v.front(); });
}

// Scalars tried when a similarity norm is unconstrained by the data.
std::vector<FieldElement> free_scalar_candidates(const FieldDescriptor& field, const std::vector<FieldElement>& hints) {
    std::vector<FieldElement> out;
    if (field.is_prime_field() && field.modulus() < 4096) {
        for (std::uint64_t r = 1; r < field.modulus(); ++r) out.push_back(FieldElement::from_int(field, static_cast<long>(r)));
        return out;
    }
    out.push_back(FieldElement::one(field));
    for (const auto& h : hints) {
        if (h.is_zero()) continue;
        out.push_back(h);
        out.push_back(-h);
    }
    out.push_back(-FieldElement::one(field));
    return out;
}

// A map that sends u_k to a multiple of u_{perm[k]} with the bottom of the
// tower rescaled by mu and shifted by nu.
struct DiagonalMatch {
    std::vector<std::size_t> perm;
    FieldElement mu;
    FieldElement nu;
};

// All (perm, mu, nu) with g2[perm k] = mu g1[k] + nu (mu_power = 1) or
// g2[perm k] = mu^3 g1[k] + nu and f2[perm k] = mu f1[k] (Ubfg). mu values left
// free by the data are drawn from free_scalar_candidates.
std::vector<DiagonalMatch> diagonal_matches(const FamilySpec& s1, const FamilySpec& s2, bool closed) {
    const FieldDescriptor& field = s1.field;
    std::vector<DiagonalMatch> out;
    std::size_t n = s1.n;
    FieldElement zero = FieldElement::zero(field);
    Vector zeros(n, zero);
    const Vector& g1 = s1.g_eigs ? *s1.g_eigs : zeros;
    const Vector& g2 = s2.g_eigs ? *s2.g_eigs : zeros;
    const Vector& f1 = s1.f_eigs ? *s1.f_eigs : zeros;
    const Vector& f2 = s2.f_eigs ? *s2.f_eigs : zeros;
    bool cubic = s1.kind == FamilyKind::Ubfg;
    std::vector<FieldElement> hints;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) hints.push_back(s2.b_diag[j] / s1.b_diag[k]);
    }
    for (const auto& perm : permutations(n)) {
        // Candidate (mu, factor applied to g).
        std::vector<std::pair<FieldElement, FieldElement>> candidates;
        std::size_t with_f = n;
        for (std::size_t a = 0; a < n && with_f == n; ++a) {
            if (!f1[a].is_zero()) with_f = a;
        }
        if (with_f < n) {
            FieldElement mu = f2[perm[with_f]] / f1[with_f];
            candidates.emplace_back(mu, cubic ? mu.pow(3) : mu);
        } else if (!all_equal(g1)) {
            std::size_t a = 0;
            std::size_t b = 1;
            while (g1[b] == g1[a]) ++b;
            FieldElement ratio = (g2[perm[a]] - g2[perm[b]]) / (g1[a] - g1[b]);
            if (!cubic || closed) {
                candidates.emplace_back(cubic ? FieldElement::one(field) : ratio, ratio);
            } else {
                for (const auto& r : all_roots(ratio, 3)) candidates.emplace_back(r, ratio);
            }
        } else if (closed) {
            candidates.emplace_back(FieldElement::one(field), FieldElement::one(field));
        } else {
            for (const auto& mu : free_scalar_candidates(field, hints)) candidates.emplace_back(mu, cubic ? mu.pow(3) : mu);
        }
        for (const auto& [mu, factor] : candidates) {
            if (mu.is_zero() || factor.is_zero()) continue;
            FieldElement nu = g2[perm[0]] - factor * g1[0];
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                ok = f2[perm[k]] == mu * f1[k] && g2[perm[k]] == factor * g1[k] + nu;
            }
            if (ok) out.push_back({perm, mu, nu});
        }
    }
    return out;
}

std::optional<Matrix> diagonal_witness(const FamilySpec& s1, const FamilySpec& s2) {
    auto matches = diagonal_matches(s1, s2, false);
    if (matches.empty()) return std::nullopt;
    const FieldDescriptor& field = s1.field;
    EvolutionAlgebra e1 = build_family(s1);
    EvolutionAlgebra e2 = build_family(s2);
    std::size_t n = s1.n;
    std::size_t dim = e2.dim();
    for (const auto& match : matches) {
        std::vector<Vector> rows;
        bool roots_ok = true;
        for (std::size_t k = 0; k < n && roots_ok; ++k) {
            auto c = sqrt_if_square(match.mu * s1.b_diag[k] / s2.b_diag[match.perm[k]]);
            if (!c) {
                roots_ok = false;
                break;
            }
            rows.push_back(scale(*c, unit_vector(dim, match.perm[k], field)));
        }
        if (!roots_ok) continue;
        const FieldElement& mu = match.mu;
        switch (s1.kind) {
            case FamilyKind::Ub:
                rows.push_back(scale(mu, unit_vector(dim, n, field)));
                break;
            case FamilyKind::Ubg:
                rows.push_back(axpy(scale(mu, unit_vector(dim, n, field)), match.nu * mu, unit_vector(dim, n + 1, field)));
                rows.push_back(scale(mu * mu, unit_vector(dim, n + 1, field)));
                break;
            case FamilyKind::Ubfg:
                rows.push_back(axpy(scale(mu, unit_vector(dim, n, field)), match.nu * mu, unit_vector(dim, n + 2, field)));
                rows.push_back(scale(mu * mu, unit_vector(dim, n + 1, field)));
                rows.push_back(scale(mu.pow(4), unit_vector(dim, n + 2, field)));
                break;
            case FamilyKind::Ubu:
                break;
        }
        Matrix p = Matrix::from_rows(rows, dim, field);
        if (p.is_invertible() && is_natural_basis(e2, p) && change_basis(e2, p) == e1) return p.transpose();
    }
    raise(ErrorCode::SqrtUnavailable, "the family algebras are isomorphic over the closure but the diagonal maps need roots missing from " + field.name());
}

bool is_isotropic(const FamilySpec& s) { return DiagonalForm(s.b_diag).norm(*s.u_coords).is_zero(); }

// Basis of U adapted to u: (u, rest orthogonal) or (u, partner, rest orthogonal).
std::vector<Vector> adapted_basis(const DiagonalForm& form, const Vector& u) {
    std::vector<Vector> basis{u};
    if (!form.norm(u).is_zero()) {
        for (auto& v : form.orthogonal_basis(form.orthogonal_complement({u}))) basis.push_back(std::move(v));
        return basis;
    }
    Vector v = form.isotropic_partner(u);
    basis.push_back(v);
    for (auto& w : form.orthogonal_basis(form.orthogonal_complement({u, v}))) basis.push_back(std::move(w));
    return basis;
}

std::optional<Matrix> ubu_witness(const FamilySpec& s1, const FamilySpec& s2) {
    if (is_isotropic(s1) != is_isotropic(s2)) return std::nullopt;
    const FieldDescriptor& field = s1.field;
    std::size_t n = s1.n;
    DiagonalForm b1(s1.b_diag);
    DiagonalForm b2(s2.b_diag);
    auto h1 = adapted_basis(b1, *s1.u_coords);
    auto h2 = adapted_basis(b2, *s2.u_coords);
    bool isotropic = is_isotropic(s1);
    std::size_t fixed = isotropic ? 2 : 1;
    std::vector<FieldElement> norms;
    if (!isotropic) {
        norms.push_back(b2.norm(h2[0]) / b1.norm(h1[0]));
    } else {
        std::vector<FieldElement> hints;
        for (std::size_t k = fixed; k < n; ++k) hints.push_back(b2.norm(h2[k]) / b1.norm(h1[k]));
        norms = free_scalar_candidates(field, hints);
    }
    EvolutionAlgebra e1 = build_Ubu(s1);
    EvolutionAlgebra e2 = build_Ubu(s2);
    Matrix h1m = Matrix::from_rows(h1, n, field);
    Matrix h1_inv = h1m.inverse();
    for (const auto& m : norms) {
        std::vector<Vector> images{h2[0]};
        if (isotropic) images.push_back(scale(m, h2[1]));
        bool ok = true;
        for (std::size_t k = fixed; k < n && ok; ++k) {
            auto c = sqrt_if_square(m * b1.norm(h1[k]) / b2.norm(h2[k]));
            if (!c) ok = false;
            else images.push_back(scale(*c, h2[k]));
        }
        if (!ok) continue;
        Matrix psi = h1_inv * Matrix::from_rows(images, n, field);
        std::size_t dim = n + 2;
        std::vector<Vector> rows{unit_vector(dim, 0, field)};
        for (std::size_t k = 0; k < n; ++k) {
            Vector r = zero_vector(dim, field);
            for (std::size_t j = 0; j < n; ++j) r[1 + j] = psi(k, j);
            rows.push_back(std::move(r));
        }
        rows.push_back(scale(m, unit_vector(dim, n + 1, field)));
        Matrix p = Matrix::from_rows(rows, dim, field);
        if (p.is_invertible() && is_natural_basis(e2, p) && change_basis(e2, p) == e1) return p.transpose();
    }
    raise(ErrorCode::SqrtUnavailable, "the similarity between the forms needs roots missing from " + field.name());
}

EvolutionAlgebra structure_from_rows(std::size_t dim, const FieldDescriptor& field, const std::vector<Vector>& rows) {
    return EvolutionAlgebra(dim, Matrix::from_rows(rows, dim, field));
}

std::optional<FamilyPresentation> finish_presentation(const EvolutionAlgebra& e, FamilySpec spec, const std::vector<Vector>& rows) {
    Matrix p = Matrix::from_rows(rows, e.dim(), e.field());
    if (!p.is_invertible() || !is_natural_basis(e, p)) return std::nullopt;
    if (!(change_basis(e, p) == build_family(spec))) return std::nullopt;
    return FamilyPresentation{std::move(spec), std::move(p)};
}

}  // namespace

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Ub: return "ub";
        case FamilyKind::Ubg: return "ubg";
        case FamilyKind::Ubfg: return "ubfg";
        case FamilyKind::Ubu: return "ubu";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "ub") return FamilyKind::Ub;
    if (t == "ubg") return FamilyKind::Ubg;
    if (t == "ubfg") return FamilyKind::Ubfg;
    if (t == "ubu") return FamilyKind::Ubu;
    raise(ErrorCode::SyntaxError, "unknown family kind '" + text + "' (expected ub, ubg, ubfg or ubu)");
}

FamilySpec make_ub(Vector b) {
    FamilySpec s;
    s.kind = FamilyKind::Ub;
    s.n = b.size();
    s.field = field_of(b);
    s.b_diag = std::move(b);
    validate_spec(s);
    return s;
}

FamilySpec make_ubg(Vector b, Vector g) {
    FamilySpec s;
    s.kind = FamilyKind::Ubg;
    s.n = b.size();
    s.field = field_of(b);
    s.b_diag = std::move(b);
    s.g_eigs = std::move(g);
    validate_spec(s);
    return s;
}

FamilySpec make_ubfg(Vector b, Vector f, Vector g) {
    FamilySpec s;
    s.kind = FamilyKind::Ubfg;
    s.n = b.size();
    s.field = field_of(b);
    s.b_diag = std::move(b);
    s.f_eigs = std::move(f);
    s.g_eigs = std::move(g);
    validate_spec(s);
    return s;
}

FamilySpec make_ubu(Vector b, Vector u) {
    FamilySpec s;
    s.kind = FamilyKind::Ubu;
    s.n = b.size();
    s.field = field_of(b);
    s.b_diag = std::move(b);
    s.u_coords = std::move(u);
    validate_spec(s);
    return s;
}

void validate_spec(const FamilySpec& spec) {
    require(spec.n >= 1 && spec.b_diag.size() == spec.n, "b_diag must have n >= 1 entries");
    require(all_nonzero(spec.b_diag), "b must be nondegenerate (nonzero diagonal)");
    for (const auto& x : spec.b_diag) require(x.field() == spec.field, "b_diag entries over the wrong field");
    bool wants_f = spec.kind == FamilyKind::Ubfg;
    bool wants_g = spec.kind == FamilyKind::Ubg || spec.kind == FamilyKind::Ubfg;
    bool wants_u = spec.kind == FamilyKind::Ubu;
    if (wants_f) check_length(spec.f_eigs, spec.n, "f_eigs");
    else require(!spec.f_eigs, "f_eigs given for a family without f");
    if (wants_g) check_length(spec.g_eigs, spec.n, "g_eigs");
    else require(!spec.g_eigs, "g_eigs given for a family without g");
    if (wants_u) {
        check_length(spec.u_coords, spec.n, "u_coords");
        require(!is_zero_vector(*spec.u_coords), "u must be nonzero");
    } else {
        require(!spec.u_coords, "u_coords given for a family without u");
    }
    for (const auto* v : {&spec.f_eigs, &spec.g_eigs, &spec.u_coords}) {
        if (!*v) continue;
        for (const auto& x : **v) require(x.field() == spec.field, "family data over the wrong field");
    }
}

EvolutionAlgebra build_Ub(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::Ub) raise(ErrorCode::SpecMismatch, "build_Ub needs an Ub spec");
    validate_spec(spec);
    std::size_t n = spec.n;
    std::vector<Vector> rows(n + 1, zero_vector(n + 1, spec.field));
    for (std::size_t k = 0; k < n; ++k) rows[k][n] = spec.b_diag[k];
    return structure_from_rows(n + 1, spec.field, rows);
}

EvolutionAlgebra build_Ubg(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::Ubg) raise(ErrorCode::SpecMismatch, "build_Ubg needs an Ubg spec");
    validate_spec(spec);
    std::size_t n = spec.n;
    std::vector<Vector> rows(n + 2, zero_vector(n + 2, spec.field));
    for (std::size_t k = 0; k < n; ++k) {
        rows[k][n] = spec.b_diag[k];
        rows[k][n + 1] = spec.b_diag[k] * (*spec.g_eigs)[k];
    }
    rows[n][n + 1] = FieldElement::one(spec.field);
    return structure_from_rows(n + 2, spec.field, rows);
}

EvolutionAlgebra build_Ubfg(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::Ubfg) raise(ErrorCode::SpecMismatch, "build_Ubfg needs an Ubfg spec");
    validate_spec(spec);
    std::size_t n = spec.n;
    std::vector<Vector> rows(n + 3, zero_vector(n + 3, spec.field));
    for (std::size_t k = 0; k < n; ++k) {
        rows[k][n] = spec.b_diag[k];
        rows[k][n + 1] = spec.b_diag[k] * (*spec.f_eigs)[k];
        rows[k][n + 2] = spec.b_diag[k] * (*spec.g_eigs)[k];
    }
    rows[n][n + 1] = FieldElement::one(spec.field);
    rows[n + 1][n + 2] = FieldElement::one(spec.field);
    return structure_from_rows(n + 3, spec.field, rows);
}

EvolutionAlgebra build_Ubu(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::Ubu) raise(ErrorCode::SpecMismatch, "build_Ubu needs an Ubu spec");
    validate_spec(spec);
    std::size_t n = spec.n;
    std::vector<Vector> rows(n + 2, zero_vector(n + 2, spec.field));
    for (std::size_t k = 0; k < n; ++k) {
        rows[0][1 + k] = (*spec.u_coords)[k];
        rows[1 + k][n + 1] = spec.b_diag[k];
    }
    return structure_from_rows(n + 2, spec.field, rows);
}

EvolutionAlgebra build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Ub: return build_Ub(spec);
        case FamilyKind::Ubg: return build_Ubg(spec);
        case FamilyKind::Ubfg: return build_Ubfg(spec);
        case FamilyKind::Ubu: return build_Ubu(spec);
    }
    raise(ErrorCode::SpecMismatch, "unknown family kind");
}

FamilySpec scaled_spec(const FamilySpec& spec, const FieldElement& alpha, const FieldElement& beta) {
    if (spec.kind != FamilyKind::Ubfg) raise(ErrorCode::SpecMismatch, "scaling applies to Ubfg specs");
    if (alpha.is_zero()) raise(ErrorCode::DomainError, "alpha must be nonzero");
    FamilySpec out = spec;
    FieldElement alpha3 = alpha.pow(3);
    for (std::size_t k = 0; k < spec.n; ++k) {
        out.b_diag[k] = alpha * spec.b_diag[k];
        (*out.f_eigs)[k] = alpha * (*spec.f_eigs)[k];
        (*out.g_eigs)[k] = alpha3 * (*spec.g_eigs)[k] + beta;
    }
    return out;
}

// u_k -> u_k, w -> alpha w + alpha beta s, t -> alpha^2 t, s -> alpha^4 s.
Matrix scaling_isomorphism(const FamilySpec& spec, const FieldElement& alpha, const FieldElement& beta) {
    FamilySpec target = scaled_spec(spec, alpha, beta);
    std::size_t n = spec.n;
    std::size_t dim = n + 3;
    const FieldDescriptor& field = spec.field;
    Matrix m = Matrix::identity(dim, field);
    m(n, n) = alpha;
    m(n + 2, n) = alpha * beta;
    m(n + 1, n + 1) = alpha * alpha;
    m(n + 2, n + 2) = alpha.pow(4);
    EvolutionAlgebra source = build_Ubfg(spec);
    EvolutionAlgebra image = build_Ubfg(target);
    if (!(change_basis(image, m.transpose()) == source)) raise(ErrorCode::DomainError, "internal: scaling map is not a homomorphism");
    return m;
}

bool family_iso_test(const FamilySpec& s1, const FamilySpec& s2, bool closed_field_semantics) {
    if (s1.kind != s2.kind || s1.n != s2.n) raise(ErrorCode::KindMismatch, "family isomorphism needs equal kinds and dimensions");
    if (!(s1.field == s2.field)) raise(ErrorCode::MixedFields, "specs over different fields");
    if (!closed_field_semantics) {
        raise(ErrorCode::UnsupportedField, "the eigen-data criteria hold over algebraically closed fields; assert closed-field semantics to use them");
    }
    validate_spec(s1);
    validate_spec(s2);
    switch (s1.kind) {
        case FamilyKind::Ub: return true;
        case FamilyKind::Ubu: return is_isotropic(s1) == is_isotropic(s2);
        case FamilyKind::Ubg:
        case FamilyKind::Ubfg: return !diagonal_matches(s1, s2, true).empty();
    }
    return false;
}

std::optional<Matrix> family_witness(const FamilySpec& s1, const FamilySpec& s2) {
    if (s1.kind != s2.kind || s1.n != s2.n) raise(ErrorCode::KindMismatch, "family witness needs equal kinds and dimensions");
    if (!(s1.field == s2.field)) raise(ErrorCode::MixedFields, "specs over different fields");
    validate_spec(s1);
    validate_spec(s2);
    if (s1.kind == FamilyKind::Ubu) return ubu_witness(s1, s2);
    return diagonal_witness(s1, s2);
}

std::optional<FamilyPresentation> present_as_family(const EvolutionAlgebra& e) {
    AnnSeries series = upper_series(e);
    if (!series.nilpotent) return std::nullopt;
    const auto& t = series.type_vector;
    const auto& blocks = series.blocks;
    std::size_t dim = e.dim();
    const FieldDescriptor& field = e.field();
    if (t.empty() || t[0] != 1) return std::nullopt;
    auto unit = [&](std::size_t i) { return unit_vector(dim, i, field); };
    const auto& a = e.structure();

    if (t.size() == 2) {
        std::size_t s = blocks[0][0];
        Vector b;
        std::vector<Vector> rows;
        for (std::size_t u : blocks[1]) {
            b.push_back(a(u, s));
            rows.push_back(unit(u));
        }
        rows.push_back(unit(s));
        return finish_presentation(e, make_ub(b), rows);
    }
    if (t.size() == 3 && t[1] == 1) {
        std::size_t s = blocks[0][0];
        std::size_t w = blocks[1][0];
        FieldElement gamma0 = a(w, s);
        Vector b;
        Vector g;
        std::vector<Vector> rows;
        for (std::size_t u : blocks[2]) {
            b.push_back(a(u, w));
            g.push_back(a(u, s) / (gamma0 * a(u, w)));
            rows.push_back(unit(u));
        }
        rows.push_back(unit(w));
        rows.push_back(scale(gamma0, unit(s)));
        return finish_presentation(e, make_ubg(b, g), rows);
    }
    if (t.size() == 3 && t[2] == 1) {
        std::size_t s = blocks[0][0];
        std::size_t x = blocks[2][0];
        Vector b;
        Vector u;
        std::vector<Vector> rows{unit(x)};
        FieldElement shift = a(x, s);
        bool shifted = false;
        for (std::size_t k : blocks[1]) {
            b.push_back(a(k, s));
            u.push_back(a(x, k));
            Vector row = unit(k);
            if (!shifted && !a(x, k).is_zero()) {
                row = axpy(row, shift / a(x, k), unit(s));
                shifted = true;
            }
            rows.push_back(std::move(row));
        }
        rows.push_back(unit(s));
        return finish_presentation(e, make_ubu(b, u), rows);
    }
    if (t.size() == 4 && t[1] == 1 && t[2] == 1) {
        std::size_t w = blocks[2][0];
        Vector t_vec = square(e, unit(w));
        Vector s_vec = square(e, t_vec);
        std::vector<Vector> tower{unit(w), t_vec, s_vec};
        Vector b;
        Vector f;
        Vector g;
        std::vector<Vector> rows;
        for (std::size_t u : blocks[3]) {
            auto c = coordinates(tower, square(e, unit(u)));
            if (!c) return std::nullopt;
            b.push_back((*c)[0]);
            f.push_back((*c)[1] / (*c)[0]);
            g.push_back((*c)[2] / (*c)[0]);
            rows.push_back(unit(u));
        }
        for (auto& v : tower) rows.push_back(std::move(v));
        return finish_presentation(e, make_ubfg(b, f, g), rows);
    }
    return std::nullopt;
}

}  // namespace evo
