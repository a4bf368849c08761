#include <algorithm>

#include "classify_internal.hpp"

namespace evo::detail {

namespace {

struct Candidate {
    std::vector<Vector> rows;
    Vector params;
};

using Candidates = std::vector<Candidate>;

// Shifts the non-annihilator rows by combinations of the annihilator rows so
// that the algebra in the new basis is exactly t. The annihilator rows are
// those whose template square vanishes.
std::optional<Matrix> fixup(const EvolutionAlgebra& e, std::vector<Vector> rows, const Matrix& t) {
    std::size_t n = e.dim();
    const FieldDescriptor& field = e.field();
    if (!Matrix::from_rows(rows, n, field).is_invertible()) return std::nullopt;
    Indices ann;
    Indices live;
    for (std::size_t j = 0; j < n; ++j) (is_zero_vector(t.row(j)) ? ann : live).push_back(j);
    std::vector<Vector> ann_rows;
    for (std::size_t a : ann) ann_rows.push_back(rows[a]);
    Matrix residual(n, ann.size(), field);
    for (std::size_t j = 0; j < n; ++j) {
        Vector r = square(e, rows[j]);
        for (std::size_t k = 0; k < n; ++k) {
            if (!t(j, k).is_zero()) r = axpy(r, -t(j, k), rows[k]);
        }
        auto c = coordinates(ann_rows, r);
        if (!c) return std::nullopt;
        for (std::size_t a = 0; a < ann.size(); ++a) residual(j, a) = (*c)[a];
    }
    Matrix system(n, live.size(), field);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < live.size(); ++l) system(j, l) = t(j, live[l]);
    }
    std::vector<Vector> shifted = rows;
    for (std::size_t a = 0; a < ann.size(); ++a) {
        auto kappa = solve(system, residual.col(a));
        if (!kappa) return std::nullopt;
        for (std::size_t l = 0; l < live.size(); ++l) shifted[live[l]] = axpy(shifted[live[l]], (*kappa)[l], rows[ann[a]]);
    }
    Matrix p = Matrix::from_rows(shifted, n, field);
    if (!p.is_invertible() || !is_natural_basis(e, p)) return std::nullopt;
    if (change_basis(e, p).structure() != t) return std::nullopt;
    return p;
}

FieldElement fe(const FieldDescriptor& f, long v) { return FieldElement::from_int(f, v); }

Candidates candidates_23(const EvolutionAlgebra& e, const AnnSeries& s) {
    Candidates out;
    std::size_t n = e.dim();
    const auto& top = s.blocks[1];
    auto unit = [&](std::size_t i) { return unit_vector(n, i, e.field()); };
    std::vector<std::size_t> perm{0, 1, 2};
    do {
        std::size_t ia = top[perm[0]], ib = top[perm[1]], ie = top[perm[2]];
        Vector qa = e.square_of_basis(ia);
        Vector qe = e.square_of_basis(ie);
        auto c = coordinates({qa, qe}, e.square_of_basis(ib));
        if (!c) continue;
        for (const auto& ra : square_roots((*c)[0])) {
            for (const auto& re : square_roots((*c)[1])) {
                out.push_back({{scale(ra, unit(ia)), unit(ib), scale((*c)[0], qa), scale((*c)[1], qe), scale(re, unit(ie))}, {}});
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Candidates candidates_221(const EvolutionAlgebra& e, const AnnSeries& s) {
    std::size_t n = e.dim();
    auto unit = [&](std::size_t i) { return unit_vector(n, i, e.field()); };
    std::size_t x = s.blocks[2][0];
    Vector xs = e.square_of_basis(x);
    Vector b = scale(xs[s.blocks[1][0]], unit(s.blocks[1][0]));
    Vector c = scale(xs[s.blocks[1][1]], unit(s.blocks[1][1]));
    return {{{unit(x), b, c, square(e, b), square(e, c)}, {}}};
}

Candidates candidates_212(const EvolutionAlgebra& e, const AnnSeries& s) {
    Candidates out;
    std::size_t n = e.dim();
    auto unit = [&](std::size_t i) { return unit_vector(n, i, e.field()); };
    std::size_t mid = s.blocks[1][0];
    for (std::size_t k = 0; k < 2; ++k) {
        std::size_t i = s.blocks[2][k];
        std::size_t j = s.blocks[2][1 - k];
        FieldElement ratio = e.structure()(i, mid) / e.structure()(j, mid);
        for (const auto& tau : square_roots(ratio)) {
            Vector a = unit(i);
            Vector b = scale(tau, unit(j));
            Vector c = square(e, a);
            out.push_back({{a, b, c, square(e, c), axpy(square(e, b), fe(e.field(), -1), c)}, {}});
        }
    }
    return out;
}

Candidates candidates_122(const EvolutionAlgebra& e, const AnnSeries& s, int variant) {
    Candidates out;
    const FieldDescriptor& f = e.field();
    std::size_t n = e.dim();
    auto unit = [&](std::size_t i) { return unit_vector(n, i, f); };
    Data122 d = data_122(e, s);
    const BlockForm& b = d.form;
    FieldElement half = fe(f, 2).inverse();
    if (variant == 6) {
        FieldElement two_i = fe(f, 2) * FieldElement::imaginary_unit(f);
        Vector u = scale(half, add(d.a, d.b));
        Vector v = scale(two_i.inverse(), axpy(d.a, fe(f, -1), d.b));
        out.push_back({{unit(d.x), unit(d.y), u, v, square(e, u)}, {}});
        return out;
    }
    if (variant == 1) {
        for (int swap = 0; swap < 2; ++swap) {
            std::size_t xi = swap ? d.y : d.x;
            std::size_t yi = swap ? d.x : d.y;
            const Vector& a = swap ? d.b : d.a;
            const Vector& other = swap ? d.a : d.b;
            if (b.norm(a).is_zero()) continue;
            Vector v0 = b.perp(a);
            auto [eps, beta0] = b.coords(other, a, v0);
            for (const auto& c : square_roots(b.norm(a) / b.norm(v0))) {
                for (const auto& t : square_roots(c / beta0)) {
                    out.push_back({{unit(xi), scale(t, unit(yi)), a, scale(c, v0), square(e, a)}, {t * t * eps}});
                }
            }
        }
        return out;
    }
    // Here b = kappa a.
    std::size_t lead = b.idx[d.a[b.idx[0]].is_zero() ? 1 : 0];
    FieldElement kappa = d.b[lead] / d.a[lead];
    FieldElement gamma = d.nu / kappa - d.mu;
    if (variant == 2 || variant == 3) {
        Vector v0 = b.perp(d.a);
        std::vector<FieldElement> rhos{FieldElement::one(f), -FieldElement::one(f)};
        if (variant == 3) rhos = square_roots(gamma / b.norm(d.a));
        for (const auto& rho : rhos) {
            FieldElement r2 = rho * rho;
            for (const auto& t : square_roots(kappa.inverse())) {
                for (const auto& c : square_roots(b.norm(d.a) / b.norm(v0))) {
                    Vector u = scale(r2, d.a);
                    out.push_back({{scale(rho, unit(d.x)), scale(rho * t, unit(d.y)), u, scale(r2 * c, v0), square(e, u)}, {}});
                }
            }
        }
        return out;
    }
    FieldElement k = variant == 4 ? fe(f, 2) : fe(f, 2) * gamma;
    Vector dd = b.partner(d.a);
    FieldElement two_i = fe(f, 2) * FieldElement::imaginary_unit(f);
    Vector u = scale(half, axpy(d.a, k, dd));
    Vector v = scale(two_i.inverse(), axpy(d.a, -k, dd));
    for (const auto& t : square_roots(kappa.inverse())) {
        out.push_back({{unit(d.x), scale(t, unit(d.y)), u, v, square(e, u)}, {}});
    }
    return out;
}

Candidates candidates_1211(const EvolutionAlgebra& e, const AnnSeries& s, int variant) {
    Candidates out;
    const FieldDescriptor& f = e.field();
    std::size_t n = e.dim();
    auto unit = [&](std::size_t i) { return unit_vector(n, i, f); };
    Data1211 d = data_1211(e, s);
    const BlockForm& b = d.form;
    FieldElement one = FieldElement::one(f);
    FieldElement xi2 = d.xi * d.xi;
    if (variant <= 3) {
        Vector cp = b.perp(d.c);
        auto [eps, theta] = b.coords(d.a, d.c, cp);
        for (const auto& delta : square_roots(b.norm(d.c) / b.norm(cp))) {
            FieldElement sigma2 = variant == 1 ? one : variant == 2 ? theta / (xi2 * delta) : eps / xi2;
            for (const auto& sigma : square_roots(sigma2)) {
                FieldElement rho = sigma2 * d.xi;
                Vector u = scale(rho * rho, d.c);
                Vector params;
                if (variant == 3) params.push_back(theta / (eps * delta));
                out.push_back({{scale(sigma, unit(d.x)), scale(rho, unit(d.y)), u, scale(rho * rho * delta, cp), square(e, u)}, params});
            }
        }
        return out;
    }
    Vector dd = b.partner(d.c);
    auto [m0, n0] = b.coords(d.a, d.c, dd);
    FieldElement sigma2 = one;
    FieldElement k = one;
    if (variant == 5) {
        sigma2 = fe(f, 2) * m0 / xi2;
        k = fe(f, 2) * sigma2 * n0;
    } else if (variant == 6) {
        sigma2 = m0 / xi2;
    } else if (variant == 7) {
        k = n0;
    }
    FieldElement half = fe(f, 2).inverse();
    FieldElement two_i = fe(f, 2) * FieldElement::imaginary_unit(f);
    for (const auto& sigma : square_roots(sigma2)) {
        FieldElement rho = sigma2 * d.xi;
        Vector cc = scale(rho * rho, d.c);
        Vector u = scale(half, axpy(cc, k, dd));
        Vector v = scale(two_i.inverse(), axpy(cc, -k, dd));
        out.push_back({{scale(sigma, unit(d.x)), scale(rho, unit(d.y)), u, v, square(e, u)}, {}});
    }
    return out;
}

Candidates candidates_1121(const EvolutionAlgebra& e, const AnnSeries& s, int variant) {
    Candidates out;
    const FieldDescriptor& f = e.field();
    std::size_t n = e.dim();
    auto unit = [&](std::size_t i) { return unit_vector(n, i, f); };
    Data1121 d = data_1121(e, s);
    const BlockForm& b = d.form;
    FieldElement one = FieldElement::one(f);
    auto push = [&](const Vector& x, const Vector& u1, const Vector& u2, Vector params) {
        Vector w = square(e, u1);
        out.push_back({{x, u1, u2, w, square(e, w)}, std::move(params)});
    };
    if (variant == 1 || variant == 2) {
        Vector pp = b.perp(d.p);
        FieldElement sigma2 = variant == 1 ? one : d.zeta / b.norm(d.p);
        for (const auto& sigma : square_roots(sigma2)) {
            for (const auto& c : square_roots(b.norm(d.p) / b.norm(pp))) {
                push(scale(sigma, unit(d.x)), scale(sigma2, d.p), scale(sigma2 * c, pp), {});
            }
        }
        return out;
    }
    if (variant == 3 || variant == 4) {
        Vector dd = b.partner(d.p);
        FieldElement k = variant == 3 ? fe(f, 2) : fe(f, 2) * d.zeta;
        FieldElement two_i = fe(f, 2) * FieldElement::imaginary_unit(f);
        push(unit(d.x), scale(fe(f, 2).inverse(), axpy(d.p, k, dd)), scale(two_i.inverse(), axpy(d.p, -k, dd)), {});
        return out;
    }
    const Indices& u = b.idx;
    for (std::size_t k = 0; k < 2; ++k) {
        std::size_t l = 1 - k;
        const FieldElement& pk = d.p[u[k]];
        const FieldElement& pl = d.p[u[l]];
        if (variant == 5 && (pk.is_zero() || !pl.is_zero())) continue;
        FieldElement m = d.g[l] - d.g[k];
        for (const auto& ck : square_roots(m / b.lam[k])) {
            for (const auto& cl : square_roots(m / b.lam[l])) {
                FieldElement sigma2 = variant == 5 ? ck / pk : cl / pl;
                Vector params;
                if (variant == 5) params = {ck * d.zeta / (pk * m)};
                else params = {cl * pk / (pl * ck), cl * d.zeta / (pl * m)};
                for (const auto& sigma : square_roots(sigma2)) {
                    push(scale(sigma, unit(d.x)), scale(ck, unit(u[k])), scale(cl, unit(u[l])), params);
                }
            }
        }
    }
    return out;
}

Candidates candidates_chain(const EvolutionAlgebra& e, const AnnSeries& s, int variant) {
    Candidates out;
    const FieldDescriptor& f = e.field();
    std::size_t n = e.dim();
    DataChain d = data_chain(e, s);
    std::vector<FieldElement> ts;
    switch (variant) {
        case 1: ts = {FieldElement::one(f)}; break;
        case 2: ts = all_roots(d.b0, 3); break;
        case 3: ts = {d.a0}; break;
        default: ts = square_roots(d.c0); break;
    }
    for (const auto& t : ts) {
        Vector params;
        if (variant == 3) params = {d.b0 / t.pow(3)};
        if (variant == 4) params = {d.a0 / t, d.b0 / t.pow(3)};
        for (const auto& sigma : square_roots(t)) {
            std::vector<Vector> rows{scale(sigma, unit_vector(n, d.order[0], f))};
            for (std::size_t k = 1; k < 5; ++k) {
                // Each vector is the leading part of the square of the previous one.
                Vector sq = square(e, rows.back());
                rows.push_back(scale(sq[d.order[k]], unit_vector(n, d.order[k], f)));
            }
            out.push_back({rows, params});
        }
    }
    return out;
}

std::optional<Matrix> normalize_family(const EvolutionAlgebra& e, const CanonicalLabel& label) {
    auto pe = present_as_family(e);
    EvolutionAlgebra t = template_algebra(label, e.field());
    auto pt = present_as_family(t);
    if (!pe || !pt) return std::nullopt;
    std::optional<Matrix> m;
    try {
        m = family_witness(pt->spec, pe->spec);
    } catch (const Error& err) {
        if (err.code() == ErrorCode::SqrtUnavailable) return std::nullopt;
        throw;
    }
    if (!m) return std::nullopt;
    Matrix q = m->transpose() * pe->basis;
    return pt->basis.inverse() * q;
}

}  // namespace

std::optional<Matrix> normalize_indecomposable(const EvolutionAlgebra& e, const CanonicalLabel& label) {
    const FieldDescriptor& f = e.field();
    std::size_t n = e.dim();
    if (n == 1) return Matrix::identity(1, f);
    const ClassEntry& entry = entry_of(label);
    if (entry.needs_i && !f.has_i()) return std::nullopt;
    AnnSeries s = upper_series(e);
    using T = std::vector<std::size_t>;
    const T& t = s.type_vector;
    Candidates cands;
    if (t == T{2, 3}) cands = candidates_23(e, s);
    else if (t == T{2, 2, 1}) cands = candidates_221(e, s);
    else if (t == T{2, 1, 2}) cands = candidates_212(e, s);
    else if (t == T{1, 2, 2}) cands = candidates_122(e, s, label.variant);
    else if (t == T{1, 2, 1, 1}) cands = candidates_1211(e, s, label.variant);
    else if (t == T{1, 1, 2, 1}) cands = candidates_1121(e, s, label.variant);
    else if (t == T{1, 1, 1, 1, 1}) cands = candidates_chain(e, s, label.variant);
    else {
        auto p = normalize_family(e, label);
        if (p && change_basis(e, *p) == template_algebra(label, f)) return p;
        return std::nullopt;
    }
    Matrix target = template_algebra(label, f).structure();
    for (const auto& c : cands) {
        if (c.params != label.params) continue;
        if (auto p = fixup(e, c.rows, target)) return p;
    }
    return std::nullopt;
}

}  // namespace evo::detail
