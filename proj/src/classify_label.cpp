#include <set>

#include "classify_internal.hpp"
#include "evo/forms.hpp"

namespace evo {

namespace detail {

FieldElement BlockForm::operator()(const Vector& v, const Vector& w) const {
    FieldElement out = FieldElement::zero(lam.front().field());
    for (std::size_t k = 0; k < idx.size(); ++k) out += lam[k] * v[idx[k]] * w[idx[k]];
    return out;
}

Vector BlockForm::part(const Vector& v) const {
    Vector out = zero_vector(v.size(), lam.front().field());
    for (std::size_t i : idx) out[i] = v[i];
    return out;
}

Vector BlockForm::perp(const Vector& v) const {
    Vector out = zero_vector(v.size(), lam.front().field());
    out[idx[0]] = -lam[1] * v[idx[1]];
    out[idx[1]] = lam[0] * v[idx[0]];
    return out;
}

Vector BlockForm::partner(const Vector& c) const {
    Vector d = zero_vector(c.size(), lam.front().field());
    d[idx[0]] = c[idx[0]];
    d[idx[1]] = -c[idx[1]];
    return scale((*this)(c, d).inverse(), d);
}

std::pair<FieldElement, FieldElement> BlockForm::coords(const Vector& v, const Vector& c, const Vector& d) const {
    auto x = coordinates({part(c), part(d)}, part(v));
    if (!x) raise(ErrorCode::DomainError, "internal: vector outside the plane");
    return {(*x)[0], (*x)[1]};
}

BlockForm form_of(const EvolutionAlgebra& e, const Indices& block, std::size_t target) {
    BlockForm f;
    f.idx = block;
    for (std::size_t k : block) f.lam.push_back(e.structure()(k, target));
    return f;
}

Data122 data_122(const EvolutionAlgebra& e, const AnnSeries& s) {
    Data122 d;
    d.s = s.blocks[0][0];
    d.x = s.blocks[2][0];
    d.y = s.blocks[2][1];
    d.form = form_of(e, s.blocks[1], d.s);
    Vector xs = e.square_of_basis(d.x);
    Vector ys = e.square_of_basis(d.y);
    d.a = d.form.part(xs);
    d.b = d.form.part(ys);
    d.mu = xs[d.s];
    d.nu = ys[d.s];
    return d;
}

Data1211 data_1211(const EvolutionAlgebra& e, const AnnSeries& s) {
    Data1211 d;
    d.s = s.blocks[0][0];
    d.y = s.blocks[2][0];
    d.x = s.blocks[3][0];
    d.form = form_of(e, s.blocks[1], d.s);
    Vector xs = e.square_of_basis(d.x);
    d.xi = xs[d.y];
    d.a = d.form.part(xs);
    d.c = d.form.part(e.square_of_basis(d.y));
    return d;
}

Data1121 data_1121(const EvolutionAlgebra& e, const AnnSeries& s) {
    Data1121 d;
    d.s = s.blocks[0][0];
    d.w = s.blocks[1][0];
    d.x = s.blocks[3][0];
    d.form = form_of(e, s.blocks[2], d.w);
    d.gamma0 = e.structure()(d.w, d.s);
    for (std::size_t k = 0; k < 2; ++k) {
        d.nu.push_back(e.structure()(s.blocks[2][k], d.s));
        d.g.push_back(d.nu[k] / (d.gamma0 * d.form.lam[k]));
    }
    Vector xs = e.square_of_basis(d.x);
    d.p = d.form.part(xs);
    d.zeta = xs[d.w];
    return d;
}

DataChain data_chain(const EvolutionAlgebra& e, const AnnSeries& s) {
    DataChain d;
    for (std::size_t k = 5; k-- > 0;) d.order.push_back(s.blocks[k][0]);
    const Matrix& m = e.structure();
    auto at = [&](std::size_t r, std::size_t c) { return m(d.order[r], d.order[c]); };
    FieldElement a1 = at(0, 1), a2 = at(0, 2), a3 = at(0, 3);
    FieldElement b1 = at(1, 2), b2 = at(1, 3);
    FieldElement c1 = at(2, 3);
    d.a0 = a2 / (a1 * a1 * b1);
    d.b0 = a3 / (a1.pow(4) * b1 * b1 * c1);
    d.c0 = b2 / (a1 * a1 * b1 * b1 * c1);
    return d;
}

std::vector<FieldElement> square_roots(const FieldElement& a) {
    auto r = sqrt_if_square(a);
    if (!r) return {};
    if (r->is_zero()) return {*r};
    return {*r, -*r};
}

FieldElement need_sqrt(const FieldElement& a, const char* what) {
    auto r = sqrt_if_square(a);
    if (!r) raise(ErrorCode::SqrtUnavailable, std::string("the parameter ") + what + " needs the square root of " + a.to_string());
    return *r;
}

}  // namespace detail

namespace {

using namespace detail;

CanonicalLabel label_for(std::size_t dim, const std::vector<std::size_t>& type, int variant, Vector params = {}) {
    return make_label(find_entry(dim, type, variant), params);
}

std::size_t distinct_count(const Vector& v) {
    std::set<FieldElement, TotalOrderLess> s(v.begin(), v.end());
    return s.size();
}

CanonicalLabel label_family(const FamilySpec& spec, std::size_t dim, const std::vector<std::size_t>& type) {
    const FieldDescriptor& field = spec.field;
    switch (spec.kind) {
        case FamilyKind::Ub: return label_for(dim, type, 1);
        case FamilyKind::Ubu: return label_for(dim, type, DiagonalForm(spec.b_diag).norm(*spec.u_coords).is_zero() ? 2 : 1);
        case FamilyKind::Ubg: {
            const Vector& g = *spec.g_eigs;
            std::size_t distinct = distinct_count(g);
            if (spec.n < 3) return label_for(dim, type, static_cast<int>(distinct));
            if (distinct < 3) return label_for(dim, type, static_cast<int>(distinct));
            return label_for(dim, type, 3, {(g[0] - g[1]) / (g[2] - g[1])});
        }
        case FamilyKind::Ubfg: {
            const Vector& f = *spec.f_eigs;
            const Vector& g = *spec.g_eigs;
            if (spec.n == 1) return label_for(dim, type, f[0].is_zero() ? 1 : 2);
            std::size_t nonzero = (f[0].is_zero() ? 0 : 1) + (f[1].is_zero() ? 0 : 1);
            if (nonzero == 0) return label_for(dim, type, g[0] == g[1] ? 1 : 2);
            std::size_t k = f[0].is_zero() ? 1 : 0;
            std::size_t l = 1 - k;
            FieldElement gamma = (g[k] - g[l]) / f[k].pow(3);
            if (nonzero == 1) return label_for(dim, type, 3, {gamma});
            return label_for(dim, type, 4, {f[l] / f[k], gamma});
        }
    }
    (void)field;
    raise(ErrorCode::DomainError, "unknown family kind");
}

CanonicalLabel label_122(const EvolutionAlgebra& e, const AnnSeries& s) {
    static const std::vector<std::size_t> type{1, 2, 2};
    Data122 d = data_122(e, s);
    const BlockForm& b = d.form;
    std::size_t n = e.dim();
    bool independent = rank(Matrix::from_rows({d.a, d.b}, n, e.field())) == 2;
    if (independent) {
        if (b.norm(d.a).is_zero() && b.norm(d.b).is_zero()) return label_for(5, type, 6);
        FieldElement ab = b(d.a, d.b);
        FieldElement alpha2 = ab * ab / (b.norm(d.a) * b.norm(d.b) - ab * ab);
        return label_for(5, type, 1, {need_sqrt(alpha2, "alpha")});
    }
    Vector xs = e.square_of_basis(d.x);
    Vector ys = e.square_of_basis(d.y);
    bool squares_dependent = rank(Matrix::from_rows({xs, ys}, n, e.field())) == 1;
    bool isotropic = b.norm(d.a).is_zero();
    int variant = isotropic ? (squares_dependent ? 4 : 5) : (squares_dependent ? 2 : 3);
    return label_for(5, type, variant);
}

CanonicalLabel label_1211(const EvolutionAlgebra& e, const AnnSeries& s) {
    static const std::vector<std::size_t> type{1, 2, 1, 1};
    Data1211 d = data_1211(e, s);
    const BlockForm& b = d.form;
    bool a_zero = is_zero_vector(d.a);
    if (!b.norm(d.c).is_zero()) {
        if (a_zero) return label_for(5, type, 1);
        FieldElement ac = b(d.a, d.c);
        if (ac.is_zero()) return label_for(5, type, 2);
        FieldElement beta2 = b.norm(d.a) * b.norm(d.c) / (ac * ac) - FieldElement::one(e.field());
        return label_for(5, type, 3, {need_sqrt(beta2, "beta")});
    }
    if (a_zero) return label_for(5, type, 4);
    if (!b.norm(d.a).is_zero()) return label_for(5, type, 5);
    bool parallel = rank(Matrix::from_rows({d.a, d.c}, e.dim(), e.field())) == 1;
    return label_for(5, type, parallel ? 6 : 7);
}

CanonicalLabel label_1121(const EvolutionAlgebra& e, const AnnSeries& s) {
    static const std::vector<std::size_t> type{1, 1, 2, 1};
    Data1121 d = data_1121(e, s);
    const BlockForm& b = d.form;
    if (d.g[0] == d.g[1]) {
        bool isotropic = b.norm(d.p).is_zero();
        int variant = (isotropic ? 3 : 1) + (d.zeta.is_zero() ? 0 : 1);
        return label_for(5, type, variant);
    }
    const Indices& u = b.idx;
    std::vector<std::size_t> nonzero;
    for (std::size_t k = 0; k < 2; ++k) {
        if (!d.p[u[k]].is_zero()) nonzero.push_back(k);
    }
    if (nonzero.size() == 1) {
        std::size_t k = nonzero[0];
        std::size_t l = 1 - k;
        FieldElement m = d.g[l] - d.g[k];
        FieldElement alpha2 = d.zeta * d.zeta / (b.lam[k] * d.p[u[k]] * d.p[u[k]] * m);
        return label_for(5, type, 5, {need_sqrt(alpha2, "alpha")});
    }
    FieldElement m = d.g[1] - d.g[0];
    FieldElement lp0 = b.lam[0] * d.p[u[0]] * d.p[u[0]];
    FieldElement lp1 = b.lam[1] * d.p[u[1]] * d.p[u[1]];
    FieldElement beta = need_sqrt(lp0 / lp1, "beta");
    FieldElement gamma = need_sqrt(d.zeta * d.zeta / (lp1 * m), "gamma");
    return label_for(5, type, 6, {beta, gamma});
}

CanonicalLabel label_chain(const EvolutionAlgebra& e, const AnnSeries& s) {
    static const std::vector<std::size_t> type{1, 1, 1, 1, 1};
    DataChain d = data_chain(e, s);
    if (!d.c0.is_zero()) {
        FieldElement t = need_sqrt(d.c0, "t");
        return label_for(5, type, 4, {d.a0 / t, d.b0 / t.pow(3)});
    }
    if (!d.a0.is_zero()) return label_for(5, type, 3, {d.b0 / d.a0.pow(3)});
    return label_for(5, type, d.b0.is_zero() ? 1 : 2);
}

}  // namespace

CanonicalLabel label_indecomposable(const EvolutionAlgebra& e) {
    std::size_t n = e.dim();
    if (n < 1 || n > 5) raise(ErrorCode::UnsupportedDim, "the classification covers dimensions 1 to 5, not " + std::to_string(n));
    AnnSeries s = upper_series(e);
    if (!s.nilpotent) raise(ErrorCode::NotNilpotent, "only nilpotent algebras are classified");
    const auto& t = s.type_vector;
    if (n == 1) return label_for(1, t, 1);
    if (auto fam = present_as_family(e)) return label_family(fam->spec, n, t);
    using T = std::vector<std::size_t>;
    if (t == T{2, 3} || t == T{2, 2, 1} || t == T{2, 1, 2}) return label_for(5, t, 1);
    if (t == T{1, 2, 2}) return label_122(e, s);
    if (t == T{1, 2, 1, 1}) return label_1211(e, s);
    if (t == T{1, 1, 2, 1}) return label_1121(e, s);
    if (t == T{1, 1, 1, 1, 1}) return label_chain(e, s);
    raise(ErrorCode::DomainError, "no indecomposable class of type " + format_type(t) + " in dimension " + std::to_string(n));
}

}  // namespace evo
