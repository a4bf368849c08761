#include "evo/evolution.hpp"

#include <algorithm>
#include <numeric>

namespace evo {

EvolutionAlgebra::EvolutionAlgebra(std::size_t dim, const Matrix& structure) : dim_(dim), structure_(structure) {
    if (structure.rows() != dim || structure.cols() != dim) raise(ErrorCode::ShapeError, "structure matrix must be square of the algebra's dimension");
}

EvolutionAlgebra new_algebra(std::size_t n, const Matrix& structure, const FieldDescriptor& field) {
    if (structure.rows() != n || structure.cols() != n) {
        raise(ErrorCode::ShapeError, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " structure matrix");
    }
    if (!(structure.field() == field)) raise(ErrorCode::ShapeError, "structure entries are not over " + field.name());
    return EvolutionAlgebra(n, structure);
}

Vector multiply(const EvolutionAlgebra& e, const Vector& x, const Vector& y) {
    std::size_t n = e.dim();
    if (x.size() != n || y.size() != n) raise(ErrorCode::ShapeError, "vector length differs from the algebra's dimension");
    Vector out = zero_vector(n, e.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero() || y[i].is_zero()) continue;
        FieldElement c = x[i] * y[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (!e.structure()(i, j).is_zero()) out[j] += c * e.structure()(i, j);
        }
    }
    return out;
}

Vector square(const EvolutionAlgebra& e, const Vector& x) { return multiply(e, x, x); }

Subspace annihilator(const EvolutionAlgebra& e) {
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < e.dim(); ++i) {
        if (is_zero_vector(e.square_of_basis(i))) zero_rows.push_back(i);
    }
    return Subspace::span_of_units(zero_rows, e.dim(), e.field());
}

EvolutionAlgebra quotient_by_block(const EvolutionAlgebra& e, const std::vector<std::size_t>& keep) {
    std::size_t n = e.dim();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) raise(ErrorCode::ShapeError, "kept index out of range");
        kept[k] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (kept[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (kept[j] && !e.structure()(i, j).is_zero()) {
                raise(ErrorCode::NotAnIdeal, "discarded vector " + std::to_string(i + 1) + " squares outside the discarded span");
            }
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
        if (kept[i]) order.push_back(i);
    }
    Matrix m(order.size(), order.size(), e.field());
    for (std::size_t r = 0; r < order.size(); ++r) {
        for (std::size_t c = 0; c < order.size(); ++c) m(r, c) = e.structure()(order[r], order[c]);
    }
    return EvolutionAlgebra(order.size(), m);
}

std::vector<std::size_t> AnnSeries::block_with_ann(std::size_t i) const {
    std::vector<std::size_t> out = blocks.at(0);
    if (i > 0) out.insert(out.end(), blocks.at(i).begin(), blocks.at(i).end());
    std::sort(out.begin(), out.end());
    return out;
}

AnnSeries upper_series(const EvolutionAlgebra& e) {
    std::size_t n = e.dim();
    AnnSeries series;
    std::vector<bool> in_ann(n, false);
    std::vector<std::size_t> members;
    for (;;) {
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_ann[i]) continue;
            bool inside = true;
            for (std::size_t j = 0; j < n && inside; ++j) {
                if (!in_ann[j] && !e.structure()(i, j).is_zero()) inside = false;
            }
            if (inside) block.push_back(i);
        }
        if (block.empty()) break;
        for (std::size_t i : block) {
            in_ann[i] = true;
            members.push_back(i);
        }
        series.chain.push_back(Subspace::span_of_units(members, n, e.field()));
        series.type_vector.push_back(block.size());
        series.blocks.push_back(std::move(block));
    }
    if (series.chain.empty()) series.chain.push_back(Subspace::zero(n, e.field()));
    series.nilpotent = members.size() == n;
    return series;
}

std::string format_type(const std::vector<std::size_t>& type_vector) {
    std::string out = "[";
    for (std::size_t k = 0; k < type_vector.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(type_vector[k]);
    }
    return out + "]";
}

Subspace product_subspace(const EvolutionAlgebra& e, const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != e.dim() || t.ambient_dim() != e.dim()) raise(ErrorCode::AmbientMismatch, "subspace is not in the algebra");
    std::vector<Vector> products;
    auto sb = s.basis_vectors();
    auto tb = t.basis_vectors();
    for (const auto& x : sb) {
        for (const auto& y : tb) {
            Vector p = multiply(e, x, y);
            if (!is_zero_vector(p)) products.push_back(std::move(p));
        }
    }
    return Subspace::span(products, e.dim(), e.field());
}

std::vector<Subspace> power_subspaces(const EvolutionAlgebra& e, PowerKind kind, std::size_t max_k) {
    if (max_k < 1) raise(ErrorCode::DomainError, "max_k must be at least 1");
    std::vector<Subspace> powers{Subspace::full(e.dim(), e.field())};
    while (powers.size() < max_k && !powers.back().is_zero()) {
        Subspace next;
        if (kind == PowerKind::Right) {
            next = product_subspace(e, powers.back(), powers.front());
        } else {
            std::size_t k = powers.size();  // building E^{k+1}
            next = Subspace::zero(e.dim(), e.field());
            for (std::size_t i = 1; i <= k; ++i) {
                next = subspace_sum(next, product_subspace(e, powers[i - 1], powers[k - i]));
            }
        }
        // A repeated right power is a fixed point; a plenary chain can pause
        // (E^2 E^2 may keep E^4 = E^3) and still reach zero later.
        if (kind == PowerKind::Right && next == powers.back()) break;
        powers.push_back(std::move(next));
    }
    return powers;
}

bool power_chain_reaches_zero(const EvolutionAlgebra& e, PowerKind kind) {
    // E^k lies in ann^{r - floor(log2 k)}, so E^{2^n} = 0 for nilpotent E.
    std::size_t bound = kind == PowerKind::Right ? e.dim() + 2 : (std::size_t{1} << std::min<std::size_t>(e.dim(), 20)) + 1;
    return power_subspaces(e, kind, bound).back().is_zero();
}

Subspace relative_annihilator(const EvolutionAlgebra& e, const Subspace& inside, const Subspace& against) {
    if (inside.ambient_dim() != e.dim() || against.ambient_dim() != e.dim()) raise(ErrorCode::AmbientMismatch, "subspace is not in the algebra");
    auto sb = inside.basis_vectors();
    auto tb = against.basis_vectors();
    if (sb.empty() || tb.empty()) return inside;
    // Unknown coefficients c_j of x = sum c_j s_j; each product s_j * t_l
    // contributes one column block to the constraint matrix.
    std::size_t n = e.dim();
    Matrix constraints(tb.size() * n, sb.size(), e.field());
    for (std::size_t j = 0; j < sb.size(); ++j) {
        for (std::size_t l = 0; l < tb.size(); ++l) {
            Vector p = multiply(e, sb[j], tb[l]);
            for (std::size_t c = 0; c < n; ++c) constraints(l * n + c, j) = p[c];
        }
    }
    std::vector<Vector> result;
    for (const auto& coeffs : kernel(constraints).basis_vectors()) {
        Vector x = zero_vector(n, e.field());
        for (std::size_t j = 0; j < sb.size(); ++j) x = axpy(x, coeffs[j], sb[j]);
        result.push_back(std::move(x));
    }
    return Subspace::span(result, n, e.field());
}

WeightedGraph graph_of(const EvolutionAlgebra& e) {
    WeightedGraph g;
    g.vertex_count = e.dim();
    for (std::size_t i = 0; i < e.dim(); ++i) {
        for (std::size_t j = 0; j < e.dim(); ++j) {
            if (!e.structure()(i, j).is_zero()) g.edges.push_back({i, j, e.structure()(i, j)});
        }
    }
    return g;
}

std::vector<Component> split_components(const EvolutionAlgebra& e) {
    std::size_t n = e.dim();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& edge : graph_of(e).edges) {
        std::size_t a = find(edge.from);
        std::size_t b = find(edge.to);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<Component> comps;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = find(i);
        if (slot[root] == n) {
            slot[root] = comps.size();
            comps.emplace_back();
        }
        comps[slot[root]].indices.push_back(i);
    }
    for (auto& c : comps) {
        Matrix m(c.indices.size(), c.indices.size(), e.field());
        for (std::size_t r = 0; r < c.indices.size(); ++r) {
            for (std::size_t k = 0; k < c.indices.size(); ++k) m(r, k) = e.structure()(c.indices[r], c.indices[k]);
        }
        c.algebra = EvolutionAlgebra(c.indices.size(), m);
    }
    return comps;
}

bool is_natural_basis(const EvolutionAlgebra& e, const Matrix& basis) {
    if (basis.cols() != e.dim()) return false;
    for (std::size_t k = 0; k < basis.rows(); ++k) {
        for (std::size_t l = k + 1; l < basis.rows(); ++l) {
            if (!is_zero_vector(multiply(e, basis.row(k), basis.row(l)))) return false;
        }
    }
    return true;
}

EvolutionAlgebra change_basis(const EvolutionAlgebra& e, const Matrix& basis) {
    if (basis.rows() != e.dim() || basis.cols() != e.dim()) raise(ErrorCode::ShapeError, "basis change must be square");
    if (!is_natural_basis(e, basis)) raise(ErrorCode::DomainError, "the new basis is not natural");
    Matrix inv = basis.inverse();
    Matrix squares(e.dim(), e.dim(), e.field());
    for (std::size_t k = 0; k < e.dim(); ++k) squares.set_row(k, square(e, basis.row(k)));
    return EvolutionAlgebra(e.dim(), squares * inv);
}

EvolutionAlgebra permute_basis(const EvolutionAlgebra& e, const std::vector<std::size_t>& order) {
    if (order.size() != e.dim()) raise(ErrorCode::ShapeError, "permutation length differs from the dimension");
    Matrix m(e.dim(), e.dim(), e.field());
    for (std::size_t r = 0; r < order.size(); ++r) {
        for (std::size_t c = 0; c < order.size(); ++c) m(r, c) = e.structure()(order[r], order[c]);
    }
    return EvolutionAlgebra(e.dim(), m);
}

bool is_ideal(const EvolutionAlgebra& e, const Subspace& s) {
    return is_subspace_of(product_subspace(e, Subspace::full(e.dim(), e.field()), s), s);
}

bool is_direct_ideal_split(const EvolutionAlgebra& e, const Subspace& i, const Subspace& j) {
    return !i.is_zero() && !j.is_zero() && subspace_intersect(i, j).is_zero() && subspace_sum(i, j).is_full() &&
           is_ideal(e, i) && is_ideal(e, j);
}

namespace {

// Structure of the ideal spanned by the rows of basis, expressed in that basis.
Summand make_summand(const EvolutionAlgebra& e, const std::vector<Vector>& rows) {
    std::size_t k = rows.size();
    Matrix m(k, k, e.field());
    for (std::size_t r = 0; r < k; ++r) {
        auto coeffs = coordinates(rows, square(e, rows[r]));
        if (!coeffs) raise(ErrorCode::NotAnIdeal, "summand basis does not span a subalgebra");
        m.set_row(r, *coeffs);
    }
    return Summand{Matrix::from_rows(rows, e.dim(), e.field()), EvolutionAlgebra(k, m)};
}

Subspace span_rows(const EvolutionAlgebra& e, const std::vector<Vector>& rows) {
    return Subspace::span(rows, e.dim(), e.field());
}

DecompositionResult decomposable(std::string rule, std::string reason) {
    DecompositionResult r;
    r.verdict = Verdict::Decomposable;
    r.rule = std::move(rule);
    r.reason = std::move(reason);
    return r;
}

DecompositionResult indecomposable(std::string rule, std::string reason) {
    DecompositionResult r;
    r.verdict = Verdict::Indecomposable;
    r.rule = std::move(rule);
    r.reason = std::move(reason);
    return r;
}

// ann = (E^2 ∩ ann) ⊕ T with T spanned by ann basis vectors; the other basis
// vectors are shifted by elements of T so that together with E^2 ∩ ann they
// span an ideal S ⊇ E^2 complementary to T.
void split_off_annihilator(const EvolutionAlgebra& e, DecompositionResult& out) {
    std::size_t n = e.dim();
    const FieldDescriptor& field = e.field();
    Subspace ann = annihilator(e);
    Subspace sq = product_subspace(e, Subspace::full(n, field), Subspace::full(n, field));
    Subspace k_space = subspace_intersect(sq, ann);
    std::vector<std::size_t> ann_idx;
    std::vector<std::size_t> live_idx;
    for (std::size_t i = 0; i < n; ++i) {
        (is_zero_vector(e.square_of_basis(i)) ? ann_idx : live_idx).push_back(i);
    }
    std::vector<Vector> decomposition_basis = k_space.basis_vectors();
    std::vector<std::size_t> t_idx;
    for (std::size_t a : ann_idx) {
        std::vector<Vector> trial = decomposition_basis;
        trial.push_back(unit_vector(n, a, field));
        if (rank(Matrix::from_rows(trial, n, field)) == trial.size()) {
            decomposition_basis = std::move(trial);
            t_idx.push_back(a);
        }
    }
    std::size_t kd = k_space.dim();
    // T-components of the annihilator part of each live square.
    std::size_t m = live_idx.size();
    Matrix a_mm(m, m, field);
    std::vector<Vector> tau(m);
    for (std::size_t r = 0; r < m; ++r) {
        Vector sqr = e.square_of_basis(live_idx[r]);
        Vector ann_part = zero_vector(n, field);
        for (std::size_t a : ann_idx) ann_part[a] = sqr[a];
        for (std::size_t c = 0; c < m; ++c) a_mm(r, c) = sqr[live_idx[c]];
        auto coeffs = coordinates(decomposition_basis, ann_part);
        tau[r] = Vector(coeffs->begin() + static_cast<std::ptrdiff_t>(kd), coeffs->end());
    }
    std::vector<Vector> shifts(m, zero_vector(n, field));
    for (std::size_t t = 0; t < t_idx.size(); ++t) {
        Vector rhs(m, FieldElement::zero(field));
        for (std::size_t r = 0; r < m; ++r) rhs[r] = tau[r][t];
        auto x = solve(a_mm, rhs);
        if (!x) raise(ErrorCode::DomainError, "internal: annihilator complement system is inconsistent");
        for (std::size_t r = 0; r < m; ++r) shifts[r][t_idx[t]] = (*x)[r];
    }
    std::vector<Vector> s_rows;
    for (std::size_t r = 0; r < m; ++r) s_rows.push_back(add(unit_vector(n, live_idx[r], field), shifts[r]));
    for (auto& v : k_space.basis_vectors()) s_rows.push_back(std::move(v));
    std::vector<Vector> t_rows;
    for (std::size_t t : t_idx) t_rows.push_back(unit_vector(n, t, field));
    out.witness = std::make_pair(span_rows(e, s_rows), span_rows(e, t_rows));
    if (!s_rows.empty()) out.summands.push_back(make_summand(e, s_rows));
    for (const auto& row : t_rows) out.summands.push_back(make_summand(e, {row}));
}

// Dimension 5 with ann = E^2 ∩ ann of dimension 2 and types [2,3], [2,2,1]:
// the only splittings are [1,1] + [1,2] and [1,1] + [1,1,1].
DecompositionResult split_two_dim_annihilator(const EvolutionAlgebra& e, const AnnSeries& series) {
    std::size_t n = e.dim();
    const FieldDescriptor& field = e.field();
    auto unit = [&](std::size_t i) { return unit_vector(n, i, field); };
    auto collinear = [&](const Vector& a, const Vector& b) { return rank(Matrix::from_rows({a, b}, n, field)) < 2; };
    auto finish = [&](std::vector<Vector> first, std::vector<Vector> second, std::string reason) {
        auto r = decomposable("two-dim-ann", std::move(reason));
        r.witness = std::make_pair(span_rows(e, first), span_rows(e, second));
        r.summands.push_back(make_summand(e, first));
        r.summands.push_back(make_summand(e, second));
        return r;
    };
    const auto& top = series.blocks[1];
    if (series.type_vector.size() == 2) {
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a + 1; b < 3; ++b) {
                std::size_t c = 3 - a - b;
                Vector qa = e.square_of_basis(top[a]);
                if (!collinear(qa, e.square_of_basis(top[b]))) continue;
                return finish({unit(top[a]), unit(top[b]), qa}, {unit(top[c]), e.square_of_basis(top[c])},
                              "two squares of the top block are proportional");
            }
        }
        return indecomposable("two-dim-ann", "the three squares of the top block are pairwise independent");
    }
    std::size_t x = series.blocks[2][0];
    Vector xsq = e.square_of_basis(x);
    Vector tau = zero_vector(n, field);
    for (std::size_t a : series.blocks[0]) tau[a] = xsq[a];
    for (std::size_t k = 0; k < 2; ++k) {
        std::size_t y = top[k];
        std::size_t other = top[1 - k];
        if (!xsq[other].is_zero()) continue;
        Vector shifted = axpy(unit(y), xsq[y].inverse(), tau);
        return finish({unit(x), shifted, e.square_of_basis(y)}, {unit(other), e.square_of_basis(other)},
                      "the top square misses one block of U_2");
    }
    return indecomposable("two-dim-ann", "the top square meets both vectors of U_2");
}

}  // namespace

DecompositionResult decomposability_check(const EvolutionAlgebra& e) {
    std::size_t n = e.dim();
    const FieldDescriptor& field = e.field();
    if (n <= 1) return indecomposable("dim1", "one-dimensional algebras are indecomposable");

    auto comps = split_components(e);
    if (comps.size() > 1) {
        auto r = decomposable("components", "the graph has " + std::to_string(comps.size()) + " weakly connected components");
        std::vector<Vector> first;
        std::vector<Vector> rest;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            std::vector<Vector> rows;
            for (std::size_t i : comps[c].indices) rows.push_back(unit_vector(n, i, field));
            (c == 0 ? first : rest).insert((c == 0 ? first : rest).end(), rows.begin(), rows.end());
            r.summands.push_back(Summand{Matrix::from_rows(rows, n, field), comps[c].algebra});
        }
        r.witness = std::make_pair(span_rows(e, first), span_rows(e, rest));
        return r;
    }

    Subspace ann = annihilator(e);
    Subspace full = Subspace::full(n, field);
    Subspace sq = product_subspace(e, full, full);
    if (!is_subspace_of(ann, sq)) {
        auto r = decomposable("ann-not-in-square", "ann(E) is not contained in E^2");
        split_off_annihilator(e, r);
        return r;
    }

    // Here ann ⊆ E^2, so dim ann >= n/2 forces n = 2r with E^2 = ann.
    std::size_t r_ann = ann.dim();
    if (2 * r_ann >= n && r_ann >= 2) {
        auto r = decomposable("half-ann", "dim ann(E) = " + std::to_string(r_ann) + " >= dim/2; E splits into the ideals span{e, e^2}");
        std::vector<Vector> first;
        std::vector<Vector> rest;
        bool first_done = false;
        for (std::size_t i = 0; i < n; ++i) {
            Vector sqr = e.square_of_basis(i);
            if (is_zero_vector(sqr)) continue;
            std::vector<Vector> rows{unit_vector(n, i, field), sqr};
            r.summands.push_back(make_summand(e, rows));
            (first_done ? rest : first).insert((first_done ? rest : first).end(), rows.begin(), rows.end());
            first_done = true;
        }
        r.witness = std::make_pair(span_rows(e, first), span_rows(e, rest));
        return r;
    }

    AnnSeries series = upper_series(e);
    if (!series.nilpotent) return DecompositionResult{};
    const auto& type = series.type_vector;
    if (r_ann == 1) {
        return indecomposable("ann-dim-1", "nilpotent with one-dimensional annihilator: every nonzero ideal summand would contribute to ann(E)");
    }
    if (type.size() == 3 && type[1] == 1) {
        return indecomposable("type-n1m", "type " + format_type(type) + " with ann(E) contained in E^2");
    }
    std::size_t r = type.size();
    if (r >= 3 && 2 * type[0] + r > n + 2) {
        return decomposable("wide-ann", "type " + format_type(type) + " satisfies 2 n_1 > n - r + 2");
    }
    if (n == 5 && r_ann == 2 && (type == std::vector<std::size_t>{2, 3} || type == std::vector<std::size_t>{2, 2, 1})) {
        return split_two_dim_annihilator(e, series);
    }
    DecompositionResult unknown;
    unknown.reason = "no criterion applies";
    return unknown;
}

InvariantProfile invariant_profile(const EvolutionAlgebra& e) {
    AnnSeries series = upper_series(e);
    if (!series.nilpotent) raise(ErrorCode::NotNilpotent, "invariant profile needs a nilpotent algebra");
    std::size_t n = e.dim();
    const FieldDescriptor& field = e.field();
    Subspace full = Subspace::full(n, field);
    auto block = [&](std::size_t i) { return Subspace::span_of_units(series.block_with_ann(i), n, field); };
    auto sq = [&](const Subspace& s) { return product_subspace(e, s, s); };

    InvariantProfile p;
    Subspace e2 = sq(full);
    p.dim_square = e2.dim();
    std::size_t r = series.blocks.size();
    for (std::size_t i = 1; i < r; ++i) p.dim_block_square.push_back(sq(block(i)).dim());
    p.ann_in_square = is_subspace_of(annihilator(e), e2);
    if (r >= 3) {
        Subspace u3 = block(2);
        p.dim_u3_square_square = sq(sq(u3)).dim();
        p.dim_square_cap_u3 = subspace_intersect(e2, u3).dim();
    }
    if (r >= 4) p.u4_square_in_u3 = is_subspace_of(sq(block(3)), block(2));
    return p;
}

}  // namespace evo
