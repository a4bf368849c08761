#include <algorithm>

#include "classify_internal.hpp"

namespace evo {

namespace {

struct Part {
    CanonicalLabel label;
    std::optional<Matrix> rows;  // in coordinates of the algebra being normalized
};

void check_input(const EvolutionAlgebra& e) {
    if (e.dim() < 1 || e.dim() > 5) raise(ErrorCode::UnsupportedDim, "the classification covers dimensions 1 to 5, not " + std::to_string(e.dim()));
    if (!upper_series(e).nilpotent) raise(ErrorCode::NotNilpotent, "only nilpotent algebras are classified");
}

std::vector<Part> parts_of(const EvolutionAlgebra& e) {
    DecompositionResult d = decomposability_check(e);
    if (d.verdict != Verdict::Decomposable) {
        CanonicalLabel label = label_indecomposable(e);
        return {Part{label, detail::normalize_indecomposable(e, label)}};
    }
    if (d.summands.empty()) raise(ErrorCode::DomainError, "decomposable algebra without explicit summands (" + d.rule + ")");
    std::vector<Part> out;
    for (const auto& summand : d.summands) {
        for (auto& part : parts_of(summand.algebra)) {
            if (part.rows) part.rows = *part.rows * summand.basis;
            out.push_back(std::move(part));
        }
    }
    return out;
}

}  // namespace

std::string ClassifyResult::to_string() const {
    if (!decomposed) return label.to_string();
    std::string out = "decomposed:";
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k == 0 ? " " : " + ") + parts[k].to_string();
    return out;
}

Normalization normalize(const EvolutionAlgebra& e) {
    check_input(e);
    std::vector<Part> parts = parts_of(e);
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.label.to_string() < b.label.to_string(); });
    Normalization out;
    bool complete = std::all_of(parts.begin(), parts.end(), [](const Part& p) { return p.rows.has_value(); });
    out.result.witness_available = complete;
    if (parts.size() == 1) {
        out.result.label = parts[0].label;
        out.basis = parts[0].rows;
        return out;
    }
    out.result.decomposed = true;
    std::vector<Vector> rows;
    for (const auto& p : parts) {
        out.result.parts.push_back(p.label);
        if (complete) {
            for (auto& r : p.rows->row_list()) rows.push_back(std::move(r));
        }
    }
    if (complete) out.basis = Matrix::from_rows(rows, e.dim(), e.field());
    return out;
}

ClassifyResult classify(const EvolutionAlgebra& e) { return normalize(e).result; }

EvolutionAlgebra canonical_form(const ClassifyResult& result, const FieldDescriptor& field) {
    if (!result.decomposed) return template_algebra(result.label, field);
    std::size_t n = 0;
    for (const auto& l : result.parts) n += l.dim;
    Matrix m(n, n, field);
    std::size_t offset = 0;
    for (const auto& l : result.parts) {
        Matrix t = template_algebra(l, field).structure();
        for (std::size_t r = 0; r < l.dim; ++r) {
            for (std::size_t c = 0; c < l.dim; ++c) m(offset + r, offset + c) = t(r, c);
        }
        offset += l.dim;
    }
    return EvolutionAlgebra(n, m);
}

std::optional<Matrix> witness_isomorphism(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2) {
    if (!(e1.field() == e2.field())) raise(ErrorCode::MixedFields, "algebras over different fields");
    if (e1.dim() != e2.dim()) return std::nullopt;
    Normalization n1 = normalize(e1);
    Normalization n2 = normalize(e2);
    if (n1.result.decomposed != n2.result.decomposed) return std::nullopt;
    if (n1.result.decomposed ? n1.result.parts != n2.result.parts : n1.result.label != n2.result.label) return std::nullopt;
    if ((!n1.basis || !n2.basis) && !n1.result.decomposed && !n1.result.label.params.empty()) {
        // The route through the orbit representative may need a missing root;
        // any other orbit member both algebras normalize to also connects them.
        const CanonicalLabel& l = n1.result.label;
        for (const auto& q : entry_of(l).param_orbit(l.params)) {
            CanonicalLabel member = l;
            member.params = q;
            auto b1 = detail::normalize_indecomposable(e1, member);
            if (!b1) continue;
            if (auto b2 = detail::normalize_indecomposable(e2, member)) return b2->transpose() * b1->transpose().inverse();
        }
    }
    if (!n1.basis || !n2.basis) {
        raise(ErrorCode::SqrtUnavailable, "the algebras share the label " + n1.result.to_string() + " but a normalizing map needs a root missing from " +
                                              e1.field().name());
    }
    return n2.basis->transpose() * n1.basis->transpose().inverse();
}

}  // namespace evo
