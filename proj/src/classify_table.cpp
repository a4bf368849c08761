#include <algorithm>
#include <map>

#include "evo/classify.hpp"

namespace evo {

namespace {

FieldElement one(const FieldDescriptor& f) { return FieldElement::one(f); }
FieldElement unit_i(const FieldDescriptor& f) { return FieldElement::imaginary_unit(f); }

// Structure matrix from 1-based edges i -> j with weights.
class Graph {
public:
    Graph(std::size_t n, const FieldDescriptor& f) : m_(n, n, f), f_(f) {}
    Graph& edge(std::size_t i, std::size_t j) { return edge(i, j, one(f_)); }
    Graph& edge(std::size_t i, std::size_t j, const FieldElement& w) {
        m_(i - 1, j - 1) += w;
        return *this;
    }
    Matrix done() const { return m_; }

private:
    Matrix m_;
    FieldDescriptor f_;
};

Vector ones(std::size_t n, const FieldDescriptor& f) { return Vector(n, one(f)); }

Vector ints(const std::vector<long>& values, const FieldDescriptor& f) {
    Vector v;
    for (long x : values) v.push_back(FieldElement::from_int(f, x));
    return v;
}

std::vector<Vector> trivial_orbit(const Vector& p) { return {p}; }

std::vector<Vector> sign_orbit(const Vector& p) {
    Vector neg;
    for (const auto& x : p) neg.push_back(-x);
    return {p, neg};
}

std::vector<Vector> anharmonic_orbit(const Vector& p) {
    const FieldElement& a = p.at(0);
    FieldElement o = one(a.field());
    FieldElement inv = a.inverse();
    return {{a}, {inv}, {o - a}, {o - inv}, {(o - a).inverse()}, {(o - inv).inverse()}};
}

// (beta, gamma) ~ (1/beta, -gamma/beta^3)
std::vector<Vector> swap_tower_orbit(const Vector& p) {
    const FieldElement& b = p.at(0);
    const FieldElement& g = p.at(1);
    return {p, {b.inverse(), -(g / b.pow(3))}};
}

// (±beta, ±gamma) and (±1/beta, ±i gamma/beta)
std::vector<Vector> eigen_swap_orbit(const Vector& p) {
    const FieldElement& b = p.at(0);
    const FieldElement& g = p.at(1);
    std::vector<Vector> out;
    for (int sb : {1, -1}) {
        for (int sg : {1, -1}) {
            FieldElement eb = FieldElement::from_int(b.field(), sb);
            FieldElement eg = FieldElement::from_int(b.field(), sg);
            out.push_back({eb * b, eg * g});
            if (b.field().has_i()) out.push_back({eb * b.inverse(), eg * unit_i(b.field()) * g / b});
        }
    }
    return out;
}

bool any_params(const Vector&) { return true; }
bool accept_profile(const InvariantProfile&) { return true; }

ClassEntry entry(std::size_t dim, std::vector<std::size_t> type, int variant, std::size_t arity, bool needs_i,
                 std::function<Matrix(const Vector&, const FieldDescriptor&)> tmpl) {
    ClassEntry e;
    e.dim = dim;
    e.type_vector = std::move(type);
    e.variant = variant;
    e.arity = arity;
    e.needs_i = needs_i;
    e.structure_template = std::move(tmpl);
    e.param_orbit = trivial_orbit;
    e.param_domain = any_params;
    e.predicate = accept_profile;
    return e;
}

ClassEntry family_entry(std::size_t dim, std::vector<std::size_t> type, int variant, std::size_t arity, bool needs_i,
                        std::function<FamilySpec(const Vector&, const FieldDescriptor&)> spec) {
    return entry(dim, std::move(type), variant, arity, needs_i, [spec](const Vector& p, const FieldDescriptor& f) {
        return build_family(spec(p, f)).structure();
    });
}

std::vector<ClassEntry> small_entries() {
    std::vector<ClassEntry> t;
    t.push_back(entry(1, {1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) { return Graph(1, f).done(); }));
    t.push_back(family_entry(2, {1, 1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) { return make_ub(ones(1, f)); }));
    t.push_back(family_entry(3, {1, 2}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) { return make_ub(ones(2, f)); }));
    t.push_back(family_entry(3, {1, 1, 1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubg(ones(1, f), ints({0}, f));
    }));
    return t;
}

std::vector<ClassEntry> dim4_entries() {
    std::vector<ClassEntry> t;
    t.push_back(family_entry(4, {1, 3}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) { return make_ub(ones(3, f)); }));

    auto e = family_entry(4, {1, 2, 1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubu(ones(2, f), ints({1, 0}, f));
    });
    e.properties = "((U3+U1)^2)^2 != 0";
    e.predicate = [](const InvariantProfile& p) { return p.dim_u3_square_square.value_or(0) > 0; };
    t.push_back(e);
    e = family_entry(4, {1, 2, 1}, 2, 0, true, [](const Vector&, const FieldDescriptor& f) {
        return make_ubu(ones(2, f), Vector{one(f), unit_i(f)});
    });
    e.properties = "((U3+U1)^2)^2 = 0";
    e.predicate = [](const InvariantProfile& p) { return p.dim_u3_square_square.value_or(1) == 0; };
    t.push_back(e);

    e = family_entry(4, {1, 1, 2}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubg(ones(2, f), ints({0, 0}, f));
    });
    e.properties = "dim (U3+U1)^2 = 1";
    e.predicate = [](const InvariantProfile& p) { return p.dim_block_square.size() >= 2 && p.dim_block_square[1] == 1; };
    t.push_back(e);
    e = family_entry(4, {1, 1, 2}, 2, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubg(ones(2, f), ints({0, 1}, f));
    });
    e.properties = "dim (U3+U1)^2 = 2";
    e.predicate = [](const InvariantProfile& p) { return p.dim_block_square.size() >= 2 && p.dim_block_square[1] == 2; };
    t.push_back(e);

    e = family_entry(4, {1, 1, 1, 1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubfg(ones(1, f), ints({0}, f), ints({0}, f));
    });
    e.properties = "(U4+U1)^2 in U3+U1";
    e.predicate = [](const InvariantProfile& p) { return p.u4_square_in_u3.value_or(false); };
    t.push_back(e);
    e = family_entry(4, {1, 1, 1, 1}, 2, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubfg(ones(1, f), ints({1}, f), ints({0}, f));
    });
    e.properties = "(U4+U1)^2 not in U3+U1";
    e.predicate = [](const InvariantProfile& p) { return !p.u4_square_in_u3.value_or(true); };
    t.push_back(e);
    return t;
}

std::vector<ClassEntry> dim5_entries() {
    std::vector<ClassEntry> t;
    auto ann_in_square = [](const InvariantProfile& p) { return p.ann_in_square; };

    // dim ann = 2, vertex order (a, b, c, d, e) as drawn.
    auto e = entry(5, {2, 3}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return Graph(5, f).edge(1, 3).edge(2, 3).edge(2, 4).edge(5, 4).done();
    });
    e.properties = "ann in E^2";
    e.predicate = ann_in_square;
    t.push_back(e);
    e = entry(5, {2, 2, 1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return Graph(5, f).edge(1, 2).edge(1, 3).edge(2, 4).edge(3, 5).done();
    });
    e.properties = "ann in E^2";
    e.predicate = ann_in_square;
    t.push_back(e);
    e = entry(5, {2, 1, 2}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return Graph(5, f).edge(1, 3).edge(2, 3).edge(3, 4).edge(2, 5).done();
    });
    e.properties = "ann in E^2";
    e.predicate = ann_in_square;
    t.push_back(e);

    t.push_back(family_entry(5, {1, 4}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) { return make_ub(ones(4, f)); }));
    t.push_back(family_entry(5, {1, 3, 1}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubu(ones(3, f), ints({1, 0, 0}, f));
    }));
    t.push_back(family_entry(5, {1, 3, 1}, 2, 0, true, [](const Vector&, const FieldDescriptor& f) {
        return make_ubu(ones(3, f), Vector{one(f), unit_i(f), FieldElement::zero(f)});
    }));

    t.push_back(family_entry(5, {1, 1, 3}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubg(ones(3, f), ints({0, 0, 0}, f));
    }));
    t.push_back(family_entry(5, {1, 1, 3}, 2, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubg(ones(3, f), ints({0, 0, 1}, f));
    }));
    e = family_entry(5, {1, 1, 3}, 3, 1, false, [](const Vector& p, const FieldDescriptor& f) {
        return make_ubg(ones(3, f), Vector{p.at(0), FieldElement::zero(f), one(f)});
    });
    e.param_orbit = anharmonic_orbit;
    e.param_domain = [](const Vector& p) { return !p.at(0).is_zero() && !p.at(0).is_one(); };
    t.push_back(e);

    // [1,1,1,2], order (u1, u2, w, t, s).
    t.push_back(family_entry(5, {1, 1, 1, 2}, 1, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubfg(ones(2, f), ints({0, 0}, f), ints({0, 0}, f));
    }));
    t.push_back(family_entry(5, {1, 1, 1, 2}, 2, 0, false, [](const Vector&, const FieldDescriptor& f) {
        return make_ubfg(ones(2, f), ints({0, 0}, f), ints({1, 0}, f));
    }));
    t.push_back(family_entry(5, {1, 1, 1, 2}, 3, 1, false, [](const Vector& p, const FieldDescriptor& f) {
        return make_ubfg(ones(2, f), ints({1, 0}, f), Vector{p.at(0), FieldElement::zero(f)});
    }));
    e = family_entry(5, {1, 1, 1, 2}, 4, 2, false, [](const Vector& p, const FieldDescriptor& f) {
        return make_ubfg(ones(2, f), Vector{one(f), p.at(0)}, Vector{p.at(1), FieldElement::zero(f)});
    });
    e.param_orbit = swap_tower_orbit;
    e.param_domain = [](const Vector& p) { return !p.at(0).is_zero(); };
    t.push_back(e);

    // [1,2,2], order (x, y, u, v, s) with u^2 = v^2 = s.
    auto t122 = [](std::function<void(Graph&, const Vector&, const FieldDescriptor&)> top) {
        return [top](const Vector& p, const FieldDescriptor& f) {
            Graph g(5, f);
            g.edge(3, 5).edge(4, 5);
            top(g, p, f);
            return g.done();
        };
    };
    e = entry(5, {1, 2, 2}, 1, 1, false, t122([](Graph& g, const Vector& p, const FieldDescriptor&) {
        g.edge(1, 3).edge(2, 3, p.at(0)).edge(2, 4);
    }));
    e.param_orbit = sign_orbit;
    t.push_back(e);
    t.push_back(entry(5, {1, 2, 2}, 2, 0, false, t122([](Graph& g, const Vector&, const FieldDescriptor&) {
        g.edge(1, 3).edge(2, 3);
    })));
    t.push_back(entry(5, {1, 2, 2}, 3, 0, false, t122([](Graph& g, const Vector&, const FieldDescriptor&) {
        g.edge(1, 3).edge(2, 3).edge(2, 5);
    })));
    t.push_back(entry(5, {1, 2, 2}, 4, 0, true, t122([](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 3).edge(1, 4, unit_i(f)).edge(2, 3).edge(2, 4, unit_i(f));
    })));
    t.push_back(entry(5, {1, 2, 2}, 5, 0, true, t122([](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 3).edge(1, 4, unit_i(f)).edge(2, 3).edge(2, 4, unit_i(f)).edge(2, 5);
    })));
    t.push_back(entry(5, {1, 2, 2}, 6, 0, true, t122([](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 3).edge(1, 4, unit_i(f)).edge(2, 3).edge(2, 4, -unit_i(f));
    })));

    // [1,2,1,1], order (x, y, u, v, s) with u^2 = v^2 = s.
    auto t1211 = [](bool second_class, std::function<void(Graph&, const Vector&, const FieldDescriptor&)> top) {
        return [second_class, top](const Vector& p, const FieldDescriptor& f) {
            Graph g(5, f);
            g.edge(3, 5).edge(4, 5).edge(2, 3);
            if (second_class) g.edge(2, 4, unit_i(f));
            g.edge(1, 2);
            top(g, p, f);
            return g.done();
        };
    };
    auto nothing = [](Graph&, const Vector&, const FieldDescriptor&) {};
    t.push_back(entry(5, {1, 2, 1, 1}, 1, 0, false, t1211(false, nothing)));
    t.push_back(entry(5, {1, 2, 1, 1}, 2, 0, false, t1211(false, [](Graph& g, const Vector&, const FieldDescriptor&) { g.edge(1, 4); })));
    e = entry(5, {1, 2, 1, 1}, 3, 1, false, t1211(false, [](Graph& g, const Vector& p, const FieldDescriptor&) {
        g.edge(1, 3).edge(1, 4, p.at(0));
    }));
    e.param_orbit = sign_orbit;
    t.push_back(e);
    t.push_back(entry(5, {1, 2, 1, 1}, 4, 0, true, t1211(true, nothing)));
    t.push_back(entry(5, {1, 2, 1, 1}, 5, 0, true, t1211(true, [](Graph& g, const Vector&, const FieldDescriptor&) { g.edge(1, 3); })));
    t.push_back(entry(5, {1, 2, 1, 1}, 6, 0, true, t1211(true, [](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 3).edge(1, 4, unit_i(f));
    })));
    t.push_back(entry(5, {1, 2, 1, 1}, 7, 0, true, t1211(true, [](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 3).edge(1, 4, -unit_i(f));
    })));

    // [1,1,2,1], order (x, u1, u2, w, s) with w^2 = s.
    auto t1121 = [](bool second_class, std::function<void(Graph&, const Vector&, const FieldDescriptor&)> top) {
        return [second_class, top](const Vector& p, const FieldDescriptor& f) {
            Graph g(5, f);
            g.edge(4, 5).edge(2, 4).edge(3, 4);
            if (second_class) g.edge(3, 5);
            top(g, p, f);
            return g.done();
        };
    };
    t.push_back(entry(5, {1, 1, 2, 1}, 1, 0, false, t1121(false, [](Graph& g, const Vector&, const FieldDescriptor&) { g.edge(1, 2); })));
    t.push_back(entry(5, {1, 1, 2, 1}, 2, 0, false, t1121(false, [](Graph& g, const Vector&, const FieldDescriptor&) {
        g.edge(1, 2).edge(1, 4);
    })));
    t.push_back(entry(5, {1, 1, 2, 1}, 3, 0, true, t1121(false, [](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 2).edge(1, 3, unit_i(f));
    })));
    t.push_back(entry(5, {1, 1, 2, 1}, 4, 0, true, t1121(false, [](Graph& g, const Vector&, const FieldDescriptor& f) {
        g.edge(1, 2).edge(1, 3, unit_i(f)).edge(1, 4);
    })));
    e = entry(5, {1, 1, 2, 1}, 5, 1, false, t1121(true, [](Graph& g, const Vector& p, const FieldDescriptor&) {
        g.edge(1, 2).edge(1, 4, p.at(0));
    }));
    e.param_orbit = sign_orbit;
    t.push_back(e);
    e = entry(5, {1, 1, 2, 1}, 6, 2, false, t1121(true, [](Graph& g, const Vector& p, const FieldDescriptor&) {
        g.edge(1, 2, p.at(0)).edge(1, 3).edge(1, 4, p.at(1));
    }));
    e.param_orbit = eigen_swap_orbit;
    e.param_domain = [](const Vector& p) { return !p.at(0).is_zero(); };
    t.push_back(e);

    // [1,1,1,1,1], order (x, y, z, w, s).
    auto chain = [](std::function<void(Graph&, const Vector&, const FieldDescriptor&)> extra) {
        return [extra](const Vector& p, const FieldDescriptor& f) {
            Graph g(5, f);
            g.edge(1, 2).edge(2, 3).edge(3, 4).edge(4, 5);
            extra(g, p, f);
            return g.done();
        };
    };
    t.push_back(entry(5, {1, 1, 1, 1, 1}, 1, 0, false, chain(nothing)));
    t.push_back(entry(5, {1, 1, 1, 1, 1}, 2, 0, false, chain([](Graph& g, const Vector&, const FieldDescriptor&) { g.edge(1, 4); })));
    t.push_back(entry(5, {1, 1, 1, 1, 1}, 3, 1, false, chain([](Graph& g, const Vector& p, const FieldDescriptor&) {
        g.edge(1, 3).edge(1, 4, p.at(0));
    })));
    e = entry(5, {1, 1, 1, 1, 1}, 4, 2, false, chain([](Graph& g, const Vector& p, const FieldDescriptor&) {
        g.edge(1, 3, p.at(0)).edge(1, 4, p.at(1)).edge(2, 4);
    }));
    e.param_orbit = sign_orbit;
    t.push_back(e);
    return t;
}

bool lexicographically_less(const Vector& a, const Vector& b) {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        Ordering o = total_order(a[k], b[k]);
        if (o != Ordering::Equal) return o == Ordering::Less;
    }
    return a.size() < b.size();
}

}  // namespace

std::string CanonicalLabel::to_string() const {
    std::string out = "d" + std::to_string(dim) + ":" + format_type(type_vector) + ":v" + std::to_string(variant);
    if (!params.empty()) {
        out += "(";
        for (std::size_t k = 0; k < params.size(); ++k) {
            if (k > 0) out += ",";
            out += params[k].to_string();
        }
        out += ")";
    }
    return out;
}

const std::vector<ClassEntry>& table_entries(std::size_t dim) {
    static const std::map<std::size_t, std::vector<ClassEntry>> tables = [] {
        std::map<std::size_t, std::vector<ClassEntry>> m;
        for (auto& e : small_entries()) m[e.dim].push_back(e);
        m[4] = dim4_entries();
        m[5] = dim5_entries();
        return m;
    }();
    auto it = tables.find(dim);
    if (it == tables.end()) raise(ErrorCode::UnsupportedDim, "the classification covers dimensions 1 to 5, not " + std::to_string(dim));
    return it->second;
}

std::vector<ClassEntry> canonical_table(std::size_t dim, const FieldDescriptor& field) {
    const auto& entries = table_entries(dim);
    if (dim >= 4 && !field.has_i()) {
        raise(ErrorCode::FieldLacksI, "dimension " + std::to_string(dim) + " entries carry the weight i, absent from " + field.name());
    }
    return entries;
}

const ClassEntry& find_entry(std::size_t dim, const std::vector<std::size_t>& type_vector, int variant) {
    for (const auto& e : table_entries(dim)) {
        if (e.type_vector == type_vector && e.variant == variant) return e;
    }
    raise(ErrorCode::DomainError, "no table entry d" + std::to_string(dim) + ":" + format_type(type_vector) + ":v" + std::to_string(variant));
}

const ClassEntry& entry_of(const CanonicalLabel& label) { return find_entry(label.dim, label.type_vector, label.variant); }

Vector canonical_params(const ClassEntry& entry, const Vector& params) {
    if (params.size() != entry.arity) raise(ErrorCode::DomainError, "entry expects " + std::to_string(entry.arity) + " parameters");
    if (params.empty()) return params;
    auto orbit = entry.param_orbit(params);
    return *std::min_element(orbit.begin(), orbit.end(), lexicographically_less);
}

CanonicalLabel make_label(const ClassEntry& entry, const Vector& params) {
    CanonicalLabel l = entry.skeleton();
    l.params = canonical_params(entry, params);
    return l;
}

EvolutionAlgebra template_algebra(const ClassEntry& entry, const Vector& params, const FieldDescriptor& field) {
    if (params.size() != entry.arity) raise(ErrorCode::DomainError, "entry expects " + std::to_string(entry.arity) + " parameters");
    if (!entry.param_domain(params)) raise(ErrorCode::DomainError, "parameters outside the entry's domain");
    if (entry.needs_i && !field.has_i()) raise(ErrorCode::FieldLacksI, "this entry carries the weight i, absent from " + field.name());
    return EvolutionAlgebra(entry.dim, entry.structure_template(params, field));
}

EvolutionAlgebra template_algebra(const CanonicalLabel& label, const FieldDescriptor& field) {
    return template_algebra(entry_of(label), label.params, field);
}

bool labels_equal(const CanonicalLabel& a, const CanonicalLabel& b) {
    if (a.dim != b.dim || a.type_vector != b.type_vector || a.variant != b.variant) return false;
    if (a.params.size() != b.params.size()) return false;
    if (a.params.empty()) return true;
    if (!(a.params.front().field() == b.params.front().field())) return false;
    const ClassEntry* e = nullptr;
    try {
        e = &entry_of(a);
    } catch (const Error&) {
        return a.params == b.params;
    }
    for (const auto& p : e->param_orbit(a.params)) {
        if (p == b.params) return true;
    }
    return false;
}

}  // namespace evo
