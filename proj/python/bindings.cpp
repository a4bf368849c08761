#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evo/classify.hpp"
#include "evo/io.hpp"
#include "evo/oracle.hpp"

namespace py = pybind11;
using namespace evo;

namespace {

// Field elements cross the boundary as literals of the field grammar.
using Rows = std::vector<std::vector<std::string>>;

Rows rows_of(const Matrix& m) {
    Rows out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
    return out;
}

Matrix matrix_of(const Rows& rows, const FieldDescriptor& field) {
    std::size_t n = rows.size();
    Matrix m(n, n, field);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) raise(ErrorCode::ShapeError, "structure rows must form a square matrix");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_element(rows[r][c], field);
    }
    return m;
}

Vector vector_of(const std::vector<std::string>& xs, const FieldDescriptor& field) {
    Vector v;
    for (const auto& x : xs) v.push_back(parse_element(x, field));
    return v;
}

std::optional<Rows> maybe_rows(const std::optional<Matrix>& m) {
    if (!m) return std::nullopt;
    return rows_of(*m);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Decomposable: return "Decomposable";
        case Verdict::Indecomposable: return "Indecomposable";
        default: return "Unknown";
    }
}

}  // namespace

PYBIND11_MODULE(_evoalg, m) {
    m.doc() = "Nilpotent evolution algebras over Q, Q(i) and prime fields";

    static py::exception<Error> evo_error(m, "EvoError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(evo_error.ptr())(e.what());
            inst.attr("code") = std::string(error_name(e.code()));
            PyErr_SetObject(evo_error.ptr(), inst.ptr());
        }
    });

    py::class_<EvolutionAlgebra>(m, "Algebra")
        .def(py::init([](const std::string& field, const Rows& rows) {
                 FieldDescriptor f = parse_field(field);
                 return EvolutionAlgebra(rows.size(), matrix_of(rows, f));
             }),
             py::arg("field"), py::arg("rows"), "Row i lists the coordinates of e_i^2.")
        .def_static("from_text", &parse_algebra_text)
        .def_static("from_file", &parse_algebra_file)
        .def("to_text", &write_algebra)
        .def_property_readonly("dim", &EvolutionAlgebra::dim)
        .def_property_readonly("field", [](const EvolutionAlgebra& e) { return e.field().name(); })
        .def_property_readonly("rows", [](const EvolutionAlgebra& e) { return rows_of(e.structure()); })
        .def("type_vector", [](const EvolutionAlgebra& e) -> std::optional<std::vector<std::size_t>> {
            AnnSeries s = upper_series(e);
            if (!s.nilpotent) return std::nullopt;
            return s.type_vector;
        })
        .def("blocks", [](const EvolutionAlgebra& e) { return upper_series(e).blocks; })
        .def("classify", [](const EvolutionAlgebra& e) { return classify(e).to_string(); })
        .def("decompose", [](const EvolutionAlgebra& e) {
            DecompositionResult d = decomposability_check(e);
            return py::make_tuple(verdict_name(d.verdict), d.rule);
        })
        .def("dot", [](const EvolutionAlgebra& e) { return emit_dot(graph_of(e)); })
        .def("change_basis", [](const EvolutionAlgebra& e, const Rows& rows) { return change_basis(e, matrix_of(rows, e.field())); })
        .def("__eq__", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return a == b; })
        .def("__repr__", [](const EvolutionAlgebra& e) { return "<Algebra dim " + std::to_string(e.dim()) + " over " + e.field().name() + ">"; });

    m.def("witness_isomorphism", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return maybe_rows(witness_isomorphism(a, b)); },
          "Columns are the images of the first basis; None when the labels differ.");
    m.def("verify_hom", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b, const Rows& rows) {
        return verify_hom(a, b, matrix_of(rows, a.field()));
    });
    m.def("exhaustive_iso", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
        return maybe_rows(exhaustive_iso(a, b, SearchBudget{SearchMode::Exhaustive, 0, 0}));
    });
    m.def("randomized_iso",
          [](const EvolutionAlgebra& a, const EvolutionAlgebra& b, std::uint64_t trials, std::uint64_t seed) {
              return maybe_rows(randomized_iso(a, b, SearchBudget{SearchMode::Randomized, trials, seed}));
          },
          py::arg("a"), py::arg("b"), py::arg("trials") = 100000, py::arg("seed") = 1);
    m.def("family",
          [](const std::string& kind, const std::vector<std::string>& b, const std::vector<std::string>& f,
             const std::vector<std::string>& g, const std::vector<std::string>& u, const std::string& field) {
              FieldDescriptor fd = parse_field(field);
              Vector bv = vector_of(b, fd);
              switch (parse_family_kind(kind)) {
                  case FamilyKind::Ub: return build_family(make_ub(bv));
                  case FamilyKind::Ubg: return build_family(make_ubg(bv, vector_of(g, fd)));
                  case FamilyKind::Ubfg: return build_family(make_ubfg(bv, vector_of(f, fd), vector_of(g, fd)));
                  case FamilyKind::Ubu: return build_family(make_ubu(bv, vector_of(u, fd)));
              }
              raise(ErrorCode::SpecMismatch, "unknown family kind");
          },
          py::arg("kind"), py::arg("b"), py::arg("f") = std::vector<std::string>{}, py::arg("g") = std::vector<std::string>{},
          py::arg("u") = std::vector<std::string>{}, py::arg("field") = "Q");
}
