#include "evo/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "evo/classify.hpp"
#include "evo/io.hpp"
#include "evo/oracle.hpp"

namespace evo {

namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
    std::string out;
    for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? " " : "") + std::string("e") + std::to_string(idx[k] + 1);
    return out;
}

Vector parse_list(const std::string& text, const FieldDescriptor& field) {
    Vector out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::istringstream words(item);
        std::string w;
        while (words >> w) out.push_back(parse_element(w, field));
    }
    return out;
}

void print_subspace(std::ostream& out, const std::string& name, const Subspace& s) {
    out << name << ": dim " << s.dim();
    for (const auto& v : s.basis_vectors()) out << " " << to_string(v);
    out << "\n";
}

int run_type(const std::string& path, std::ostream& out) {
    AnnSeries s = upper_series(parse_algebra_file(path));
    out << (s.nilpotent ? format_type(s.type_vector) : "NOT NILPOTENT") << "\n";
    return 0;
}

int run_series(const std::string& path, std::ostream& out) {
    EvolutionAlgebra e = parse_algebra_file(path);
    AnnSeries s = upper_series(e);
    for (std::size_t i = 0; i < s.chain.size(); ++i) print_subspace(out, "ann^" + std::to_string(i + 1), s.chain[i]);
    for (std::size_t i = 0; i < s.blocks.size(); ++i) out << "U_" << i + 1 << ": " << index_list(s.blocks[i]) << "\n";
    out << "type: " << (s.nilpotent ? format_type(s.type_vector) : "NOT NILPOTENT") << "\n";
    return 0;
}

int run_classify(const std::string& path, std::ostream& out) {
    ClassifyResult r = classify(parse_algebra_file(path));
    out << r.to_string() << "\n";
    if (!r.witness_available) out << "note: the normalizing map needs roots missing from the field\n";
    return 0;
}

int run_iso(const std::string& p1, const std::string& p2, const std::string& oracle, std::uint64_t trials, std::uint64_t seed,
            std::ostream& out) {
    EvolutionAlgebra e1 = parse_algebra_file(p1);
    EvolutionAlgebra e2 = parse_algebra_file(p2);
    ClassifyResult r1 = classify(e1);
    ClassifyResult r2 = classify(e2);
    out << "first: " << r1.to_string() << "\n";
    out << "second: " << r2.to_string() << "\n";
    bool same = r1.to_string() == r2.to_string();
    out << (same ? "labels equal" : "labels differ") << "\n";
    std::optional<Matrix> witness;
    if (!oracle.empty()) {
        SearchBudget budget{oracle == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Randomized, trials, seed};
        witness = budget.mode == SearchMode::Exhaustive ? exhaustive_iso(e1, e2, budget) : randomized_iso(e1, e2, budget);
        if (!witness) out << (budget.mode == SearchMode::Exhaustive ? "oracle: no isomorphism over this field" : "oracle: no witness found") << "\n";
    } else if (same) {
        try {
            witness = witness_isomorphism(e1, e2);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::SqrtUnavailable) throw;
            out << "witness: unavailable (" << err.what() << ")\n";
        }
    }
    if (witness) out << "witness:\n" << witness->to_string() << "\n";
    return 0;
}

int run_decompose(const std::string& path, std::ostream& out) {
    EvolutionAlgebra e = parse_algebra_file(path);
    DecompositionResult d = decomposability_check(e);
    const char* verdict = d.verdict == Verdict::Decomposable ? "Decomposable" : d.verdict == Verdict::Indecomposable ? "Indecomposable" : "Unknown";
    out << verdict;
    if (!d.rule.empty()) out << " (" << d.rule << ")";
    out << "\n" << d.reason << "\n";
    if (d.witness) {
        print_subspace(out, "I", d.witness->first);
        print_subspace(out, "J", d.witness->second);
    }
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nilpotent evolution algebras: series, classification and isomorphisms", "evoalg"};
    app.require_subcommand(1);
    std::string file1, file2, oracle, kind, field_text = "Q", b_text, f_text, g_text, u_text;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;

    auto* type = app.add_subcommand("type", "print the type vector");
    type->add_option("file", file1)->required();
    auto* series = app.add_subcommand("series", "print the upper annihilating series");
    series->add_option("file", file1)->required();
    auto* cls = app.add_subcommand("classify", "print the canonical label");
    cls->add_option("file", file1)->required();
    auto* iso = app.add_subcommand("iso", "compare two algebras");
    iso->add_option("file1", file1)->required();
    iso->add_option("file2", file2)->required();
    iso->add_option("--oracle", oracle)->check(CLI::IsMember({"exhaustive", "randomized"}));
    iso->add_option("--trials", trials);
    iso->add_option("--seed", seed);
    auto* fam = app.add_subcommand("family", "write a family algebra as an algebra file");
    fam->add_option("--kind", kind)->required()->check(CLI::IsMember({"ub", "ubg", "ubfg", "ubu"}));
    fam->add_option("--b", b_text, "form diagonal, comma separated")->required();
    fam->add_option("--f", f_text);
    fam->add_option("--g", g_text);
    fam->add_option("--u", u_text);
    fam->add_option("--field", field_text);
    auto* dot = app.add_subcommand("dot", "emit the weighted graph in DOT");
    dot->add_option("file", file1)->required();
    auto* dec = app.add_subcommand("decompose", "print the decomposability verdict");
    dec->add_option("file", file1)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*type) return run_type(file1, out);
        if (*series) return run_series(file1, out);
        if (*cls) return run_classify(file1, out);
        if (*iso) return run_iso(file1, file2, oracle, trials, seed, out);
        if (*dot) {
            out << emit_dot(graph_of(parse_algebra_file(file1)));
            return 0;
        }
        if (*dec) return run_decompose(file1, out);
        if (*fam) {
            FieldDescriptor field = parse_field(field_text);
            Vector b = parse_list(b_text, field);
            FamilySpec spec;
            if (kind == "ub") spec = make_ub(b);
            else if (kind == "ubg") spec = make_ubg(b, parse_list(g_text, field));
            else if (kind == "ubfg") spec = make_ubfg(b, parse_list(f_text, field), parse_list(g_text, field));
            else spec = make_ubu(b, parse_list(u_text, field));
            out << write_algebra(build_family(spec));
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace evo
