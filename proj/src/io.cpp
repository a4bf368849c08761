#include "evo/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace evo {

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, std::size_t column, const std::string& message) {
    raise(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

}  // namespace

EvolutionAlgebra parse_algebra_text(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto tokens = tokenize(raw);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    if (lines.empty()) raise(ErrorCode::SyntaxError, "line 1, column 1: expected 'field <Q|Qi|GF p>'");

    const Line& head = lines[0];
    if (head.tokens[0].text != "field" || head.tokens.size() < 2) fail(ErrorCode::SyntaxError, head.number, head.tokens[0].column, "expected 'field <Q|Qi|GF p>'");
    std::string field_text;
    for (std::size_t k = 1; k < head.tokens.size(); ++k) field_text += (k > 1 ? " " : "") + head.tokens[k].text;
    FieldDescriptor field = FieldDescriptor::rationals();
    try {
        field = parse_field(field_text);
    } catch (const Error& e) {
        fail(e.code(), head.number, head.tokens[1].column, e.what());
    }

    if (lines.size() < 2) fail(ErrorCode::SyntaxError, head.number + 1, 1, "expected 'dim <n>'");
    const Line& dim_line = lines[1];
    if (dim_line.tokens[0].text != "dim" || dim_line.tokens.size() != 2) fail(ErrorCode::SyntaxError, dim_line.number, 1, "expected 'dim <n>'");
    const Token& dim_token = dim_line.tokens[1];
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        long value = std::stol(dim_token.text, &used);
        if (used != dim_token.text.size()) throw std::invalid_argument("trailing characters");
        if (value < 1) fail(ErrorCode::DomainError, dim_line.number, dim_token.column, "dim must be at least 1");
        n = static_cast<std::size_t>(value);
    } catch (const std::logic_error&) {
        fail(ErrorCode::SyntaxError, dim_line.number, dim_token.column, "dim must be a positive integer");
    }

    if (lines.size() != n + 2) {
        std::size_t at = lines.size() > n + 2 ? lines[n + 2].number : lines.back().number + 1;
        fail(ErrorCode::SyntaxError, at, 1, "expected exactly " + std::to_string(n) + " row lines, found " + std::to_string(lines.size() - 2));
    }
    Matrix m(n, n, field);
    for (std::size_t r = 0; r < n; ++r) {
        const Line& line = lines[r + 2];
        if (line.tokens[0].text != "row") fail(ErrorCode::SyntaxError, line.number, line.tokens[0].column, "expected 'row'");
        if (line.tokens.size() != n + 1) {
            fail(ErrorCode::SyntaxError, line.number, line.tokens[0].column, "a row needs " + std::to_string(n) + " entries");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const Token& t = line.tokens[c + 1];
            try {
                m(r, c) = parse_element(t.text, field);
            } catch (const Error& e) {
                fail(e.code(), line.number, t.column, e.what());
            }
        }
    }
    return EvolutionAlgebra(n, m);
}

EvolutionAlgebra parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::DomainError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

std::string write_algebra(const EvolutionAlgebra& e) {
    std::ostringstream out;
    out << "field " << e.field().name() << "\n";
    out << "dim " << e.dim() << "\n";
    for (std::size_t r = 0; r < e.dim(); ++r) {
        out << "row";
        for (std::size_t c = 0; c < e.dim(); ++c) out << " " << e.structure()(r, c).to_string();
        out << "\n";
    }
    return out.str();
}

std::string emit_dot(const WeightedGraph& g) {
    std::ostringstream out;
    out << "digraph E {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) out << "  " << v + 1 << ";\n";
    std::vector<WeightedEdge> edges = g.edges;
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
    for (const auto& e : edges) {
        out << "  " << e.from + 1 << " -> " << e.to + 1;
        if (!e.weight.is_one()) out << " [label=\"" << e.weight.to_string() << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace evo
