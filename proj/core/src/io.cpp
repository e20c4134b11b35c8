#include "reslat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace reslat {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string &text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (!tokens.empty())
            lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

} // namespace

ParseResult parse_algebra(const std::string &text)
{
    ParseResult result;
    auto fail = [&](int line, const std::string &msg) -> ParseResult & {
        result.diagnostics.push_back("line " + std::to_string(line) + ": " + msg);
        return result;
    };

    auto lines = tokenize(text);
    size_t pos = 0;
    auto peek = [&]() -> const Line * { return pos < lines.size() ? &lines[pos] : nullptr; };

    const Line *l = peek();
    if (!l || l->tokens[0] != "size" || l->tokens.size() != 2)
        return fail(l ? l->number : 1, "expected 'size N'");
    int n = 0;
    try {
        n = std::stoi(l->tokens[1]);
    } catch (...) {
        return fail(l->number, "size is not a number");
    }
    if (n < 1 || n > max_algebra_size)
        return fail(l->number, "size out of range (1.." +
                                   std::to_string(max_algebra_size) + ")");
    ++pos;

    std::vector<std::string> names;
    l = peek();
    if (l && l->tokens[0] == "elements") {
        if (l->tokens.size() != static_cast<size_t>(n) + 1)
            return fail(l->number, "expected " + std::to_string(n) + " element names");
        names.assign(l->tokens.begin() + 1, l->tokens.end());
        ++pos;
    } else {
        for (int i = 0; i < n; ++i)
            names.push_back("e" + std::to_string(i));
    }
    std::map<std::string, Elem> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(names[i], i).second)
            return fail(l ? l->number : 1, "duplicate element name '" + names[i] + "'");
    }
    result.names = names;

    auto read_order = [&](Matrix &out) -> bool {
        out.assign(n, std::vector<int>(n, 0));
        for (int r = 0; r < n; ++r) {
            const Line *row = peek();
            if (!row) {
                fail(lines.empty() ? 1 : lines.back().number, "unexpected end of file in order section");
                return false;
            }
            if (row->tokens.size() != static_cast<size_t>(n)) {
                fail(row->number, "expected " + std::to_string(n) + " entries, got " +
                                      std::to_string(row->tokens.size()));
                return false;
            }
            for (int c = 0; c < n; ++c) {
                if (row->tokens[c] == "0")
                    out[r][c] = 0;
                else if (row->tokens[c] == "1")
                    out[r][c] = 1;
                else {
                    fail(row->number, "order entries must be 0 or 1");
                    return false;
                }
            }
            ++pos;
        }
        return true;
    };

    auto read_table = [&](Matrix &out, const char *what) -> bool {
        out.assign(n, std::vector<int>(n, 0));
        for (int r = 0; r < n; ++r) {
            const Line *row = peek();
            if (!row) {
                fail(lines.empty() ? 1 : lines.back().number,
                     std::string("unexpected end of file in ") + what + " section");
                return false;
            }
            if (row->tokens.size() != static_cast<size_t>(n)) {
                fail(row->number, "expected " + std::to_string(n) + " entries, got " +
                                      std::to_string(row->tokens.size()));
                return false;
            }
            for (int c = 0; c < n; ++c) {
                auto it = index.find(row->tokens[c]);
                if (it == index.end()) {
                    fail(row->number, "unknown element name '" + row->tokens[c] + "'");
                    return false;
                }
                out[r][c] = it->second;
            }
            ++pos;
        }
        return true;
    };

    l = peek();
    if (!l || l->tokens.size() != 1 || l->tokens[0] != "order")
        return fail(l ? l->number : 1, "expected 'order' section");
    ++pos;
    Matrix leq;
    if (!read_order(leq))
        return result;

    l = peek();
    if (!l || l->tokens.size() != 1 || l->tokens[0] != "mult")
        return fail(l ? l->number : 1, "expected 'mult' section");
    ++pos;
    Matrix mult;
    if (!read_table(mult, "mult"))
        return result;

    std::optional<Matrix> impl;
    l = peek();
    if (l && l->tokens.size() == 1 && l->tokens[0] == "impl") {
        ++pos;
        Matrix im;
        if (!read_table(im, "impl"))
            return result;
        impl = std::move(im);
    }
    if ((l = peek()))
        return fail(l->number, "unexpected trailing content");

    BuildResult built = build(leq, mult, impl, names);
    result.report = std::move(built.report);
    result.algebra = std::move(built.algebra);
    return result;
}

ParseResult parse_algebra_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back("cannot open '" + path + "'");
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string serialize(const ResiduatedLattice &a)
{
    const int n = a.size();
    std::ostringstream os;
    os << "size " << n << "\n";
    os << "elements";
    for (int i = 0; i < n; ++i)
        os << " " << a.name(i);
    os << "\norder\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            os << (y ? " " : "") << (a.leq(x, y) ? 1 : 0);
        os << "\n";
    }
    os << "mult\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            os << (y ? " " : "") << a.name(a.mult(x, y));
        os << "\n";
    }
    os << "impl\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            os << (y ? " " : "") << a.name(a.impl(x, y));
        os << "\n";
    }
    return os.str();
}

namespace {

std::string dot_escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string export_dot(const LabeledGraph &g, const std::string &name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v)
        os << "  v" << v << " [label=\"" << dot_escape(g.labels[v]) << "\"];\n";
    for (auto [u, v] : g.edges())
        os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

const char *json_bool(bool b) { return b ? "true" : "false"; }

std::string json_opt(const std::optional<int> &v)
{
    return v ? std::to_string(*v) : std::string("\"inf\"");
}

} // namespace

std::string catalog_line(const CatalogRecord &rec)
{
    std::ostringstream os;
    os << "{\"size\":" << rec.size
       << ",\"canonical_key\":\"" << to_hex(rec.canonical_key) << "\""
       << ",\"flags\":{"
       << "\"prelinear\":" << json_bool(rec.flags.prelinear)
       << ",\"divisible\":" << json_bool(rec.flags.divisible)
       << ",\"involutive\":" << json_bool(rec.flags.involutive)
       << ",\"idempotent\":" << json_bool(rec.flags.idempotent)
       << ",\"mtl\":" << json_bool(rec.flags.mtl)
       << ",\"bl\":" << json_bool(rec.flags.bl)
       << ",\"godel\":" << json_bool(rec.flags.godel)
       << ",\"mv\":" << json_bool(rec.flags.mv)
       << ",\"heyting\":" << json_bool(rec.flags.heyting)
       << "},\"filter_count\":" << rec.filter_count
       << ",\"max_filter_count\":" << rec.max_filter_count
       << ",\"radical_size\":" << rec.radical_size
       << ",\"graph\":{"
       << "\"vertices\":" << rec.graph_vertices
       << ",\"edges\":" << rec.graph_edges
       << ",\"diameter\":" << json_opt(rec.graph_diameter)
       << ",\"girth\":" << json_opt(rec.graph_girth)
       << ",\"omega\":" << rec.graph_omega
       << ",\"chi\":" << rec.graph_chi
       << ",\"planar\":" << json_bool(rec.graph_planar)
       << ",\"canonical_graph_form\":\"" << to_hex(rec.graph_key) << "\""
       << "}}";
    return os.str();
}

std::string invariants_json(const GraphInvariants &inv)
{
    std::ostringstream os;
    os << "{\"vertices\":" << inv.vertex_count
       << ",\"edges\":" << inv.edge_count
       << ",\"connected\":" << json_bool(inv.connected)
       << ",\"diameter\":" << json_opt(inv.diameter)
       << ",\"girth\":" << json_opt(inv.girth)
       << ",\"omega\":" << inv.clique_number
       << ",\"chi\":" << inv.chromatic_number
       << ",\"max_filter_count\":" << inv.max_filter_count
       << ",\"planar\":" << json_bool(inv.planar)
       << ",\"partite_classes\":[";
    for (size_t i = 0; i < inv.partite_classes.size(); ++i) {
        if (i)
            os << ",";
        os << "[";
        for (size_t j = 0; j < inv.partite_classes[i].size(); ++j) {
            if (j)
                os << ",";
            os << inv.partite_classes[i][j];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace reslat
