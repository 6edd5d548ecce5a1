#include "relgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "relgraph/error.hpp"

namespace relgraph {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
    std::string text;
};

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& message)
{
    throw Error(ErrorKind::parse, source + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> split(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

std::size_t to_index(const std::string& token, const std::string& source, std::size_t line)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(source, line, "expected a non-negative integer, got '" + token + "'");
    return value;
}

// Content lines plus the comment lines, which the caller may inspect.
struct Document {
    std::vector<Line> content;
    std::vector<Line> comments;
};

Document scan(std::istream& in)
{
    Document doc;
    std::string text;
    for (std::size_t number = 1; std::getline(in, text); ++number) {
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        auto first = text.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        if (text[first] == '#') {
            doc.comments.push_back({number, {}, text.substr(first + 1)});
            continue;
        }
        doc.content.push_back({number, split(text), text});
    }
    return doc;
}

std::vector<std::size_t> header(const Document& doc, const std::string& keyword, std::size_t count,
                                 const std::string& source)
{
    if (doc.content.empty())
        fail(source, 1, "missing '" + keyword + "' header");
    const auto& line = doc.content.front();
    if (line.tokens.size() != count + 1 || line.tokens[0] != keyword)
        fail(source, line.number, "expected header '" + keyword + (count == 1 ? " <n>'" : " <domain> <image>'"));
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= count; ++i)
        out.push_back(to_index(line.tokens[i], source, line.number));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> body(const Document& doc, std::size_t limit_a, std::size_t limit_b,
                                                      const std::string& source)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i < doc.content.size(); ++i) {
        const auto& line = doc.content[i];
        if (line.tokens.size() != 2)
            fail(source, line.number, "expected two integers, got '" + line.text + "'");
        auto a = to_index(line.tokens[0], source, line.number);
        auto b = to_index(line.tokens[1], source, line.number);
        if (a >= limit_a)
            fail(source, line.number, std::to_string(a) + " is out of range (limit " + std::to_string(limit_a) + ")");
        if (b >= limit_b)
            fail(source, line.number, std::to_string(b) + " is out of range (limit " + std::to_string(limit_b) + ")");
        out.emplace_back(a, b);
    }
    return out;
}

} // namespace

Graph parse_graph(std::istream& in, const std::string& source)
{
    const auto doc = scan(in);
    const auto n = header(doc, "graph", 1, source)[0];
    const auto edges = body(doc, n, n, source);
    std::map<std::size_t, std::string> named;
    for (const auto& c : doc.comments) {
        auto tokens = split(c.text);
        if (tokens.size() >= 4 && tokens[0] == "vertex" && tokens[2] == "=") {
            auto v = to_index(tokens[1], source, c.number);
            if (v >= n)
                fail(source, c.number, "label for vertex " + std::to_string(v) + " out of range");
            auto at = c.text.find('=');
            auto label = c.text.substr(c.text.find_first_not_of(" \t", at + 1));
            named[v] = label;
        }
    }
    std::vector<std::string> labels;
    if (!named.empty()) {
        for (std::size_t v = 0; v < n; ++v)
            labels.push_back(named.count(v) ? named[v] : std::to_string(v));
    }
    return Graph::from_edges(n, edges, std::move(labels));
}

Relation parse_relation(std::istream& in, const std::string& source)
{
    const auto doc = scan(in);
    const auto sizes = header(doc, "relation", 2, source);
    const auto pairs = body(doc, sizes[0], sizes[1], source);
    return Relation::from_pairs(sizes[0], sizes[1], pairs);
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, path + ": cannot open file");
    return parse_graph(in, path);
}

Relation read_relation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, path + ": cannot open file");
    return parse_relation(in, path);
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << "graph " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    bool plain = true;
    for (Vertex v = 0; v < g.order() && plain; ++v)
        plain = g.label(v) == std::to_string(v);
    if (!plain)
        for (Vertex v = 0; v < g.order(); ++v)
            out << "# vertex " << v << " = " << g.label(v) << '\n';
}

void write_relation(std::ostream& out, const Relation& r)
{
    out << "relation " << r.domain_size() << ' ' << r.image_size() << '\n';
    for (auto [x, b] : r.pairs())
        out << x << ' ' << b << '\n';
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::string format_relation(const Relation& r)
{
    std::ostringstream out;
    write_relation(out, r);
    return out.str();
}

} // namespace relgraph
