#include "wcg/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace wcg {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    }
    return out;
}

long long to_integer(std::string_view token, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

std::size_t to_count(std::string_view token, std::size_t line) {
    long long value = to_integer(token, line);
    if (value < 0) throw ParseError(line, "expected a non-negative count, got " + std::to_string(value));
    return static_cast<std::size_t>(value);
}

Vertex to_vertex(std::string_view token, std::size_t line, std::size_t n) {
    long long value = to_integer(token, line);
    if (value < 0 || static_cast<std::size_t>(value) >= n)
        throw ParseError(line, "vertex " + std::to_string(value) + " outside [0," + std::to_string(n) + ")");
    return static_cast<Vertex>(value);
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing header line 'n m'");
    const auto& header = lines.front();
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'n m'");
    const std::size_t n = to_count(header.tokens[0], header.number);
    const std::size_t m = to_count(header.tokens[1], header.number);
    if (lines.size() - 1 != m)
        throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " edges, found " +
                                                  std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
        const Vertex u = to_vertex(line.tokens[0], line.number, n);
        const Vertex v = to_vertex(line.tokens[1], line.number, n);
        if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
        if (seen[u][v])
            throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        seen[u][v] = seen[v][u] = true;
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string format_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError(1, "empty graph6 string");
    for (std::size_t i = 0; i < line.size(); ++i) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError(1, "byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                                    " outside the graph6 range 63..126");
    }
    if (static_cast<unsigned char>(line[0]) == 126)
        throw ParseError(1, "graph6 orders above " + std::to_string(kMaxGraph6Order) + " are not supported");

    const std::size_t n = static_cast<unsigned char>(line[0]) - 63;
    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = (bits + 5) / 6;
    const std::string_view payload = line.substr(1);
    if (payload.size() < expected)
        throw ParseError(1, "truncated graph6 payload: " + std::to_string(payload.size()) + " of " +
                                std::to_string(expected) + " bytes");
    if (payload.size() > expected) throw ParseError(1, "trailing bytes after graph6 payload");

    auto bit_at = [&](std::size_t k) {
        const unsigned value = static_cast<unsigned char>(payload[k / 6]) - 63u;
        return (value >> (5 - k % 6)) & 1u;
    };
    for (std::size_t k = bits; k < expected * 6; ++k)
        if (bit_at(k)) throw ParseError(1, "non-zero graph6 padding bits");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (bit_at(k)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxGraph6Order)
        throw InputError("graph6 encoding supports at most " + std::to_string(kMaxGraph6Order) + " vertices");
    std::string out(1, static_cast<char>(63 + n));
    unsigned group = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

SimplicialComplex parse_facets(std::string_view text, bool strict) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing ground-set size line");
    const auto& header = lines.front();
    if (header.tokens.size() != 1) throw ParseError(header.number, "first line must be the ground-set size n");
    const std::size_t n = to_count(header.tokens[0], header.number);

    std::vector<Face> facets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Face f;
        for (auto token : lines[i].tokens) f.push_back(to_vertex(token, lines[i].number, n));
        facets.push_back(std::move(f));
    }
    return from_facets(n, std::move(facets), strict);
}

std::vector<VertexSet> parse_vertex_sets(std::string_view text, std::size_t n) {
    std::vector<VertexSet> sets;
    for (const auto& line : tokenize(text)) {
        VertexSet s(n);
        for (auto token : line.tokens) s.insert(to_vertex(token, line.number, n));
        sets.push_back(std::move(s));
    }
    return sets;
}

CliqueCover parse_cover(std::string_view text, const Graph& g) {
    CliqueCover cover{parse_vertex_sets(text, g.order())};
    validate_clique_cover(g, cover);
    return cover;
}

LinearForm parse_linear_form(std::string_view text, std::size_t variables) {
    std::vector<std::pair<Vertex, Rational>> terms;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        return ParseError(1, what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    auto read_number = [&]() -> long long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw fail("expected digits");
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc{}) throw fail("number out of range");
        return value;
    };

    if (text.empty()) throw fail("empty linear form");
    while (pos < text.size()) {
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!terms.empty()) {
            throw fail("expected '+' or '-'");
        }

        Rational coefficient(sign);
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            long long num = read_number();
            long long den = 1;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = read_number();
                if (den == 0) throw fail("zero denominator");
            }
            if (pos >= text.size() || text[pos] != '*') throw fail("expected '*' after coefficient");
            ++pos;
            coefficient *= Rational(num, den);
        }
        if (pos >= text.size() || text[pos] != 'x') throw fail("expected variable 'x<index>'");
        ++pos;
        const long long index = read_number();
        if (static_cast<std::size_t>(index) >= variables)
            throw fail("variable x" + std::to_string(index) + " outside x0..x" +
                       std::to_string(static_cast<long long>(variables) - 1));
        terms.emplace_back(static_cast<Vertex>(index), coefficient);
    }
    return LinearForm(variables, terms);
}

}  // namespace wcg
