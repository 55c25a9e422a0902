#include "dgspec/formats.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

#include "dgspec/errors.hpp"

namespace dgspec {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr unsigned char kBias = 63;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

void check_order(std::size_t n, std::size_t max_order, std::size_t line, std::size_t column) {
    if (n > max_order) {
        throw ResourceError("graph declares " + std::to_string(n) + " vertices, above the limit of " +
                            std::to_string(max_order) + " (line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ")");
    }
}

void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    const int groups = n <= 258047 ? 3 : 6;
    out.append(groups == 3 ? 1 : 2, '~');
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kBias));
}

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first < line.size() && line[first] != '#') out.push_back({line, number});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t to_count(const Token& tok, std::size_t line) {
    std::size_t value = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", line, tok.column);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("expected a nonnegative integer, got '" + std::string(tok.text) + "'", line, tok.column);
    }
    return value;
}

}  // namespace

std::optional<GraphFormat> parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
    return std::nullopt;
}

std::string_view to_string(GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::edgelist: return "edgelist";
    }
    return "unknown";
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_order(out, n);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<unsigned char> packed((bits + 5) / 6, 0);
    // Bit index of (i, j), i < j, in column-major upper-triangle order.
    for (const auto& e : g.edges()) {
        const std::size_t j = e.v;
        const std::size_t idx = j * (j - 1) / 2 + e.u;
        packed[idx / 6] |= static_cast<unsigned char>(1u << (5 - idx % 6));
    }
    for (unsigned char c : packed) out.push_back(static_cast<char>(c + kBias));
    return out;
}

Graph parse_graph6(std::string_view text, std::size_t max_order) {
    std::size_t offset = 0;
    if (text.starts_with(kGraph6Header)) offset = kGraph6Header.size();
    std::size_t end = text.size();
    while (end > offset && is_space(text[end - 1])) --end;
    const std::string_view body = text.substr(0, end);

    auto byte_at = [&](std::size_t pos) -> unsigned {
        if (pos >= body.size()) throw ParseError("truncated graph6 string", 1, pos + 1);
        const auto c = static_cast<unsigned char>(body[pos]);
        if (c < kBias || c > 126) throw ParseError("byte outside the graph6 range 63..126", 1, pos + 1);
        return c - kBias;
    };

    std::size_t pos = offset;
    std::size_t n = byte_at(pos++);
    if (n == 63) {
        int groups = 3;
        if (pos < body.size() && body[pos] == '~') {
            ++pos;
            groups = 6;
        }
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | byte_at(pos++);
    }
    check_order(n, max_order, 1, offset + 1);

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (body.size() - pos < bytes) throw ParseError("truncated graph6 string", 1, body.size() + 1);
    if (body.size() - pos > bytes) throw ParseError("trailing data after graph6 string", 1, pos + bytes + 1);

    std::vector<Edge> edges;
    std::size_t idx = 0;
    std::size_t i = 0;
    std::size_t j = 1;
    for (std::size_t b = 0; b < bytes; ++b) {
        const unsigned value = byte_at(pos + b);
        for (int bit = 5; bit >= 0; --bit, ++idx) {
            const bool set = ((value >> bit) & 1u) != 0;
            if (idx >= bits) {
                if (set) throw ParseError("nonzero padding bits in graph6 string", 1, pos + b + 1);
                continue;
            }
            if (set) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_edgelist(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
    for (const auto& e : g.edges()) {
        out += '\n';
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
    }
    return out;
}

Graph parse_edgelist(std::string_view text, std::size_t max_order) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty edge list, expected an 'n m' header", 1, 1);

    const auto head = tokens(lines[0].text);
    if (head.size() != 2) {
        throw ParseError("header must be 'n m'", lines[0].number, head.size() > 2 ? head[2].column : 1);
    }
    const std::size_t n = to_count(head[0], lines[0].number);
    const std::size_t m = to_count(head[1], lines[0].number);
    check_order(n, max_order, lines[0].number, head[0].column);

    if (lines.size() - 1 < m) {
        const std::size_t last = lines.back().number;
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
                         last + 1, 1);
    }
    if (lines.size() - 1 > m) {
        throw ParseError("more edge lines than the header declares", lines[m + 1].number, 1);
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        const auto toks = tokens(lines[i].text);
        if (toks.size() != 2) {
            throw ParseError("edge line must be 'u v'", lines[i].number, toks.size() > 2 ? toks[2].column : 1);
        }
        const std::size_t u = to_count(toks[0], lines[i].number);
        const std::size_t v = to_count(toks[1], lines[i].number);
        for (std::size_t x : {u, v}) {
            if (x >= n) {
                throw ValidationError("endpoint " + std::to_string(x) + " out of range for n = " + std::to_string(n) +
                                      " (line " + std::to_string(lines[i].number) + ")");
            }
        }
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph(n, std::move(edges));
}

Graph parse_graph(std::string_view text, GraphFormat format, std::size_t max_order) {
    return format == GraphFormat::graph6 ? parse_graph6(text, max_order) : parse_edgelist(text, max_order);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edgelist(g);
}

GraphFormat sniff_format(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) return GraphFormat::edgelist;
    std::string_view first = lines[0].text;
    while (!first.empty() && is_space(first.front())) first.remove_prefix(1);
    while (!first.empty() && is_space(first.back())) first.remove_suffix(1);
    for (char c : first)
        if (is_space(c)) return GraphFormat::edgelist;
    return GraphFormat::graph6;
}

std::string graph_digest(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : to_graph6(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace dgspec
