#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "dgspec/errors.hpp"
#include "dgspec/formats.hpp"
#include "support/random_graphs.hpp"

namespace dgspec {
namespace {

std::string data_path(const std::string& name) { return std::string(DGSPEC_TEST_DATA_DIR) + "/" + name; }

std::vector<Edge> parse_edge_field(const std::string& field) {
    std::vector<Edge> edges;
    std::istringstream in(field);
    std::string token;
    while (in >> token) {
        const auto dash = token.find('-');
        edges.push_back({static_cast<Vertex>(std::stoul(token.substr(0, dash))),
                         static_cast<Vertex>(std::stoul(token.substr(dash + 1)))});
    }
    return edges;
}

template <class F>
void expect_parse_error_at(F&& f, std::size_t line, std::size_t column) {
    try {
        f();
        ADD_FAILURE() << "no ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

TEST(FormatNames, ParseAndPrint) {
    EXPECT_EQ(parse_format("graph6"), GraphFormat::graph6);
    EXPECT_EQ(parse_format("g6"), GraphFormat::graph6);
    EXPECT_EQ(parse_format("edgelist"), GraphFormat::edgelist);
    EXPECT_EQ(parse_format("el"), GraphFormat::edgelist);
    EXPECT_FALSE(parse_format("dot").has_value());
    EXPECT_EQ(to_string(GraphFormat::graph6), "graph6");
}

TEST(Edgelist, Examples) {
    EXPECT_EQ(parse_edgelist("2 1\n0 1"), complete_graph(2));
    EXPECT_EQ(parse_edgelist("# a comment\n\n3 2\n0 1\n\n1 2\n"), path_graph(3));
    EXPECT_EQ(parse_edgelist("4 0\n"), empty_graph(4));
    EXPECT_EQ(parse_edgelist("0 0"), Graph());
    EXPECT_EQ(to_edgelist(path_graph(3)), "3 2\n0 1\n1 2");
}

TEST(Edgelist, InvariantViolations) {
    EXPECT_THROW(parse_edgelist("2 1\n0 2\n"), ValidationError);
    EXPECT_THROW(parse_edgelist("2 1\n1 1\n"), ValidationError);
    EXPECT_THROW(parse_edgelist("3 2\n0 1\n1 0\n"), ValidationError);
}

TEST(Edgelist, SyntaxErrorsCarryPosition) {
    expect_parse_error_at([] { parse_edgelist("2 1\n0 x\n"); }, 2, 3);
    expect_parse_error_at([] { parse_edgelist("# c\n3\n"); }, 2, 1);
    expect_parse_error_at([] { parse_edgelist("3 2\n0 1\n"); }, 3, 1);
    expect_parse_error_at([] { parse_edgelist("2 1\n0 1\n0 1\n"); }, 3, 1);
    EXPECT_THROW(parse_edgelist(""), ParseError);
    EXPECT_THROW(parse_edgelist("-1 0"), ParseError);
    EXPECT_THROW(parse_edgelist("2 1\n0 1 7\n"), ParseError);
}

TEST(Edgelist, OrderCap) { EXPECT_THROW(parse_edgelist("100 0", 50), ResourceError); }

TEST(Graph6, Examples) {
    EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(parse_graph6("?"), Graph());
    EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
    EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
}

// Lines "n mask graph6", mask bit i set for the i-th pair (u, v), u < v, in
// lexicographic order. Returns the number of lines checked.
std::size_t check_mask_file(const std::string& name) {
    std::ifstream in(data_path(name));
    EXPECT_TRUE(in) << data_path(name);
    std::size_t n = 0;
    std::uint64_t mask = 0;
    std::string code;
    std::size_t lines = 0;
    while (in >> n >> mask >> code) {
        std::vector<Edge> edges;
        unsigned bit = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) edges.push_back({u, v});
        const Graph g(n, edges);
        EXPECT_EQ(to_graph6(g), code);
        EXPECT_EQ(parse_graph6(code), g) << code;
        ++lines;
    }
    return lines;
}

TEST(Graph6, AllSmallLabeledGraphs) {
    EXPECT_EQ(check_mask_file("graph6_small.txt"), 1u + 1u + 2u + 8u + 64u + 1024u);
}

TEST(Graph6, RandomReferenceGraphsUpToEight) { EXPECT_EQ(check_mask_file("graph6_medium.txt"), 300u); }

TEST(Graph6, LargerReferenceGraphs) {
    std::ifstream in(data_path("graph6_reference.tsv"));
    ASSERT_TRUE(in);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string name, n, edges, code;
        std::getline(row, name, '\t');
        std::getline(row, n, '\t');
        std::getline(row, edges, '\t');
        std::getline(row, code, '\t');
        const Graph g(std::stoul(n), parse_edge_field(edges));
        EXPECT_EQ(to_graph6(g), code) << name;
        EXPECT_EQ(parse_graph6(code), g) << name;
        ++rows;
    }
    EXPECT_EQ(rows, 4);
}

TEST(Graph6, MalformedInput) {
    expect_parse_error_at([] { parse_graph6("C~~"); }, 1, 3);
    EXPECT_THROW(parse_graph6("C"), ParseError);
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("C\x01"), ParseError);
    // K_2 is "A_"; "A`" sets a padding bit.
    EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
    expect_parse_error_at([] { parse_graph6("A`"); }, 1, 2);
}

TEST(Graph6, OrderCap) {
    EXPECT_THROW(parse_graph6("~~?@????"), ResourceError);
    EXPECT_THROW(parse_graph6("C~", 3), ResourceError);
}

TEST(Graph6, RandomRoundTrip) {
    testing::Rng rng(200);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 12), 0.4);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
        EXPECT_EQ(parse_edgelist(to_edgelist(g)), g);
        for (auto f : {GraphFormat::graph6, GraphFormat::edgelist}) {
            const auto text = emit_graph(g, f);
            EXPECT_EQ(sniff_format(text), f);
            EXPECT_EQ(parse_graph(text, f), g);
        }
    }
    const Graph big = testing::random_graph(rng, 100, 0.1);
    EXPECT_EQ(parse_graph6(to_graph6(big)), big);
}

TEST(Sniff, Examples) {
    EXPECT_EQ(sniff_format("C~"), GraphFormat::graph6);
    EXPECT_EQ(sniff_format("# comment\n2 1\n0 1\n"), GraphFormat::edgelist);
    EXPECT_EQ(sniff_format(">>graph6<<C~"), GraphFormat::graph6);
}

TEST(Digest, StableAndDistinct) {
    const auto d = graph_digest(complete_graph(4));
    EXPECT_EQ(d.size(), 16u);
    EXPECT_EQ(d, graph_digest(parse_edgelist(to_edgelist(complete_graph(4)))));
    EXPECT_NE(d, graph_digest(cycle_graph(4)));
}

}  // namespace
}  // namespace dgspec
