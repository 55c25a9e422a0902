#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dgspec {

using Vertex = std::uint32_t;

// Unordered vertex pair. Graphs store edges normalized to u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on the vertices 0..n-1.
//
// The constructor normalizes every edge to u < v and sorts the edge list, so
// two graphs compare equal exactly when they have the same order and the
// same labeled edge set. Self-loops, duplicate edges and endpoints >= n are
// rejected with ValidationError.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);
    Graph(std::size_t order, std::vector<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<std::size_t> degrees() const;
    bool has_edge(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    // CSR neighbour lists, each sorted ascending.
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

// ---------------------------------------------------------------------------
// Named families

enum class Family { complete, empty, complete_bipartite, path, cycle, hypercube };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);

// Validates the parameter list for the family: one positive size for every
// family except complete_bipartite, which takes two. Throws ParameterError.
Graph build_named(Family family, std::span<const long long> params);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t q, std::size_t r);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph hypercube(std::size_t dimension);  // Q_0 = K_1

// ---------------------------------------------------------------------------
// Constructions. All are pure; n = 0 inputs produce n = 0 outputs where the
// construction is multiplicative in the order.

Graph complement(const Graph& g);
// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(const Graph& g, std::size_t k);
Graph join(const Graph& a, const Graph& b);

// Product vertex (u, v) is labeled u * b.order() + v.
Graph cartesian_product(const Graph& a, const Graph& b);
Graph kronecker_product(const Graph& a, const Graph& b);

// G*: x_i = i, y_i = n + i; x_i ~ y_j iff i == j or v_i ~ v_j.
Graph extended_double_cover(const Graph& g);
// G^{k*}; k = 0 returns g.
Graph iterated_edc(const Graph& g, std::size_t k);

// D^k[G]: copy a of vertex u is labeled u * k + a. Copies of the same vertex
// are not adjacent, so A(D^k[G]) = A(G) (x) J_k. Throws ParameterError for k = 0.
Graph k_fold(const Graph& g, std::size_t k);
inline Graph double_graph(const Graph& g) { return k_fold(g, 2); }

// Vertices are the edges of g in g.edges() order.
Graph line_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Structural queries

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);  // false for the null graph
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g);

// ---------------------------------------------------------------------------

// Dense symmetric 0/1 matrix whose diagonal may hold 1s. Exists only to state
// D^k[G] = G (x) T_k at matrix level; Graph never carries loops.
class LoopyMatrix {
public:
    LoopyMatrix() = default;
    LoopyMatrix(std::size_t order, std::vector<std::uint8_t> entries);

    static LoopyMatrix adjacency(const Graph& g);
    // Adjacency matrix of T_k (K_k with a loop at every vertex), i.e. J_k.
    static LoopyMatrix complete_with_loops(std::size_t k);

    std::size_t order() const noexcept { return order_; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    friend bool operator==(const LoopyMatrix&, const LoopyMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::uint8_t> entries_;
};

LoopyMatrix kronecker(const LoopyMatrix& a, const LoopyMatrix& b);

}  // namespace dgspec
