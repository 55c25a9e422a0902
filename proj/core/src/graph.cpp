#include "dgspec/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "dgspec/errors.hpp"

namespace dgspec {

namespace {

constexpr std::size_t kMaxOrder = std::numeric_limits<Vertex>::max();

std::size_t checked_product(std::size_t a, std::size_t b) {
    if (a != 0 && b > kMaxOrder / a) {
        throw ParameterError("graph order " + std::to_string(a) + " * " + std::to_string(b) +
                             " exceeds the vertex label range");
    }
    return a * b;
}

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph::Graph(std::size_t order) : Graph(order, {}) {}

Graph::Graph(std::size_t order, std::vector<Edge> edges) : n_(order), edges_(std::move(edges)) {
    if (n_ > kMaxOrder) {
        throw ValidationError("graph order " + std::to_string(n_) + " exceeds the vertex label range");
    }
    for (auto& e : edges_) {
        if (e.u == e.v) {
            throw ValidationError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u >= n_ || e.v >= n_) {
            throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint >= n = " + std::to_string(n_));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw ValidationError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }

    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v >= n_) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(Vertex v) const {
    if (v >= n_) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    return offsets_[v + 1] - offsets_[v];
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = offsets_[v + 1] - offsets_[v];
    return d;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

// ---------------------------------------------------------------------------

std::optional<Family> parse_family(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "empty") return Family::empty;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "hypercube") return Family::hypercube;
    return std::nullopt;
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::complete: return "complete";
        case Family::empty: return "empty";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::hypercube: return "hypercube";
    }
    return "unknown";
}

Graph build_named(Family family, std::span<const long long> params) {
    const std::size_t expected = family == Family::complete_bipartite ? 2 : 1;
    if (params.size() != expected) {
        throw ParameterError(std::string(to_string(family)) + " takes " + std::to_string(expected) +
                             " parameter(s), got " + std::to_string(params.size()));
    }
    for (long long p : params) {
        if (p <= 0) {
            throw ParameterError(std::string(to_string(family)) + " needs positive sizes, got " + std::to_string(p));
        }
    }
    const auto a = static_cast<std::size_t>(params[0]);
    switch (family) {
        case Family::complete: return complete_graph(a);
        case Family::empty: return empty_graph(a);
        case Family::complete_bipartite: return complete_bipartite(a, static_cast<std::size_t>(params[1]));
        case Family::path: return path_graph(a);
        case Family::cycle: return cycle_graph(a);
        case Family::hypercube:
            if (a >= 31) throw ParameterError("hypercube dimension too large");
            return hypercube(a);
    }
    throw ParameterError("unknown family");
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    e.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({vx(i), vx(j)});
    return Graph(n, std::move(e));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t q, std::size_t r) {
    std::vector<Edge> e;
    e.reserve(q * r);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < r; ++j) e.push_back({vx(i), vx(q + j)});
    return Graph(q + r, std::move(e));
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({vx(i), vx(i + 1)});
    return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({vx(i), vx((i + 1) % n)});
    return Graph(n, std::move(e));
}

Graph hypercube(std::size_t dimension) {
    Graph q(1);
    const Graph k2 = complete_graph(2);
    for (std::size_t i = 0; i < dimension; ++i) q = cartesian_product(q, k2);
    return q;
}

// ---------------------------------------------------------------------------

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        auto nb = g.neighbors(vx(i));
        auto it = nb.begin();
        for (std::size_t j = i + 1; j < n; ++j) {
            while (it != nb.end() && *it < j) ++it;
            if (it == nb.end() || *it != j) e.push_back({vx(i), vx(j)});
        }
    }
    return Graph(n, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const auto shift = vx(a.order());
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    for (const auto& x : b.edges()) e.push_back({x.u + shift, x.v + shift});
    return Graph(a.order() + b.order(), std::move(e));
}

Graph copies(const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    std::vector<Edge> e;
    e.reserve(g.size() * k);
    for (std::size_t c = 0; c < k; ++c) {
        const auto shift = vx(c * n);
        for (const auto& x : g.edges()) e.push_back({x.u + shift, x.v + shift});
    }
    return Graph(checked_product(n, k), std::move(e));
}

Graph join(const Graph& a, const Graph& b) {
    const std::size_t n1 = a.order();
    const std::size_t n2 = b.order();
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    e.reserve(a.size() + b.size() + n1 * n2);
    for (const auto& x : b.edges()) e.push_back({vx(x.u + n1), vx(x.v + n1)});
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) e.push_back({vx(i), vx(n1 + j)});
    return Graph(n1 + n2, std::move(e));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    const std::size_t n1 = a.order();
    const std::size_t n2 = b.order();
    const std::size_t n = checked_product(n1, n2);
    std::vector<Edge> e;
    e.reserve(n1 * b.size() + n2 * a.size());
    for (std::size_t u = 0; u < n1; ++u)
        for (const auto& x : b.edges()) e.push_back({vx(u * n2 + x.u), vx(u * n2 + x.v)});
    for (const auto& x : a.edges())
        for (std::size_t v = 0; v < n2; ++v) e.push_back({vx(x.u * n2 + v), vx(x.v * n2 + v)});
    return Graph(n, std::move(e));
}

Graph kronecker_product(const Graph& a, const Graph& b) {
    const std::size_t n2 = b.order();
    const std::size_t n = checked_product(a.order(), n2);
    std::vector<Edge> e;
    e.reserve(2 * a.size() * b.size());
    for (const auto& x : a.edges()) {
        for (const auto& y : b.edges()) {
            e.push_back({vx(x.u * n2 + y.u), vx(x.v * n2 + y.v)});
            e.push_back({vx(x.u * n2 + y.v), vx(x.v * n2 + y.u)});
        }
    }
    return Graph(n, std::move(e));
}

Graph extended_double_cover(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> e;
    e.reserve(2 * g.size() + n);
    for (std::size_t i = 0; i < n; ++i) e.push_back({vx(i), vx(n + i)});
    for (const auto& x : g.edges()) {
        e.push_back({x.u, vx(n + x.v)});
        e.push_back({x.v, vx(n + x.u)});
    }
    return Graph(checked_product(n, 2), std::move(e));
}

Graph iterated_edc(const Graph& g, std::size_t k) {
    Graph out = g;
    for (std::size_t i = 0; i < k; ++i) out = extended_double_cover(out);
    return out;
}

Graph k_fold(const Graph& g, std::size_t k) {
    if (k == 0) throw ParameterError("k-fold graph needs k >= 1");
    const std::size_t n = checked_product(g.order(), k);
    std::vector<Edge> e;
    e.reserve(g.size() * k * k);
    for (const auto& x : g.edges())
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) e.push_back({vx(x.u * k + a), vx(x.v * k + b)});
    return Graph(n, std::move(e));
}

Graph line_graph(const Graph& g) {
    const auto edges = g.edges();
    std::vector<std::vector<Vertex>> incident(g.order());
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        incident[edges[idx].u].push_back(vx(idx));
        incident[edges[idx].v].push_back(vx(idx));
    }
    std::vector<Edge> e;
    for (const auto& inc : incident)
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) e.push_back({inc[i], inc[j]});
    // Two distinct simple edges share at most one endpoint, so no duplicates arise.
    return Graph(edges.size(), std::move(e));
}

// ---------------------------------------------------------------------------

std::size_t component_count(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = true;
        stack.push_back(vx(s));
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        stack.push_back(vx(s));
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_regular(const Graph& g) {
    const auto d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

// ---------------------------------------------------------------------------

LoopyMatrix::LoopyMatrix(std::size_t order, std::vector<std::uint8_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) {
        throw ValidationError("loopy matrix needs order^2 entries");
    }
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            const auto x = entries_[i * order_ + j];
            if (x > 1) throw ValidationError("loopy matrix entries must be 0 or 1");
            if (x != entries_[j * order_ + i]) throw ValidationError("loopy matrix must be symmetric");
        }
    }
}

LoopyMatrix LoopyMatrix::adjacency(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint8_t> m(n * n, 0);
    for (const auto& e : g.edges()) {
        m[e.u * n + e.v] = 1;
        m[e.v * n + e.u] = 1;
    }
    return LoopyMatrix(n, std::move(m));
}

LoopyMatrix LoopyMatrix::complete_with_loops(std::size_t k) {
    return LoopyMatrix(k, std::vector<std::uint8_t>(k * k, 1));
}

LoopyMatrix kronecker(const LoopyMatrix& a, const LoopyMatrix& b) {
    const std::size_t na = a.order();
    const std::size_t nb = b.order();
    const std::size_t n = na * nb;
    std::vector<std::uint8_t> m(n * n, 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (!a(i, j)) continue;
            for (std::size_t p = 0; p < nb; ++p)
                for (std::size_t q = 0; q < nb; ++q) m[(i * nb + p) * n + (j * nb + q)] = b(p, q);
        }
    return LoopyMatrix(n, std::move(m));
}

}  // namespace dgspec
