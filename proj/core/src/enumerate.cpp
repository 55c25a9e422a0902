#include "dgspec/enumerate.hpp"

#include <vector>

#include "dgspec/errors.hpp"

namespace dgspec {

namespace {

class RegularSearch {
public:
    RegularSearch(std::size_t n, std::size_t r, const std::function<void(const Graph&)>& visit)
        : n_(n), r_(r), visit_(visit), degree_(n, 0) {}

    std::size_t run() {
        for (Vertex v = 1; v <= r_; ++v) add(0, v);
        fill(1);
        return count_;
    }

private:
    void add(Vertex u, Vertex v) {
        edges_.push_back({u, v});
        ++degree_[u];
        ++degree_[v];
    }

    void remove_last() {
        const Edge e = edges_.back();
        edges_.pop_back();
        --degree_[e.u];
        --degree_[e.v];
    }

    // Completes vertex u by choosing its missing neighbours among v > u.
    void fill(Vertex u) {
        if (u == n_) {
            ++count_;
            visit_(Graph(n_, edges_));
            return;
        }
        const std::size_t need = r_ - degree_[u];
        std::size_t open = 0;
        for (Vertex v = u + 1; v < n_; ++v) open += degree_[v] < r_ ? 1 : 0;
        if (open < need) return;
        choose(u, u + 1, need);
    }

    void choose(Vertex u, Vertex from, std::size_t need) {
        if (need == 0) {
            fill(u + 1);
            return;
        }
        for (Vertex v = from; v < n_; ++v) {
            if (degree_[v] >= r_) continue;
            add(u, v);
            choose(u, v + 1, need - 1);
            remove_last();
        }
    }

    std::size_t n_;
    std::size_t r_;
    const std::function<void(const Graph&)>& visit_;
    std::vector<std::size_t> degree_;
    std::vector<Edge> edges_;
    std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_regular_graph(std::size_t n, std::size_t r, const std::function<void(const Graph&)>& visit) {
    if (n > 32) throw ParameterError("regular graph enumeration supports at most 32 vertices");
    if (n == 0) return 0;
    if (r >= n || (n * r) % 2 != 0) return 0;
    return RegularSearch(n, r, visit).run();
}

}  // namespace dgspec
