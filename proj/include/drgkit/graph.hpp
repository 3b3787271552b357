#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drgkit/types.hpp"

namespace drgkit {

// Immutable undirected simple graph on vertices 0..n-1.  Adjacency is stored
// in CSR form with each neighbor list sorted, so edge queries are binary
// searches and common-neighbor counts are linear merges.  Instances are safe
// to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list.  Duplicate edges collapse; self-loops and
    // out-of-range endpoints throw std::invalid_argument.
    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(adj_.size()) / 2; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    // BFS distances from source; -1 marks unreachable vertices.
    std::vector<int> distances_from(int source) const;
    bool is_connected() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<int> offsets_;
    std::vector<int> adj_;
};

// Induced K_{1,m}: center adjacent to every leaf, leaves pairwise nonadjacent.
struct Claw {
    int center = -1;
    std::vector<int> leaves;
};

// Induced subgraph together with the map from its indices back to the parent.
struct LocalGraph {
    Graph graph;
    std::vector<int> to_parent;
};

enum class LocalScope { open, closed };  // N(u) vs N(u) + {u}

// Analysis outcome: either a value or a human-readable failure report.
template <typename T>
struct Result {
    std::optional<T> value;
    std::string error;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

// k if every vertex has degree k, absent otherwise.
std::optional<int> regular_degree(const Graph& g);

// N(u) intersect N(v), sorted.  Requires u != v.
std::vector<int> common_neighbors(const Graph& g, int u, int v);
int common_neighbor_count(const Graph& g, int u, int v);

// Scans every adjacent and distance-2 pair.  Fails when the degree or lambda
// is not constant; a non-constant mu yields mu = max observed, mu_exact=false.
Result<AmpleParams> ample_parameters(const Graph& g);

// Distance-regularity check: all b_i/c_i counts constant per distance class.
Result<IntersectionArray> intersection_array(const Graph& g);

// Lexicographically first m-claw (by center, then leaf set), if any.
std::optional<Claw> find_claw(const Graph& g, int m);

// Induced subgraph on N(u) or N(u)+{u}; to_parent maps back to g's indices.
LocalGraph local_graph(const Graph& g, int u, LocalScope scope);

// Induced subgraph on the given sorted vertex set.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace drgkit
