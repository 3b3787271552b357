#include "drgkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace drgkit {

std::string SrgParams::str() const {
    std::ostringstream os;
    os << "(" << n << "," << k << "," << lambda << "," << mu << ")";
    return os.str();
}

int IntersectionArray::a(int i) const {
    const int d = diameter();
    if (i < 0 || i > d) throw std::out_of_range("intersection array index");
    const int bi = i < d ? b[i] : 0;
    const int ci = i == 0 ? 0 : c[i - 1];
    return degree() - bi - ci;
}

bool IntersectionArray::valid(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (b.size() != c.size() || b.empty()) return fail("b and c must have equal positive length");
    if (!c.empty() && c.front() != 1) return fail("c_1 must be 1");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= 0) return fail("b_" + std::to_string(i) + " must be positive");
        if (c[i] <= 0) return fail("c_" + std::to_string(i + 1) + " must be positive");
    }
    for (int i = 0; i <= diameter(); ++i) {
        if (a(i) < 0) return fail("a_" + std::to_string(i) + " is negative");
    }
    return true;
}

std::string IntersectionArray::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "; ";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }

    std::vector<std::vector<int>> lists(vertex_count);
    for (const auto& [u, v] : edges) {
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    Graph g;
    g.n_ = vertex_count;
    g.offsets_.assign(vertex_count + 1, 0);
    for (int v = 0; v < vertex_count; ++v) {
        auto& l = lists[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(l.size());
    }
    g.adj_.reserve(g.offsets_.back());
    for (auto& l : lists) g.adj_.insert(g.adj_.end(), l.begin(), l.end());
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

int Graph::degree(int v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(adj_.size() / 2);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::distances_from(int source) const {
    check_vertex(source);
    std::vector<int> dist(n_, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

int common_neighbor_count(const Graph& g, int u, int v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors requires distinct vertices");
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Result<AmpleParams> ample_parameters(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return {std::nullopt, "graph has fewer than 2 vertices"};

    const int k = g.degree(0);
    for (int v = 1; v < n; ++v) {
        if (g.degree(v) != k)
            return {std::nullopt, "degree not constant: vertex 0 has degree " + std::to_string(k) +
                                      ", vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(g.degree(v))};
    }
    if (k == 0) return {std::nullopt, "graph has no edges"};

    int lambda = -1;
    int lu = -1, lv = -1;
    int mu_min = -1, mu_max = -1;
    for (int u = 0; u < n; ++u) {
        auto dist = g.distances_from(u);
        for (int v = u + 1; v < n; ++v) {
            if (dist[v] == 1) {
                int c = common_neighbor_count(g, u, v);
                if (lambda < 0) {
                    lambda = c;
                    lu = u;
                    lv = v;
                } else if (c != lambda) {
                    return {std::nullopt,
                            "lambda not constant: edge (" + std::to_string(lu) + "," +
                                std::to_string(lv) + ") has " + std::to_string(lambda) +
                                " common neighbors, edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") has " + std::to_string(c)};
                }
            } else if (dist[v] == 2) {
                int c = common_neighbor_count(g, u, v);
                if (mu_min < 0) {
                    mu_min = mu_max = c;
                } else {
                    mu_min = std::min(mu_min, c);
                    mu_max = std::max(mu_max, c);
                }
            }
        }
    }
    AmpleParams p;
    p.n = n;
    p.k = k;
    p.lambda = lambda;
    p.mu = mu_max < 0 ? 0 : mu_max;  // no distance-2 pairs: disjoint cliques
    p.mu_exact = mu_max < 0 || mu_min == mu_max;
    return {p, {}};
}

Result<IntersectionArray> intersection_array(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return {std::nullopt, "graph has fewer than 2 vertices"};
    auto k = regular_degree(g);
    if (!k) return {std::nullopt, "graph is not regular"};
    if (!g.is_connected()) return {std::nullopt, "graph is not connected"};
    if (*k == 0) return {std::nullopt, "graph has no edges"};

    // bs[i-1], cs[i-1] hold the b_i, c_i counts observed for distance class i.
    std::vector<int> bs, cs;
    for (int u = 0; u < n; ++u) {
        auto dist = g.distances_from(u);
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            const int i = dist[v];
            int nb = 0, nc = 0;
            for (int w : g.neighbors(v)) {
                if (dist[w] == i + 1)
                    ++nb;
                else if (dist[w] == i - 1)
                    ++nc;
            }
            while (static_cast<int>(bs.size()) < i) {
                bs.push_back(-1);
                cs.push_back(-1);
            }
            if (bs[i - 1] < 0) {
                bs[i - 1] = nb;
                cs[i - 1] = nc;
            } else {
                if (cs[i - 1] != nc)
                    return {std::nullopt, "c_" + std::to_string(i) + " not constant: pair (" +
                                              std::to_string(u) + "," + std::to_string(v) +
                                              ") has " + std::to_string(nc) + ", expected " +
                                              std::to_string(cs[i - 1])};
                if (bs[i - 1] != nb)
                    return {std::nullopt, "b_" + std::to_string(i) + " not constant: pair (" +
                                              std::to_string(u) + "," + std::to_string(v) +
                                              ") has " + std::to_string(nb) + ", expected " +
                                              std::to_string(bs[i - 1])};
            }
        }
    }

    IntersectionArray arr;
    const int d = static_cast<int>(bs.size());
    arr.b.push_back(*k);  // b_0 = k
    for (int i = 0; i < d - 1; ++i) arr.b.push_back(bs[i]);
    for (int i = 0; i < d; ++i) arr.c.push_back(cs[i]);
    std::string why;
    if (!arr.valid(&why)) return {std::nullopt, "inconsistent counts: " + why};
    return {arr, {}};
}

namespace {

bool extend_claw(const Graph& g, std::span<const int> candidates, std::size_t start,
                 std::vector<int>& leaves, int m) {
    if (static_cast<int>(leaves.size()) == m) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
        const int cand = candidates[i];
        bool independent = true;
        for (int l : leaves) {
            if (g.has_edge(l, cand)) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        leaves.push_back(cand);
        if (extend_claw(g, candidates, i + 1, leaves, m)) return true;
        leaves.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Claw> find_claw(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("claw size must be at least 1");
    for (int center = 0; center < g.vertex_count(); ++center) {
        auto nb = g.neighbors(center);
        if (static_cast<int>(nb.size()) < m) continue;
        std::vector<int> leaves;
        if (extend_claw(g, nb, 0, leaves, m)) return Claw{center, leaves};
    }
    return std::nullopt;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int w : g.neighbors(vertices[i])) {
            int j = index[w];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    }
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

LocalGraph local_graph(const Graph& g, int u, LocalScope scope) {
    auto nb = g.neighbors(u);
    std::vector<int> verts(nb.begin(), nb.end());
    if (scope == LocalScope::closed) {
        verts.insert(std::lower_bound(verts.begin(), verts.end(), u), u);
    }
    return {induced_subgraph(g, verts), std::move(verts)};
}

}  // namespace drgkit
