#include "drgkit/clique_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drgkit {

bool eq_main_holds(long long k, long long lambda, long long mu) {
    return (lambda + 1) * (lambda + 1) > (3 * k + lambda + 1) * (mu - 1);
}

bool metsch_hypotheses(const AmpleParams& p, int t) {
    const long long lambda = p.lambda, mu = p.mu, k = p.k, T = t;
    if (t < 1) return false;
    if (!(lambda > (2 * T - 1) * (mu - 1) - 1)) return false;
    // k < (t+1)(lambda+1) - t(t+1)(mu-1)/2, doubled to stay in integers.
    return 2 * k < 2 * (T + 1) * (lambda + 1) - T * (T + 1) * (mu - 1);
}

namespace {

int order_threshold_for(const AmpleParams& p, int t) {
    return p.lambda + 2 - (t - 1) * (p.mu - 1);
}

}  // namespace

std::optional<MetschWitness> metsch_t_min(const AmpleParams& p) {
    for (int t = 1; t <= std::max(1, p.k); ++t) {
        if (metsch_hypotheses(p, t))
            return MetschWitness{t, order_threshold_for(p, t), "theorem-search", p};
    }
    return std::nullopt;
}

std::optional<MetschWitness> metsch_t_corollary(const AmpleParams& p) {
    if (!eq_main_holds(p.k, p.lambda, p.mu)) return std::nullopt;
    const long long denom = 2LL * (p.lambda + 1);
    const int t = static_cast<int>((3LL * p.k + denom - 1) / denom);  // ceil(3k/(2(lambda+1)))
    return MetschWitness{t, order_threshold_for(p, t), "corollary-formula", p};
}

int CliqueGeometry::clique_of_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_index.find(static_cast<long long>(u) * vertex_count + v);
    if (it == edge_index.end())
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") not in the geometry");
    return it->second;
}

int CliqueGeometry::max_membership() const {
    int best = 0;
    for (const auto& m : vertex_membership) best = std::max(best, static_cast<int>(m.size()));
    return best;
}

namespace {

// Bron-Kerbosch with pivoting; candidate/excluded sets are sorted vectors.
void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   int min_order, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(r.size() + p.size()) < min_order) return;
    if (p.empty() && x.empty()) {
        if (static_cast<int>(r.size()) >= min_order) {
            std::vector<int> clique(r);
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
        }
        return;
    }
    // Pivot: vertex of P or X with the most neighbors in P.
    int pivot = -1, best = -1;
    for (const auto* set : {&p, &x}) {
        for (int cand : *set) {
            auto nb = g.neighbors(cand);
            int cnt = 0;
            std::size_t i = 0, j = 0;
            while (i < p.size() && j < nb.size()) {
                if (p[i] < nb[j]) ++i;
                else if (p[i] > nb[j]) ++j;
                else { ++cnt; ++i; ++j; }
            }
            if (cnt > best) { best = cnt; pivot = cand; }
        }
    }
    auto pivot_nb = g.neighbors(pivot);
    std::vector<int> branch;
    std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(),
                        std::back_inserter(branch));
    for (int v : branch) {
        auto nb = g.neighbors(v);
        std::vector<int> p2, x2;
        std::set_intersection(p.begin(), p.end(), nb.begin(), nb.end(), std::back_inserter(p2));
        std::set_intersection(x.begin(), x.end(), nb.begin(), nb.end(), std::back_inserter(x2));
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), min_order, out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), pos(n), order;
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::vector<int>> buckets(maxdeg + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    order.reserve(n);
    int cur = 0;
    while (static_cast<int>(order.size()) < n) {
        while (cur <= maxdeg && buckets[cur].empty()) ++cur;
        if (cur > maxdeg) break;
        int v = buckets[cur].back();
        buckets[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;  // stale bucket entry
        removed[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (!removed[w]) {
                --deg[w];
                buckets[deg[w]].push_back(w);
                if (deg[w] < cur) cur = deg[w];
            }
        }
    }
    return order;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques_at_least(const Graph& g, int min_order) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    auto order = degeneracy_order(g);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    for (int idx = 0; idx < n; ++idx) {
        const int v = order[idx];
        std::vector<int> p, x;
        for (int w : g.neighbors(v)) {
            if (rank[w] > idx)
                p.push_back(w);
            else
                x.push_back(w);
        }
        std::sort(p.begin(), p.end());
        std::sort(x.begin(), x.end());
        std::vector<int> r{v};
        bron_kerbosch(g, r, std::move(p), std::move(x), min_order, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

bool is_maximal_clique(const Graph& g, const std::vector<int>& clique) {
    if (!is_clique(g, clique)) return false;
    if (clique.empty()) return false;
    // Candidates adjacent to everything in the clique.
    auto first_nb = g.neighbors(clique[0]);
    for (int cand : first_nb) {
        if (std::binary_search(clique.begin(), clique.end(), cand)) continue;
        bool all = true;
        for (int v : clique)
            if (cand != v && !g.has_edge(cand, v)) {
                all = false;
                break;
            }
        if (all) return false;
    }
    return true;
}

CliqueGeometry assemble_geometry(const Graph& g, std::vector<std::vector<int>> cliques, int t) {
    CliqueGeometry geo;
    geo.vertex_count = g.vertex_count();
    geo.cliques = std::move(cliques);
    geo.vertex_membership.assign(g.vertex_count(), {});
    const long long n = g.vertex_count();
    for (std::size_t ci = 0; ci < geo.cliques.size(); ++ci) {
        const auto& clique = geo.cliques[ci];
        if (!is_maximal_clique(g, clique))
            throw std::domain_error("clique " + std::to_string(ci) + " is not maximal");
        for (int v : clique) geo.vertex_membership[v].push_back(static_cast<int>(ci));
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                long long key = clique[i] * n + clique[j];
                auto [it, inserted] = geo.edge_index.emplace(key, static_cast<int>(ci));
                if (!inserted)
                    throw std::domain_error(
                        "edge (" + std::to_string(clique[i]) + "," + std::to_string(clique[j]) +
                        ") lies in two special cliques (" + std::to_string(it->second) + " and " +
                        std::to_string(ci) + ")");
            }
    }
    for (const auto& [u, v] : g.edges()) {
        if (!geo.edge_index.count(static_cast<long long>(u) * n + v))
            throw std::domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not covered by any special clique");
    }
    if (t > 0) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (static_cast<int>(geo.vertex_membership[v].size()) > t)
                throw std::domain_error("vertex " + std::to_string(v) + " lies in " +
                                        std::to_string(geo.vertex_membership[v].size()) +
                                        " special cliques, above t = " + std::to_string(t));
        }
    }
    return geo;
}

}  // namespace

CliqueGeometry extract_geometry(const Graph& g, const MetschWitness& w) {
    if (w.params.mu <= 1) {
        // mu = 0: components are cliques.  mu = 1: the common neighbors of an
        // edge's endpoints already form a clique with them.
        std::vector<std::vector<int>> cliques;
        if (w.params.mu == 0) {
            std::vector<char> seen(g.vertex_count(), 0);
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (seen[v]) continue;
                auto dist = g.distances_from(v);
                std::vector<int> comp;
                for (int u = 0; u < g.vertex_count(); ++u)
                    if (dist[u] >= 0) {
                        comp.push_back(u);
                        seen[u] = 1;
                    }
                cliques.push_back(std::move(comp));
            }
        } else {
            for (const auto& [u, v] : g.edges()) {
                auto clique = common_neighbors(g, u, v);
                clique.push_back(u);
                clique.push_back(v);
                std::sort(clique.begin(), clique.end());
                cliques.push_back(std::move(clique));
            }
            std::sort(cliques.begin(), cliques.end());
            cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
        }
        return assemble_geometry(g, std::move(cliques), w.t);
    }
    auto cliques = maximal_cliques_at_least(g, w.order_threshold);
    return assemble_geometry(g, std::move(cliques), w.t);
}

std::vector<int> special_clique_of_edge(const Graph& g, const MetschWitness& w, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    auto common = common_neighbors(g, u, v);
    std::vector<int> clique{u, v};
    if (w.params.mu <= 1) {
        clique.insert(clique.end(), common.begin(), common.end());
    } else {
        const int threshold = w.params.lambda - (w.t - 1) * (w.params.mu - 1) - 1;
        Graph h = induced_subgraph(g, common);
        for (std::size_t i = 0; i < common.size(); ++i)
            if (h.degree(static_cast<int>(i)) >= threshold) clique.push_back(common[i]);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

int CliquePartitionResult::min_class_order() const {
    int best = classes.empty() ? 0 : static_cast<int>(classes[0].size());
    for (const auto& c : classes) best = std::min(best, static_cast<int>(c.size()));
    return best;
}

namespace {

// Repeatedly discard, from the vertex set, a member of some nonadjacent pair
// (highest codegree first, then largest index) until a clique remains.  The
// seed is adjacent to everything in H so it always survives.
std::vector<int> eliminate_to_clique(const Graph& g, std::vector<int> verts, int& removed) {
    removed = 0;
    while (true) {
        std::vector<int> candidates;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            bool in_pair = false;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (i != j && !g.has_edge(verts[i], verts[j])) {
                    in_pair = true;
                    break;
                }
            if (in_pair) candidates.push_back(static_cast<int>(i));
        }
        if (candidates.empty()) return verts;
        int pick = -1, pick_deg = -1;
        for (int idx : candidates) {
            int deg = 0;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (static_cast<int>(j) != idx && g.has_edge(verts[idx], verts[j])) ++deg;
            if (pick < 0 || deg < pick_deg || (deg == pick_deg && verts[idx] > verts[pick])) {
                pick = idx;
                pick_deg = deg;
            }
        }
        verts.erase(verts.begin() + pick);
        ++removed;
    }
}

}  // namespace

CliquePartitionResult partition_local(const Graph& h, int lambda, int mu) {
    const int n = h.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (h.degree(v) != lambda)
            throw std::domain_error("graph is not lambda-regular: vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(h.degree(v)) + ", expected " +
                                    std::to_string(lambda));
    }
    for (int u = 0; u < n; ++u) {
        auto dist = h.distances_from(u);
        for (int v = u + 1; v < n; ++v) {
            if (dist[v] != 1 && common_neighbor_count(h, u, v) > mu - 1)
                throw std::domain_error("nonadjacent pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") has " +
                                        std::to_string(common_neighbor_count(h, u, v)) +
                                        " common neighbors, above mu - 1 = " +
                                        std::to_string(mu - 1));
        }
    }

    CliquePartitionResult out;
    out.lambda = lambda;
    out.mu = mu;
    out.kappa = (lambda - mu) / 2.0;

    std::vector<char> covered(n, 0);
    for (int seed = 0; seed < n; ++seed) {
        if (covered[seed]) continue;
        std::vector<int> members{seed};
        for (int w : h.neighbors(seed))
            if (!covered[w]) members.push_back(w);
        std::sort(members.begin(), members.end());

        std::vector<int> cls;
        int deficient = 0;
        bool done = false;
        if (lambda > mu) {
            // One-shot split: D = vertices of codegree >= kappa within H,
            // compared exactly via 2*(lambda - deg_H) >= lambda - mu.
            Graph sub = induced_subgraph(h, members);
            std::vector<int> kept;
            for (std::size_t i = 0; i < members.size(); ++i) {
                long long codeg2 = 2LL * (lambda - sub.degree(static_cast<int>(i)));
                if (codeg2 < lambda - mu) kept.push_back(members[i]);
            }
            if (std::binary_search(kept.begin(), kept.end(), seed) && is_clique(h, kept)) {
                cls = kept;
                deficient = static_cast<int>(members.size() - kept.size());
                done = true;
            }
        }
        if (!done) {
            // Degenerate regime (kappa <= 0 or the seed fell into D); fall
            // back to eliminating blockers pair by pair.
            out.used_degenerate_fallback = true;
            cls = eliminate_to_clique(h, members, deficient);
        }

        for (int v : cls) covered[v] = 1;
        out.seeds.push_back(seed);
        out.deficient_set_sizes.push_back(deficient);
        out.classes.push_back(std::move(cls));
    }

    for (std::size_t i = 0; i < out.classes.size(); ++i)
        if (!is_maximal_clique(h, out.classes[i]))
            out.nonmaximal_classes.push_back(static_cast<int>(i));
    return out;
}

PairCountCheck nonadjacent_pair_count(const Graph& h, int u, int lambda, int mu) {
    const int n = h.vertex_count();
    auto k_opt = regular_degree(h);
    if (!k_opt || *k_opt != lambda)
        throw std::domain_error("graph is not lambda-regular");
    for (int a = 0; a < n; ++a) {
        auto dist = h.distances_from(a);
        for (int b = a + 1; b < n; ++b)
            if (dist[b] != 1 && common_neighbor_count(h, a, b) > mu - 1)
                throw std::domain_error("nonadjacent pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") violates the mu precondition");
    }
    auto nb = h.neighbors(u);
    long long count = 0;
    for (int a : nb)
        for (int b : nb)
            if (a != b && !h.has_edge(a, b)) ++count;
    PairCountCheck out;
    out.count = count;
    out.bound = static_cast<long long>(n - lambda - 1) * (mu - 1);
    out.holds = count <= out.bound;
    return out;
}

DelsarteCheck delsarte_check(int clique_order, int k, double s) {
    if (s >= 0) throw std::domain_error("least eigenvalue must be negative");
    DelsarteCheck out;
    out.bound = 1.0 + static_cast<double>(k) / (-s);
    out.ratio = clique_order / out.bound;
    out.is_delsarte = std::abs(clique_order - out.bound) <= 1e-9;
    return out;
}

}  // namespace drgkit
