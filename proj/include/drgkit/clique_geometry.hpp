#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/types.hpp"

namespace drgkit {

// A value of t for which the clique-geometry hypotheses
//   lambda > (2t-1)(mu-1) - 1   and   k < (t+1)(lambda+1) - t(t+1)(mu-1)/2
// hold, together with the resulting order threshold
// lambda + 2 - (t-1)(mu-1).  Carries the parameters it was derived from.
struct MetschWitness {
    int t = 0;
    int order_threshold = 0;
    std::string source;  // "theorem-search" or "corollary-formula"
    AmpleParams params;
};

// Both hypotheses above for a specific t.
bool metsch_hypotheses(const AmpleParams& p, int t);

// (lambda+1)^2 > (3k + lambda + 1)(mu - 1), in exact integer arithmetic.
bool eq_main_holds(long long k, long long lambda, long long mu);

// Smallest t in [1, k] passing both hypotheses.
std::optional<MetschWitness> metsch_t_min(const AmpleParams& p);

// t = ceil(3k / (2(lambda+1))) whenever (lambda+1)^2 > (3k+lambda+1)(mu-1).
std::optional<MetschWitness> metsch_t_corollary(const AmpleParams& p);

// The special cliques with per-edge and per-vertex membership indices.
struct CliqueGeometry {
    std::vector<std::vector<int>> cliques;          // each sorted; list sorted
    std::vector<std::vector<int>> vertex_membership;  // clique indices per vertex
    std::unordered_map<long long, int> edge_index;  // key u * n + v with u < v

    int vertex_count = 0;
    int clique_of_edge(int u, int v) const;
    int max_membership() const;
};

// All maximal cliques of order >= w.order_threshold, verified to satisfy the
// geometry axioms (every edge in exactly one clique, per-vertex membership
// at most t, every clique maximal).  Throws std::domain_error on any axiom
// violation, naming the offending edge.  For mu <= 1 the geometry is built
// directly: components when mu = 0, edge hulls {u,v} + N(u) cap N(v) when
// mu = 1.
CliqueGeometry extract_geometry(const Graph& g, const MetschWitness& w);

// Degree-rule recognition: {u,v} plus the common neighbors whose degree
// inside the common-neighborhood subgraph is at least
// lambda - (t-1)(mu-1) - 1.  Must equal the special clique of (u,v).
std::vector<int> special_clique_of_edge(const Graph& g, const MetschWitness& w, int u, int v);

// Sweep of the local clique-partition procedure: per uncovered seed u, take
// H = N+(u) within the remaining graph, split off the deficient set D by the
// codegree threshold kappa = (lambda-mu)/2, and emit C = H - D as a class.
struct CliquePartitionResult {
    std::vector<int> seeds;
    std::vector<std::vector<int>> classes;  // parallel to seeds; sorted
    std::vector<int> deficient_set_sizes;   // |D| per seed
    int lambda = 0;
    int mu = 0;
    double kappa = 0.0;  // (lambda - mu)/2; comparisons are exact
    // Seeds where the one-shot codegree split was inconclusive and blockers
    // were instead eliminated pair by pair.
    bool used_degenerate_fallback = false;
    std::vector<int> nonmaximal_classes;  // class indices not maximal in h

    int min_class_order() const;
};

// Requires h lambda-regular with nonadjacent pairs having at most mu-1 common
// neighbors; violations throw std::domain_error naming a witness pair.
CliquePartitionResult partition_local(const Graph& h, int lambda, int mu);

// Exact ordered count of nonadjacent pairs in N(u) against the bound
// (k - lambda - 1)(mu - 1), where k = |V(h)|.
struct PairCountCheck {
    long long count = 0;
    long long bound = 0;
    bool holds = false;
};
PairCountCheck nonadjacent_pair_count(const Graph& h, int u, int lambda, int mu);

// Clique order against 1 + k/|s|; equality within 1e-9 marks a Delsarte
// clique.
struct DelsarteCheck {
    double bound = 0.0;
    double ratio = 0.0;
    bool is_delsarte = false;
};
DelsarteCheck delsarte_check(int clique_order, int k, double s);

// Pivoting Bron-Kerbosch over a degeneracy ordering, pruning branches that
// cannot reach min_order.  Cliques and the returned list are sorted.
std::vector<std::vector<int>> maximal_cliques_at_least(const Graph& g, int min_order);

}  // namespace drgkit
