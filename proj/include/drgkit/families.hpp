#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/types.hpp"

namespace drgkit {

enum class Family {
    johnson,
    hamming,
    triangular,
    lattice,
    paley,
    latin_square,
    sts_block,
    disjoint_cliques,
    complement_of,
};

// A family tag plus its integer parameters.  complement_of wraps another spec.
struct FamilySpec {
    Family tag = Family::johnson;
    int a = 0;
    int b = 0;
    std::shared_ptr<const FamilySpec> inner;

    std::string str() const;

    // CLI grammar, case-insensitive: "triangular:25", "hamming:2,9",
    // "paley:13", "sts:13", "latin:4", "johnson:7,2", "cliques:3,5",
    // "lattice:9", "complement:<spec>".  Throws std::invalid_argument.
    static FamilySpec parse(const std::string& text);

    static FamilySpec johnson(int v, int d);
    static FamilySpec hamming(int d, int q);
    static FamilySpec triangular(int m);
    static FamilySpec lattice(int q);
    static FamilySpec paley(int q);
    static FamilySpec latin_square(int q);
    static FamilySpec sts_block(int v);
    static FamilySpec disjoint_cliques(int count, int size);
    static FamilySpec complement_of(FamilySpec inner);
};

struct LabeledGraph {
    Graph graph;
    FamilySpec spec;
    // Closed-form (n,k,lambda,mu); for diameter >= 3 Johnson/Hamming members
    // this is the amply regular tuple rather than a strongly regular one.
    std::optional<SrgParams> expected;
    bool srg = false;  // family output is strongly regular
};

// Deterministic construction with a fixed vertex order per family.
LabeledGraph generate(const FamilySpec& spec);

// Closed-form parameters without building the graph.  Throws when the family
// has no closed form (e.g. complements of non-strongly-regular members).
SrgParams expected_parameters(const FamilySpec& spec);

Graph complement(const Graph& g);

// Steiner triple system on v points (v = 1,3 mod 6, v >= 7): Bose
// construction for v = 3 mod 6, Skolem construction for v = 1 mod 6.
// Blocks are sorted triples, listed in ascending order.
std::vector<std::array<int, 3>> steiner_triple_system(int v);

}  // namespace drgkit
