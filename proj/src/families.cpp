#include "drgkit/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drgkit {

namespace {

constexpr long long kMaxVertices = 200000;

[[noreturn]] void bad_spec(const std::string& msg) {
    throw std::invalid_argument(msg + "; family grammar: triangular:25, hamming:2,9, paley:13, "
                                      "sts:13, latin:4, johnson:7,2, cliques:3,5, lattice:9, "
                                      "complement:<spec>");
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

long long binomial(int v, int d) {
    long long r = 1;
    for (int i = 1; i <= d; ++i) r = r * (v - d + i) / i;
    return r;
}

std::vector<std::vector<int>> combinations(int v, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == v - d + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Graph build_johnson(int v, int d) {
    auto subsets = combinations(v, d);
    const int n = static_cast<int>(subsets.size());
    std::vector<unsigned long long> masks(n, 0);
    for (int i = 0; i < n; ++i)
        for (int x : subsets[i]) masks[i] |= 1ULL << x;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (__builtin_popcountll(masks[i] & masks[j]) == d - 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph build_hamming(int d, int q) {
    long long n = 1;
    for (int i = 0; i < d; ++i) n *= q;
    std::vector<std::pair<int, int>> edges;
    // Tuple (x_0..x_{d-1}) in lexicographic order, x_0 most significant.
    std::vector<long long> place(d, 1);
    for (int i = d - 2; i >= 0; --i) place[i] = place[i + 1] * q;
    for (long long id = 0; id < n; ++id) {
        for (int pos = 0; pos < d; ++pos) {
            int digit = static_cast<int>(id / place[pos] % q);
            for (int val = digit + 1; val < q; ++val) {
                long long other = id + static_cast<long long>(val - digit) * place[pos];
                edges.emplace_back(static_cast<int>(id), static_cast<int>(other));
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph build_paley(int q) {
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<long long>(x) * x % q] = 1;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (residue[(v - u) % q]) edges.emplace_back(u, v);
    return Graph::from_edges(q, edges);
}

// Cells of the cyclic Latin square L(i,j) = i+j mod q, adjacent when they
// share a row, a column, or a symbol.
Graph build_latin(int q) {
    const int n = q * q;
    auto id = [q](int i, int j) { return i * q + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            for (int j2 = j + 1; j2 < q; ++j2) edges.emplace_back(id(i, j), id(i, j2));
            for (int i2 = i + 1; i2 < q; ++i2) edges.emplace_back(id(i, j), id(i2, j));
            for (int i2 = i + 1; i2 < q; ++i2) {
                int j2 = ((i + j - i2) % q + q) % q;  // same symbol
                if (j2 != j) edges.emplace_back(id(i, j), id(i2, j2));
            }
        }
    return Graph::from_edges(n, edges);
}

Graph build_sts_block_graph(int v) {
    auto blocks = steiner_triple_system(v);
    const int n = static_cast<int>(blocks.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = blocks[i];
            const auto& b = blocks[j];
            bool share = false;
            for (int x : a)
                for (int y : b)
                    if (x == y) share = true;
            if (share) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

Graph build_disjoint_cliques(int count, int size) {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < count; ++c)
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) edges.emplace_back(c * size + i, c * size + j);
    return Graph::from_edges(count * size, edges);
}

void require(bool cond, const std::string& msg) {
    if (!cond) bad_spec(msg);
}

// Families whose output is strongly regular (mu exact over all nonadjacent
// pairs), so the complement tuple has a closed form.  Disjoint cliques count:
// mu = 0 holds for every nonadjacent pair.
bool srg_closed_form(const FamilySpec& spec) {
    switch (spec.tag) {
        case Family::johnson: return spec.b == 2;
        case Family::hamming: return spec.a == 2;
        case Family::complement_of: return srg_closed_form(*spec.inner);
        default: return true;
    }
}

}  // namespace

FamilySpec FamilySpec::johnson(int v, int d) { return {Family::johnson, v, d, nullptr}; }
FamilySpec FamilySpec::hamming(int d, int q) { return {Family::hamming, d, q, nullptr}; }
FamilySpec FamilySpec::triangular(int m) { return {Family::triangular, m, 0, nullptr}; }
FamilySpec FamilySpec::lattice(int q) { return {Family::lattice, q, 0, nullptr}; }
FamilySpec FamilySpec::paley(int q) { return {Family::paley, q, 0, nullptr}; }
FamilySpec FamilySpec::latin_square(int q) { return {Family::latin_square, q, 0, nullptr}; }
FamilySpec FamilySpec::sts_block(int v) { return {Family::sts_block, v, 0, nullptr}; }
FamilySpec FamilySpec::disjoint_cliques(int count, int size) {
    return {Family::disjoint_cliques, count, size, nullptr};
}
FamilySpec FamilySpec::complement_of(FamilySpec inner) {
    FamilySpec s;
    s.tag = Family::complement_of;
    s.inner = std::make_shared<const FamilySpec>(std::move(inner));
    return s;
}

std::string FamilySpec::str() const {
    std::ostringstream os;
    switch (tag) {
        case Family::johnson: os << "johnson:" << a << "," << b; break;
        case Family::hamming: os << "hamming:" << a << "," << b; break;
        case Family::triangular: os << "triangular:" << a; break;
        case Family::lattice: os << "lattice:" << a; break;
        case Family::paley: os << "paley:" << a; break;
        case Family::latin_square: os << "latin:" << a; break;
        case Family::sts_block: os << "sts:" << a; break;
        case Family::disjoint_cliques: os << "cliques:" << a << "," << b; break;
        case Family::complement_of: os << "complement:" << inner->str(); break;
    }
    return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    auto colon = lower.find(':');
    if (colon == std::string::npos) bad_spec("missing ':' in \"" + text + "\"");
    std::string name = lower.substr(0, colon);
    std::string rest = lower.substr(colon + 1);

    if (name == "complement") return complement_of(parse(rest));

    std::vector<int> args;
    std::istringstream as(rest);
    std::string tok;
    while (std::getline(as, tok, ',')) {
        try {
            std::size_t pos = 0;
            int val = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            args.push_back(val);
        } catch (const std::exception&) {
            bad_spec("bad integer \"" + tok + "\" in \"" + text + "\"");
        }
    }
    auto want = [&](std::size_t c) {
        if (args.size() != c)
            bad_spec("family \"" + name + "\" takes " + std::to_string(c) + " parameter(s)");
    };
    if (name == "johnson") { want(2); return johnson(args[0], args[1]); }
    if (name == "hamming") { want(2); return hamming(args[0], args[1]); }
    if (name == "triangular") { want(1); return triangular(args[0]); }
    if (name == "lattice") { want(1); return lattice(args[0]); }
    if (name == "paley") { want(1); return paley(args[0]); }
    if (name == "latin") { want(1); return latin_square(args[0]); }
    if (name == "sts") { want(1); return sts_block(args[0]); }
    if (name == "cliques") { want(2); return disjoint_cliques(args[0], args[1]); }
    bad_spec("unknown family \"" + name + "\"");
}

std::vector<std::array<int, 3>> steiner_triple_system(int v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw std::invalid_argument("Steiner triple systems need v = 1 or 3 (mod 6), v >= 7");
    std::vector<std::array<int, 3>> blocks;
    auto add = [&blocks](int x, int y, int z) {
        std::array<int, 3> t{x, y, z};
        std::sort(t.begin(), t.end());
        blocks.push_back(t);
    };
    if (v % 6 == 3) {
        // Bose: points Z_m x {0,1,2} with m = 2t+1, idempotent commutative
        // quasigroup i*j = (i+j)(t+1) mod m.
        const int m = v / 3;
        const int half = (m + 1) / 2;
        auto point = [m](int x, int c) { return 3 * x + c; };
        auto op = [m, half](int i, int j) { return static_cast<int>((static_cast<long long>(i + j) * half) % m); };
        for (int x = 0; x < m; ++x) add(point(x, 0), point(x, 1), point(x, 2));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int c = 0; c < 3; ++c) add(point(i, c), point(j, c), point(op(i, j), (c + 1) % 3));
    } else {
        // Skolem: points (Z_{2t} x {0,1,2}) plus an extra point, with the
        // half-idempotent commutative quasigroup obtained by relabeling the
        // Cayley table of Z_{2t}.
        const int t = v / 6;
        const int m = 2 * t;
        const int infinity = v - 1;
        auto point = [](int x, int c) { return 3 * x + c; };
        auto relabel = [t](int s) { return s % 2 == 0 ? s / 2 : t + (s - 1) / 2; };
        auto op = [m, relabel](int i, int j) { return relabel((i + j) % m); };
        for (int x = 0; x < t; ++x) add(point(x, 0), point(x, 1), point(x, 2));
        for (int x = 0; x < t; ++x) {
            add(infinity, point(t + x, 0), point(x, 1));
            add(infinity, point(t + x, 1), point(x, 2));
            add(infinity, point(t + x, 2), point(x, 0));
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int c = 0; c < 3; ++c) add(point(i, c), point(j, c), point(op(i, j), (c + 1) % 3));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

SrgParams expected_parameters(const FamilySpec& spec) {
    switch (spec.tag) {
        case Family::johnson: {
            const int v = spec.a, d = spec.b;
            require(d >= 2 && v >= 2 * d, "johnson needs v >= 2d >= 4");
            long long n = binomial(v, d);
            require(n <= kMaxVertices, "johnson graph too large");
            return {static_cast<int>(n), d * (v - d), v - 2, 4};
        }
        case Family::hamming: {
            const int d = spec.a, q = spec.b;
            require(d >= 2 && q >= 2, "hamming needs d >= 2 and q >= 2");
            long long n = 1;
            for (int i = 0; i < d; ++i) {
                n *= q;
                require(n <= kMaxVertices, "hamming graph too large");
            }
            return {static_cast<int>(n), d * (q - 1), q - 2, 2};
        }
        case Family::triangular: {
            const int m = spec.a;
            require(m >= 4, "triangular needs m >= 4");
            return expected_parameters(FamilySpec::johnson(m, 2));
        }
        case Family::lattice: {
            const int q = spec.a;
            require(q >= 2, "lattice needs q >= 2");
            return expected_parameters(FamilySpec::hamming(2, q));
        }
        case Family::paley: {
            const int q = spec.a;
            require(q >= 5 && q % 4 == 1 && is_prime(q),
                    "paley needs a prime q = 1 (mod 4), q >= 5");
            return {q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
        }
        case Family::latin_square: {
            const int q = spec.a;
            require(q >= 3, "latin needs q >= 3");
            return {q * q, 3 * (q - 1), q, 6};
        }
        case Family::sts_block: {
            const int v = spec.a;
            require(v >= 9 && (v % 6 == 1 || v % 6 == 3),
                    "sts block graph parameters need v = 1 or 3 (mod 6), v >= 9");
            return {v * (v - 1) / 6, 3 * (v - 3) / 2, (v + 3) / 2, 9};
        }
        case Family::disjoint_cliques: {
            require(spec.a >= 1 && spec.b >= 2, "cliques needs count >= 1 and size >= 2");
            return {spec.a * spec.b, spec.b - 1, spec.b - 2, 0};
        }
        case Family::complement_of: {
            SrgParams p = expected_parameters(*spec.inner);
            if (!srg_closed_form(*spec.inner))
                throw std::invalid_argument(
                    "no closed form for the complement of a non-strongly-regular family");
            SrgParams q{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
            require(q.k >= 1, "complement is edgeless");
            return q;
        }
    }
    throw std::invalid_argument("unknown family");
}

LabeledGraph generate(const FamilySpec& spec) {
    SrgParams expected{};
    bool have_expected;
    if (spec.tag == Family::complement_of && !srg_closed_form(*spec.inner)) {
        expected_parameters(*spec.inner);  // still validates the inner parameters
        have_expected = false;
    } else {
        expected = expected_parameters(spec);
        have_expected = true;
    }

    LabeledGraph out;
    out.spec = spec;
    switch (spec.tag) {
        case Family::johnson:
            out.graph = build_johnson(spec.a, spec.b);
            out.srg = spec.b == 2;
            break;
        case Family::hamming:
            out.graph = build_hamming(spec.a, spec.b);
            out.srg = spec.a == 2;
            break;
        case Family::triangular:
            out.graph = build_johnson(spec.a, 2);
            out.srg = true;
            break;
        case Family::lattice:
            out.graph = build_hamming(2, spec.a);
            out.srg = true;
            break;
        case Family::paley:
            out.graph = build_paley(spec.a);
            out.srg = true;
            break;
        case Family::latin_square:
            out.graph = build_latin(spec.a);
            out.srg = true;
            break;
        case Family::sts_block:
            out.graph = build_sts_block_graph(spec.a);
            out.srg = true;
            break;
        case Family::disjoint_cliques:
            out.graph = build_disjoint_cliques(spec.a, spec.b);
            out.srg = false;  // trivial family; mu = 0
            break;
        case Family::complement_of: {
            LabeledGraph inner = generate(*spec.inner);
            out.graph = complement(inner.graph);
            out.srg = have_expected && expected.mu >= 1 && expected.k <= expected.n - 2;
            break;
        }
    }
    if (have_expected) out.expected = expected;
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        std::size_t i = 0;
        for (int v = u + 1; v < n; ++v) {
            while (i < nb.size() && nb[i] < v) ++i;
            if (i < nb.size() && nb[i] == v) continue;
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace drgkit
