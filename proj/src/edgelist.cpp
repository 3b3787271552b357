#include "drgkit/edgelist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drgkit {

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_index = -1;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (first_content) {
            first_content = false;
            std::string tok;
            ls >> tok;
            if (tok == "n" || tok == "N") {
                if (!(ls >> declared_n) || declared_n < 0)
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": malformed header");
                continue;
            }
            ls.clear();
            ls.str(line.substr(start));
        }
        int u, v;
        if (!(ls >> u >> v) || u < 0 || v < 0)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected two nonnegative vertex indices");
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_index + 1;
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace drgkit
