#include "epcd/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "epcd/error.hpp"

namespace epcd {

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges, std::size_t* self_loops) {
    std::size_t loops = 0;
    std::vector<Edge> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= num_nodes ||
            static_cast<std::size_t>(v) >= num_nodes) {
            throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                        std::to_string(num_nodes) + " nodes");
        }
        if (u == v) {
            ++loops;
            continue;
        }
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.offsets_.assign(num_nodes + 1, 0);
    for (const auto& a : arcs) ++g.offsets_[a.first + 1];
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.targets_.resize(arcs.size());
    for (std::size_t k = 0; k < arcs.size(); ++k) g.targets_[k] = arcs[k].second;

    if (self_loops) *self_loops = loops;
    return g;
}

std::vector<double> Graph::degrees() const {
    std::vector<double> d(num_nodes());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(degree(static_cast<NodeId>(i)));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (std::size_t i = 0; i < num_nodes(); ++i) {
        const auto u = static_cast<NodeId>(i);
        for (NodeId v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

EdgeListLoad load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    long long max_id = -1;
    long long declared_nodes = -1;

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            // "# nodes N" header written by write_edge_list
            std::istringstream comment(line.substr(hash + 1));
            std::string key;
            long long value = 0;
            if (comment >> key >> value && key == "nodes" && value >= 0) declared_nodes = value;
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b) || (fields >> extra)) throw ParseError("expected two node ids", lineno);

        auto parse_id = [&](const std::string& s) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(s, &used);
            } catch (const std::exception&) {
                throw ParseError("invalid node id '" + s + "'", lineno);
            }
            if (used != s.size()) throw ParseError("invalid node id '" + s + "'", lineno);
            if (v < 0 || v > 0x7fffffff) throw ParseError("node id out of range '" + s + "'", lineno);
            return v;
        };
        const long long u = parse_id(a);
        const long long v = parse_id(b);
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    if (edges.empty() && declared_nodes <= 0) throw ParseError("empty edge list", 0);

    const auto n = static_cast<std::size_t>(std::max(max_id + 1, declared_nodes));
    EdgeListLoad result;
    result.graph = Graph::from_edges(n, edges, &result.self_loops_dropped);
    result.duplicate_edges = edges.size() - result.self_loops_dropped - result.graph.num_edges();
    return result;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
    out << "# nodes " << graph.num_nodes() << '\n';
    for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

Graph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes) {
    std::vector<NodeId> new_id(graph.num_nodes(), -1);
    for (std::size_t k = 0; k < nodes.size(); ++k) new_id[nodes[k]] = static_cast<NodeId>(k);
    std::vector<Edge> edges;
    for (NodeId u : nodes) {
        for (NodeId v : graph.neighbors(u)) {
            if (new_id[v] >= 0 && u < v) edges.emplace_back(new_id[u], new_id[v]);
        }
    }
    return Graph::from_edges(nodes.size(), edges);
}

Component largest_connected_component(const Graph& graph) {
    const std::size_t n = graph.num_nodes();
    if (n == 0) throw Error("largest_connected_component: empty graph");

    // Scanning roots in increasing id order means the first component of a given size
    // is the one with the smallest minimum id, so strict '>' implements the tie rule.
    std::vector<char> seen(n, 0);
    std::vector<NodeId> best, current, stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        current.clear();
        stack.assign(1, static_cast<NodeId>(root));
        seen[root] = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            current.push_back(u);
            for (NodeId v : graph.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        if (current.size() > best.size()) best = current;
    }
    std::sort(best.begin(), best.end());
    return {induced_subgraph(graph, best), best};
}

void adjacency_matvec(const Graph& graph, std::span<const double> x, std::span<double> y) {
    const std::size_t n = graph.num_nodes();
    if (x.size() != n || y.size() != n) {
        throw Error("adjacency_matvec: vector length " + std::to_string(x.size()) + " does not match " +
                    std::to_string(n) + " nodes");
    }
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (NodeId j : graph.neighbors(static_cast<NodeId>(i))) acc += x[j];
        y[i] = acc;
    }
}

std::vector<double> adjacency_matvec(const Graph& graph, std::span<const double> x) {
    std::vector<double> y(graph.num_nodes());
    adjacency_matvec(graph, x, y);
    return y;
}

}  // namespace epcd
