#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace epcd {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected unweighted graph in compressed sparse row form.
///
/// Immutable once built. Neighbor lists are sorted, contain no self-loops and no
/// duplicates, and the adjacency is symmetric.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on nodes 0..num_nodes-1. Duplicate and reversed edges collapse to
    /// one undirected edge; self-loops are dropped and counted in *self_loops if given.
    static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges,
                            std::size_t* self_loops = nullptr);

    std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return targets_.size() / 2; }

    /// m = sum of degrees = twice the number of undirected edges.
    std::int64_t total_degree() const noexcept { return static_cast<std::int64_t>(targets_.size()); }

    std::size_t degree(NodeId i) const noexcept { return offsets_[i + 1] - offsets_[i]; }

    std::span<const NodeId> neighbors(NodeId i) const noexcept {
        return {targets_.data() + offsets_[i], degree(i)};
    }

    std::vector<double> degrees() const;

    /// Undirected edges (i < j), sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Result of reading an edge list.
struct EdgeListLoad {
    Graph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges = 0;
};

/// Reads whitespace-separated pairs of 0-based node ids, one edge per line. '#'
/// starts a comment. The graph spans ids 0..max_id.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad load_edge_list_file(const std::string& path);

/// Writes "i j" lines (i < j) preceded by a "# nodes N" comment so isolated
/// trailing nodes survive a round trip.
void write_edge_list(std::ostream& out, const Graph& graph);

struct Component {
    Graph graph;
    /// mapping[new_id] = original id
    std::vector<NodeId> mapping;
};

/// Induced subgraph on the largest connected component. Equal-size components are
/// ordered by their smallest original node id.
Component largest_connected_component(const Graph& graph);

/// Subgraph induced on `nodes` (original ids, in the order given).
Graph induced_subgraph(const Graph& graph, std::span<const NodeId> nodes);

/// y = A x.
void adjacency_matvec(const Graph& graph, std::span<const double> x, std::span<double> y);
std::vector<double> adjacency_matvec(const Graph& graph, std::span<const double> x);

}  // namespace epcd
