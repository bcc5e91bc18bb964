// Small graph builders and dense reference computations shared by the unit tests.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"
#include "epcd/random.hpp"

namespace epcd::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return Graph::from_edges(n, edges);
}

// Nodes [0, n1) form block 1; edges appear with p_in inside blocks and p_out across.
inline Graph planted(std::size_t n1, std::size_t n2, double p_in, double p_out, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = n1 + n2;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = (i < n1) == (j < n1);
            if (rng.bernoulli(same ? p_in : p_out)) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    return Graph::from_edges(n, edges);
}

inline Labels block_labels(std::size_t n1, std::size_t n2) {
    Labels l(n1 + n2, -1);
    for (std::size_t i = 0; i < n1; ++i) l[i] = 1;
    return l;
}

inline Graph two_cliques(std::size_t k, std::size_t bridges) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                edges.emplace_back(static_cast<NodeId>(b * k + i), static_cast<NodeId>(b * k + j));
    for (std::size_t t = 0; t < bridges; ++t) edges.emplace_back(static_cast<NodeId>(t), static_cast<NodeId>(k + t));
    return Graph::from_edges(2 * k, edges);
}

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.num_nodes());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [i, j] : g.edges()) a(i, j) = a(j, i) = 1.0;
    return a;
}

inline Eigen::VectorXd to_vector(const Labels& l) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(l.size()));
    for (std::size_t i = 0; i < l.size(); ++i) v[static_cast<Eigen::Index>(i)] = l[i];
    return v;
}

inline Labels from_mask(std::uint64_t mask, std::size_t n) {
    Labels l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = (mask >> i) & 1U ? -1 : 1;
    return l;
}

// Equal as partitions (identical or globally swapped).
inline bool same_partition(const Labels& a, const Labels& b) { return a == b || a == negated(b); }

}  // namespace epcd::testing
