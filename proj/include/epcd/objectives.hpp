#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"

namespace epcd {

/// Edge-count sufficient statistics of a two-community labeling.
///
/// Counts are over ordered node pairs: an edge inside community 1 adds 2 to o11, and
/// an edge between the communities adds 1 to o12. Hence o11 + o22 + 2 o12 = m.
struct BlockCounts {
    std::int64_t o11 = 0;
    std::int64_t o22 = 0;
    std::int64_t o12 = 0;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;

    std::int64_t o1() const noexcept { return o11 + o12; }  ///< degree sum of community 1
    std::int64_t o2() const noexcept { return o22 + o12; }  ///< degree sum of community 2
    std::int64_t total_degree() const noexcept { return o11 + o22 + 2 * o12; }

    bool operator==(const BlockCounts&) const = default;
};

BlockCounts block_counts(const Graph& graph, std::span<const int> labels);

/// Counts after flipping node i. Also flips labels[i]. O(deg i).
BlockCounts flip_update(const BlockCounts& counts, const Graph& graph, std::span<int> labels, NodeId i);

enum class Criterion {
    BM,  ///< stochastic block model profile likelihood
    DC,  ///< degree-corrected block model profile likelihood
    NG,  ///< Newman-Girvan modularity (rescaled)
    EX,  ///< community extraction
};

Criterion parse_criterion(std::string_view name);
std::string_view criterion_name(Criterion c);

/// Whether the criterion is invariant under swapping the two communities.
constexpr bool is_symmetric(Criterion c) noexcept { return c != Criterion::EX; }

/// Returned by BM and EX when a labeling leaves a community empty that the criterion
/// cannot score. Candidates with this value are never selected.
inline constexpr double kInvalidCandidate = -std::numeric_limits<double>::infinity();

double q_dc(const BlockCounts& c);
double q_bm(const BlockCounts& c);
/// Throws when the graph has no edges.
double q_ng(const BlockCounts& c);
double q_ex(const BlockCounts& c);

double evaluate(Criterion criterion, const BlockCounts& counts);

}  // namespace epcd
