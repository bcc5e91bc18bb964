#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"

namespace epcd {

/// Boundary walk of the zonotope U[-1,1]^n for a 2 x n generator matrix U.
///
/// Step s flips the label of every node in step(s). Starting from start_labels and
/// applying the steps in order visits the extreme points counter-clockwise, beginning
/// at the vertex with the smallest y-coordinate. The walk has 2 * half_steps() steps;
/// the state after half_steps() steps is -start_labels on the non-degenerate nodes,
/// and the second half repeats the first half's flips.
struct CandidateSweep {
    Labels start_labels;
    std::vector<NodeId> flips;            ///< flattened flip groups
    std::vector<std::size_t> step_offsets;  ///< step s flips flips[step_offsets[s] .. step_offsets[s+1])
    std::vector<NodeId> degenerate_nodes;  ///< near-zero generators, pinned to +1 and never flipped

    std::size_t num_steps() const noexcept { return step_offsets.empty() ? 0 : step_offsets.size() - 1; }
    std::size_t half_steps() const noexcept { return num_steps() / 2; }

    std::span<const NodeId> step(std::size_t s) const noexcept {
        return {flips.data() + step_offsets[s], step_offsets[s + 1] - step_offsets[s]};
    }

    /// True when some step flips more than one node (parallel generators).
    bool has_grouped_steps() const noexcept { return flips.size() != num_steps(); }
};

/// Angles equal to within this many radians are merged into one multi-flip step.
inline constexpr double kAngleTolerance = 1e-12;
/// Generators shorter than this fraction of the longest are treated as zero.
inline constexpr double kDegenerateColumnRatio = 1e-12;

/// O(n log n) angle sweep over the columns of `generators`.
CandidateSweep sweep_vertices(const Eigen::Matrix2Xd& generators);

/// The distinct label vectors visited by the sweep, in walk order (start first).
std::vector<Labels> sweep_labels(const CandidateSweep& sweep);

/// All sign vectors whose projection is a strict extreme point of the projected cube,
/// by enumerating the 2^n projections and taking their convex hull. Refuses n > 15.
std::vector<Labels> brute_force_vertices(const Eigen::Matrix2Xd& generators);

inline constexpr std::size_t kBruteForceMaxNodes = 15;

}  // namespace epcd
