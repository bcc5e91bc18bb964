#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"
#include "epcd/objectives.hpp"
#include "epcd/spectral.hpp"

namespace epcd {

struct DetectOptions {
    double epsilon = kDefaultEpsilon;
    double tol = kDefaultTolerance;
    std::uint64_t seed = 1;
};

struct DetectionDiagnostics {
    bool near_degenerate_eigenpair = false;
    std::size_t degenerate_nodes = 0;
    std::size_t tied_candidates = 0;
};

struct DetectionResult {
    Labels labels;
    double objective_value = 0.0;
    std::size_t candidates_evaluated = 0;
    bool tie_broken = false;
    DetectionDiagnostics diagnostics;
};

/// Maximizes a criterion over the label vectors at the extreme points of the projected
/// label cube. Symmetric criteria scan one antipodal half of the boundary; extraction
/// scans all of it. Throws if every candidate is invalid.
DetectionResult ep_detect(const Graph& graph, Criterion criterion, const DetectOptions& options = {});

/// Same search on a caller-supplied embedding (any 2 x n basis).
DetectionResult ep_detect(const Graph& graph, Criterion criterion, const Embedding& embedding);

/// Index of the candidate whose projection lies farthest from the line through the
/// origin and the projection of the all-ones vector. Earlier candidates win exact
/// (to relative 1e-12) distance ties.
std::size_t farthest_from_ones_line(std::span<const Eigen::Vector2d> projections, const Eigen::Vector2d& ones);

/// Tie rule applied to materialized candidates.
Labels tie_break(std::span<const Labels> candidates, const Eigen::Matrix2Xd& basis);

/// Closed-form estimate sign((u1.1) u2 - (u2.1) u1) from the two basis rows; exact
/// zeros map to +1.
Labels aep_detect(const Eigen::Matrix2Xd& basis);
inline Labels aep_detect(const Embedding& embedding) { return aep_detect(embedding.basis); }

}  // namespace epcd
