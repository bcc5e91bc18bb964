#include "epcd/detect.hpp"

#include <algorithm>
#include <cmath>

#include "epcd/error.hpp"
#include "epcd/zonotope.hpp"

namespace epcd {

namespace {

double distance_to_line(const Eigen::Vector2d& p, const Eigen::Vector2d& direction) {
    const double len = direction.norm();
    if (len == 0.0) return p.norm();
    return std::abs(direction.x() * p.y() - direction.y() * p.x()) / len;
}

constexpr double kTieTolerance = 1e-12;

bool ties(double a, double b) { return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

std::size_t farthest_from_ones_line(std::span<const Eigen::Vector2d> projections, const Eigen::Vector2d& ones) {
    if (projections.empty()) throw Error("tie_break: no candidates");
    std::size_t best = 0;
    double best_distance = distance_to_line(projections[0], ones);
    for (std::size_t k = 1; k < projections.size(); ++k) {
        const double d = distance_to_line(projections[k], ones);
        if (d > best_distance && !ties(d, best_distance)) {
            best = k;
            best_distance = d;
        }
    }
    return best;
}

Labels tie_break(std::span<const Labels> candidates, const Eigen::Matrix2Xd& basis) {
    if (candidates.empty()) throw Error("tie_break: no candidates");
    std::vector<Eigen::Vector2d> projections;
    projections.reserve(candidates.size());
    for (const Labels& c : candidates) {
        validate_labels(c, static_cast<std::size_t>(basis.cols()));
        Eigen::Vector2d p = Eigen::Vector2d::Zero();
        for (std::size_t i = 0; i < c.size(); ++i) p += c[i] * basis.col(static_cast<Eigen::Index>(i));
        projections.push_back(p);
    }
    const Eigen::Vector2d ones = basis.rowwise().sum();
    return candidates[farthest_from_ones_line(projections, ones)];
}

DetectionResult ep_detect(const Graph& graph, Criterion criterion, const Embedding& embedding) {
    const std::size_t n = graph.num_nodes();
    if (n == 0) throw Error("ep_detect: empty graph");
    if (embedding.size() != n) throw Error("ep_detect: embedding size does not match the graph");

    const Eigen::Matrix2Xd& basis = embedding.basis;
    const CandidateSweep sweep = sweep_vertices(basis);

    Labels labels = sweep.start_labels;
    BlockCounts counts = block_counts(graph, labels);
    Eigen::Vector2d projection = Eigen::Vector2d::Zero();
    for (std::size_t i = 0; i < n; ++i) projection += labels[i] * basis.col(static_cast<Eigen::Index>(i));

    // Candidate k is the state after k steps. For symmetric criteria the second half of
    // the walk is the negation of the first and need not be scored. Pinned degenerate
    // nodes break that mirror, so then the whole walk is scanned.
    const bool half = is_symmetric(criterion) && sweep.degenerate_nodes.empty();
    const std::size_t last = std::max<std::size_t>(half ? sweep.half_steps() : sweep.num_steps(), 1);

    double best = kInvalidCandidate;
    std::vector<std::size_t> best_steps;
    std::vector<Eigen::Vector2d> best_projections;
    std::size_t evaluated = 0;

    for (std::size_t k = 0; k < last; ++k) {
        if (k > 0) {
            for (NodeId i : sweep.step(k - 1)) {
                projection -= 2.0 * labels[i] * basis.col(i);
                counts = flip_update(counts, graph, labels, i);
            }
        }
        const double value = evaluate(criterion, counts);
        ++evaluated;
        if (value == kInvalidCandidate) continue;
        if (best_steps.empty() || (value > best && !ties(value, best))) {
            best = value;
            best_steps.assign(1, k);
            best_projections.assign(1, projection);
        } else if (ties(value, best)) {
            best_steps.push_back(k);
            best_projections.push_back(projection);
        }
    }
    if (best_steps.empty()) throw Error("no valid bipartition among the extreme-point candidates");

    const Eigen::Vector2d ones = basis.rowwise().sum();
    const std::size_t pick = best_steps.size() > 1 ? farthest_from_ones_line(best_projections, ones) : 0;
    const std::size_t chosen_step = best_steps[pick];

    DetectionResult result;
    result.labels = sweep.start_labels;
    for (std::size_t s = 0; s < chosen_step; ++s) {
        for (NodeId i : sweep.step(s)) result.labels[i] = -result.labels[i];
    }
    result.objective_value = evaluate(criterion, block_counts(graph, result.labels));
    result.candidates_evaluated = evaluated;
    result.tie_broken = best_steps.size() > 1;
    result.diagnostics.near_degenerate_eigenpair = embedding.near_degenerate;
    result.diagnostics.degenerate_nodes = sweep.degenerate_nodes.size();
    result.diagnostics.tied_candidates = best_steps.size();
    return result;
}

DetectionResult ep_detect(const Graph& graph, Criterion criterion, const DetectOptions& options) {
    if (graph.num_nodes() == 0) throw Error("ep_detect: empty graph");
    const Embedding emb = embedding(graph, options.epsilon, options.tol, options.seed);
    return ep_detect(graph, criterion, emb);
}

Labels aep_detect(const Eigen::Matrix2Xd& basis) {
    const double s1 = basis.row(0).sum();
    const double s2 = basis.row(1).sum();
    const Eigen::RowVectorXd direction = s1 * basis.row(1) - s2 * basis.row(0);
    const double scale = std::max(basis.row(0).cwiseAbs().maxCoeff(), basis.row(1).cwiseAbs().maxCoeff()) *
                         (std::abs(s1) + std::abs(s2));
    if (direction.size() == 0 || direction.cwiseAbs().maxCoeff() <= 1e-14 * scale || scale == 0.0) {
        throw Error("degenerate embedding: the geometric estimate is identically zero");
    }
    Labels out(static_cast<std::size_t>(direction.size()));
    for (Eigen::Index i = 0; i < direction.size(); ++i) out[static_cast<std::size_t>(i)] = direction[i] < 0.0 ? -1 : 1;
    return out;
}

}  // namespace epcd
