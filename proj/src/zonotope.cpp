#include "epcd/zonotope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "epcd/error.hpp"

namespace epcd {

CandidateSweep sweep_vertices(const Eigen::Matrix2Xd& generators) {
    const auto n = static_cast<std::size_t>(generators.cols());
    CandidateSweep sweep;
    sweep.start_labels.assign(n, 1);
    sweep.step_offsets.push_back(0);
    if (n == 0) return sweep;

    const double max_norm = generators.colwise().norm().maxCoeff();
    const double cutoff = kDegenerateColumnRatio * max_norm;

    // Each generator contributes the edge direction of +-g lying in the upper half plane
    // [0, pi). Sweeping those directions once walks half the boundary from the lowest
    // vertex; the second half flips the same nodes back in the same order.
    struct Event {
        double angle;
        NodeId node;
    };
    std::vector<Event> events;
    events.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = generators(0, static_cast<Eigen::Index>(i));
        const double y = generators(1, static_cast<Eigen::Index>(i));
        const auto node = static_cast<NodeId>(i);
        if (max_norm == 0.0 || std::hypot(x, y) < cutoff) {
            sweep.degenerate_nodes.push_back(node);
            continue;
        }
        const bool upper = y > 0.0 || (y == 0.0 && x > 0.0);
        // The lowest vertex takes -sign(y) (ties: -sign(x)); the first flip of node i
        // moves along +g_i when g_i points into the upper half plane.
        sweep.start_labels[i] = upper ? -1 : 1;
        double angle = upper ? std::atan2(y, x) : std::atan2(-y, -x);
        if (angle < 0.0) angle = 0.0;
        if (angle >= std::numbers::pi) angle = 0.0;  // (-x, -0.0) rounding back onto the positive axis
        events.push_back({angle, node});
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.angle < b.angle; });

    std::vector<std::size_t> half_offsets{0};
    for (std::size_t k = 0; k < events.size(); ++k) {
        if (k > 0 && events[k].angle - events[k - 1].angle > kAngleTolerance) half_offsets.push_back(k);
    }
    if (!events.empty()) half_offsets.push_back(events.size());

    sweep.flips.reserve(2 * events.size());
    for (int half = 0; half < 2; ++half) {
        for (std::size_t g = 0; g + 1 < half_offsets.size(); ++g) {
            for (std::size_t k = half_offsets[g]; k < half_offsets[g + 1]; ++k) sweep.flips.push_back(events[k].node);
            sweep.step_offsets.push_back(sweep.flips.size());
        }
    }
    return sweep;
}

std::vector<Labels> sweep_labels(const CandidateSweep& sweep) {
    std::vector<Labels> out;
    Labels current = sweep.start_labels;
    out.push_back(current);
    // The last step returns to the start, so it is not a new vertex.
    for (std::size_t s = 0; s + 1 < sweep.num_steps(); ++s) {
        for (NodeId i : sweep.step(s)) current[i] = -current[i];
        out.push_back(current);
    }
    return out;
}

namespace {

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

std::vector<Labels> brute_force_vertices(const Eigen::Matrix2Xd& generators) {
    const auto n = static_cast<std::size_t>(generators.cols());
    if (n > kBruteForceMaxNodes) {
        throw Error("brute_force_vertices: n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                    std::to_string(kBruteForceMaxNodes));
    }
    const std::size_t count = std::size_t{1} << n;
    std::vector<Eigen::Vector2d> points(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Eigen::Vector2d p = Eigen::Vector2d::Zero();
        for (std::size_t i = 0; i < n; ++i) {
            p += ((mask >> i) & 1U ? 1.0 : -1.0) * generators.col(static_cast<Eigen::Index>(i));
        }
        points[mask] = p;
    }

    constexpr double tol = 1e-9;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].x() < points[b].x() || (points[a].x() == points[b].x() && points[a].y() < points[b].y());
    });

    // Andrew's monotone chain; points on hull edges (cross within tol) are not vertices.
    std::vector<Eigen::Vector2d> hull;
    auto build = [&](auto begin, auto end) {
        const std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            const Eigen::Vector2d& p = points[*it];
            while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= tol) hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
    };
    build(order.begin(), order.end());
    build(order.rbegin(), order.rend());
    if (hull.empty()) hull.push_back(points[order.front()]);

    std::vector<Labels> out;
    for (std::size_t mask = 0; mask < count; ++mask) {
        const bool extreme = std::any_of(hull.begin(), hull.end(),
                                         [&](const Eigen::Vector2d& v) { return (v - points[mask]).norm() <= tol; });
        if (!extreme) continue;
        Labels labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = (mask >> i) & 1U ? 1 : -1;
        out.push_back(std::move(labels));
    }
    return out;
}

}  // namespace epcd
