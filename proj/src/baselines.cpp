#include "epcd/baselines.hpp"

#include <cmath>
#include <limits>

#include "epcd/eigensolver.hpp"
#include "epcd/error.hpp"
#include "epcd/random.hpp"

namespace epcd {

namespace {

struct LloydRun {
    std::vector<int> assignment;
    Eigen::Matrix2d centers;
    double inertia;
};

LloydRun lloyd(const Eigen::MatrixX2d& points, Eigen::Matrix2d centers) {
    const Eigen::Index n = points.rows();
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    for (std::size_t iter = 0; iter < kKMeansMaxIterations; ++iter) {
        bool changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d0 = (points.row(i) - centers.row(0)).squaredNorm();
            const double d1 = (points.row(i) - centers.row(1)).squaredNorm();
            const int k = d1 < d0 ? 1 : 0;
            if (assignment[static_cast<std::size_t>(i)] != k) {
                assignment[static_cast<std::size_t>(i)] = k;
                changed = true;
            }
        }
        if (!changed) break;
        Eigen::Matrix2d sums = Eigen::Matrix2d::Zero();
        Eigen::Vector2d counts = Eigen::Vector2d::Zero();
        for (Eigen::Index i = 0; i < n; ++i) {
            const int k = assignment[static_cast<std::size_t>(i)];
            sums.row(k) += points.row(i);
            counts[k] += 1.0;
        }
        // An emptied cluster keeps its previous center.
        for (int k = 0; k < 2; ++k) {
            if (counts[k] > 0.0) centers.row(k) = sums.row(k) / counts[k];
        }
    }
    double inertia = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        inertia += (points.row(i) - centers.row(assignment[static_cast<std::size_t>(i)])).squaredNorm();
    }
    return {std::move(assignment), centers, inertia};
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixX2d& points, std::size_t restarts, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(points.rows());
    if (n < 2) throw Error("kmeans: need at least two points");
    if (restarts == 0) throw Error("kmeans: restarts must be positive");

    KMeansResult best;
    best.restarts_used = restarts;
    const bool all_same = (points.rowwise() - points.row(0)).cwiseAbs().maxCoeff() == 0.0;
    if (all_same) {
        best.assignment.assign(n, 1);
        best.centers.row(0) = points.row(0);
        best.centers.row(1) = points.row(0);
        best.degenerate = true;
        return best;
    }

    best.inertia = std::numeric_limits<double>::infinity();
    for (std::size_t run = 0; run < restarts; ++run) {
        Rng rng(derive_seed(seed, run));
        const auto a = static_cast<Eigen::Index>(rng.index(n));
        auto b = static_cast<Eigen::Index>(rng.index(n - 1));
        if (b >= a) ++b;
        Eigen::Matrix2d init;
        init.row(0) = points.row(a);
        init.row(1) = points.row(b);
        LloydRun result = lloyd(points, init);
        if (result.inertia < best.inertia) {
            best.inertia = result.inertia;
            best.centers = result.centers;
            best.best_restart = run;
            best.assignment.resize(n);
            for (std::size_t i = 0; i < n; ++i) best.assignment[i] = result.assignment[i] + 1;
        }
    }
    return best;
}

Labels scr_from_pair(const LaplacianPair& pair, std::size_t restarts, std::uint64_t seed) {
    const KMeansResult clusters = kmeans(pair.eigenvectors, restarts, seed);
    Labels out(clusters.assignment.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = clusters.assignment[i] == 1 ? 1 : -1;
    return out;
}

Labels scr(const Graph& graph, double epsilon, std::size_t restarts, double tol, std::uint64_t seed) {
    const LaplacianPair pair = laplacian_leading_pair(graph, epsilon, tol, seed);
    return scr_from_pair(pair, restarts, derive_seed(seed, 0, 1));
}

ModularityOperator::ModularityOperator(const Graph& graph, double tau) : graph_(&graph), tau_(tau) {
    const auto n = static_cast<Eigen::Index>(graph.num_nodes());
    degrees_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        degrees_[i] = static_cast<double>(graph.degree(static_cast<NodeId>(i))) + static_cast<double>(n) * tau;
    }
    total_ = degrees_.sum();
    if (!(total_ > 0.0)) throw Error("modularity operator needs a graph with edges");
}

void ModularityOperator::apply(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = graph_->num_nodes();
    if (x.size() != n || y.size() != n) throw Error("ModularityOperator: vector length mismatch");
    double sum_x = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_x += x[i];
        weighted += degrees_[static_cast<Eigen::Index>(i)] * x[i];
    }
    const double coeff = weighted / total_;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = tau_ * sum_x;
        for (NodeId j : graph_->neighbors(static_cast<NodeId>(i))) acc += x[j];
        y[i] = acc - degrees_[static_cast<Eigen::Index>(i)] * coeff;
    }
}

Eigen::MatrixXd ModularityOperator::dense() const {
    const auto n = static_cast<Eigen::Index>(graph_->num_nodes());
    Eigen::MatrixXd b = Eigen::MatrixXd::Constant(n, n, tau_);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (NodeId j : graph_->neighbors(static_cast<NodeId>(i))) b(i, j) += 1.0;
    }
    b -= degrees_ * degrees_.transpose() / total_;
    return b;
}

Labels les(const Graph& graph, double epsilon, double tol, std::uint64_t seed) {
    if (graph.total_degree() == 0) throw Error("les: graph has no edges");
    const double tau = regularizer_tau(graph, epsilon);
    const ModularityOperator op(graph, tau);
    EigenOptions options;
    options.tol = tol;
    options.seed = seed;
    options.which = Spectrum::LargestAlgebraic;
    const EigenPairs pairs = leading_eigenpairs(
        [&op](std::span<const double> x, std::span<double> y) { op.apply(x, y); }, graph.num_nodes(), 1, options);
    Labels out(graph.num_nodes());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pairs.vectors(static_cast<Eigen::Index>(i), 0) < 0.0 ? -1 : 1;
    return out;
}

}  // namespace epcd
