#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"
#include "epcd/spectral.hpp"

namespace epcd {

inline constexpr std::size_t kDefaultKMeansRestarts = 40;
inline constexpr std::size_t kKMeansMaxIterations = 300;

struct KMeansResult {
    std::vector<int> assignment;  ///< cluster id in {1, 2} per point
    Eigen::Matrix2d centers;      ///< row k is the center of cluster k + 1
    double inertia = 0.0;
    std::size_t restarts_used = 0;
    std::size_t best_restart = 0;
    /// All points coincide; everything is assigned to cluster 1.
    bool degenerate = false;
};

/// Lloyd's algorithm with K = 2 and random-point initialization, repeated `restarts`
/// times; the lowest inertia wins (ties go to the earliest restart).
KMeansResult kmeans(const Eigen::MatrixX2d& points, std::size_t restarts = kDefaultKMeansRestarts,
                    std::uint64_t seed = 1);

/// Regularized spectral clustering: k-means on the rows (u1_i, u2_i) of the two leading
/// eigenvectors of L_tau.
Labels scr(const Graph& graph, double epsilon = kDefaultEpsilon, std::size_t restarts = kDefaultKMeansRestarts,
           double tol = kDefaultTolerance, std::uint64_t seed = 1);

/// Clustering of precomputed eigenvectors (same as scr after the eigensolve).
Labels scr_from_pair(const LaplacianPair& pair, std::size_t restarts, std::uint64_t seed);

/// Implicit modularity operator of the regularized adjacency A + tau 1 1^T:
/// B x = A x + tau (1'x) 1 - d_tau (d_tau' x) / m_tau with d_tau = d + n tau.
class ModularityOperator {
public:
    ModularityOperator(const Graph& graph, double tau);
    void apply(std::span<const double> x, std::span<double> y) const;
    Eigen::MatrixXd dense() const;

private:
    const Graph* graph_;
    double tau_;
    Eigen::VectorXd degrees_;
    double total_ = 0.0;
};

/// Leading-eigenvector signs of the regularized modularity matrix (zeros map to +1).
Labels les(const Graph& graph, double epsilon = kDefaultEpsilon, double tol = kDefaultTolerance,
           std::uint64_t seed = 1);

}  // namespace epcd
