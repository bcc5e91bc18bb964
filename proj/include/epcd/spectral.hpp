#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "epcd/eigensolver.hpp"
#include "epcd/graph.hpp"

namespace epcd {

inline constexpr double kDefaultEpsilon = 0.25;
inline constexpr double kDefaultTolerance = 1e-8;

/// tau = epsilon * (m / n) / n, the regularization added to every adjacency entry.
/// The observed average degree m / n stands in for the expected degree.
double regularizer_tau(const Graph& graph, double epsilon);

/// Implicit L_tau = D_tau^{-1/2} (A + tau 1 1^T) D_tau^{-1/2}, where D_tau holds the
/// row sums d_i + n tau. One application costs O(m + n).
class RegularizedLaplacian {
public:
    RegularizedLaplacian(const Graph& graph, double tau);

    void apply(std::span<const double> x, std::span<double> y) const;
    std::vector<double> apply(std::span<const double> x) const;

    /// Diagonal of D_tau^{1/2}.
    const Eigen::VectorXd& sqrt_degrees() const noexcept { return sqrt_d_; }
    double tau() const noexcept { return tau_; }
    std::size_t size() const noexcept { return graph_->num_nodes(); }

    LinearOperator as_operator() const;

private:
    const Graph* graph_;
    double tau_;
    Eigen::VectorXd sqrt_d_;
    Eigen::VectorXd inv_sqrt_d_;
    mutable std::vector<double> scratch_;
};

/// Leading eigenpair data of L_tau used by both the embedding and spectral clustering.
struct LaplacianPair {
    double tau = 0.0;
    std::array<double, 2> eigenvalues{};
    Eigen::MatrixX2d eigenvectors;  ///< columns u1, u2 of L_tau
    Eigen::VectorXd sqrt_degrees;   ///< diagonal of D_tau^{1/2}
};

LaplacianPair laplacian_leading_pair(const Graph& graph, double epsilon = kDefaultEpsilon,
                                     double tol = kDefaultTolerance, std::uint64_t seed = 1);

/// 2 x n matrix with orthonormal rows spanning {D_tau^{1/2} u1, D_tau^{1/2} u2}.
struct Embedding {
    Eigen::Matrix2Xd basis;
    double tau = 0.0;
    double epsilon = 0.0;
    std::array<double, 2> eigenvalues{};
    /// Leading two eigenvalues closer than the solver tolerance; the basis is then one
    /// arbitrary choice within the invariant subspace.
    bool near_degenerate = false;

    std::size_t size() const noexcept { return static_cast<std::size_t>(basis.cols()); }
};

/// Orthonormalizes the rows of a 2 x n matrix (Gram-Schmidt, first row kept in direction).
Eigen::Matrix2Xd orthonormalize_rows(const Eigen::Matrix2Xd& rows);

Embedding embedding(const Graph& graph, double epsilon = kDefaultEpsilon, double tol = kDefaultTolerance,
                    std::uint64_t seed = 1);

/// Embedding built from precomputed Laplacian eigenpairs.
Embedding embedding_from_pair(const LaplacianPair& pair, double epsilon, double tol);

}  // namespace epcd
