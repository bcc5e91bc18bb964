#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include <Eigen/Core>

namespace epcd {

/// y = Op x for a symmetric operator of fixed dimension. x and y never alias.
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

enum class Spectrum {
    LargestMagnitude,  ///< order by |lambda| descending
    LargestAlgebraic,  ///< order by lambda descending
};

struct EigenOptions {
    double tol = 1e-8;  ///< residual bound ||Op v - lambda v|| per pair
    std::uint64_t seed = 1;
    Spectrum which = Spectrum::LargestMagnitude;
    /// Matrix-vector product budget; 0 means 10 * dimension.
    std::size_t max_matvecs = 0;
    /// Krylov subspace size per restart cycle; 0 picks a default.
    std::size_t krylov_dim = 0;
};

struct EigenPairs {
    Eigen::VectorXd values;   ///< leading order per EigenOptions::which
    Eigen::MatrixXd vectors;  ///< column j pairs with values[j]; orthonormal columns
    Eigen::VectorXd residuals;
    std::size_t matvecs = 0;
};

/// Leading k eigenpairs of a symmetric operator by restarted Lanczos with full
/// reorthogonalization and locking of converged pairs. Deterministic given the seed.
/// Throws EigenSolverError naming the first unconverged pair when the budget runs out.
EigenPairs leading_eigenpairs(const LinearOperator& op, std::size_t dim, std::size_t k,
                              const EigenOptions& options = {});

}  // namespace epcd
