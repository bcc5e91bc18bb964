#include "epcd/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "epcd/error.hpp"
#include "epcd/random.hpp"

namespace epcd {
namespace {

// Ritz value ranking key: larger is more "leading".
double rank_key(double value, Spectrum which) {
    return which == Spectrum::LargestMagnitude ? std::abs(value) : value;
}

std::vector<Eigen::Index> leading_order(const Eigen::VectorXd& values, Spectrum which) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return rank_key(values[a], which) > rank_key(values[b], which);
    });
    return order;
}

// Two passes of classical Gram-Schmidt against the first `cols` columns of `basis`.
void orthogonalize(Eigen::Ref<Eigen::VectorXd> v, const Eigen::MatrixXd& basis, Eigen::Index cols) {
    if (cols == 0) return;
    for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd coeffs = basis.leftCols(cols).transpose() * v;
        v.noalias() -= basis.leftCols(cols) * coeffs;
    }
}

}  // namespace

EigenPairs leading_eigenpairs(const LinearOperator& op, std::size_t dim, std::size_t k,
                              const EigenOptions& options) {
    if (k == 0) throw Error("leading_eigenpairs: k must be at least 1");
    if (k > dim) throw Error("leading_eigenpairs: k exceeds operator dimension");
    if (!(options.tol > 0.0)) throw Error("leading_eigenpairs: tol must be positive");

    const auto n = static_cast<Eigen::Index>(dim);
    const auto want = static_cast<Eigen::Index>(k);
    const std::size_t budget = options.max_matvecs ? options.max_matvecs : 10 * dim;
    const Eigen::Index krylov =
        options.krylov_dim ? static_cast<Eigen::Index>(options.krylov_dim) : std::max<Eigen::Index>(48, 4 * want);

    Rng rng(options.seed);
    auto random_vector = [&] {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = 2.0 * rng.uniform() - 1.0;
        return v;
    };

    Eigen::MatrixXd locked(n, want);
    Eigen::VectorXd locked_values(want);
    Eigen::VectorXd locked_residuals(want);
    Eigen::Index num_locked = 0;
    std::size_t matvecs = 0;

    auto apply = [&](const Eigen::VectorXd& x, Eigen::Ref<Eigen::VectorXd> y) {
        op(std::span<const double>(x.data(), dim), std::span<double>(y.data(), dim));
        ++matvecs;
    };

    Eigen::VectorXd start = random_vector();
    while (num_locked < want) {
        const Eigen::Index room = n - num_locked;
        const Eigen::Index p_max = std::min(krylov, room);
        Eigen::MatrixXd V(n, p_max);
        Eigen::MatrixXd W(n, p_max);

        // Combined basis of locked vectors and the current Krylov vectors, for reorthogonalization.
        Eigen::MatrixXd Q(n, num_locked + p_max);
        Q.leftCols(num_locked) = locked.leftCols(num_locked);

        Eigen::VectorXd v = start;
        orthogonalize(v, Q, num_locked);
        double norm = v.norm();
        for (int attempt = 0; norm < 1e-12 && attempt < 8; ++attempt) {
            v = random_vector();
            orthogonalize(v, Q, num_locked);
            norm = v.norm();
        }
        if (norm < 1e-12) throw EigenSolverError("eigensolver could not build a start vector", num_locked);
        v /= norm;

        Eigen::Index p = 0;
        while (p < p_max) {
            V.col(p) = v;
            Q.col(num_locked + p) = v;
            apply(v, W.col(p));
            ++p;
            if (p == p_max) break;
            Eigen::VectorXd w = W.col(p - 1);
            const double scale = std::max(w.norm(), 1.0);
            orthogonalize(w, Q, num_locked + p);
            const double beta = w.norm();
            if (beta <= 1e-12 * scale) break;  // invariant subspace reached
            v = w / beta;
        }

        Eigen::MatrixXd H = V.leftCols(p).transpose() * W.leftCols(p);
        H = 0.5 * (H + H.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(H);
        const auto order = leading_order(ritz.eigenvalues(), options.which);

        const Eigen::Index wanted = want - num_locked;
        const Eigen::Index usable = std::min<Eigen::Index>(wanted, p);
        Eigen::Index newly_locked = 0;
        for (Eigen::Index j = 0; j < usable; ++j) {
            const Eigen::VectorXd s = ritz.eigenvectors().col(order[j]);
            const double theta = ritz.eigenvalues()[order[j]];
            Eigen::VectorXd y = V.leftCols(p) * s;
            const double y_norm = y.norm();
            y /= y_norm;
            const double residual = (W.leftCols(p) * s / y_norm - theta * y).norm();
            if (residual > options.tol) break;
            locked.col(num_locked) = y;
            locked_values[num_locked] = theta;
            locked_residuals[num_locked] = residual;
            ++num_locked;
            ++newly_locked;
        }
        if (num_locked == want) break;

        if (matvecs >= budget) {
            throw EigenSolverError("eigensolver did not converge for eigenpair " + std::to_string(num_locked) +
                                       " within " + std::to_string(budget) + " matrix-vector products",
                                   static_cast<std::size_t>(num_locked));
        }

        // Restart from the sum of the still-wanted Ritz vectors.
        start.setZero();
        for (Eigen::Index j = newly_locked; j < std::min<Eigen::Index>(wanted, p); ++j) {
            start += V.leftCols(p) * ritz.eigenvectors().col(order[j]);
        }
        if (p < wanted || start.norm() < 1e-12) start = random_vector();
    }

    EigenPairs out;
    const auto order = leading_order(locked_values, options.which);
    out.values.resize(want);
    out.vectors.resize(n, want);
    out.residuals.resize(want);
    for (Eigen::Index j = 0; j < want; ++j) {
        out.values[j] = locked_values[order[j]];
        out.vectors.col(j) = locked.col(order[j]);
        out.residuals[j] = locked_residuals[order[j]];
    }
    out.matvecs = matvecs;
    return out;
}

}  // namespace epcd
