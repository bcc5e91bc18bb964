#include "epcd/spectral.hpp"

#include <cmath>

#include "epcd/error.hpp"

namespace epcd {

double regularizer_tau(const Graph& graph, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error("epsilon must lie in (0, 1)");
    const auto n = static_cast<double>(graph.num_nodes());
    if (graph.num_nodes() == 0 || graph.total_degree() == 0) {
        throw Error("graph has no edges; there is no spectral structure to embed");
    }
    const double mean_degree = static_cast<double>(graph.total_degree()) / n;
    return epsilon * mean_degree / n;
}

RegularizedLaplacian::RegularizedLaplacian(const Graph& graph, double tau)
    : graph_(&graph), tau_(tau), scratch_(graph.num_nodes()) {
    if (!(tau > 0.0)) throw Error("regularization tau must be positive");
    const auto n = static_cast<Eigen::Index>(graph.num_nodes());
    sqrt_d_.resize(n);
    inv_sqrt_d_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = static_cast<double>(graph.degree(static_cast<NodeId>(i))) + static_cast<double>(n) * tau;
        sqrt_d_[i] = std::sqrt(d);
        inv_sqrt_d_[i] = 1.0 / sqrt_d_[i];
    }
}

void RegularizedLaplacian::apply(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = size();
    if (x.size() != n || y.size() != n) throw Error("RegularizedLaplacian: vector length mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        scratch_[i] = inv_sqrt_d_[static_cast<Eigen::Index>(i)] * x[i];
        total += scratch_[i];
    }
    const double shift = tau_ * total;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = shift;
        for (NodeId j : graph_->neighbors(static_cast<NodeId>(i))) acc += scratch_[j];
        y[i] = inv_sqrt_d_[static_cast<Eigen::Index>(i)] * acc;
    }
}

std::vector<double> RegularizedLaplacian::apply(std::span<const double> x) const {
    std::vector<double> y(size());
    apply(x, y);
    return y;
}

LinearOperator RegularizedLaplacian::as_operator() const {
    return [this](std::span<const double> x, std::span<double> y) { apply(x, y); };
}

LaplacianPair laplacian_leading_pair(const Graph& graph, double epsilon, double tol, std::uint64_t seed) {
    const double tau = regularizer_tau(graph, epsilon);
    if (graph.num_nodes() < 2) throw Error("embedding needs at least two nodes");
    const RegularizedLaplacian laplacian(graph, tau);

    EigenOptions options;
    options.tol = tol;
    options.seed = seed;
    options.which = Spectrum::LargestMagnitude;
    const EigenPairs pairs = leading_eigenpairs(laplacian.as_operator(), graph.num_nodes(), 2, options);

    LaplacianPair out;
    out.tau = tau;
    out.eigenvalues = {pairs.values[0], pairs.values[1]};
    out.eigenvectors = pairs.vectors;
    out.sqrt_degrees = laplacian.sqrt_degrees();
    return out;
}

Eigen::Matrix2Xd orthonormalize_rows(const Eigen::Matrix2Xd& rows) {
    Eigen::Matrix2Xd out = rows;
    for (int pass = 0; pass < 2; ++pass) {
        const double n0 = out.row(0).norm();
        if (n0 == 0.0) throw Error("embedding rows are linearly dependent");
        out.row(0) /= n0;
        out.row(1) -= out.row(1).dot(out.row(0)) * out.row(0);
        const double n1 = out.row(1).norm();
        if (n1 <= 1e-14 * rows.row(1).norm() || n1 == 0.0) throw Error("embedding rows are linearly dependent");
        out.row(1) /= n1;
    }
    return out;
}

Embedding embedding_from_pair(const LaplacianPair& pair, double epsilon, double tol) {
    Eigen::Matrix2Xd scaled(2, pair.eigenvectors.rows());
    scaled.row(0) = pair.eigenvectors.col(0).cwiseProduct(pair.sqrt_degrees).transpose();
    scaled.row(1) = pair.eigenvectors.col(1).cwiseProduct(pair.sqrt_degrees).transpose();

    Embedding out;
    out.basis = orthonormalize_rows(scaled);
    out.tau = pair.tau;
    out.epsilon = epsilon;
    out.eigenvalues = pair.eigenvalues;
    out.near_degenerate = std::abs(pair.eigenvalues[0] - pair.eigenvalues[1]) < tol;
    return out;
}

Embedding embedding(const Graph& graph, double epsilon, double tol, std::uint64_t seed) {
    return embedding_from_pair(laplacian_leading_pair(graph, epsilon, tol, seed), epsilon, tol);
}

}  // namespace epcd
