#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"

namespace epcd {

/// Two-community degree-corrected block model with the rescaled parametrization:
/// P0 = [[w1, r], [r, w2]], P = lambda P0 / ((n - 1) (pi' P0 pi) E[theta]^2), and
/// theta_i = theta_low with probability gamma, theta_high otherwise.
struct SimConfig {
    std::size_t n1 = 150;
    std::size_t n2 = 150;
    double w1 = 1.0;
    double w2 = 1.0;
    double r = 0.3;
    double lambda = 15.0;
    double gamma = 0.0;
    double theta_low = 0.2;
    double theta_high = 1.0;
    std::uint64_t seed = 1;

    std::size_t n() const noexcept { return n1 + n2; }
    double mean_theta() const noexcept { return gamma * theta_low + (1.0 - gamma) * theta_high; }

    /// Throws on out-of-range fields.
    void validate() const;
};

/// Community-extraction benchmark: n1 = 60 tight nodes, n2 = 240 background nodes,
/// P0 = [[0.4, 0.1], [0.1, 0.1]].
SimConfig extraction_preset(double lambda);

/// Reads "key = value" or "key value" lines (keys: n, n1, n2, w1, w2, w, r, lambda,
/// gamma, theta_low, theta_high, seed, preset). '#' starts a comment.
SimConfig parse_sim_config(std::istream& in, SimConfig base = {});
SimConfig load_sim_config_file(const std::string& path, SimConfig base = {});
void set_config_value(SimConfig& config, const std::string& key, const std::string& value);

/// Rescaled 2 x 2 edge probability matrix. Throws "infeasible degree target" when the
/// largest probability theta_high^2 P_kl exceeds 1.
Eigen::Matrix2d edge_prob_matrix(const SimConfig& config);

struct SampledGraph {
    Graph graph;
    Labels truth;  ///< first n1 nodes +1, remaining n2 nodes -1
    std::vector<double> theta;
};

/// Independent Bernoulli(theta_i theta_j P_{c_i c_j}) edges for i < j. Deterministic in
/// config.seed. Geometric skipping within each block; cost O(n + edges).
SampledGraph sample_dcsbm(const SimConfig& config);

/// Closed-form nonzero spectrum of the expected adjacency (lambda / n) [[1, r], [r, omega]]
/// expanded over blocks of sizes n pi1 and n pi2 (diagonal included).
struct PopulationSpectrum {
    double rho1 = 0.0;
    double rho2 = 0.0;
    Eigen::VectorXd u1;
    Eigen::VectorXd u2;
    /// Ratio of the first-block level to the second-block level in u_i (infinite when
    /// u_i is the first-block indicator).
    double r1 = 0.0;
    double r2 = 0.0;
};

PopulationSpectrum population_spectrum(double pi1, double pi2, double r, double omega, double lambda, std::size_t n);

/// Dense block matrix (lambda / n) [[1, r], [r, omega]] including the diagonal; the
/// exact rank-2 matrix whose spectrum population_spectrum describes.
Eigen::MatrixXd population_matrix(double pi1, double r, double omega, double lambda, std::size_t n);

/// Dense E[A] of a gamma = 0 configuration: entries P_{c_i c_j}, zero diagonal.
Eigen::MatrixXd expected_adjacency(const SimConfig& config);

inline constexpr std::size_t kDenseNodeLimit = 1000;

}  // namespace epcd
