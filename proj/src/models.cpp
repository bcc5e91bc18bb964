#include "epcd/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "epcd/error.hpp"
#include "epcd/random.hpp"

namespace epcd {

void SimConfig::validate() const {
    if (n1 + n2 < 2) throw Error("config: need at least two nodes");
    if (!(lambda > 0.0)) throw Error("config: lambda must be positive");
    if (!(r >= 0.0)) throw Error("config: r must be non-negative");
    if (!(w1 >= 0.0 && w2 >= 0.0)) throw Error("config: weights must be non-negative");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error("config: gamma must lie in [0, 1]");
    if (!(theta_low > 0.0 && theta_high > 0.0)) throw Error("config: theta values must be positive");
}

SimConfig extraction_preset(double lambda) {
    SimConfig c;
    c.n1 = 60;
    c.n2 = 240;
    c.w1 = 0.4;
    c.w2 = 0.1;
    c.r = 0.1;
    c.lambda = lambda;
    c.gamma = 0.0;
    return c;
}

namespace {

double to_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw Error("config: invalid number '" + value + "' for " + key);
    }
    if (used != value.size()) throw Error("config: invalid number '" + value + "' for " + key);
    return v;
}

std::size_t to_count(const std::string& key, const std::string& value) {
    const double v = to_double(key, value);
    if (v < 0.0 || v != std::floor(v)) throw Error("config: " + key + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
}

}  // namespace

void set_config_value(SimConfig& c, const std::string& key, const std::string& value) {
    if (key == "n") {
        const std::size_t n = to_count(key, value);
        c.n1 = n / 2;
        c.n2 = n - n / 2;
    } else if (key == "n1") {
        c.n1 = to_count(key, value);
    } else if (key == "n2") {
        c.n2 = to_count(key, value);
    } else if (key == "w1") {
        c.w1 = to_double(key, value);
    } else if (key == "w2") {
        c.w2 = to_double(key, value);
    } else if (key == "w") {
        // "a,b"
        const auto comma = value.find(',');
        if (comma == std::string::npos) throw Error("config: w expects 'w1,w2'");
        c.w1 = to_double(key, value.substr(0, comma));
        c.w2 = to_double(key, value.substr(comma + 1));
    } else if (key == "r") {
        c.r = to_double(key, value);
    } else if (key == "lambda") {
        c.lambda = to_double(key, value);
    } else if (key == "gamma") {
        c.gamma = to_double(key, value);
    } else if (key == "theta_low") {
        c.theta_low = to_double(key, value);
    } else if (key == "theta_high") {
        c.theta_high = to_double(key, value);
    } else if (key == "seed") {
        c.seed = static_cast<std::uint64_t>(to_count(key, value));
    } else if (key == "preset") {
        if (value != "extraction") throw Error("config: unknown preset '" + value + "'");
        const double lambda = c.lambda;
        c = extraction_preset(lambda);
    } else {
        throw Error("config: unknown key '" + key + "'");
    }
}

SimConfig parse_sim_config(std::istream& in, SimConfig base) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), '=', ' ');
        std::istringstream fields(line);
        std::string key, value, extra;
        if (!(fields >> key)) continue;
        if (!(fields >> value) || (fields >> extra)) throw ParseError("expected 'key = value'", lineno);
        try {
            set_config_value(base, key, value);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return base;
}

SimConfig load_sim_config_file(const std::string& path, SimConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse_sim_config(in, base);
}

Eigen::Matrix2d edge_prob_matrix(const SimConfig& config) {
    config.validate();
    const double n = static_cast<double>(config.n());
    Eigen::Matrix2d p0;
    p0 << config.w1, config.r, config.r, config.w2;
    const Eigen::Vector2d pi(static_cast<double>(config.n1) / n, static_cast<double>(config.n2) / n);
    const double mass = pi.dot(p0 * pi);
    if (!(mass > 0.0)) throw Error("config: probability matrix has no mass");
    const double mean_theta = config.mean_theta();
    const Eigen::Matrix2d p = config.lambda * p0 / ((n - 1.0) * mass * mean_theta * mean_theta);
    const double worst = config.theta_high * config.theta_high * p.maxCoeff();
    if (worst > 1.0) {
        throw Error("infeasible degree target: edge probability " + std::to_string(worst) + " exceeds 1");
    }
    return p;
}

SampledGraph sample_dcsbm(const SimConfig& config) {
    const Eigen::Matrix2d p = edge_prob_matrix(config);
    const std::size_t n = config.n();
    Rng rng(config.seed);

    SampledGraph out;
    out.truth.assign(n, -1);
    std::fill(out.truth.begin(), out.truth.begin() + static_cast<std::ptrdiff_t>(config.n1), 1);
    out.theta.resize(n);
    for (double& t : out.theta) t = rng.bernoulli(config.gamma) ? config.theta_low : config.theta_high;

    const double theta_max = std::max(config.theta_low, config.theta_high);
    std::vector<Edge> edges;

    // Candidate pairs arrive at rate q = theta_max^2 P_kl; each is kept with probability
    // theta_i theta_j / theta_max^2.
    auto sample_row = [&](std::size_t i, std::size_t begin, std::size_t end, double q) {
        if (begin >= end || q <= 0.0) return;
        const double log_miss = q < 1.0 ? std::log1p(-q) : 0.0;
        std::size_t j = begin;
        while (true) {
            if (q < 1.0) {
                const double skip = std::floor(std::log(rng.uniform_open()) / log_miss);
                if (skip >= static_cast<double>(end - j)) return;
                j += static_cast<std::size_t>(skip);
            }
            const double keep = out.theta[i] * out.theta[j] / (theta_max * theta_max);
            if (keep >= 1.0 || rng.uniform() < keep) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
            if (++j >= end) return;
        }
    };

    const std::size_t n1 = config.n1;
    for (std::size_t i = 0; i < n; ++i) {
        const int block = i < n1 ? 0 : 1;
        if (block == 0) {
            sample_row(i, i + 1, n1, theta_max * theta_max * p(0, 0));
            sample_row(i, n1, n, theta_max * theta_max * p(0, 1));
        } else {
            sample_row(i, i + 1, n, theta_max * theta_max * p(1, 1));
        }
    }
    out.graph = Graph::from_edges(n, edges);
    return out;
}

PopulationSpectrum population_spectrum(double pi1, double pi2, double r, double omega, double lambda, std::size_t n) {
    if (!(pi1 > 0.0 && pi2 > 0.0) || std::abs(pi1 + pi2 - 1.0) > 1e-12) {
        throw Error("population_spectrum: block proportions must be positive and sum to 1");
    }
    const double n1_real = pi1 * static_cast<double>(n);
    const auto n1 = static_cast<std::size_t>(std::llround(n1_real));
    if (std::abs(n1_real - static_cast<double>(n1)) > 1e-9 || n1 == 0 || n1 >= n) {
        throw Error("population_spectrum: n * pi1 must be an integer strictly between 0 and n");
    }
    const double disc = (pi1 + pi2 * omega) * (pi1 + pi2 * omega) - 4.0 * pi1 * pi2 * (omega - r * r);
    if (disc < 0.0) throw Error("population_spectrum: negative discriminant");
    const double root = std::sqrt(disc);

    PopulationSpectrum s;
    s.rho1 = 0.5 * lambda * ((pi1 + pi2 * omega) + root);
    s.rho2 = 0.5 * lambda * ((pi1 + pi2 * omega) - root);
    s.u1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    s.u2 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    const auto head = static_cast<Eigen::Index>(n1);
    const auto tail = static_cast<Eigen::Index>(n - n1);

    if (r == 0.0) {
        // Block diagonal: the eigenvectors are the community indicators.
        const double first = lambda * pi1;
        const double second = lambda * pi2 * omega;
        Eigen::VectorXd ind1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        Eigen::VectorXd ind2 = ind1;
        ind1.head(head).setConstant(1.0 / std::sqrt(static_cast<double>(head)));
        ind2.tail(tail).setConstant(1.0 / std::sqrt(static_cast<double>(tail)));
        const bool first_leads = first >= second;
        s.u1 = first_leads ? ind1 : ind2;
        s.u2 = first_leads ? ind2 : ind1;
        s.r1 = first_leads ? std::numeric_limits<double>::infinity() : 0.0;
        s.r2 = first_leads ? 0.0 : std::numeric_limits<double>::infinity();
        return s;
    }

    // Level ratio of eigenvector i: first-block entries are ratio times the second-block
    // entries. The eigenvalue with the +root pairs with the +root denominator.
    auto ratio = [&](double sign) { return 2.0 * pi2 * r / ((pi2 * omega - pi1) + sign * root); };
    s.r1 = ratio(+1.0);
    s.r2 = ratio(-1.0);
    auto vec = [&](double level) {
        Eigen::VectorXd u(static_cast<Eigen::Index>(n));
        const double scale = 1.0 / std::sqrt(static_cast<double>(n) * (pi1 * level * level + pi2));
        u.head(head).setConstant(level * scale);
        u.tail(tail).setConstant(scale);
        return u;
    };
    s.u1 = vec(s.r1);
    s.u2 = vec(s.r2);
    return s;
}

Eigen::MatrixXd population_matrix(double pi1, double r, double omega, double lambda, std::size_t n) {
    if (n > kDenseNodeLimit) throw Error("population_matrix: n exceeds the dense limit");
    const auto n1 = static_cast<Eigen::Index>(std::llround(pi1 * static_cast<double>(n)));
    const auto size = static_cast<Eigen::Index>(n);
    const double scale = lambda / static_cast<double>(n);
    Eigen::MatrixXd m(size, size);
    m.topLeftCorner(n1, n1).setConstant(scale);
    m.topRightCorner(n1, size - n1).setConstant(scale * r);
    m.bottomLeftCorner(size - n1, n1).setConstant(scale * r);
    m.bottomRightCorner(size - n1, size - n1).setConstant(scale * omega);
    return m;
}

Eigen::MatrixXd expected_adjacency(const SimConfig& config) {
    if (config.n() > kDenseNodeLimit) throw Error("expected_adjacency: n exceeds the dense limit");
    if (config.gamma != 0.0) throw Error("expected_adjacency: requires gamma = 0");
    const Eigen::Matrix2d p = edge_prob_matrix(config);
    const auto n = static_cast<Eigen::Index>(config.n());
    const auto n1 = static_cast<Eigen::Index>(config.n1);
    Eigen::MatrixXd e(n, n);
    e.topLeftCorner(n1, n1).setConstant(p(0, 0));
    e.topRightCorner(n1, n - n1).setConstant(p(0, 1));
    e.bottomLeftCorner(n - n1, n1).setConstant(p(1, 0));
    e.bottomRightCorner(n - n1, n - n1).setConstant(p(1, 1));
    e.diagonal().setZero();
    return e;
}

}  // namespace epcd
