#pragma once

#include <span>

#include <Eigen/Core>

namespace epcd {

/// Joint frequency table of two two-community labelings; entries sum to 1.
/// Row index follows the first labeling (+1 -> 0, -1 -> 1), column the second.
struct ConfusionMatrix {
    Eigen::Matrix2d joint = Eigen::Matrix2d::Zero();

    Eigen::Vector2d row_marginals() const { return joint.rowwise().sum(); }
    Eigen::Vector2d col_marginals() const { return joint.colwise().sum().transpose(); }
};

ConfusionMatrix confusion_matrix(std::span<const int> a, std::span<const int> b);

struct NmiValue {
    double value = 0.0;
    /// Both labelings put every node in one community (zero joint entropy).
    bool degenerate = false;
};

/// Mutual information divided by joint entropy, natural logarithms, 0 log 0 = 0.
NmiValue nmi_from_confusion(const ConfusionMatrix& r);
NmiValue nmi_detail(std::span<const int> a, std::span<const int> b);
double nmi(std::span<const int> a, std::span<const int> b);

/// Fraction of disagreeing nodes, minimized over the global community swap.
double misclustered_fraction(std::span<const int> a, std::span<const int> b);

}  // namespace epcd
