#include "epcd/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "epcd/error.hpp"
#include "epcd/labels.hpp"

namespace epcd {

ConfusionMatrix confusion_matrix(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw Error("label vectors differ in length");
    if (a.empty()) throw Error("label vectors are empty");
    validate_labels(a);
    validate_labels(b);
    Eigen::Matrix2d counts = Eigen::Matrix2d::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) counts(a[i] > 0 ? 0 : 1, b[i] > 0 ? 0 : 1) += 1.0;
    return {counts / static_cast<double>(a.size())};
}

NmiValue nmi_from_confusion(const ConfusionMatrix& r) {
    const Eigen::Vector2d rows = r.row_marginals();
    const Eigen::Vector2d cols = r.col_marginals();
    double mutual = 0.0;
    double joint_entropy = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double p = r.joint(i, j);
            if (p <= 0.0) continue;
            mutual += p * (std::log(p) - std::log(rows[i]) - std::log(cols[j]));
            joint_entropy -= p * std::log(p);
        }
    }
    if (joint_entropy <= 0.0) return {1.0, true};
    return {std::clamp(mutual / joint_entropy, 0.0, 1.0), false};
}

NmiValue nmi_detail(std::span<const int> a, std::span<const int> b) { return nmi_from_confusion(confusion_matrix(a, b)); }

double nmi(std::span<const int> a, std::span<const int> b) { return nmi_detail(a, b).value; }

double misclustered_fraction(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw Error("label vectors differ in length");
    if (a.empty()) throw Error("label vectors are empty");
    validate_labels(a);
    validate_labels(b);
    std::size_t differ = 0;
    for (std::size_t i = 0; i < a.size(); ++i) differ += a[i] != b[i];
    const std::size_t best = std::min(differ, a.size() - differ);
    return static_cast<double>(best) / static_cast<double>(a.size());
}

}  // namespace epcd
