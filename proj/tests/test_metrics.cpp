#include <doctest.h>

#include <cmath>

#include "epcd/error.hpp"
#include "epcd/metrics.hpp"
#include "support.hpp"

using namespace epcd;
using namespace epcd::testing;

namespace {

// Direct evaluation: sum R log(R / (R_i+ R_+j)) over sum R log R, 0 log 0 = 0.
double nmi_direct(const double r[2][2]) {
    double row[2] = {r[0][0] + r[0][1], r[1][0] + r[1][1]};
    double col[2] = {r[0][0] + r[1][0], r[0][1] + r[1][1]};
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (r[i][j] > 0) {
                num += r[i][j] * std::log(r[i][j] / (row[i] * col[j]));
                den += r[i][j] * std::log(r[i][j]);
            }
    return -num / den;
}

Labels random_labels(std::size_t n, Rng& rng) {
    Labels l(n);
    for (auto& x : l) x = rng.bernoulli(0.5) ? 1 : -1;
    return l;
}

}  // namespace

TEST_SUITE("metrics") {
    TEST_CASE("identical labelings score exactly one") {
        Rng rng(1);
        for (int t = 0; t < 10; ++t) {
            Labels a = random_labels(50, rng);
            a[0] = 1;
            a[1] = -1;
            CHECK(nmi(a, a) == 1.0);
            CHECK(nmi(a, negated(a)) == 1.0);
            CHECK(misclustered_fraction(a, a) == 0.0);
        }
    }

    TEST_CASE("confusion example") {
        const double r[2][2] = {{0.4, 0.1}, {0.1, 0.4}};
        CHECK(nmi_direct(r) == doctest::Approx(0.1615).epsilon(1e-4 / 0.1615));
        ConfusionMatrix cm;
        cm.joint << 0.4, 0.1, 0.1, 0.4;
        CHECK(nmi_from_confusion(cm).value == doctest::Approx(nmi_direct(r)).epsilon(1e-14));

        // Ten nodes realizing that table.
        const Labels a{1, 1, 1, 1, 1, -1, -1, -1, -1, -1};
        const Labels b{1, 1, 1, 1, -1, 1, -1, -1, -1, -1};
        const auto c = confusion_matrix(a, b);
        CHECK(c.joint(0, 0) == doctest::Approx(0.4));
        CHECK(c.joint(0, 1) == doctest::Approx(0.1));
        CHECK(nmi(a, b) == doctest::Approx(nmi_direct(r)).epsilon(1e-14));
        CHECK(misclustered_fraction(a, b) == doctest::Approx(0.2));
    }

    TEST_CASE("independent labelings score zero") {
        const Labels a{1, 1, -1, -1};
        const Labels b{1, -1, 1, -1};
        CHECK(std::abs(nmi(a, b)) < 1e-15);
        CHECK(misclustered_fraction(a, b) == 0.5);
    }

    TEST_CASE("degenerate single-community inputs") {
        const Labels ones(6, 1);
        const auto both = nmi_detail(ones, ones);
        CHECK(both.degenerate);
        CHECK(both.value == 1.0);
        const Labels mixed{1, -1, 1, -1, 1, 1};
        const auto one = nmi_detail(ones, mixed);
        CHECK_FALSE(one.degenerate);
        CHECK(one.value == 0.0);
        CHECK_THROWS_AS(nmi(ones, Labels(5, 1)), Error);
        CHECK_THROWS_AS(nmi(Labels{}, Labels{}), Error);
    }

    TEST_CASE("symmetry, swap invariance and range") {
        Rng rng(2);
        for (int t = 0; t < 100; ++t) {
            const Labels a = random_labels(40, rng);
            const Labels b = random_labels(40, rng);
            const double v = nmi(a, b);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(nmi(b, a) == doctest::Approx(v).epsilon(1e-14));
            CHECK(nmi(negated(a), b) == doctest::Approx(v).epsilon(1e-14));
            CHECK(nmi(a, negated(b)) == doctest::Approx(v).epsilon(1e-14));
            CHECK(misclustered_fraction(a, b) == misclustered_fraction(b, a));
            CHECK(misclustered_fraction(a, b) <= 0.5);
        }
    }

    TEST_CASE("misclustered fraction is a pseudometric") {
        Rng rng(3);
        for (int t = 0; t < 300; ++t) {
            const Labels a = random_labels(25, rng);
            Labels b = a, c = a;
            for (auto& x : b)
                if (rng.bernoulli(0.2)) x = -x;
            for (auto& x : c)
                if (rng.bernoulli(0.3)) x = -x;
            CHECK(misclustered_fraction(a, c) <=
                  misclustered_fraction(a, b) + misclustered_fraction(b, c) + 1e-15);
        }
    }

    TEST_CASE("perfect agreement iff zero misclustering") {
        Rng rng(4);
        for (int t = 0; t < 200; ++t) {
            Labels a = random_labels(12, rng);
            Labels b = a;
            if (rng.bernoulli(0.5)) b = negated(b);
            if (rng.bernoulli(0.5)) b[rng.index(12)] *= -1;
            a[0] = 1;
            a[1] = -1;
            if (b[0] == b[1]) continue;
            CHECK((nmi(a, b) > 1.0 - 1e-12) == (misclustered_fraction(a, b) == 0.0));
        }
    }
}
