#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mdq/labeling.hpp"

using namespace mdq;

namespace {

// Independent direct evaluation of the subset cost for arbitrary
// real-valued tuples.
double subset_cost(double lambda_c, const std::vector<double>& values, int kappa) {
    int K = static_cast<int>(values.size());
    double cost = 0.0;
    for (const auto& pattern : channel_patterns(K, kappa)) {
        double mean = 0.0;
        for (int j : pattern) mean += values[j];
        mean /= kappa;
        cost += (lambda_c - mean) * (lambda_c - mean);
    }
    return cost;
}

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("build_label_table examples") {
    auto t1 = build_label_table(QuantizerConfig{2, 1, 1.0});
    CHECK(t1.base() == 0);
    CHECK(t1.entries == std::vector<CoordVector>{CoordVector{{0, 0}}});

    auto t2 = build_label_table(QuantizerConfig{2, 2, 1.0});
    CHECK(t2.base() == -1);
    CHECK(t2.entries ==
          std::vector<CoordVector>{CoordVector{{0, 0}}, CoordVector{{1, -1}}});
    Rat ssd(0);
    for (auto& x : t2.entries) ssd += ssd_cost_exact(x);
    CHECK(ssd == Rat(4 * 8 - 2, 6));  // zeta^2 (2M^3/3 - M/6), M = 2

    auto t3 = build_label_table(QuantizerConfig{3, 1, 1.0});
    CHECK(t3.entries == std::vector<CoordVector>{CoordVector{{0, 0, 0}}});
}

TEST_CASE("label examples") {
    auto t = build_label_table(QuantizerConfig{2, 1, 1.0});
    auto a = label(t, 0);
    CHECK(a.coords == std::vector<std::int64_t>{0, 0});
    CHECK(a.values[0] == doctest::Approx(-0.5));
    CHECK(a.values[1] == doctest::Approx(0.5));

    auto b = label(t, 1);
    CHECK(b.coords == std::vector<std::int64_t>{1, 0});
    CHECK(b.values[0] == doctest::Approx(1.5));
    CHECK(b.values[1] == doctest::Approx(0.5));
    CHECK((b.values[0] + b.values[1]) / 2 == doctest::Approx(1.0));

    auto t3 = build_label_table(QuantizerConfig{3, 1, 1.0});
    auto c = label(t3, 3);  // one full permutation period: pure translation
    auto c0 = label(t3, 0);
    for (int i = 0; i < 3; ++i) CHECK(c.coords[i] == c0.coords[i] + 1);
    double centroid = (c.values[0] + c.values[1] + c.values[2]) / 3;
    CHECK(centroid == doctest::Approx(3.0));
}

TEST_CASE("centroid law") {
    for (int K : {2, 3, 4})
        for (int M : {1, 2, 3}) {
            QuantizerConfig cfg{K, M, 1.0};
            auto t = build_label_table(cfg);
            for (std::int64_t y = -50; y <= 50; ++y) {
                auto coords = label_coords(t, y);
                std::int64_t m = floor_div(y + M / 2, M);
                Rat mean(0);
                for (int i = 0; i < K; ++i) mean += side_point_exact(K, i, coords[i]);
                CHECK(mean / Rat(K) == Rat(m));
            }
        }
}

TEST_CASE("unlabel inverts label") {
    for (int K : {2, 3, 4})
        for (int M : {1, 2, 3, 4}) {
            auto t = build_label_table(QuantizerConfig{K, M, 1.0});
            for (std::int64_t y = -10000; y <= 10000; y += 13) {
                auto inv = unlabel(t, label_coords(t, y));
                REQUIRE(inv.has_value());
                CHECK(*inv == y);
            }
        }
    auto t = build_label_table(QuantizerConfig{2, 1, 1.0});
    CHECK(unlabel(t, {0, 0}) == 0);
    CHECK(!unlabel(t, {5, -5}).has_value());
}

TEST_CASE("injectivity over a window") {
    for (int K : {2, 3})
        for (int M : {1, 3}) {
            auto t = build_label_table(QuantizerConfig{K, M, 1.0});
            std::set<std::vector<std::int64_t>> seen;
            for (std::int64_t y = -5000; y < 5000; ++y)
                CHECK(seen.insert(label_coords(t, y)).second);
        }
}

TEST_CASE("period structure is pure translation") {
    for (int K : {2, 3, 4}) {
        int M = 2;
        auto t = build_label_table(QuantizerConfig{K, M, 1.0});
        for (std::int64_t y = -20; y <= 20; ++y)
            for (std::int64_t shift : {-2, 1, 3}) {
                auto a = label_coords(t, y);
                auto b = label_coords(t, y + K * M * shift);
                for (int i = 0; i < K; ++i) CHECK(b[i] == a[i] + shift);
            }
    }
}

TEST_CASE("tuple_cost examples") {
    auto t = build_label_table(QuantizerConfig{2, 1, 1.0});
    CHECK(tuple_cost(t, 0, 2) == doctest::Approx(0.0));
    CHECK(tuple_cost(t, 0, 1) == doctest::Approx(0.5));
}

TEST_CASE("subset-cost decomposition identity on random tuples") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss(0.0, 2.0);
    for (int K = 2; K <= 5; ++K)
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> values(K);
            for (auto& v : values) v = gauss(rng);
            double lambda_c = gauss(rng);
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= K;
            double ssd = 0.0;
            for (double v : values) ssd += (v - mean) * (v - mean);
            for (int kappa = 1; kappa <= K; ++kappa) {
                double lhs = subset_cost(lambda_c, values, kappa);
                double rhs = binomial(K, kappa) *
                             ((lambda_c - mean) * (lambda_c - mean) +
                              static_cast<double>(K - kappa) / (K * kappa * (K - 1.0)) * ssd);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
            }
        }
}

TEST_CASE("average_cost closed form") {
    auto t = build_label_table(QuantizerConfig{2, 1, 1.0});
    CHECK(average_cost_exact(t, 1) == Rat(1, 4));
    CHECK(average_cost(t, 1) == doctest::Approx(0.25));
    CHECK_THROWS_AS(average_cost_exact(t, 2), std::invalid_argument);

    // K=2 SSD part follows zeta^2(2M^3/3 - M/6); SD part (1 - 1/M^2)/12.
    for (int M = 1; M <= 6; ++M) {
        auto table = build_label_table(QuantizerConfig{2, M, 1.0});
        Rat sd = Rat(M * M - 1, 12 * M * M);
        Rat ssd = Rat(4 * static_cast<std::int64_t>(M) * M * M - M, 6);
        CHECK(average_cost_exact(table, 1) == sd + Rat(1, 2) * ssd / Rat(M));
    }
}

TEST_CASE("average_cost matches the empirical per-pattern mean over a period") {
    for (int K : {2, 3})
        for (int M : {1, 2, 3}) {
            QuantizerConfig cfg{K, M, 1.0};
            auto t = build_label_table(cfg);
            for (int kappa = 1; kappa < K; ++kappa) {
                double mean = 0.0;
                for (std::int64_t y = t.base(); y < t.base() + K * M; ++y)
                    mean += tuple_cost(t, y, kappa) / binomial(K, kappa);
                mean /= K * M;
                CHECK(mean == doctest::Approx(average_cost(t, kappa)).epsilon(1e-10));
            }
        }
}

TEST_CASE("oracle agrees with the closed-form average cost") {
    for (int M : {1, 2, 3}) {
        QuantizerConfig cfg{2, M, 1.0};
        CHECK(brute_force_oracle(cfg, 1) == average_cost_exact(build_label_table(cfg), 1));
    }
    QuantizerConfig k3{3, 2, 1.0};
    for (int kappa : {1, 2})
        CHECK(brute_force_oracle(k3, kappa) ==
              average_cost_exact(build_label_table(k3), kappa));
}

TEST_CASE("relaxed-centroid oracle never improves") {
    for (int K : {2, 3})
        for (int M : {1, 2}) {
            QuantizerConfig cfg{K, M, 1.0};
            CHECK(brute_force_oracle(cfg, 1, 6, true) == brute_force_oracle(cfg, 1, 6, false));
        }
}

TEST_CASE("balance of descriptions") {
    auto k2 = balance_check(build_label_table(QuantizerConfig{2, 2, 1.0}), 1);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == k2[1]);

    auto k3 = balance_check(build_label_table(QuantizerConfig{3, 2, 1.0}), 1);
    REQUIRE(k3.size() == 3);
    CHECK(k3[0] == k3[1]);
    CHECK(k3[1] == k3[2]);

    // K=4 is reported but not asserted equal.
    auto k4 = balance_check(build_label_table(QuantizerConfig{4, 1, 1.0}), 1);
    CHECK(k4.size() == 4);
}

TEST_CASE("shifted SSD identity") {
    CHECK(shifted_ssd_check(0, {1, -1}, 2));
    CHECK(shifted_ssd_check(1, {1, 0}, 2));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-5, 5);
    for (int K : {2, 3, 4})
        for (std::int64_t z = -4; z <= 4; ++z)
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<std::int64_t> coords(K);
                std::int64_t sum = 0;
                for (int i = 0; i + 1 < K; ++i) {
                    coords[i] = coord(rng);
                    sum += coords[i];
                }
                coords[K - 1] = z - sum;
                CHECK(shifted_ssd_check(z, coords, K));
            }
    CHECK_THROWS_AS(shifted_ssd_check(1, {0, 0}, 2), std::invalid_argument);
}

TEST_CASE("beta non-uniqueness within equal-norm shells") {
    QuantizerConfig cfg{3, 3, 1.0};
    auto t = build_label_table(cfg);
    // Reverse entries within each equal-norm shell.
    auto permuted = t;
    std::size_t i = 0;
    while (i < permuted.entries.size()) {
        std::size_t j = i;
        while (j + 1 < permuted.entries.size() &&
               shifted_norm_sq(permuted.entries[j + 1]) ==
                   shifted_norm_sq(permuted.entries[i]))
            ++j;
        std::reverse(permuted.entries.begin() + i, permuted.entries.begin() + j + 1);
        i = j + 1;
    }
    for (int kappa : {1, 2})
        CHECK(average_cost_exact(t, kappa) == average_cost_exact(permuted, kappa));
}
