// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "mdq/analysis.hpp"
#include "mdq/ia_matrix.hpp"
#include "mdq/labeling.hpp"
#include "mdq/lattice.hpp"
#include "mdq/sim.hpp"

using namespace mdq;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), seconds);
    if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, ok, seconds);
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

}  // namespace

int main() {
    criterion(1, "fundamental pattern and spread bound", [] {
        if (pattern(2) != std::vector<std::int64_t>{0, 1, 3, 6}) return false;
        for (int M = 1; M <= 16; ++M)
            if (spread(unit(0, 0, M, 0)) != spread_bound(2 * M)) return false;
        return true;
    });

    criterion(2, "K=2 SSD closed form", [] {
        for (int M = 1; M <= 20; ++M) {
            Rat sum(0);
            for (const auto& x : enumerate_points(2, M)) sum += ssd_cost_exact(x);
            std::int64_t m = M;
            if (sum != Rat(4 * m * m * m - m, 6)) return false;  // 2M^3/3 - M/6
        }
        return true;
    });

    criterion(3, "brute-force oracle matches the labeling cost", [] {
        struct Case {
            int K, M;
        };
        std::vector<Case> cases;
        for (int K : {2, 3})
            for (int M : {1, 2, 3}) cases.push_back({K, M});
        for (int M : {1, 2}) cases.push_back({4, M});
        for (auto [K, M] : cases) {
            QuantizerConfig cfg{K, M, 1.0};
            auto table = build_label_table(cfg);
            for (int kappa = 1; kappa < K; ++kappa) {
                Rat expected = average_cost_exact(table, kappa);
                if (brute_force_oracle(cfg, kappa, 6, false) != expected) return false;
                if (brute_force_oracle(cfg, kappa, 6, true) != expected) return false;
            }
        }
        return true;
    });

    criterion(4, "dual-to-base theta count ratio", [] {
        for (int K : {2, 3, 4}) {
            auto base = theta_series(K, Rat(10));
            auto dual = dual_hole_theta(K, Rat(10));
            if (base.size() != dual.size()) return false;
            for (std::size_t i = 0; i < base.size(); ++i) {
                if (base[i].norm_sq != dual[i].norm_sq) return false;
                if (dual[i].count != K * base[i].count) return false;
            }
        }
        return true;
    });

    criterion(5, "subset-cost decomposition identity", [] {
        auto binom = [](int n, int k) {
            double r = 1;
            for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return r;
        };
        std::uint64_t counter = 0;
        for (int K = 2; K <= 5; ++K)
            for (int trial = 0; trial < 1000; ++trial) {
                std::vector<double> values(K);
                for (auto& v : values) v = 2.0 * gaussian_sample(100, counter++);
                double lambda_c = gaussian_sample(100, counter++);
                double mean = 0.0;
                for (double v : values) mean += v;
                mean /= K;
                double ssd = 0.0;
                for (double v : values) ssd += (v - mean) * (v - mean);
                for (int kappa = 1; kappa <= K; ++kappa) {
                    double lhs = 0.0;
                    for (const auto& pattern : channel_patterns(K, kappa)) {
                        double m = 0.0;
                        for (int j : pattern) m += values[j];
                        m /= kappa;
                        lhs += (lambda_c - m) * (lambda_c - m);
                    }
                    double rhs = binom(K, kappa) *
                                 ((lambda_c - mean) * (lambda_c - mean) +
                                  (K - kappa) / (K * kappa * (K - 1.0)) * ssd);
                    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
                        return false;
                }
            }
        return true;
    });

    criterion(6, "K=2 high-rate forms and distortion product", [] {
        double R = 4.0;
        double zeta = zeta_from_rate(R);
        for (int M = 1; M <= 32; ++M) {
            QuantizerConfig cfg{2, M, zeta};
            if (!close(side_distortion_exact(cfg, 1), M * M * zeta * zeta / 3.0, 1e-12))
                return false;
        }
        double reference = distortion_products(2, 1, R).achieved;
        double tpe = 2 * std::numbers::pi * std::numbers::e;
        if (!close(reference, 0.25 * tpe * tpe / 144.0 * std::exp2(-4.0 * R), 1e-12))
            return false;
        for (int M = 2; M <= 8; ++M)
            if (!close(distortion_products(2, M, R).achieved, reference, 1e-12)) return false;
        return true;
    });

    criterion(7, "Monte Carlo agreement at R = 8", [] {
        for (int K : {2, 3})
            for (int M : {1, 2}) {
                QuantizerConfig cfg{K, M, zeta_from_rate(8.0)};
                SimConfig sc{cfg, 10000000, 2024, Scheme::staggered};
                auto rep = run(sc);
                if (!close(rep.central_mse, central_distortion(cfg), 0.02)) return false;
                if (!close(rep.side_mse_by_kappa[0], side_distortion_exact(cfg, 1), 0.05))
                    return false;
                for (const auto& stats : rep.pattern_stats)
                    for (std::size_t i = 1; i < stats.size(); ++i) {
                        double tol =
                            3 * std::hypot(stats[0].std_error, stats[i].std_error);
                        if (std::abs(stats[0].mse - stats[i].mse) > tol) return false;
                    }
            }
        return true;
    });

    criterion(8, "staggering gain over the baseline", [] {
        double zeta = zeta_from_rate(4.0);
        for (int K : {2, 3, 4}) {
            QuantizerConfig cfg{K, 1, zeta};
            double gain = to_db(baseline_side_distortion(cfg, 1)) -
                          to_db(side_distortion_exact(cfg, 1));
            if (!(gain > 2.0)) return false;
        }
        std::vector<std::pair<int, int>> sweeps = {{2, 7}, {3, 10}, {4, 14}};
        bool monotone = true;
        for (auto [K, m_max] : sweeps) {
            double prev = 1e9;
            for (int M = 1; M <= m_max; ++M) {
                QuantizerConfig cfg{K, M, zeta};
                double gain = to_db(baseline_side_distortion(cfg, 1)) -
                              to_db(side_distortion_exact(cfg, 1));
                if (gain > prev + 1e-9) {
                    std::fprintf(stderr,
                                 "criterion 8: gain rises from %.3f dB to %.3f dB at "
                                 "K=%d, M=%d\n",
                                 prev, gain, K, M);
                    monotone = false;
                }
                prev = gain;
            }
        }
        return monotone;
    });

    criterion(9, "labeling injectivity and round trip", [] {
        for (int K : {2, 3, 4})
            for (int M = 1; M <= 4; ++M) {
                auto table = build_label_table(QuantizerConfig{K, M, 1.0});
                std::set<std::vector<std::int64_t>> seen;
                for (std::int64_t y = -5000; y < 5000; ++y) {
                    auto coords = label_coords(table, y);
                    if (!seen.insert(coords).second) return false;
                    auto inv = unlabel(table, coords);
                    if (!inv || *inv != y) return false;
                }
            }
        return true;
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
