#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdq/labeling.hpp"
#include "mdq/quantizer.hpp"

namespace mdq {

enum class Scheme { staggered, baseline };

/// Labeling for the non-staggered reference scheme: all side quantizers are
/// K*zeta*Z with no per-description offsets. entries[r][j] is the j-th
/// cheapest coordinate vector (by SSD about centroid zeta*r) labeling the
/// j-th central point of V_r(zeta*r), r = 0..K-1.
struct BaselineTable {
    QuantizerConfig config;
    std::vector<std::vector<std::vector<std::int64_t>>> entries;

    std::int64_t base() const { return -(config.M / 2); }
};

BaselineTable baseline_label_table(const QuantizerConfig& cfg);
KTuple baseline_label(const BaselineTable& table, std::int64_t y);
std::optional<std::int64_t> baseline_unlabel(const BaselineTable& table,
                                             const std::vector<std::int64_t>& coords);

/// SSD cost of a baseline tuple about centroid zeta*z, in units of zeta^2.
Rat baseline_ssd_exact(const std::vector<std::int64_t>& coords, int K, std::int64_t z);

/// Analytic high-rate side distortion of the baseline scheme, averaged over
/// one full period of reference cells.
double baseline_side_distortion(const QuantizerConfig& cfg, int kappa);

struct SimConfig {
    QuantizerConfig quantizer;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::staggered;
    int threads = 0;  // 0 = hardware concurrency
};

struct PatternStat {
    std::vector<int> pattern;
    double mse = 0.0;
    double std_error = 0.0;  // standard error of the MSE estimator
};

struct SimReport {
    std::int64_t samples = 0;
    double central_mse = 0.0;
    std::vector<double> side_mse_by_kappa;               // index kappa-1
    std::vector<std::vector<PatternStat>> pattern_stats; // index kappa-1
    std::vector<double> entropy_bits;                    // per description
};

/// Deterministic unit Gaussian for sample `index` of stream `seed`; the
/// report of run() depends only on (seed, samples), not on thread count.
double gaussian_sample(std::uint64_t seed, std::uint64_t index);

SimReport run(const SimConfig& cfg);

struct ComparePoint {
    int M = 0;
    double central_db = 0.0;
    double side_staggered_db = 0.0;
    double side_baseline_db = 0.0;
    double side_sphere_db = 0.0;
    double side_rdopt_db = 0.0;
    std::optional<double> side_empirical_db;
};

/// Sweep over M at a fixed rate; when samples > 0 an empirical staggered
/// side distortion column is included.
std::vector<ComparePoint> compare(int K, double rate, int m_max, std::int64_t samples = 0,
                                  std::uint64_t seed = 0);

}  // namespace mdq
