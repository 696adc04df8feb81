#include "mdq/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mdq/analysis.hpp"

namespace mdq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Cheapest-SSD coordinate vectors with sum z for the non-staggered side
// quantizers K*zeta*Z, ordered by (cost, lexicographic coords).
std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> baseline_candidates(
    int K, std::int64_t z, int count) {
    for (std::int64_t box = 1;; ++box) {
        std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> found;
        std::vector<std::int64_t> x(K);
        std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t partial) {
            if (i == K - 1) {
                std::int64_t last = z - partial;
                if (last < -box || last > box + 1) return;
                x[i] = last;
                std::int64_t cost = 0;
                for (int j = 0; j < K; ++j) {
                    std::int64_t d = K * x[j] - z;
                    cost += d * d;
                }
                found.emplace_back(cost, x);
                return;
            }
            for (std::int64_t v = -box; v <= box + 1; ++v) {
                x[i] = v;
                rec(i + 1, partial + v);
            }
        };
        rec(0, 0);
        std::sort(found.begin(), found.end());
        // A vector with a coordinate outside [-box, box+1] costs at least
        // (K*box + 1)^2 for z in [0, K).
        std::int64_t threshold = (K * box + 1) * (K * box + 1);
        if (static_cast<int>(found.size()) >= count && found[count - 1].first < threshold) {
            found.resize(count);
            return found;
        }
    }
}

struct PeriodMap {
    std::int64_t base = 0;
    int period = 0;  // K * M
    std::vector<std::vector<std::int64_t>> coords;

    std::vector<std::int64_t> at(std::int64_t y) const {
        std::int64_t t = floor_div(y - base, period);
        auto c = coords[static_cast<std::size_t>(y - base - t * period)];
        for (auto& v : c) v += t;
        return c;
    }
};

PeriodMap make_period_map(const QuantizerConfig& cfg, Scheme scheme) {
    PeriodMap map;
    map.base = -(cfg.M / 2);
    map.period = cfg.K * cfg.M;
    map.coords.reserve(map.period);
    if (scheme == Scheme::staggered) {
        auto table = build_label_table(cfg);
        for (int j = 0; j < map.period; ++j)
            map.coords.push_back(label_coords(table, map.base + j));
    } else {
        auto table = baseline_label_table(cfg);
        for (int j = 0; j < map.period; ++j)
            map.coords.push_back(baseline_label(table, map.base + j).coords);
    }
    return map;
}

}  // namespace

BaselineTable baseline_label_table(const QuantizerConfig& cfg) {
    cfg.validate();
    BaselineTable table{cfg, {}};
    table.entries.resize(cfg.K);
    for (int r = 0; r < cfg.K; ++r) {
        for (auto& [cost, coords] : baseline_candidates(cfg.K, r, cfg.M))
            table.entries[r].push_back(coords);
    }
    return table;
}

KTuple baseline_label(const BaselineTable& table, std::int64_t y) {
    const auto& cfg = table.config;
    std::int64_t m = floor_div(y + cfg.M / 2, cfg.M);
    std::int64_t slot = y - (m * cfg.M - cfg.M / 2);
    std::int64_t r = pos_mod(m, cfg.K);
    std::int64_t t = (m - r) / cfg.K;
    KTuple tuple;
    tuple.coords = table.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(slot)];
    tuple.values.resize(cfg.K);
    for (int i = 0; i < cfg.K; ++i) {
        tuple.coords[i] += t;
        tuple.values[i] = cfg.K * cfg.zeta * static_cast<double>(tuple.coords[i]);
    }
    return tuple;
}

std::optional<std::int64_t> baseline_unlabel(const BaselineTable& table,
                                             const std::vector<std::int64_t>& coords) {
    const auto& cfg = table.config;
    if (static_cast<int>(coords.size()) != cfg.K)
        throw std::invalid_argument("baseline_unlabel: dimension mismatch");
    std::int64_t m = 0;
    for (auto c : coords) m += c;
    std::int64_t r = pos_mod(m, cfg.K);
    std::int64_t t = (m - r) / cfg.K;
    std::vector<std::int64_t> canonical(coords);
    for (auto& c : canonical) c -= t;
    const auto& slots = table.entries[static_cast<std::size_t>(r)];
    auto it = std::find(slots.begin(), slots.end(), canonical);
    if (it == slots.end()) return std::nullopt;
    return m * cfg.M - cfg.M / 2 + (it - slots.begin());
}

Rat baseline_ssd_exact(const std::vector<std::int64_t>& coords, int K, std::int64_t z) {
    Rat cost(0);
    for (auto x : coords) {
        Rat d = Rat(K * x - z);
        cost += d * d;
    }
    return cost;
}

double baseline_side_distortion(const QuantizerConfig& cfg, int kappa) {
    cfg.validate();
    if (kappa < 1 || kappa >= cfg.K)
        throw std::invalid_argument("baseline_side_distortion: kappa out of range");
    auto table = baseline_label_table(cfg);
    Rat ssd_sum(0);
    for (int r = 0; r < cfg.K; ++r)
        for (const auto& coords : table.entries[r])
            ssd_sum += baseline_ssd_exact(coords, cfg.K, r);
    Rat sd = Rat(cfg.M * cfg.M - 1, 12 * cfg.M * cfg.M);
    Rat weighted = Rat(cfg.K - kappa, cfg.K * kappa * (cfg.K - 1)) * ssd_sum /
                   Rat(cfg.K * cfg.M);
    return central_distortion(cfg) + to_double(sd + weighted) * cfg.zeta * cfg.zeta;
}

double gaussian_sample(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t a = mix64(seed + (2 * index + 1) * kGolden);
    std::uint64_t b = mix64(seed + (2 * index + 2) * kGolden);
    double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1p-53;  // (0, 1]
    double u2 = static_cast<double>(b >> 11) * 0x1p-53;          // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SimReport run(const SimConfig& sim) {
    const auto& cfg = sim.quantizer;
    cfg.validate();
    if (sim.samples < 1) throw std::invalid_argument("run: samples must be >= 1");

    PeriodMap map = make_period_map(cfg, sim.scheme);
    std::vector<double> offsets(cfg.K, 0.0);
    if (sim.scheme == Scheme::staggered)
        for (int i = 0; i < cfg.K; ++i) offsets[i] = (2 * i - cfg.K + 1) * cfg.zeta / 2.0;

    struct FlatPattern {
        int kappa;
        std::vector<int> members;
    };
    std::vector<FlatPattern> flat;
    for (int kappa = 1; kappa < cfg.K; ++kappa)
        for (auto& p : channel_patterns(cfg.K, kappa)) flat.push_back({kappa, p});

    struct StripeAcc {
        double central = 0.0;
        std::vector<double> pattern_sum, pattern_sumsq;
        std::vector<std::unordered_map<std::int64_t, std::int64_t>> histograms;
    };

    // Fixed stripe decomposition: the merged report depends only on
    // (seed, samples), never on the number of worker threads.
    constexpr int kStripes = 64;
    std::vector<StripeAcc> stripes(kStripes);
    for (auto& acc : stripes) {
        acc.pattern_sum.assign(flat.size(), 0.0);
        acc.pattern_sumsq.assign(flat.size(), 0.0);
        acc.histograms.resize(cfg.K);
    }

    auto work = [&](int stripe) {
        StripeAcc& acc = stripes[stripe];
        std::int64_t begin = sim.samples * stripe / kStripes;
        std::int64_t end = sim.samples * (stripe + 1) / kStripes;
        std::vector<double> values(cfg.K);
        for (std::int64_t i = begin; i < end; ++i) {
            double v = gaussian_sample(sim.seed, static_cast<std::uint64_t>(i));
            std::int64_t y = quantize_central(cfg, v);
            double lambda_c = central_point(cfg, y);
            double ce = v - lambda_c;
            acc.central += ce * ce;
            auto coords = map.at(y);
            for (int j = 0; j < cfg.K; ++j) {
                values[j] = cfg.K * cfg.zeta * static_cast<double>(coords[j]) + offsets[j];
                ++acc.histograms[j][coords[j]];
            }
            for (std::size_t p = 0; p < flat.size(); ++p) {
                double mean = 0.0;
                for (int j : flat[p].members) mean += values[j];
                mean /= flat[p].kappa;
                double e2 = (v - mean) * (v - mean);
                acc.pattern_sum[p] += e2;
                acc.pattern_sumsq[p] += e2 * e2;
            }
        }
    };

    int threads = sim.threads > 0 ? sim.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, kStripes);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int s = next.fetch_add(1); s < kStripes; s = next.fetch_add(1)) work(s);
        });
    for (auto& t : pool) t.join();

    // Merge in stripe order.
    double central = 0.0;
    std::vector<double> psum(flat.size(), 0.0), psumsq(flat.size(), 0.0);
    std::vector<std::unordered_map<std::int64_t, std::int64_t>> hist(cfg.K);
    for (const auto& acc : stripes) {
        central += acc.central;
        for (std::size_t p = 0; p < flat.size(); ++p) {
            psum[p] += acc.pattern_sum[p];
            psumsq[p] += acc.pattern_sumsq[p];
        }
        for (int j = 0; j < cfg.K; ++j)
            for (auto& [key, count] : acc.histograms[j]) hist[j][key] += count;
    }

    SimReport report;
    report.samples = sim.samples;
    double n = static_cast<double>(sim.samples);
    report.central_mse = central / n;
    report.pattern_stats.resize(cfg.K - 1);
    report.side_mse_by_kappa.assign(cfg.K - 1, 0.0);
    for (std::size_t p = 0; p < flat.size(); ++p) {
        PatternStat stat;
        stat.pattern = flat[p].members;
        stat.mse = psum[p] / n;
        double var = std::max(0.0, psumsq[p] / n - stat.mse * stat.mse);
        stat.std_error = std::sqrt(var / n);
        report.pattern_stats[flat[p].kappa - 1].push_back(stat);
    }
    for (int kappa = 1; kappa < cfg.K; ++kappa) {
        double sum = 0.0;
        for (const auto& stat : report.pattern_stats[kappa - 1]) sum += stat.mse;
        report.side_mse_by_kappa[kappa - 1] = sum / report.pattern_stats[kappa - 1].size();
    }
    report.entropy_bits.resize(cfg.K);
    for (int j = 0; j < cfg.K; ++j) {
        double h = 0.0;
        for (auto& [key, count] : hist[j]) {
            double p = static_cast<double>(count) / n;
            h -= p * std::log2(p);
        }
        report.entropy_bits[j] = h;
    }
    return report;
}

std::vector<ComparePoint> compare(int K, double rate, int m_max, std::int64_t samples,
                                  std::uint64_t seed) {
    std::vector<ComparePoint> points;
    double zeta = zeta_from_rate(rate);
    for (int M = 1; M <= m_max; ++M) {
        QuantizerConfig cfg{K, M, zeta};
        ComparePoint pt;
        pt.M = M;
        double central = central_distortion(cfg);
        pt.central_db = to_db(central);
        pt.side_staggered_db = to_db(side_distortion_exact(cfg, 1));
        pt.side_baseline_db = to_db(baseline_side_distortion(cfg, 1));
        pt.side_sphere_db = to_db(side_distortion_sphere(cfg, 1));
        double product = std::pow(K - 1.0, K - 1.0) * std::pow(K, -static_cast<double>(K)) *
                         std::exp2(-2.0 * K * rate);
        pt.side_rdopt_db = to_db(std::pow(product / central, 1.0 / (K - 1.0)));
        if (samples > 0) {
            SimConfig sc{cfg, samples, seed, Scheme::staggered};
            pt.side_empirical_db = to_db(run(sc).side_mse_by_kappa[0]);
        }
        points.push_back(pt);
    }
    return points;
}

}  // namespace mdq
