#include "mdq/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mdq {

namespace {

struct Decomposition {
    std::int64_t m;   // reference cell index: y lies in V_r(zeta*m)
    std::int64_t y0;  // central coordinate translated into V_r(0)
};

Decomposition decompose(const QuantizerConfig& cfg, std::int64_t y) {
    std::int64_t half = cfg.M / 2;
    std::int64_t m = floor_div(y + half, cfg.M);
    return {m, y - m * cfg.M};
}

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void require_kappa(int K, int kappa, bool allow_full) {
    if (kappa < 1 || kappa > K - (allow_full ? 0 : 1))
        throw std::invalid_argument("kappa out of range");
}

// Sum over V_r(0) of lambda_c^2 in units of zeta^2.
Rat sd_period_sum(const QuantizerConfig& cfg) {
    Rat sum(0);
    for (std::int64_t y0 : discrete_voronoi(cfg, 0)) {
        Rat c = central_point_exact(cfg.M, y0);
        sum += c * c;
    }
    return sum;
}

Rat ssd_weight(int K, int kappa) { return Rat(K - kappa, K * kappa * (K - 1)); }

}  // namespace

LabelTable build_label_table(const QuantizerConfig& cfg) {
    cfg.validate();
    return LabelTable{cfg, enumerate_points(cfg.K, cfg.M)};
}

std::vector<std::int64_t> label_coords(const LabelTable& table, std::int64_t y) {
    const auto& cfg = table.config;
    auto [m, y0] = decompose(cfg, y);
    const auto& X = table.entries[static_cast<std::size_t>(y0 - table.base())].coords;
    std::vector<std::int64_t> coords(cfg.K);
    for (int i = 0; i < cfg.K; ++i)
        coords[pos_mod(m + i, cfg.K)] = X[i] + floor_div(m + i, cfg.K);
    return coords;
}

KTuple label(const LabelTable& table, std::int64_t y) {
    KTuple t;
    t.coords = label_coords(table, y);
    t.values.resize(table.config.K);
    for (int i = 0; i < table.config.K; ++i)
        t.values[i] = side_point(table.config, i, t.coords[i]);
    return t;
}

std::optional<std::int64_t> unlabel(const LabelTable& table,
                                    const std::vector<std::int64_t>& coords) {
    const auto& cfg = table.config;
    if (static_cast<int>(coords.size()) != cfg.K)
        throw std::invalid_argument("unlabel: dimension mismatch");
    // Centroid of the tuple is zeta * sum(coords).
    std::int64_t m = 0;
    for (auto c : coords) m += c;
    CoordVector recentered{std::vector<std::int64_t>(cfg.K)};
    for (int i = 0; i < cfg.K; ++i)
        recentered.coords[i] = coords[pos_mod(m + i, cfg.K)] - floor_div(m + i, cfg.K);
    if (!recentered.zero_sum()) return std::nullopt;
    auto it = std::find(table.entries.begin(), table.entries.end(), recentered);
    if (it == table.entries.end()) return std::nullopt;
    std::int64_t y0 = table.base() + (it - table.entries.begin());
    return y0 + m * cfg.M;
}

std::vector<std::vector<int>> channel_patterns(int K, int kappa) {
    require_kappa(K, kappa, true);
    std::vector<std::vector<int>> patterns;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == kappa) {
            patterns.push_back(cur);
            return;
        }
        for (int i = start; i < K; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return patterns;
}

double tuple_cost(const LabelTable& table, std::int64_t y, int kappa) {
    const auto& cfg = table.config;
    require_kappa(cfg.K, kappa, true);
    double lambda_c = central_point(cfg, y);
    KTuple t = label(table, y);
    double cost = 0.0;
    for (const auto& pattern : channel_patterns(cfg.K, kappa)) {
        double mean = 0.0;
        for (int j : pattern) mean += t.values[j];
        mean /= kappa;
        cost += (lambda_c - mean) * (lambda_c - mean);
    }
    return cost;
}

Rat average_cost_exact(const LabelTable& table, int kappa) {
    const auto& cfg = table.config;
    require_kappa(cfg.K, kappa, false);
    Rat ssd_sum(0);
    for (const auto& x : table.entries) ssd_sum += ssd_cost_exact(x);
    return (sd_period_sum(cfg) + ssd_weight(cfg.K, kappa) * ssd_sum) / Rat(cfg.M);
}

double average_cost(const LabelTable& table, int kappa) {
    return to_double(average_cost_exact(table, kappa)) * table.config.zeta * table.config.zeta;
}

Rat brute_force_oracle(const QuantizerConfig& cfg, int kappa, int search_shells,
                       bool relax_centroid) {
    cfg.validate();
    require_kappa(cfg.K, kappa, false);
    if (cfg.K > 4 || cfg.M > 4)
        throw std::invalid_argument("brute_force_oracle: desk scale only (K <= 4, M <= 4)");

    // The assignment on one period extends to all of Z by translation, which
    // carries a tuple of shape X and centroid z to shape X and centroid z + t.
    // Global injectivity therefore requires the chosen shapes to be distinct;
    // the centroid offset is free when the constraint is relaxed.
    std::vector<Rat> shape_ssd;
    for (const auto& x : enumerate_points(cfg.K, cfg.M + search_shells))
        shape_ssd.push_back(ssd_cost_exact(x));
    std::vector<std::int64_t> centroids = relax_centroid
                                              ? std::vector<std::int64_t>{-1, 0, 1}
                                              : std::vector<std::int64_t>{0};
    if (shape_ssd.size() < static_cast<std::size_t>(cfg.M))
        throw std::invalid_argument("brute_force_oracle: fewer candidates than M");

    auto voronoi = discrete_voronoi(cfg, 0);
    Rat w = ssd_weight(cfg.K, kappa);
    Rat best(std::numeric_limits<std::int32_t>::max());
    std::vector<bool> used(shape_ssd.size(), false);
    std::function<void(int, Rat)> assign = [&](int pos, Rat acc) {
        if (acc >= best) return;
        if (pos == cfg.M) {
            best = acc;
            return;
        }
        Rat lambda_c = central_point_exact(cfg.M, voronoi[pos]);
        for (std::size_t c = 0; c < shape_ssd.size(); ++c) {
            if (used[c]) continue;
            used[c] = true;
            for (std::int64_t z : centroids) {
                Rat sd = (lambda_c - Rat(z)) * (lambda_c - Rat(z));
                assign(pos + 1, acc + sd + w * shape_ssd[c]);
            }
            used[c] = false;
        }
    };
    assign(0, Rat(0));
    return best / Rat(cfg.M);
}

std::vector<Rat> balance_check(const LabelTable& table, int kappa) {
    const auto& cfg = table.config;
    require_kappa(cfg.K, kappa, false);
    auto patterns = channel_patterns(cfg.K, kappa);
    std::vector<Rat> costs(patterns.size(), Rat(0));
    // One full period of the permutation structure: V_r(0) .. V_r((K-1)*zeta).
    for (std::int64_t y = table.base(); y < table.base() + cfg.K * cfg.M; ++y) {
        Rat lambda_c = central_point_exact(cfg.M, y);
        auto coords = label_coords(table, y);
        for (std::size_t p = 0; p < patterns.size(); ++p) {
            Rat mean(0);
            for (int j : patterns[p]) mean += side_point_exact(cfg.K, j, coords[j]);
            mean /= Rat(kappa);
            costs[p] += (lambda_c - mean) * (lambda_c - mean);
        }
    }
    return costs;
}

bool shifted_ssd_check(std::int64_t z, const std::vector<std::int64_t>& coords, int K) {
    if (static_cast<int>(coords.size()) != K)
        throw std::invalid_argument("shifted_ssd_check: dimension mismatch");
    std::int64_t sum = 0;
    for (auto c : coords) sum += c;
    if (sum != z)
        throw std::invalid_argument("shifted_ssd_check: centroid constraint violated");

    // Direct route: sum of (lambda_i - zeta*z)^2 in units of zeta^2.
    Rat direct(0);
    for (int i = 0; i < K; ++i) {
        Rat d = side_point_exact(K, i, coords[i]) - Rat(z);
        direct += d * d;
    }
    // Recentered route through J.
    CoordVector recentered{std::vector<std::int64_t>(K)};
    for (int i = 0; i < K; ++i)
        recentered.coords[i] = coords[pos_mod(z + i, K)] - floor_div(z + i, K);
    return recentered.zero_sum() && direct == ssd_cost_exact(recentered);
}

}  // namespace mdq
