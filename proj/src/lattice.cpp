#include "mdq/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mdq {

namespace {

void require_k(int K) {
    if (K < 2) throw std::invalid_argument("lattice: K must be >= 2");
}

// Visits all zero-sum integer vectors with every coordinate in [-box, box].
void for_each_zero_sum(int K, std::int64_t box,
                       const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> x(K);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t partial) {
        if (i == K - 1) {
            std::int64_t last = -partial;
            if (last < -box || last > box) return;
            x[i] = last;
            visit(x);
            return;
        }
        for (std::int64_t v = -box; v <= box; ++v) {
            x[i] = v;
            rec(i + 1, partial + v);
        }
    };
    rec(0, 0);
}

Rat norm_sq_translated(const std::vector<std::int64_t>& x, const std::vector<Rat>& t) {
    Rat n(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rat c = Rat(x[i]) + t[i];
        n += c * c;
    }
    return n;
}

std::vector<ThetaShell> group_shells(const std::map<Rat, std::int64_t>& counts) {
    std::vector<ThetaShell> shells;
    shells.reserve(counts.size());
    for (const auto& [norm, count] : counts) shells.push_back({norm, count});
    return shells;
}

}  // namespace

std::int64_t CoordVector::sum() const {
    return std::accumulate(coords.begin(), coords.end(), std::int64_t{0});
}

std::vector<Rat> translation_vector(int K) {
    require_k(K);
    std::vector<Rat> s(K);
    for (int i = 0; i < K; ++i) s[i] = Rat(2 * i - K + 1, 2 * K);
    return s;
}

Rat shifted_norm_sq(const CoordVector& x) {
    return norm_sq_translated(x.coords, translation_vector(x.k()));
}

Rat ssd_cost_exact(const CoordVector& x) {
    if (!x.zero_sum()) throw std::invalid_argument("ssd_cost: coordinates must sum to zero");
    std::int64_t K = x.k();
    return Rat(K * K) * shifted_norm_sq(x);
}

double ssd_cost(const CoordVector& x, const QuantizerConfig& cfg) {
    cfg.validate();
    if (x.k() != cfg.K) throw std::invalid_argument("ssd_cost: dimension mismatch");
    return to_double(ssd_cost_exact(x)) * cfg.zeta * cfg.zeta;
}

std::vector<CoordVector> enumerate_points(int K, int count) {
    require_k(K);
    if (count < 1) throw std::invalid_argument("enumerate_points: count must be >= 1");
    auto s = translation_vector(K);

    // Iterative box deepening. Any zero-sum point with a coordinate outside
    // [-B, B] has some (x_i + s_i)^2 >= (B + 1/2)^2, so once the count-th
    // smallest norm inside the box falls below that threshold the prefix is
    // complete.
    for (std::int64_t box = 1;; ++box) {
        std::vector<std::pair<Rat, CoordVector>> pts;
        for_each_zero_sum(K, box, [&](const std::vector<std::int64_t>& x) {
            pts.emplace_back(norm_sq_translated(x, s), CoordVector{x});
        });
        std::sort(pts.begin(), pts.end());
        Rat threshold = Rat((2 * box + 1) * (2 * box + 1), 4);
        if (static_cast<int>(pts.size()) >= count && pts[count - 1].first < threshold) {
            std::vector<CoordVector> result;
            result.reserve(count);
            for (int i = 0; i < count; ++i) result.push_back(pts[i].second);
            return result;
        }
    }
}

std::vector<ThetaShell> theta_series(int K, const Rat& max_norm_sq) {
    require_k(K);
    if (!(max_norm_sq > Rat(0)))
        throw std::invalid_argument("theta_series: max_norm_sq must be positive");
    auto s = translation_vector(K);
    std::int64_t box =
        static_cast<std::int64_t>(std::floor(std::sqrt(to_double(max_norm_sq)))) + 2;
    std::map<Rat, std::int64_t> counts;
    for_each_zero_sum(K, box, [&](const std::vector<std::int64_t>& x) {
        Rat n = norm_sq_translated(x, s);
        if (n <= max_norm_sq) ++counts[n];
    });
    return group_shells(counts);
}

std::vector<ThetaShell> dual_hole_theta(int K, const Rat& max_norm_sq) {
    require_k(K);
    if (!(max_norm_sq > Rat(0)))
        throw std::invalid_argument("dual_hole_theta: max_norm_sq must be positive");
    auto s = translation_vector(K);
    std::int64_t box =
        static_cast<std::int64_t>(std::floor(std::sqrt(to_double(max_norm_sq)))) + 3;
    std::map<Rat, std::int64_t> counts;
    for (int g = 0; g < K; ++g) {
        // Glue vector [g]: K-g components g/K followed by g components (g-K)/K.
        std::vector<Rat> t(K);
        for (int j = 0; j < K; ++j)
            t[j] = s[j] + (j < K - g ? Rat(g, K) : Rat(g - K, K));
        for_each_zero_sum(K, box, [&](const std::vector<std::int64_t>& x) {
            Rat n = norm_sq_translated(x, t);
            if (n <= max_norm_sq) ++counts[n];
        });
    }
    return group_shells(counts);
}

}  // namespace mdq
