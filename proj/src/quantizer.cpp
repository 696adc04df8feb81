#include "mdq/quantizer.hpp"

#include <cmath>
#include <stdexcept>

namespace mdq {

void QuantizerConfig::validate() const {
    if (K < 2) throw std::invalid_argument("QuantizerConfig: K must be >= 2");
    if (M < 1) throw std::invalid_argument("QuantizerConfig: M must be >= 1");
    if (!(zeta > 0.0)) throw std::invalid_argument("QuantizerConfig: zeta must be positive");
}

double side_point(const QuantizerConfig& cfg, int desc, std::int64_t x) {
    if (desc < 0 || desc >= cfg.K)
        throw std::invalid_argument("side_point: description index out of range");
    return cfg.K * cfg.zeta * static_cast<double>(x) +
           (2 * desc - cfg.K + 1) * cfg.zeta / 2.0;
}

Rat side_point_exact(int K, int desc, std::int64_t x) {
    if (desc < 0 || desc >= K)
        throw std::invalid_argument("side_point_exact: description index out of range");
    return Rat(2 * K * x + 2 * desc - K + 1, 2);
}

double central_point(const QuantizerConfig& cfg, std::int64_t y) {
    return to_double(central_point_exact(cfg.M, y)) * cfg.zeta;
}

Rat central_point_exact(int M, std::int64_t y) {
    // Offset zeta/(2M) is present only for even M, keeping points off the
    // reference cell boundaries.
    return Rat(2 * y + (M % 2 == 0 ? 1 : 0), 2 * M);
}

std::int64_t quantize_central(const QuantizerConfig& cfg, double v) {
    if (!std::isfinite(v)) throw std::domain_error("quantize_central: non-finite input");
    double offset = (cfg.M % 2 == 0) ? 0.5 : 0.0;
    double u = v * cfg.M / cfg.zeta - offset;
    // ceil(u - 1/2) resolves exact half-way ties toward the smaller index.
    return static_cast<std::int64_t>(std::ceil(u - 0.5));
}

std::vector<std::int64_t> discrete_voronoi(const QuantizerConfig& cfg, std::int64_t z) {
    std::vector<std::int64_t> ys(cfg.M);
    std::int64_t base = z * cfg.M - cfg.M / 2;
    for (int j = 0; j < cfg.M; ++j) ys[j] = base + j;
    return ys;
}

std::vector<int> quantizer_tuple(int K, std::int64_t z) {
    std::vector<int> ids(K);
    for (int j = 0; j < K; ++j) ids[j] = static_cast<int>(pos_mod(z + j, K));
    return ids;
}

}  // namespace mdq
