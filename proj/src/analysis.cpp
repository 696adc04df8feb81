#include "mdq/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mdq/labeling.hpp"

namespace mdq {

namespace {

constexpr double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;

void require_side_kappa(const QuantizerConfig& cfg, int kappa) {
    if (kappa < 1 || kappa >= cfg.K)
        throw std::invalid_argument("side distortion: kappa must be in [1, K-1]");
}

}  // namespace

double rate_from_zeta(double zeta) {
    if (!(zeta > 0.0)) throw std::invalid_argument("rate_from_zeta: zeta must be positive");
    return 0.5 * std::log2(two_pi_e) - std::log2(2.0 * zeta);
}

double zeta_from_rate(double rate) { return 0.5 * std::sqrt(two_pi_e) * std::exp2(-rate); }

double central_distortion(const QuantizerConfig& cfg) {
    cfg.validate();
    return cfg.zeta * cfg.zeta / (12.0 * cfg.M * cfg.M);
}

double side_distortion_exact(const QuantizerConfig& cfg, int kappa) {
    cfg.validate();
    require_side_kappa(cfg, kappa);
    Rat ssd_sum(0);
    for (const auto& x : enumerate_points(cfg.K, cfg.M)) ssd_sum += ssd_cost_exact(x);
    Rat sd = Rat(cfg.M * cfg.M - 1, 12 * cfg.M * cfg.M);
    Rat weighted = Rat(cfg.K - kappa, cfg.K * kappa * (cfg.K - 1)) * ssd_sum / Rat(cfg.M);
    double z2 = cfg.zeta * cfg.zeta;
    return central_distortion(cfg) + to_double(sd + weighted) * z2;
}

double ball_second_moment(int n) {
    if (n < 1) throw std::invalid_argument("ball_second_moment: n must be >= 1");
    // G(S_n) = Gamma(n/2 + 1)^(2/n) / ((n + 2) * pi)
    double g = std::exp(2.0 / n * std::lgamma(n / 2.0 + 1.0));
    return g / ((n + 2) * std::numbers::pi);
}

double side_distortion_sphere(const QuantizerConfig& cfg, int kappa) {
    cfg.validate();
    require_side_kappa(cfg, kappa);
    double K = cfg.K;
    double ratio = ball_second_moment(cfg.K - 1) / ball_second_moment(1);
    double term = K * (K - kappa) / kappa * std::pow(K, 1.0 / (K - 1.0)) * ratio *
                  std::pow(cfg.M, 2.0 / (K - 1.0));
    return cfg.zeta * cfg.zeta / 12.0 * (1.0 + term);
}

ProductReport distortion_products(int K, int M, double rate) {
    QuantizerConfig cfg{K, M, zeta_from_rate(rate)};
    cfg.validate();
    ProductReport report{};
    report.achieved = central_distortion(cfg) *
                      std::pow(side_distortion_exact(cfg, 1), K - 1);
    report.rd_optimum =
        std::pow(K - 1.0, K - 1.0) * std::pow(K, -static_cast<double>(K)) *
        std::exp2(-2.0 * K * rate);
    report.two_desc_form = (K == 2)
                               ? 0.25 * (two_pi_e * two_pi_e / 144.0) * std::exp2(-4.0 * rate)
                               : std::numeric_limits<double>::quiet_NaN();
    return report;
}

double to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace mdq
