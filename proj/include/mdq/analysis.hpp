#pragma once

#include "mdq/quantizer.hpp"

namespace mdq {

/// High-rate rate/step-size relation R = (1/2)log2(2*pi*e) - log2(2*zeta).
double rate_from_zeta(double zeta);
double zeta_from_rate(double rate);

/// D_(K,K) = zeta^2 / (12 M^2).
double central_distortion(const QuantizerConfig& cfg);

/// High-rate side distortion from the exact enumerated SSD shells.
double side_distortion_exact(const QuantizerConfig& cfg, int kappa);

/// Sphere approximation of the side distortion.
double side_distortion_sphere(const QuantizerConfig& cfg, int kappa);

/// Normalized second moment of an n-ball, G(S_n).
double ball_second_moment(int n);

struct ProductReport {
    double achieved;        // D_(K,K) * D_(K,1)^(K-1) at zeta_from_rate(R)
    double rd_optimum;      // (K-1)^(K-1) K^-K 2^(-2KR)
    double two_desc_form;   // (1/4)((2*pi*e)^2/144) 2^(-4R); NaN for K != 2
};

ProductReport distortion_products(int K, int M, double rate);

/// 10*log10(x).
double to_db(double x);

}  // namespace mdq
