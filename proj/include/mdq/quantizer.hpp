#pragma once

#include <cstdint>
#include <vector>

#include "mdq/rational.hpp"

namespace mdq {

/// Geometry of a K-description scalar quantizer: K staggered side quantizers
/// of cell width K*zeta, a reference quantizer zeta*Z and a central quantizer
/// with M points per reference cell.
struct QuantizerConfig {
    int K = 2;          // number of descriptions
    int M = 1;          // central points per reference cell
    double zeta = 1.0;  // reference cell width

    void validate() const;
    int redundancy_index() const { return K * M; }
};

/// Side quantizer point: K*zeta*x + (2i-K+1)*zeta/2.
double side_point(const QuantizerConfig& cfg, int desc, std::int64_t x);

/// Side point in units of zeta, exact.
Rat side_point_exact(int K, int desc, std::int64_t x);

/// Central quantizer point: (zeta/M)*y + (zeta/2M)*mod(M+1,2).
double central_point(const QuantizerConfig& cfg, std::int64_t y);

/// Central point in units of zeta, exact: (2y + [M even]) / 2M.
Rat central_point_exact(int M, std::int64_t y);

/// Nearest central index to v; ties broken toward the smaller index.
std::int64_t quantize_central(const QuantizerConfig& cfg, double v);

/// The M central coordinates strictly closer to zeta*z than to any other
/// reference point: {z*M - floor(M/2), ..., z*M - floor(M/2) + M - 1}.
std::vector<std::int64_t> discrete_voronoi(const QuantizerConfig& cfg, std::int64_t z);

/// Quantizer-tuple gamma(zeta*z): side quantizer identifiers rotated by z.
std::vector<int> quantizer_tuple(int K, std::int64_t z);

}  // namespace mdq
