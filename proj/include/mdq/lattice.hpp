#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "mdq/quantizer.hpp"
#include "mdq/rational.hpp"

namespace mdq {

/// A point of the A_{K-1} lattice: K integer coordinates with zero sum.
struct CoordVector {
    std::vector<std::int64_t> coords;

    int k() const { return static_cast<int>(coords.size()); }
    std::int64_t sum() const;
    bool zero_sum() const { return sum() == 0; }

    auto operator<=>(const CoordVector&) const = default;
};

/// The translation s with component i = (2i-K+1)/(2K).
std::vector<Rat> translation_vector(int K);

/// ||X + s||^2, exact.
Rat shifted_norm_sq(const CoordVector& x);

/// SSD cost J(X) = K^2 zeta^2 ||X + s||^2.
double ssd_cost(const CoordVector& x, const QuantizerConfig& cfg);

/// J(X) in units of zeta^2: K^2 ||X + s||^2, exact.
Rat ssd_cost_exact(const CoordVector& x);

/// The `count` lattice points minimizing ||X + s||^2, in non-decreasing norm
/// order, ties broken lexicographically on coordinates.
std::vector<CoordVector> enumerate_points(int K, int count);

struct ThetaShell {
    Rat norm_sq;
    std::int64_t count;

    auto operator<=>(const ThetaShell&) const = default;
};

/// Shells of the translated lattice A_{K-1} + s up to max_norm_sq inclusive.
std::vector<ThetaShell> theta_series(int K, const Rat& max_norm_sq);

/// Shells of the dual lattice translated by s, enumerated through the glue
/// vector decomposition of A*_{K-1}.
std::vector<ThetaShell> dual_hole_theta(int K, const Rat& max_norm_sq);

}  // namespace mdq
