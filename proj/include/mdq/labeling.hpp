#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdq/lattice.hpp"
#include "mdq/quantizer.hpp"
#include "mdq/rational.hpp"

namespace mdq {

/// The beta table: entries[i] is the lattice point assigned to the central
/// coordinate y = -floor(M/2) + i inside the fundamental reference cell.
struct LabelTable {
    QuantizerConfig config;
    std::vector<CoordVector> entries;

    std::int64_t base() const { return -(config.M / 2); }
};

/// A labeled K-tuple: side coordinates and the corresponding side points.
struct KTuple {
    std::vector<std::int64_t> coords;  // coords[i] belongs to side quantizer i
    std::vector<double> values;
};

LabelTable build_label_table(const QuantizerConfig& cfg);

/// The labeling function alpha: central index -> K-tuple.
KTuple label(const LabelTable& table, std::int64_t y);

/// Side coordinates only, without evaluating side points.
std::vector<std::int64_t> label_coords(const LabelTable& table, std::int64_t y);

/// Inverse mapping; nullopt when the tuple is not in the image of alpha.
std::optional<std::int64_t> unlabel(const LabelTable& table,
                                    const std::vector<std::int64_t>& coords);

/// B(lambda_c, kappa): cost summed over all kappa-subsets of descriptions.
double tuple_cost(const LabelTable& table, std::int64_t y, int kappa);

/// Closed-form average cost of the assignment over V_r(0) for kappa < K.
double average_cost(const LabelTable& table, int kappa);

/// Same, exact and in units of zeta^2.
Rat average_cost_exact(const LabelTable& table, int kappa);

/// Exhaustive assignment search over candidate centroid-0 tuples (optionally
/// also centroid +-zeta tuples); returns the minimum average cost in units of
/// zeta^2. Desk scale only: K <= 4, M <= 4.
Rat brute_force_oracle(const QuantizerConfig& cfg, int kappa, int search_shells = 6,
                       bool relax_centroid = false);

/// All kappa-subsets of {0..K-1}, lexicographic.
std::vector<std::vector<int>> channel_patterns(int K, int kappa);

/// Per-pattern cost over one full period of K*M central points, exact in
/// units of zeta^2; entries follow channel_patterns(K, kappa) order.
std::vector<Rat> balance_check(const LabelTable& table, int kappa);

/// Verifies that the SSD cost of the tuple with side coordinates `coords`
/// about centroid zeta*z equals J of the recentered lattice point.
bool shifted_ssd_check(std::int64_t z, const std::vector<std::int64_t>& coords, int K);

}  // namespace mdq
