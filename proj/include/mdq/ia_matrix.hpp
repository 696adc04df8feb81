#pragma once

#include <cstdint>
#include <vector>

#include "mdq/labeling.hpp"

namespace mdq {

/// Fundamental pattern P(M) of the two-description IA matrix: sorted list of
/// the 2M central-coordinate offsets of one quantization unit.
std::vector<std::int64_t> pattern(int M);

struct QuantizationUnit {
    int side = 0;  // 0 or 1
    std::int64_t x = 0;
    std::vector<std::int64_t> members;
};

/// Quantization unit C_side(x): P(M) + 2Mx (+M for side 1), shifted by the
/// global anchor that aligns members with central coordinates.
QuantizationUnit unit(int side, std::int64_t x, int M, std::int64_t anchor);

/// The anchor that makes unit membership coincide with the K=2 labeling,
/// found by scanning the labeling for the members of C_0(0).
std::int64_t label_anchor(const LabelTable& table);
std::int64_t default_anchor(int M);

std::int64_t spread(const QuantizationUnit& u);
std::int64_t spread_bound(std::int64_t bandwidth);

}  // namespace mdq
