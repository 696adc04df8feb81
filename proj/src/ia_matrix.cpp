#include "mdq/ia_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdq {

std::vector<std::int64_t> pattern(int M) {
    if (M < 1) throw std::invalid_argument("pattern: M must be >= 1");
    std::vector<std::int64_t> p;
    std::int64_t m = M;
    p.push_back(0);
    for (std::int64_t i = 1; i <= m - 1; ++i) p.push_back(i * (m - 1));
    p.push_back((m - 1) * (m - 1) + m);
    for (std::int64_t i = 1; i <= m - 1; ++i) p.push_back((m - 1) * (m - 1) + m + i * (m + 1));
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

QuantizationUnit unit(int side, std::int64_t x, int M, std::int64_t anchor) {
    if (side != 0 && side != 1) throw std::invalid_argument("unit: side must be 0 or 1");
    QuantizationUnit u{side, x, pattern(M)};
    std::int64_t shift = 2 * M * x + (side == 1 ? M : 0) + anchor;
    for (auto& member : u.members) member += shift;
    return u;
}

std::int64_t label_anchor(const LabelTable& table) {
    if (table.config.K != 2)
        throw std::invalid_argument("label_anchor: IA matrix is defined for K = 2");
    int M = table.config.M;
    // C_0(0) lies within a few unit widths of the origin; scan a window that
    // safely covers it and locate its smallest member.
    std::int64_t window = 8 * static_cast<std::int64_t>(M) * M + 8 * M + 8;
    std::int64_t found = 0, smallest = 0;
    for (std::int64_t y = -window; y <= window && found < 2 * M; ++y) {
        if (label_coords(table, y)[0] == 0) {
            if (found == 0) smallest = y;
            ++found;
        }
    }
    if (found < 2 * M) throw std::logic_error("label_anchor: unit scan window too small");
    return smallest;
}

std::int64_t default_anchor(int M) {
    QuantizerConfig cfg{2, M, 1.0};
    return label_anchor(build_label_table(cfg));
}

std::int64_t spread(const QuantizationUnit& u) {
    auto [lo, hi] = std::minmax_element(u.members.begin(), u.members.end());
    return *hi - *lo;
}

std::int64_t spread_bound(std::int64_t bandwidth) { return bandwidth * (bandwidth - 1) / 2; }

}  // namespace mdq
