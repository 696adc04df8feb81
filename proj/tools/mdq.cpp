// Command line front end: quantizer geometry dumps, index assignment tables,
// theta series, rate-distortion curves and Monte Carlo runs.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "mdq/analysis.hpp"
#include "mdq/ia_matrix.hpp"
#include "mdq/labeling.hpp"
#include "mdq/lattice.hpp"
#include "mdq/sim.hpp"

using namespace mdq;

namespace {

void cmd_theta(int K, const std::string& max_norm, bool dual) {
    Rat max = parse_rat(max_norm);
    auto shells = dual ? dual_hole_theta(K, max) : theta_series(K, max);
    std::printf("norm_sq,count\n");
    for (const auto& shell : shells)
        std::printf("%s,%lld\n", format_rat(shell.norm_sq).c_str(),
                    static_cast<long long>(shell.count));
}

void cmd_geometry(const QuantizerConfig& cfg, double window) {
    cfg.validate();
    std::printf("kind,index,value\n");
    for (std::int64_t z = static_cast<std::int64_t>(std::floor(-window / cfg.zeta)) - 1;
         z * cfg.zeta <= window; ++z)
        if (std::abs(z * cfg.zeta) <= window)
            std::printf("reference,%lld,%.12g\n", static_cast<long long>(z), z * cfg.zeta);
    for (std::int64_t y = quantize_central(cfg, -window) - 1;; ++y) {
        double v = central_point(cfg, y);
        if (v > window) break;
        if (v >= -window) std::printf("central,%lld,%.12g\n", static_cast<long long>(y), v);
    }
    for (int i = 0; i < cfg.K; ++i) {
        double step = cfg.K * cfg.zeta;
        for (std::int64_t x = static_cast<std::int64_t>(std::floor(-window / step)) - 1;
             ; ++x) {
            double v = side_point(cfg, i, x);
            if (v > window) break;
            if (v >= -window)
                std::printf("side%d,%lld,%.12g\n", i, static_cast<long long>(x), v);
        }
    }
}

void cmd_ia(const QuantizerConfig& cfg, std::int64_t window) {
    auto table = build_label_table(cfg);
    std::printf("y");
    for (int i = 0; i < cfg.K; ++i) std::printf(",x_%d", i);
    std::printf(",centroid_z\n");
    for (std::int64_t y = -window; y <= window; ++y) {
        auto coords = label_coords(table, y);
        std::printf("%lld", static_cast<long long>(y));
        for (auto c : coords) std::printf(",%lld", static_cast<long long>(c));
        std::printf(",%lld\n", static_cast<long long>(floor_div(y + cfg.M / 2, cfg.M)));
    }
}

void cmd_matrix(int M, int rows, int cols, bool csv) {
    QuantizerConfig cfg{2, M, 1.0};
    auto table = build_label_table(cfg);
    std::int64_t row0 = -rows / 2, col0 = -cols / 2;
    // entries[x1 - row0][x0 - col0]
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> cells;
    std::int64_t span = 4 * static_cast<std::int64_t>(M) *
                        (std::max(rows, cols) + 2 * M + 2);
    for (std::int64_t y = -span; y <= span; ++y) {
        auto c = label_coords(table, y);
        if (c[0] >= col0 && c[0] < col0 + cols && c[1] >= row0 && c[1] < row0 + rows)
            cells[{c[1], c[0]}] = y;
    }
    if (csv) {
        std::printf("x_1\\x_0");
        for (std::int64_t x0 = col0; x0 < col0 + cols; ++x0)
            std::printf(",%lld", static_cast<long long>(x0));
        std::printf("\n");
        for (std::int64_t x1 = row0; x1 < row0 + rows; ++x1) {
            std::printf("%lld", static_cast<long long>(x1));
            for (std::int64_t x0 = col0; x0 < col0 + cols; ++x0) {
                auto it = cells.find({x1, x0});
                if (it != cells.end())
                    std::printf(",%lld", static_cast<long long>(it->second));
                else
                    std::printf(",");
            }
            std::printf("\n");
        }
        return;
    }
    std::printf("%8s", "x_1\\x_0");
    for (std::int64_t x0 = col0; x0 < col0 + cols; ++x0)
        std::printf("%7lld", static_cast<long long>(x0));
    std::printf("\n");
    for (std::int64_t x1 = row0; x1 < row0 + rows; ++x1) {
        std::printf("%8lld", static_cast<long long>(x1));
        for (std::int64_t x0 = col0; x0 < col0 + cols; ++x0) {
            auto it = cells.find({x1, x0});
            if (it != cells.end())
                std::printf("%7lld", static_cast<long long>(it->second));
            else
                std::printf("%7s", ".");
        }
        std::printf("\n");
    }
}

void cmd_curve(int K, double rate, int m_max, bool baseline) {
    double zeta = zeta_from_rate(rate);
    std::printf("M,D_central_dB,D_side1_dB,D_side1_sphere_dB%s\n",
                baseline ? ",baseline_D_side1_dB" : "");
    for (int M = 1; M <= m_max; ++M) {
        QuantizerConfig cfg{K, M, zeta};
        std::printf("%d,%.6f,%.6f,%.6f", M, to_db(central_distortion(cfg)),
                    to_db(side_distortion_exact(cfg, 1)),
                    to_db(side_distortion_sphere(cfg, 1)));
        if (baseline) std::printf(",%.6f", to_db(baseline_side_distortion(cfg, 1)));
        std::printf("\n");
    }
}

void cmd_simulate(const SimConfig& sc) {
    auto report = run(sc);
    nlohmann::json j;
    j["config"] = {{"k", sc.quantizer.K},
                   {"m", sc.quantizer.M},
                   {"zeta", sc.quantizer.zeta},
                   {"rate", rate_from_zeta(sc.quantizer.zeta)},
                   {"samples", sc.samples},
                   {"seed", sc.seed},
                   {"scheme", sc.scheme == Scheme::staggered ? "staggered" : "baseline"}};
    j["samples"] = report.samples;
    j["central_mse"] = report.central_mse;
    for (int kappa = 1; kappa < sc.quantizer.K; ++kappa) {
        nlohmann::json patterns = nlohmann::json::array();
        for (const auto& stat : report.pattern_stats[kappa - 1])
            patterns.push_back({{"pattern", stat.pattern},
                                {"mse", stat.mse},
                                {"std_error", stat.std_error}});
        j["side"][std::to_string(kappa)] = {
            {"mse", report.side_mse_by_kappa[kappa - 1]}, {"patterns", patterns}};
    }
    j["entropy_bits"] = report.entropy_bits;
    std::cout << j.dump(2) << "\n";
}

void cmd_compare(int K, double rate, int m_max, std::int64_t samples, std::uint64_t seed) {
    auto points = compare(K, rate, m_max, samples, seed);
    std::printf("M,D_KK_dB,D_K1_staggered_dB,D_K1_baseline_dB,D_K1_sphere_dB,D_K1_rdopt_dB%s\n",
                samples > 0 ? ",D_K1_empirical_dB" : "");
    for (const auto& pt : points) {
        std::printf("%d,%.6f,%.6f,%.6f,%.6f,%.6f", pt.M, pt.central_db,
                    pt.side_staggered_db, pt.side_baseline_db, pt.side_sphere_db,
                    pt.side_rdopt_db);
        if (pt.side_empirical_db) std::printf(",%.6f", *pt.side_empirical_db);
        std::printf("\n");
    }
}

// Fills in options the command line left unset from a key=value file;
// flags given on the command line win.
void apply_config(CLI::App* sub, const std::string& path) {
    CLI::ConfigTOML fmt;
    for (const auto& item : fmt.from_file(path)) {
        if (!item.parents.empty() &&
            !(item.parents.size() == 1 && item.parents.front() == sub->get_name()))
            continue;
        auto* opt = sub->get_option_no_throw("--" + item.name);
        if (opt == nullptr || opt->count() > 0) continue;
        for (const auto& value : item.inputs) opt->add_result(value);
        opt->run_callback();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-description scalar quantization with lattice index assignment"};
    app.require_subcommand(1);

    int k = 2, m = 1, m_max = 7, rows = 8, cols = 8;
    double zeta = 1.0, window = 4.0, rate = 4.0;
    std::int64_t iwindow = 16, samples = 1000000, cmp_samples = 0;
    std::uint64_t seed = 0;
    std::string max_norm = "10", scheme = "staggered";
    bool dual = false, csv = false, baseline = false;

    auto* theta = app.add_subcommand("theta", "theta series shells as CSV");
    theta->add_option("--k", k, "number of descriptions")->check(CLI::Range(2, 8));
    theta->add_option("--max-norm", max_norm, "largest squared norm, e.g. 4 or 9/8");
    theta->add_flag("--dual", dual, "translated dual lattice instead");

    auto* geometry = app.add_subcommand("geometry", "quantizer points in a window as CSV");
    geometry->add_option("--k", k)->check(CLI::Range(2, 8));
    geometry->add_option("--m", m)->check(CLI::PositiveNumber);
    geometry->add_option("--zeta", zeta)->check(CLI::PositiveNumber);
    geometry->add_option("--window", window)->check(CLI::PositiveNumber);

    auto* ia = app.add_subcommand("ia", "index assignment table as CSV");
    ia->add_option("--k", k)->check(CLI::Range(2, 8));
    ia->add_option("--m", m)->check(CLI::PositiveNumber);
    ia->add_option("--window", iwindow, "central coordinate range [-N, N]");

    auto* matrix = app.add_subcommand("matrix", "two-description IA matrix");
    matrix->add_option("--m", m)->check(CLI::PositiveNumber);
    matrix->add_option("--rows", rows)->check(CLI::PositiveNumber);
    matrix->add_option("--cols", cols)->check(CLI::PositiveNumber);
    matrix->add_flag("--csv", csv, "CSV instead of aligned text");

    auto* curve = app.add_subcommand("curve", "analytic distortion curves over M");
    curve->add_option("--k", k)->check(CLI::Range(2, 8));
    curve->add_option("--r", rate, "per-description rate in bits");
    curve->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
    curve->add_flag("--baseline", baseline, "include the non-staggered baseline");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run, JSON report");
    simulate->add_option("--k", k)->check(CLI::Range(2, 8));
    simulate->add_option("--m", m)->check(CLI::PositiveNumber);
    simulate->add_option("--rate", rate, "per-description rate in bits");
    simulate->add_option("--samples", samples)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed);
    simulate->add_option("--scheme", scheme)
        ->check(CLI::IsMember({"staggered", "baseline"}));

    auto* cmp = app.add_subcommand("compare", "staggered vs baseline sweep as CSV");
    cmp->add_option("--k", k)->check(CLI::Range(2, 8));
    cmp->add_option("--rate", rate, "per-description rate in bits");
    cmp->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
    cmp->add_option("--samples", cmp_samples,
                    "Monte Carlo samples per point (0 = analytic only)");
    cmp->add_option("--seed", seed);

    std::string config_path;
    for (auto* sub : {theta, geometry, ia, matrix, curve, simulate, cmp})
        sub->add_option("--config", config_path, "key=value file supplying any flag");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty())
            for (auto* sub : app.get_subcommands()) apply_config(sub, config_path);
        if (theta->parsed()) cmd_theta(k, max_norm, dual);
        if (geometry->parsed()) cmd_geometry(QuantizerConfig{k, m, zeta}, window);
        if (ia->parsed()) cmd_ia(QuantizerConfig{k, m, 1.0}, iwindow);
        if (matrix->parsed()) cmd_matrix(m, rows, cols, csv);
        if (curve->parsed()) cmd_curve(k, rate, m_max, baseline);
        if (simulate->parsed())
            cmd_simulate(SimConfig{QuantizerConfig{k, m, zeta_from_rate(rate)}, samples,
                                   seed,
                                   scheme == "baseline" ? Scheme::baseline
                                                        : Scheme::staggered});
        if (cmp->parsed()) cmd_compare(k, rate, m_max, cmp_samples, seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
