// sweep.cpp — deterministic parallel grid sweeps and ridge analysis
#include "qrabi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include <Eigen/Dense>

#include "qrabi/errors.hpp"
#include "qrabi/oracle.hpp"

namespace qrabi {

namespace {

SweepRecord solve_grid_point(double delta, double g, SweepMethod method,
                             const SolveOptions& opts) {
    SweepRecord rec;
    rec.delta = delta;
    rec.g = g;
    rec.method = method;
    RabiParams params{delta, g, 1.0};
    rec.lambda = lambda_coupling(params);
    rec.phase = classify_phase(params);
    try {
        if (method == SweepMethod::spectral) {
            PointSolution sol = solve_point(params, opts);
            rec.parity = sol.root.parity;
            rec.x_root = sol.root.x_root;
            rec.energy = sol.root.energy;
            rec.residual = sol.root.residual;
            rec.stats = sol.stats;
            rec.truncation_n = sol.minus.truncation_n;
        } else {
            OracleResult res = oracle_statistics(params, opts.oracle);
            rec.parity = res.parity_expect < 0.0 ? Parity::minus : Parity::plus;
            rec.energy = res.e0;
            rec.x_root = res.e0 + g * g;
            rec.residual = 0.0;
            rec.stats = res.stats;
            rec.truncation_n = res.n_max_used;
        }
    } catch (const Error& e) {
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

double record_field(const SweepRecord& rec, std::string_view name) {
    if (name == "delta") return rec.delta;
    if (name == "g") return rec.g;
    if (name == "lambda") return rec.lambda;
    if (name == "x_root") return rec.x_root;
    if (name == "energy") return rec.energy;
    if (name == "residual") return rec.residual;
    if (name == "mean_n") return rec.stats.mean_n;
    if (name == "var_n") return rec.stats.var_n;
    if (name == "q_excess") return rec.stats.q_excess;
    if (name == "mandel_q")
        return rec.stats.mean_n < 1e-12 ? 0.0 : rec.stats.q_excess / rec.stats.mean_n;
    if (name == "mean_x") return rec.stats.mean_x;
    if (name == "dx") return rec.stats.dx;
    if (name == "dp") return rec.stats.dp;
    if (name == "product") return rec.stats.product;
    if (name == "r") return rec.stats.r;
    if (name == "overlap") return rec.stats.overlap;
    if (name == "cov_xp") return rec.stats.cov_xp;
    if (name == "truncation_n") return rec.truncation_n;
    throw UnknownField("record_field: '" + std::string(name) + "'");
}

const std::vector<std::string>& numeric_field_names() {
    static const std::vector<std::string> names = {
        "delta", "g", "lambda", "x_root", "energy", "residual", "mean_n",
        "var_n", "q_excess", "mandel_q", "mean_x", "dx", "dp", "product",
        "r", "overlap", "cov_xp", "truncation_n"};
    return names;
}

std::vector<SweepRecord> run_sweep(const SweepRange& delta_range, const SweepRange& g_range,
                                   SweepMethod method, const SolveOptions& opts,
                                   int workers) {
    if (!(delta_range.lo > 0.0) || !(g_range.lo > 0.0))
        throw std::invalid_argument("run_sweep: ranges must be positive");
    if (delta_range.steps < 2 || g_range.steps < 2)
        throw std::invalid_argument("run_sweep: steps must be >= 2");

    const int total = delta_range.steps * g_range.steps;
    std::vector<SweepRecord> records(total);

    int n_workers = workers > 0 ? workers
                                : static_cast<int>(std::thread::hardware_concurrency());
    n_workers = std::clamp(n_workers, 1, total);

    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            int di = i / g_range.steps;
            int gi = i % g_range.steps;
            records[i] =
                solve_grid_point(delta_range.value(di), g_range.value(gi), method, opts);
        }
    };
    if (n_workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return records;
}

RidgeExtraction extract_ridge(const std::vector<SweepRecord>& records,
                              std::string_view quantity) {
    // rebuild the rectangular grid from the records
    std::map<double, int> delta_index, g_index;
    for (const auto& r : records) {
        delta_index.emplace(r.delta, 0);
        g_index.emplace(r.g, 0);
    }
    int nd = static_cast<int>(delta_index.size());
    int ng = static_cast<int>(g_index.size());
    if (static_cast<int>(records.size()) != nd * ng)
        throw GridIncomplete("extract_ridge: records do not form a rectangular grid");
    int idx = 0;
    for (auto& [k, v] : delta_index) v = idx++;
    idx = 0;
    for (auto& [k, v] : g_index) v = idx++;

    std::vector<double> deltas(nd), gs(ng);
    for (const auto& [k, v] : delta_index) deltas[v] = k;
    for (const auto& [k, v] : g_index) gs[v] = k;

    std::vector<std::vector<const SweepRecord*>> grid(ng,
                                                      std::vector<const SweepRecord*>(nd));
    for (const auto& r : records)
        grid[g_index[r.g]][delta_index[r.delta]] = &r;

    RidgeExtraction out;
    for (int j = 0; j < ng; ++j) {
        std::vector<std::pair<double, double>> column;  // (delta, value)
        for (int i = 0; i < nd; ++i) {
            const SweepRecord* r = grid[j][i];
            if (r && r->ok()) column.emplace_back(deltas[i], record_field(*r, quantity));
        }
        if (static_cast<int>(column.size()) < 3)
            throw GridIncomplete("extract_ridge: column g = " + std::to_string(gs[j]) +
                                 " has fewer than 3 valid records");
        int imax = 0;
        for (int i = 1; i < static_cast<int>(column.size()); ++i)
            if (column[i].second > column[imax].second) imax = i;
        if (imax == 0 || imax + 1 == static_cast<int>(column.size())) {
            out.excluded_g.push_back(gs[j]);
            continue;
        }
        // vertex of the parabola through the three points around the maximum
        auto [x0, y0] = column[imax - 1];
        auto [x1, y1] = column[imax];
        auto [x2, y2] = column[imax + 1];
        double denom = y0 - 2.0 * y1 + y2;
        double h = 0.5 * (x2 - x0);
        double offset = denom != 0.0 ? 0.5 * (y0 - y2) / denom * h : 0.0;
        out.points.push_back({gs[j], x1 + offset});
    }
    return out;
}

RidgeFit fit_quadratic(const std::vector<RidgePoint>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw DegenerateFit("fit_quadratic: need at least 3 points");

    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        double g = points[i].g;
        design(i, 0) = g * g;
        design(i, 1) = g;
        design(i, 2) = 1.0;
        rhs[i] = points[i].delta_star;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 3)
        throw DegenerateFit("fit_quadratic: design matrix rank " +
                            std::to_string(qr.rank()) + " (collinear g values)");
    Eigen::Vector3d c = qr.solve(rhs);

    RidgeFit fit;
    fit.points = points;
    fit.coeffs = {c[0], c[1], c[2]};
    fit.rms_residual = std::sqrt((design * c - rhs).squaredNorm() / n);
    return fit;
}

}  // namespace qrabi
