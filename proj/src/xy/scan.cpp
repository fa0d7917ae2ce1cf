#include "xy/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace xy {

namespace {

// Runs tasks 0..count-1 on `jobs` threads; the first failure is rethrown on
// the calling thread after all workers join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = static_cast<int>(std::min<std::size_t>(jobs, count));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::string point_tag(const ModelParams& p, int n) {
    return "gamma=" + std::to_string(p.gamma) + " lambda=" + std::to_string(p.lambda) +
           " kT=" + std::to_string(p.kT) + " n=" + std::to_string(n);
}

}  // namespace

void SweepSpec::validate() const {
    if (gamma_values.empty() || kt_values.empty() || distances.empty())
        throw std::invalid_argument("sweep axes must be non-empty");
    for (double g : gamma_values) ModelParams{g, 0.0, 0.0}.validate();
    for (double t : kt_values) ModelParams{0.0, 0.0, t}.validate();
    for (int n : distances)
        if (n < 1) throw std::invalid_argument("distances must be >= 1");
    if (!(lambda_min >= 0.0)) throw std::invalid_argument("lambda_min must be >= 0");
    if (!(lambda_max >= lambda_min))
        throw std::invalid_argument("lambda_max must be >= lambda_min");
    if (lambda_steps < 1) throw std::invalid_argument("lambda_steps must be >= 1");
    if (lambda_steps == 1 && lambda_max != lambda_min)
        throw std::invalid_argument("a lambda range needs at least 2 steps");
    if (!(derivative_step > 0.0))
        throw std::invalid_argument("derivative_step must be positive");
}

std::vector<double> SweepSpec::lambda_grid() const {
    std::vector<double> grid(lambda_steps);
    if (lambda_steps == 1) {
        grid[0] = lambda_min;
        return grid;
    }
    const double d = (lambda_max - lambda_min) / (lambda_steps - 1);
    for (int i = 0; i < lambda_steps; ++i) grid[i] = lambda_min + d * i;
    grid.back() = lambda_max;
    return grid;
}

SweepTable sweep(const SweepSpec& spec, const QuadratureConfig& quad, int jobs,
                 GCache* cache) {
    spec.validate();
    quad.validate();

    GCache local;
    GCache* c = cache ? cache : &local;

    const auto lambdas = spec.lambda_grid();
    SweepTable table;
    for (double gamma : spec.gamma_values)
        for (double kt : spec.kt_values)
            for (int n : spec.distances)
                for (double lambda : lambdas) {
                    SweepRow row;
                    row.params = {gamma, lambda, kt};
                    row.n = n;
                    table.push_back(row);
                }

    parallel_for(table.size(), jobs, [&](std::size_t i) {
        SweepRow& row = table[i];
        try {
            row.correlators = correlator_set(row.n, row.params, quad, c);
            row.report = report(TwoSiteState::build(row.correlators));
        } catch (const QuadratureFailure& e) {
            throw QuadratureFailure(std::string(e.what()) + " at " +
                                        point_tag(row.params, row.n),
                                    e.achieved_error());
        }
    });
    return table;
}

double quantity_at(Quantity what, double gamma, double lambda, double kT, int n,
                   const QuadratureConfig& quad, GCache* cache) {
    const ModelParams p{gamma, lambda, kT};
    const auto r = report(TwoSiteState::build(correlator_set(n, p, quad, cache)));
    switch (what) {
        case Quantity::discord: return r.discord;
        case Quantity::classical: return r.classical;
        case Quantity::mutual: return r.mutual_information;
    }
    throw std::invalid_argument("unknown quantity");
}

double derivative_wrt_lambda(const std::function<double(double)>& f, double lambda,
                             int order, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("derivative step must be positive");
    const double h = step, h2 = 0.5 * step;
    if (order == 1) {
        const double coarse = (f(lambda + h) - f(lambda - h)) / (2.0 * h);
        const double fine = (f(lambda + h2) - f(lambda - h2)) / (2.0 * h2);
        return (4.0 * fine - coarse) / 3.0;
    }
    if (order == 2) {
        const double fc = f(lambda);
        const double coarse = (f(lambda + h) - 2.0 * fc + f(lambda - h)) / (h * h);
        const double fine = (f(lambda + h2) - 2.0 * fc + f(lambda - h2)) / (h2 * h2);
        return (4.0 * fine - coarse) / 3.0;
    }
    throw std::invalid_argument("derivative order must be 1 or 2");
}

std::vector<DerivativePoint> derivative_series(double gamma, double kT, int n,
                                               const std::vector<double>& lambdas,
                                               int order, double step,
                                               const QuadratureConfig& quad, int jobs,
                                               GCache* cache) {
    if (lambdas.size() >= 2) {
        double spacing = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < lambdas.size(); ++i)
            spacing = std::min(spacing, std::abs(lambdas[i + 1] - lambdas[i]));
        if (step >= spacing)
            throw StepTooLarge("derivative step " + std::to_string(step) +
                               " must be smaller than the grid spacing " +
                               std::to_string(spacing));
    }
    GCache local;
    GCache* c = cache ? cache : &local;

    std::vector<DerivativePoint> out(lambdas.size());
    parallel_for(lambdas.size(), jobs, [&](std::size_t i) {
        auto fd = [&](double x) { return quantity_at(Quantity::discord, gamma, x, kT, n, quad, c); };
        auto fc = [&](double x) { return quantity_at(Quantity::classical, gamma, x, kT, n, quad, c); };
        out[i].lambda = lambdas[i];
        out[i].d_discord = derivative_wrt_lambda(fd, lambdas[i], order, step);
        out[i].d_classical = derivative_wrt_lambda(fc, lambdas[i], order, step);
    });
    return out;
}

CriticalPointEstimate locate_critical_point(double gamma, double kT, int n,
                                            double lambda_lo, double lambda_hi,
                                            double step, const QuadratureConfig& quad,
                                            GCache* cache, int jobs) {
    if (!(lambda_lo < 1.0 && 1.0 < lambda_hi))
        throw std::invalid_argument("the window must contain lambda = 1 strictly inside");
    if (!(lambda_hi - lambda_lo >= 10.0 * step))
        throw WindowTooNarrow("window [" + std::to_string(lambda_lo) + ", " +
                              std::to_string(lambda_hi) +
                              "] is narrower than 10 derivative steps");

    GCache local;
    GCache* c = cache ? cache : &local;

    constexpr int kScanPoints = 81;
    std::vector<double> grid(kScanPoints);
    const double d = (lambda_hi - lambda_lo) / (kScanPoints - 1);
    for (int i = 0; i < kScanPoints; ++i) grid[i] = lambda_lo + d * i;

    const auto series = derivative_series(gamma, kT, n, grid, 1, step, quad, jobs, c);

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    CriticalPointEstimate est;
    for (int pass = 0; pass < 2; ++pass) {
        const bool discord_pass = pass == 0;
        auto f = [&](double lambda) {
            auto q = [&](double x) {
                return quantity_at(discord_pass ? Quantity::discord : Quantity::classical,
                                   gamma, x, kT, n, quad, c);
            };
            return std::abs(derivative_wrt_lambda(q, lambda, 1, step));
        };

        std::vector<double> mag(kScanPoints);
        for (int i = 0; i < kScanPoints; ++i)
            mag[i] = std::abs(discord_pass ? series[i].d_discord : series[i].d_classical);
        const int imax =
            static_cast<int>(std::max_element(mag.begin(), mag.end()) - mag.begin());

        // Golden-section maximization inside the bracketing grid cells.
        double lo = grid[std::max(0, imax - 1)];
        double hi = grid[std::min(kScanPoints - 1, imax + 1)];
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        while (hi - lo > 1e-4) {
            if (f1 > f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo); f1 = f(x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo); f2 = f(x2);
            }
        }
        const double lambda_star = 0.5 * (lo + hi);
        const double peak = f(lambda_star);

        std::vector<double> sorted = mag;
        std::sort(sorted.begin(), sorted.end());
        const double median = sorted[sorted.size() / 2];
        const bool low_contrast = peak < 2.0 * median;

        if (discord_pass) {
            est.lambda_discord = lambda_star;
            est.peak_discord = peak;
            est.low_contrast_discord = low_contrast;
        } else {
            est.lambda_classical = lambda_star;
            est.peak_classical = peak;
            est.low_contrast_classical = low_contrast;
        }
    }
    return est;
}

}  // namespace xy
