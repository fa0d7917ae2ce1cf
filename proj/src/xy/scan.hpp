#pragma once

#include <functional>
#include <vector>

#include "xy/measures.hpp"

namespace xy {

/// Rectangular parameter grid for a sweep. A single-point lambda axis is
/// allowed (steps = 1 with min == max); otherwise steps >= 2.
struct SweepSpec {
    std::vector<double> gamma_values;
    std::vector<double> kt_values;
    std::vector<int> distances;
    double lambda_min = 0.0;
    double lambda_max = 2.0;
    int lambda_steps = 201;
    double derivative_step = 1e-3;

    void validate() const;
    std::vector<double> lambda_grid() const;
};

struct SweepRow {
    ModelParams params;
    int n = 1;
    CorrelatorSet correlators;
    CorrelationReport report;
};

/// Rows ordered lexicographically by (gamma, kT, n, lambda).
using SweepTable = std::vector<SweepRow>;

/// Evaluates every grid point. Rows are computed as independent tasks on
/// `jobs` threads and assembled in grid order, so the table is identical for
/// any jobs value. Failures carry the offending parameter point.
SweepTable sweep(const SweepSpec& spec, const QuadratureConfig& quad, int jobs = 1,
                 GCache* cache = nullptr);

enum class Quantity { discord, classical, mutual };

/// One measure at one parameter point (the derivative integrand).
double quantity_at(Quantity what, double gamma, double lambda, double kT, int n,
                   const QuadratureConfig& quad, GCache* cache = nullptr);

/// Central finite difference of the given order (1 or 2) with one Richardson
/// extrapolation step; four (order 1) or six (order 2) fresh evaluations.
double derivative_wrt_lambda(const std::function<double(double)>& f, double lambda,
                             int order, double step);

struct DerivativePoint {
    double lambda = 0.0;
    double d_discord = 0.0;
    double d_classical = 0.0;
};

/// Derivative of discord and classical correlation over a lambda grid.
/// Throws StepTooLarge when step is not smaller than the grid spacing.
std::vector<DerivativePoint> derivative_series(double gamma, double kT, int n,
                                               const std::vector<double>& lambdas,
                                               int order, double step,
                                               const QuadratureConfig& quad, int jobs = 1,
                                               GCache* cache = nullptr);

struct CriticalPointEstimate {
    double lambda_discord = 0.0;    ///< argmax |dD/dlambda|
    double lambda_classical = 0.0;  ///< argmax |dC/dlambda|
    double peak_discord = 0.0;
    double peak_classical = 0.0;
    bool low_contrast_discord = false;  ///< peak prominence < 2x window median
    bool low_contrast_classical = false;
};

/// Locates the lambda maximizing |d(discord)/dlambda| and
/// |d(classical)/dlambda| inside [lambda_lo, lambda_hi] by grid scan plus
/// golden-section refinement. The window must contain lambda = 1 strictly
/// inside and be at least 10 derivative steps wide.
CriticalPointEstimate locate_critical_point(double gamma, double kT, int n,
                                            double lambda_lo, double lambda_hi,
                                            double step, const QuadratureConfig& quad,
                                            GCache* cache = nullptr, int jobs = 1);

}  // namespace xy
