#pragma once

#include "xy/two_site_state.hpp"

namespace xy {

/// Bloch angles of the projective measurement basis on site n:
/// |par> = cos(theta/2)|u> + e^{i phi} sin(theta/2)|d>, plus its complement.
struct MeasurementAngles {
    double theta = 1.5707963267948966;  // pi/2
    double phi = 0.0;
};

struct OptimizedClassical {
    double value = 0.0;
    MeasurementAngles angles;
    bool unique_minimum = true;  ///< false when several grid points tie at the minimum
};

struct CorrelationReport {
    double mutual_information = 0.0;
    double classical = 0.0;
    double discord = 0.0;
    double concurrence = 0.0;
    double eof = 0.0;
    MeasurementAngles optimal_angles;
};

/// Total correlation: 2 S(rho_site) - S(rho_pair), clamped at 0.
double mutual_information(const TwoSiteState& s);

/// sum_j q_j S(rho_A^j) for the projective measurement {Pi_j} on site n.
double conditional_entropy_measured(const TwoSiteState& s, const MeasurementAngles& m);

/// Closed form: H_bin(p1) - H_bin(p2), p1 = (1+sz)/2,
/// p2 = (1 + sqrt(sxx^2 + sz^2))/2. Valid for the chain's X-states, where the
/// optimal measurement is theta = pi/2, phi = 0.
double classical_correlation_closed(const TwoSiteState& s);

/// Brute-force route: minimizes the measured conditional entropy over an
/// angle grid, then refines by coordinate descent to refine_tol in angle.
/// This is the independent check of the closed form. Deterministic: grid
/// argmin ties break lexicographically on (theta, phi).
OptimizedClassical classical_correlation_optimized(const TwoSiteState& s, int n_theta = 64,
                                                   int n_phi = 128,
                                                   double refine_tol = 1e-8);

/// I - C (closed form), clamped at 0.
double quantum_discord(const TwoSiteState& s);

/// Wootters concurrence via the eigenvalues of rho (sy x sy) rho* (sy x sy).
double concurrence(const TwoSiteState& s);

/// X-state closed form, kept as an independent cross-check of concurrence().
double concurrence_x_state(const TwoSiteState& s);

double eof_from_concurrence(double conc);

/// Entanglement of formation, H_bin((1 + sqrt(1 - conc^2))/2).
double eof(const TwoSiteState& s);

/// All measures for one state. With verify_measurement the classical
/// correlation is recomputed by the optimizer and its angles reported;
/// otherwise the angles are the known optimum (pi/2, 0).
CorrelationReport report(const TwoSiteState& s, bool verify_measurement = false);

}  // namespace xy
