#include "xy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace xy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClamp = 1e-10;

double clamp_measure(double x) { return (x < 0.0 && x > -kClamp) ? 0.0 : x; }

using Vector2c = Eigen::Vector2cd;
using Matrix2c = Eigen::Matrix2cd;

// Entropy of a qubit state given its (possibly unnormalized) 2x2 matrix and
// its trace, via the closed-form eigenvalues.
double qubit_entropy(const Matrix2c& m, double trace) {
    const double half = 0.5 * trace;
    const std::complex<double> det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double disc = std::max(0.0, half * half - det.real());
    const double r = std::sqrt(disc);
    double h = 0.0;
    for (double ev : {half + r, half - r})
        if (ev > 0.0) h -= ev * std::log2(ev);
    return h;
}

}  // namespace

double mutual_information(const TwoSiteState& s) {
    const double value =
        2.0 * single_site_entropy(s.correlators.sz) - joint_entropy(s);
    return std::max(0.0, clamp_measure(value));
}

double conditional_entropy_measured(const TwoSiteState& s, const MeasurementAngles& m) {
    const double c = std::cos(0.5 * m.theta);
    const double t = std::sin(0.5 * m.theta);
    const std::complex<double> e(std::cos(m.phi), std::sin(m.phi));

    const Vector2c par(c, e * t);
    const Vector2c perp(std::conj(e) * t, -c);

    double total = 0.0;
    for (const Vector2c& v : {par, perp}) {
        const Matrix2c proj = v * v.adjoint();
        // Reduced site-0 block of (1 x Pi) rho (1 x Pi): contract the site-n
        // indices of rho with the projector.
        Matrix2c a = Matrix2c::Zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                std::complex<double> acc = 0.0;
                for (int b = 0; b < 2; ++b)
                    for (int bp = 0; bp < 2; ++bp)
                        acc += proj(bp, b) * s.matrix(2 * i + b, 2 * j + bp);
                a(i, j) = acc;
            }
        const double q = a.trace().real();
        if (q <= 0.0) continue;
        total += q * qubit_entropy(a / q, 1.0);
    }
    return total;
}

double classical_correlation_closed(const TwoSiteState& s) {
    const double sz = s.correlators.sz;
    const double sxx = s.correlators.sxx;
    const double p1 = 0.5 * (1.0 + sz);
    const double p2 = 0.5 * (1.0 + std::hypot(sxx, sz));
    return std::max(0.0, clamp_measure(binary_entropy(p1) - binary_entropy(p2)));
}

OptimizedClassical classical_correlation_optimized(const TwoSiteState& s, int n_theta,
                                                   int n_phi, double refine_tol) {
    if (n_theta < 8 || n_phi < 8)
        throw std::invalid_argument("angle grid must be at least 8 x 8");

    auto objective = [&s](double theta, double phi) {
        return conditional_entropy_measured(s, {theta, phi});
    };

    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, best_phi = 0.0;
    bool unique = true;
    for (int i = 0; i < n_theta; ++i) {
        const double theta = kPi * i / (n_theta - 1);
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * kPi * j / n_phi;
            const double v = objective(theta, phi);
            if (v < best - 1e-12) {
                best = v;
                best_theta = theta;
                best_phi = phi;
                unique = true;
            } else if (v < best + 1e-12) {
                unique = false;  // tie within noise; first grid point kept
            }
        }
    }

    // Coordinate descent: golden-section in each angle around the grid cell.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    auto golden = [&](auto f, double lo, double hi) {
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        while (hi - lo > refine_tol) {
            if (f1 < f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo); f1 = f(x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo); f2 = f(x2);
            }
        }
        return 0.5 * (lo + hi);
    };

    const double dt = kPi / (n_theta - 1);
    const double dp = 2.0 * kPi / n_phi;
    for (int pass = 0; pass < 4; ++pass) {
        best_theta = golden([&](double t) { return objective(t, best_phi); },
                            std::max(0.0, best_theta - dt), std::min(kPi, best_theta + dt));
        best_phi = golden([&](double f) { return objective(best_theta, f); },
                          best_phi - dp, best_phi + dp);
        best = objective(best_theta, best_phi);
    }

    best_phi = std::fmod(best_phi + 2.0 * kPi, 2.0 * kPi);

    const double sa = single_site_entropy(s.correlators.sz);
    OptimizedClassical out;
    out.value = std::max(0.0, clamp_measure(sa - best));
    out.angles = {best_theta, best_phi};
    out.unique_minimum = unique;
    return out;
}

double quantum_discord(const TwoSiteState& s) {
    return std::max(0.0,
                    clamp_measure(mutual_information(s) - classical_correlation_closed(s)));
}

double concurrence(const TwoSiteState& s) {
    Matrix4c yy = Matrix4c::Zero();
    yy(0, 3) = -1.0; yy(1, 2) = 1.0; yy(2, 1) = 1.0; yy(3, 0) = -1.0;
    const Matrix4c spin_flipped = yy * s.matrix.conjugate() * yy;
    const Matrix4c product = s.matrix * spin_flipped;

    Eigen::ComplexEigenSolver<Matrix4c> es(product, /*computeEigenvectors=*/false);
    std::array<double, 4> lam;
    for (int i = 0; i < 4; ++i) lam[i] = std::max(0.0, es.eigenvalues()(i).real());
    std::sort(lam.begin(), lam.end(), std::greater<>());

    const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) -
                     std::sqrt(lam[3]);
    return std::max(0.0, c);
}

double concurrence_x_state(const TwoSiteState& s) {
    const auto& r = s.matrix;
    const double anti_outer = std::abs(r(0, 3));
    const double anti_inner = std::abs(r(1, 2));
    const double diag_inner = std::sqrt(std::max(0.0, r(1, 1).real() * r(2, 2).real()));
    const double diag_outer = std::sqrt(std::max(0.0, r(0, 0).real() * r(3, 3).real()));
    return 2.0 * std::max({0.0, anti_outer - diag_inner, anti_inner - diag_outer});
}

double eof_from_concurrence(double conc) {
    conc = std::clamp(conc, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - conc * conc)));
}

double eof(const TwoSiteState& s) { return eof_from_concurrence(concurrence(s)); }

CorrelationReport report(const TwoSiteState& s, bool verify_measurement) {
    CorrelationReport r;
    r.mutual_information = mutual_information(s);
    r.classical = classical_correlation_closed(s);
    r.discord = std::max(0.0, clamp_measure(r.mutual_information - r.classical));
    r.concurrence = concurrence(s);
    r.eof = eof_from_concurrence(r.concurrence);
    if (verify_measurement) {
        r.optimal_angles = classical_correlation_optimized(s).angles;
    } else {
        r.optimal_angles = MeasurementAngles{};
    }
    return r;
}

}  // namespace xy
