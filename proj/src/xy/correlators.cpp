#include "xy/correlators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace xy {

namespace {

constexpr double kPi = std::numbers::pi;

// tanh(beta omega) / omega with the kT = 0 limit taken symbolically and the
// small-argument series guarding against 0/0 near gapless points.
double thermal_weight(double omega, const ModelParams& p) {
    if (p.zero_temperature()) return omega > 0.0 ? 1.0 / omega : 0.0;
    const double beta_omega = omega / p.kT;
    if (beta_omega < 1e-4) {
        // tanh(x)/x = 1 - x^2/3 + O(x^4), relative error < 1e-16 here
        return (1.0 - beta_omega * beta_omega / 3.0) / p.kT;
    }
    return std::tanh(beta_omega) / omega;
}

// At kT = 0, gamma = 0, lambda > 1 the integrands carry sign(1 + lambda cos phi),
// which jumps at phi* = arccos(-1/lambda). Integrating each side separately
// keeps the adaptive rule on smooth pieces.
std::vector<double> interior_jumps(const ModelParams& p) {
    if (p.zero_temperature() && p.gamma == 0.0 && p.lambda > 1.0)
        return {std::acos(-1.0 / p.lambda)};
    return {};
}

double integrate_correlator(const std::function<double(double)>& f, const ModelParams& p,
                            const QuadratureConfig& q) {
    const auto jumps = interior_jumps(p);
    return integrate(f, 0.0, kPi, jumps, q);
}

double g_integral(int n, const ModelParams& p, const QuadratureConfig& q) {
    auto f = [n, &p](double phi) {
        const double omega = dispersion(phi, p);
        const double a = 1.0 + p.lambda * std::cos(phi);
        const double num =
            std::cos(n * phi) * a - p.gamma * p.lambda * std::sin(n * phi) * std::sin(phi);
        return thermal_weight(omega, p) * num / (2.0 * kPi);
    };
    return integrate_correlator(f, p, q);
}

double toeplitz_determinant(int n, int offset, const ModelParams& p,
                            const QuadratureConfig& q, GCache* cache) {
    if (n < 1) throw std::invalid_argument("separation n must be >= 1");
    if (n > kMaxSeparation)
        throw DistanceTooLarge("separation n = " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(kMaxSeparation));
    if (n == 1) return g_function(offset, p, q, cache);
    Eigen::MatrixXd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = g_function(i - j + offset, p, q, cache);
    return t.partialPivLu().determinant();
}

}  // namespace

double dispersion(double phi, const ModelParams& p) {
    const double sx = p.gamma * p.lambda * std::sin(phi);
    const double cx = 1.0 + p.lambda * std::cos(phi);
    return 0.5 * std::hypot(sx, cx);
}

double thermal_factor(double omega, const ModelParams& p) {
    if (p.zero_temperature()) return omega > 0.0 ? 1.0 : 0.0;
    return std::tanh(omega / p.kT);
}

std::optional<double> GCache::find(int n, const ModelParams& p,
                                   const QuadratureConfig& q) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(make_key(n, p, q));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void GCache::insert(int n, const ModelParams& p, const QuadratureConfig& q, double value) {
    std::lock_guard lock(mu_);
    map_.insert_or_assign(make_key(n, p, q), value);
}

std::size_t GCache::size() const {
    std::lock_guard lock(mu_);
    return map_.size();
}

void GCache::clear() {
    std::lock_guard lock(mu_);
    map_.clear();
}

double transverse_magnetization(const ModelParams& p, const QuadratureConfig& q) {
    p.validate();
    auto f = [&p](double phi) {
        const double omega = dispersion(phi, p);
        const double a = 1.0 + p.lambda * std::cos(phi);
        return thermal_weight(omega, p) * a / (2.0 * kPi);
    };
    return -integrate_correlator(f, p, q);
}

double g_function(int n, const ModelParams& p, const QuadratureConfig& q, GCache* cache) {
    p.validate();
    if (cache)
        if (auto hit = cache->find(n, p, q)) return *hit;
    const double value = g_integral(n, p, q);
    if (cache) cache->insert(n, p, q, value);
    return value;
}

double correlator_xx(int n, const ModelParams& p, const QuadratureConfig& q, GCache* cache) {
    return toeplitz_determinant(n, -1, p, q, cache);
}

double correlator_yy(int n, const ModelParams& p, const QuadratureConfig& q, GCache* cache) {
    return toeplitz_determinant(n, +1, p, q, cache);
}

double correlator_zz(int n, const ModelParams& p, const QuadratureConfig& q, GCache* cache) {
    if (n < 1) throw std::invalid_argument("separation n must be >= 1");
    const double sz = transverse_magnetization(p, q);
    return sz * sz - g_function(n, p, q, cache) * g_function(-n, p, q, cache);
}

CorrelatorSet correlator_set(int n, const ModelParams& p, const QuadratureConfig& q,
                             GCache* cache) {
    GCache local;
    GCache* c = cache ? cache : &local;
    CorrelatorSet out;
    out.n = n;
    out.sxx = correlator_xx(n, p, q, c);
    out.syy = correlator_yy(n, p, q, c);
    out.sz = -g_function(0, p, q, c);
    out.szz = out.sz * out.sz - g_function(n, p, q, c) * g_function(-n, p, q, c);
    return out;
}

}  // namespace xy
