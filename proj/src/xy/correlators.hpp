#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "xy/params.hpp"
#include "xy/quadrature.hpp"

namespace xy {

/// Translation-invariant two-point expectation values at site separation n.
struct CorrelatorSet {
    int n = 1;
    double sz = 0.0;   ///< <sigma^z>
    double sxx = 0.0;  ///< <sigma^x_0 sigma^x_n>
    double syy = 0.0;  ///< <sigma^y_0 sigma^y_n>
    double szz = 0.0;  ///< <sigma^z_0 sigma^z_n>
};

/// Separations beyond this would need structured Toeplitz solvers; the
/// dense LU route is only warranted for small n.
inline constexpr int kMaxSeparation = 50;

/// Quasiparticle energy omega_phi = sqrt((gamma lambda sin phi)^2
/// + (1 + lambda cos phi)^2) / 2, for phi in [0, pi].
double dispersion(double phi, const ModelParams& p);

/// tanh(omega/kT); exactly 1 at kT = 0 for omega > 0, and 0 at the
/// measure-zero point omega = 0.
double thermal_factor(double omega, const ModelParams& p);

/// Concurrent memo for G_n values. Entries are deterministic functions of
/// the key, so duplicated computation under contention is harmless.
class GCache {
public:
    std::optional<double> find(int n, const ModelParams& p, const QuadratureConfig& q) const;
    void insert(int n, const ModelParams& p, const QuadratureConfig& q, double value);
    std::size_t size() const;
    void clear();

private:
    struct Key {
        int n;
        double gamma, lambda, kT, abs_tol, rel_tol;
        auto operator<=>(const Key&) const = default;
    };
    static Key make_key(int n, const ModelParams& p, const QuadratureConfig& q) {
        return {n, p.gamma, p.lambda, p.kT, q.abs_tol, q.rel_tol};
    }
    mutable std::mutex mu_;
    std::map<Key, double> map_;
};

/// <sigma^z> = -integral_0^pi (1 + lambda cos phi) tanh(beta omega) / (2 pi omega) dphi.
double transverse_magnetization(const ModelParams& p, const QuadratureConfig& q);

/// The contraction integral G_n; any integer n. Cached when a cache is given.
double g_function(int n, const ModelParams& p, const QuadratureConfig& q,
                  GCache* cache = nullptr);

/// n x n Toeplitz determinant with entries G_{i-j-1}; n in [1, kMaxSeparation].
double correlator_xx(int n, const ModelParams& p, const QuadratureConfig& q,
                     GCache* cache = nullptr);

/// n x n Toeplitz determinant with entries G_{i-j+1}; n in [1, kMaxSeparation].
double correlator_yy(int n, const ModelParams& p, const QuadratureConfig& q,
                     GCache* cache = nullptr);

/// <sigma^z>^2 - G_n G_{-n}.
double correlator_zz(int n, const ModelParams& p, const QuadratureConfig& q,
                     GCache* cache = nullptr);

/// All four expectation values at separation n, sharing one G evaluation set.
CorrelatorSet correlator_set(int n, const ModelParams& p, const QuadratureConfig& q,
                             GCache* cache = nullptr);

}  // namespace xy
