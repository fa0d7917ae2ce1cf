#include "xy/two_site_state.hpp"

#include <cmath>

namespace xy {

namespace {

// Clamp spectrum noise: values in [-1e-6, 0) are quadrature dust and go to
// zero; anything below -1e-6 means the inputs were not a density matrix.
double clamp_eigenvalue(double x) {
    if (x < -1e-6)
        throw NotPositive("eigenvalue " + std::to_string(x) +
                          " below -1e-6; correlator input is not positive semidefinite");
    return x < 0.0 ? 0.0 : x;
}

}  // namespace

TwoSiteState TwoSiteState::build(const CorrelatorSet& c) {
    TwoSiteState s;
    s.correlators = c;

    const double d1 = 1.0 + 2.0 * c.sz + c.szz;
    const double d2 = 1.0 - c.szz;
    const double d4 = 1.0 - 2.0 * c.sz + c.szz;
    const double outer = c.sxx - c.syy;
    const double inner = c.sxx + c.syy;

    s.matrix << d1, 0, 0, outer,
                0, d2, inner, 0,
                0, inner, d2, 0,
                outer, 0, 0, d4;
    s.matrix *= 0.25;

    const double r_outer = std::hypot(outer, 2.0 * c.sz);
    s.xi[0] = clamp_eigenvalue(0.25 * (1.0 + c.szz + r_outer));
    s.xi[1] = clamp_eigenvalue(0.25 * (1.0 + c.szz - r_outer));
    s.xi[2] = clamp_eigenvalue(0.25 * (1.0 - c.szz + inner));
    s.xi[3] = clamp_eigenvalue(0.25 * (1.0 - c.szz - inner));
    return s;
}

TwoSiteState TwoSiteState::from_density_matrix(const Matrix4c& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density matrix trace is not 1");

    TwoSiteState s;
    s.matrix = rho;

    // <sigma^k_0 sigma^k_n> and <sigma^z> by direct traces.
    const auto d = rho.diagonal();
    s.correlators.n = 1;
    s.correlators.sz = (d(0) + d(1) - d(2) - d(3)).real();
    s.correlators.szz = (d(0) - d(1) - d(2) + d(3)).real();
    s.correlators.sxx = 2.0 * (rho(0, 3) + rho(1, 2)).real();
    s.correlators.syy = 2.0 * (rho(1, 2) - rho(0, 3)).real();

    Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho);
    for (int i = 0; i < 4; ++i) s.xi[i] = clamp_eigenvalue(es.eigenvalues()(3 - i));
    return s;
}

double binary_entropy(double x) {
    if (x < 0.0) x = 0.0;
    if (x > 1.0) x = 1.0;
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double single_site_entropy(double sz) {
    if (std::abs(sz) > 1.0 + 1e-12)
        throw std::invalid_argument("|<sigma^z>| must not exceed 1");
    return binary_entropy(0.5 * (1.0 + sz));
}

double joint_entropy(const TwoSiteState& s) {
    double h = 0.0;
    for (double x : s.xi)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

}  // namespace xy
