#pragma once

#include <array>

#include <Eigen/Dense>

#include "xy/correlators.hpp"

namespace xy {

using Matrix4c = Eigen::Matrix4cd;

/// Reduced density matrix of two sites at separation n, in the product basis
/// {|uu>, |ud>, |du>, |dd>}. Chain states are X-states (only diagonal and
/// anti-diagonal entries nonzero); arbitrary 4x4 density matrices can enter
/// via from_density_matrix so the generic measures are testable on their own.
struct TwoSiteState {
    CorrelatorSet correlators;
    Matrix4c matrix = Matrix4c::Zero();
    std::array<double, 4> xi{};  ///< eigenvalues, tiny negatives clamped to 0

    /// Assembles the X-state for a correlator set and its closed-form
    /// spectrum. Throws NotPositive when an eigenvalue falls below -1e-6,
    /// which signals inconsistent correlator input.
    static TwoSiteState build(const CorrelatorSet& c);

    /// Wraps a raw density matrix (Hermitian, unit trace); the spectrum is
    /// obtained numerically and the correlator fields by taking traces.
    static TwoSiteState from_density_matrix(const Matrix4c& rho);
};

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Entropy of one site, H_bin((1 + sz)/2).
double single_site_entropy(double sz);

/// -sum xi log2 xi over the four eigenvalues.
double joint_entropy(const TwoSiteState& s);

}  // namespace xy
