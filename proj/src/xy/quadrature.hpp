#pragma once

#include <functional>
#include <span>

#include "xy/params.hpp"

namespace xy {

/// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b]. All nodes are
/// interior, so integrands with removable endpoint singularities are safe to
/// pass as-is. Throws QuadratureFailure when the subdivision budget runs out
/// before the requested tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg);

/// Same, with the domain pre-split at the given interior breakpoints
/// (used for integrands with known interior jumps). Points outside (a, b)
/// are ignored.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, const QuadratureConfig& cfg);

}  // namespace xy
