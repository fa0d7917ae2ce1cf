#pragma once

#include <stdexcept>
#include <string>

namespace xy {

/// Physical parameter point of the anisotropic XY chain in a transverse
/// field. kT == 0 selects the exact zero-temperature limit: the code
/// branches on it and never forms 1/kT.
struct ModelParams {
    double gamma = 1.0;   ///< anisotropy, in [0, 1] (0 = XX, 1 = Ising)
    double lambda = 1.0;  ///< inverse field strength, >= 0
    double kT = 0.0;      ///< temperature, >= 0

    bool zero_temperature() const { return kT == 0.0; }

    void validate() const;
};

/// Controls the adaptive integrator used for the correlator integrals.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;

    void validate() const;
};

class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}
    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

class NotPositive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DistanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class WindowTooNarrow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StepTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateGroundState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void ModelParams::validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1], got " + std::to_string(gamma));
    if (!(lambda >= 0.0))
        throw std::invalid_argument("lambda must be >= 0, got " + std::to_string(lambda));
    if (!(kT >= 0.0))
        throw std::invalid_argument("kT must be >= 0, got " + std::to_string(kT));
}

inline void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be >= 1");
}

}  // namespace xy
