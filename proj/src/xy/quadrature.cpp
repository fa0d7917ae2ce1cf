#include "xy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace xy {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes. Standard constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
};

// One G7/K15 pass over [a, b]; error estimate follows the QUADPACK recipe.
Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fval[15];
    fval[7] = f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fval[i] = f(center - dx);
        fval[14 - i] = f(center + dx);
    }

    double resk = kWgk[7] * fval[7];
    double resg = kWg[3] * fval[7];
    double resabs = kWgk[7] * std::abs(fval[7]);
    for (int i = 0; i < 7; ++i) {
        const double sum = fval[i] + fval[14 - i];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::abs(fval[i]) + std::abs(fval[14 - i]));
        if (i % 2 == 1) resg += kWg[i / 2] * sum;
    }

    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fval[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fval[i] - mean) + std::abs(fval[14 - i] - mean));

    const double habs = std::abs(half);
    resasc *= habs;
    resabs *= habs;

    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(eps * 50.0 * resabs, err);

    return {a, b, resk * half, err};
}

double run(const std::function<double(double)>& f, std::vector<Segment>& segs,
           const QuadratureConfig& cfg) {
    cfg.validate();
    int splits = 0;
    for (;;) {
        double total = 0.0, total_err = 0.0;
        for (const auto& s : segs) {
            total += s.value;
            total_err += s.error;
        }
        if (total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))
            return total;
        if (splits >= cfg.max_subdivisions)
            throw QuadratureFailure(
                "adaptive quadrature did not converge: estimated error " +
                    std::to_string(total_err) + " after " + std::to_string(splits) +
                    " subdivisions",
                total_err);

        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.error < y.error; });
        const double mid = 0.5 * (worst->a + worst->b);
        if (mid <= worst->a || mid >= worst->b)
            throw QuadratureFailure("interval collapsed below floating-point resolution",
                                    total_err);
        const Segment right = gk15(f, mid, worst->b);
        *worst = gk15(f, worst->a, mid);
        segs.push_back(right);
        ++splits;
    }
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
    std::vector<Segment> segs{gk15(f, a, b)};
    return run(f, segs, cfg);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, const QuadratureConfig& cfg) {
    std::vector<double> pts{a};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    std::vector<Segment> segs;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] > pts[i]) segs.push_back(gk15(f, pts[i], pts[i + 1]));
    return run(f, segs, cfg);
}

}  // namespace xy
