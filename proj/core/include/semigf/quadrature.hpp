#pragma once

#include <functional>
#include <vector>

namespace semigf {

// Adaptive Gauss-Kronrod 15(7) integration. Splits the worst interval until
// the summed error estimate meets max(abs_tol, rel_tol * |integral|) or the
// interval budget runs out. Deterministic for a given integrand.
struct AdaptiveQuadOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-10;
    int max_intervals = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const AdaptiveQuadOptions& opt = {});

// Same, but with interior breakpoints inserted up front (multi-scale
// integrands whose mass sits orders of magnitude below the interval width).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breakpoints,
                              const AdaptiveQuadOptions& opt = {});

// Integral over (a, inf) through x = a + scale * u / (1 - u).
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double scale, const AdaptiveQuadOptions& opt = {});

} // namespace semigf
