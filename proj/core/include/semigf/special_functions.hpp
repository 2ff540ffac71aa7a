#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace semigf {

// Truncation policy for the generalized hypergeometric series and the
// binomial double series of the outage closed forms.
struct SeriesControl {
    double rel_tolerance = 1e-12;
    int max_terms = 10000;
};

// Thrown when a series fails to reach its tolerance within max_terms, or
// when its terms grow instead of decaying. Callers that have an integral
// form available may catch this and fall back to quadrature.
class SeriesDivergence : public std::runtime_error {
public:
    explicit SeriesDivergence(const std::string& what) : std::runtime_error(what) {}
};

// Gamma function, valid for positive and negative non-integer arguments.
double gamma_fn(double x);

// Lower incomplete gamma gamma(a, x) = int_0^x t^(a-1) e^(-t) dt, a > 0.
// Series for x < a + 1, continued-fraction complement otherwise.
double lower_inc_gamma(double a, double x);

// Upper incomplete gamma Gamma(a, x) = Gamma(a) - gamma(a, x).
double upper_inc_gamma(double a, double x);

// gamma(a, x) - x^a / a, i.e. the expansion of the lower incomplete gamma
// with its leading term removed. Evaluated by series for small x so that
// CDF complements near zero do not cancel. Negative for x > 0.
double lower_inc_gamma_minus_leading(double a, double x);

// First n_terms of gamma(a, x) = sum_n (-1)^n x^(a+n) / (n! (a+n)).
// n_terms = 2 reproduces the two-term high-SNR expansion x^a/a - x^(a+1)/(a+1).
double truncated_gamma_expansion(double a, double x, int n_terms);

// Generalized hypergeometric series pFq(numer; denom; z) summed until
// |term| < rel_tolerance * |sum|. Throws SeriesDivergence when the budget
// is exhausted (|z| >= 1 cases with p = q + 1 diverge and must be reached
// through another representation).
double gen_hypergeometric(std::span<const double> numer, std::span<const double> denom,
                          double z, const SeriesControl& ctrl = {});

// 2F1(1, 1; c; z) for z in [0, 1), c > 0 non-integer near 2. Direct series
// for small z, Gauss connection formula near z = 1.
double hyp2f1_11(double c, double z);

// U(a, t) = 3F2(1, b3, 2-b3; b3+1, 3-b3; -t/a) * theta1 - theta2 with
//   theta1 = -t^b3 / (b3 (2-b3) a^(2-b3)),
//   theta2 = Gamma(2-b3) Gamma(b3-1) / (2 (1-b3) t^(2(1-b3))),
// which equals int_0^inf x^(1-2 b3) gamma(b3-1, a x) gamma(b3, t x) dx.
// The 3F2 series is used for t/a < 1; beyond its radius the same value is
// produced through an equivalent pair of 2F1(1,1;c;.) terms.
double helper_U(double a, double t, double b3);

// M(t, alpha, beta, delta) = int_0^t x^(alpha-1) gamma(beta, delta x) dx.
// Evaluated by the 2F2 closed form when delta*t is small enough for the
// series, and otherwise by the exact incomplete-gamma identity
//   M = t^alpha [gamma(beta, dt) - (dt)^(-alpha) gamma(alpha+beta, dt)] / alpha.
// Requires alpha != 0, beta > 0, alpha + beta > 0.
double helper_M(double t, double alpha_p, double beta_p, double delta_p);

// The 2F2 closed form of M on its own (cross-validation path).
double helper_M_hyp(double t, double alpha_p, double beta_p, double delta_p,
                    const SeriesControl& ctrl = {});

// Chebyshev-Gauss nodes x_s = cos((2s-1)pi/(2S)), weights pi/S, and the
// affine map t_s(x_s, a, b) onto [a, b].
struct QuadratureNodes {
    int order = 0;
    std::vector<double> nodes;       // x_s in (-1, 1)
    std::vector<double> sin_nodes;   // sqrt(1 - x_s^2)
    double weight = 0.0;             // pi / S

    static const QuadratureNodes& cached(int order);
    static QuadratureNodes make(int order);

    double map_to(double a, double b, int s) const {
        return (nodes[static_cast<std::size_t>(s)] + 1.0) * 0.5 * (b - a) + a;
    }
};

// int_a^b f(x) dx ~ sum_s ((b-a) w_s / 2) sqrt(1 - x_s^2) f(t_s(x_s, a, b)).
double cheb_gauss_integrate(const std::function<double(double)>& f, double a, double b,
                            int order = 100);

} // namespace semigf
