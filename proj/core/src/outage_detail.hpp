#pragma once

// Shared machinery for the two outage scenarios. Under the dynamic protocol
// the two scenarios are mirror images: the near (first-decoded) user sees the
// far user as interference, and the admission test compares the same pair of
// received powers. Everything here is written in near/far role terms; the
// scenario modules bind the roles and own the protocol-specific pieces.

#include <algorithm>
#include <cmath>
#include <functional>

#include "semigf/outage_common.hpp"

namespace semigf::detail {

struct RolePair {
    const UserCoeffs* nu;   // near user (decoded first, suffers interference)
    const UserCoeffs* fu;   // far user (decoded last, clean after SIC)
    double b3 = 0.0;
    double s = 0.0;         // b3 - 1 = 2/alpha
    double rho_n = 0.0, rho_f = 0.0;
    double gamma_n = 0.0, gamma_f = 0.0;
    double c_pair = 0.0;        // C1 in Scenario I, C2 in Scenario II
    double near_slope = 0.0;    // F_near(z) ~ near_slope * z as z -> 0
    double far_slope = 0.0;     // F_far(x) ~ far_slope * x as x -> 0

    // interference-limited outage boundary of the near user, gamma_n < 1 only
    double sigma_near() const { return gamma_n / (rho_f * (1.0 - gamma_n)); }
    // far user's own post-SIC outage bound
    double sigma_far() const { return gamma_f / rho_f; }
    // near user's own outage bound divided by rho_n
    double sigma_own() const { return gamma_n / rho_n; }

    double upper(double x) const { return gamma_n * (rho_f * x + 1.0) / rho_n; }
    double lower(double x) const { return rho_f * x / rho_n; }

    double f_far(double x) const { return pdf_gain(Region::Far, *fu, b3, x); }
    double F_far(double x) const { return cdf_gain_gamma(Region::Far, *fu, b3, x); }
    double F_near(double z) const { return cdf_gain_gamma(Region::Near, *nu, b3, z); }
    double Fbar_near(double z) const { return cdf_gain_gamma_compl(Region::Near, *nu, b3, z); }
    double F_near_of_far_user(double z) const { return cdf_gain_gamma(Region::Near, *fu, b3, z); }

    // the far density is exponentially dead beyond this point
    double mass_cut() const { return 60.0 / fu->b21; }
};

RolePair make_role_pair(const DerivedCoefficients& d, Scenario sc);

// Decade splits covering the far-density mass scales, for the exact-mode
// integrator.
std::vector<double> density_breakpoints(const RolePair& p, double lo, double hi);

// --- exact-mode kernels (adaptive Gauss-Kronrod over the defining integrals)

// int_lo^hi [F_near(upper(x)) - F_near(lower(x))] f_far(x) dx, hi may be inf
double exact_first_user(const RolePair& p, double lo, double hi, const AnalyticOptions& opt);
// int_lo^hi Fbar_near(upper(x)) f_far(x) dx
double exact_fbar_upper(const RolePair& p, double lo, double hi, const AnalyticOptions& opt);
// int_lo^hi Fbar_near(lower(x)) f_far(x) dx
double exact_fbar_lower(const RolePair& p, double lo, double hi, const AnalyticOptions& opt);
// int_lo^hi F_near(upper(x)) f_far(x) dx
double exact_f_upper(const RolePair& p, double lo, double hi, const AnalyticOptions& opt);
// int_max(lo,0)^inf [F_near(upper) - F_near(tau)] f_far dx, open-loop far-admission form
double exact_band_above(const RolePair& p, double lo, double tau, const AnalyticOptions& opt);

// --- closed-form kernels

// int_a^b Fbar_near(upper(x)) f_far(x) dx by Chebyshev-Gauss nodes
double quad_fbar_upper(const RolePair& p, double a, double b, int order);
// int_a^b Fbar_near(lower(x)) f_far(x) dx
double quad_fbar_lower(const RolePair& p, double a, double b, int order);
// int_a^b F_near(upper(x)) f_far(x) dx, both CDF forms of the near user
enum class NearCdfForm { Gamma, Hypergeometric };
double quad_f_upper(const RolePair& p, double a, double b, int order, NearCdfForm form);

// int_0^inf Fbar_near(kappa x) f_far(x) dx = c_pair kappa^-s [U(b21n k, b22f) - U(b21n k, b21f)]
double closed_fbar_linear(const RolePair& p, double kappa);

// int_0^sigma Fbar_near(upper(x)) f_far(x) dx by the incomplete-gamma expansion
// and binomial double series; sigma = +inf allowed. Throws SeriesDivergence on
// non-decay (ratio gamma_n rho_f b21n / (rho_n b21f) >= 1 in the infinite case).
double series_fbar_upper(const RolePair& p, double sigma, const SeriesControl& ctrl,
                         int* terms_used);

// --- high-SNR helpers

// E[g_far] and M-differences against the far density
double far_moment1(const RolePair& p);
double m_delta(const RolePair& p, double y, double ap);

// linearized open-loop ceiling: Upsilon [rho_f b12f MD(y) + F_far(y)]
double p_inf_openloop(const RolePair& p, double y);
// its y -> inf limit
double p_inf_openloop_limit(const RolePair& p);
// Q4(y) = F_far(y) - p_inf_openloop(y)
double q4(const RolePair& p, double y);

// first-decoded user's asymptote, U-form (exact lower part) and fully
// linearized form; branch gamma_n <= 1 is the linearized split form
double asym_first_gt1_uform(const RolePair& p);
double asym_first_gt1_linear(const RolePair& p);
double asym_first_le1(const RolePair& p);

} // namespace semigf::detail
