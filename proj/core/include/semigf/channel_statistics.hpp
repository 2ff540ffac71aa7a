#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "semigf/rng.hpp"

namespace semigf {

enum class Scenario { I, II };   // I: GB in the disc, GF in the ring; II: swapped
enum class Region { Near, Far };
enum class User { GB, GF };
enum class ProtocolKind { OpenLoop, Dynamic };

struct ProtocolConfig {
    ProtocolKind kind = ProtocolKind::Dynamic;
    double tau_th = 0.0;  // linear combined-gain threshold, OpenLoop only

    static ProtocolConfig dynamic() { return {ProtocolKind::Dynamic, 0.0}; }
    static ProtocolConfig open_loop(double tau) { return {ProtocolKind::OpenLoop, tau}; }
};

struct GeometryConfig {
    double disc_radius_m = 200.0;   // R1
    double ring_radius_m = 600.0;   // R2
    double path_loss_exp = 2.8;     // alpha, must exceed 2

    void validate() const;
};

// Powers and noise in dBm; everything downstream of derive_coefficients is
// linear. lambda_* are the exponential means of |h|^2 (0 dB = 1).
struct RadioConfig {
    double p_gb_dbm = 10.0;
    double p_gf_dbm = 10.0;
    double noise_dbm = -90.0;
    double lambda_gb = 1.0;
    double lambda_gf = 1.0;
    double rate_gb_bpcu = 1.5;
    double rate_gf_bpcu = 1.0;

    void validate() const;
    double rho_gb() const;       // linear transmit SNR P_GB / sigma^2
    double rho_gf() const;
    double gamma_th_gb() const;  // 2^rate - 1
    double gamma_th_gf() const;
};

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Per-user shorthand constants of the combined-gain distributions.
struct UserCoeffs {
    double b11 = 0.0;     // 2 lambda^(2/a) / (a R1^2)
    double b12 = 0.0;     // 2 lambda^(2/a) / (a (R2^2 - R1^2))
    double b21 = 0.0;     // R1^a / lambda
    double b22 = 0.0;     // R2^a / lambda
    double lambda = 1.0;
};

struct DerivedCoefficients {
    GeometryConfig geo;
    double b3 = 0.0;             // 2/alpha + 1, in (1, 2)
    double two_over_alpha = 0.0;
    UserCoeffs gb, gf;
    double rho_gb = 0.0, rho_gf = 0.0;
    double gamma_gb = 0.0, gamma_gf = 0.0;
    double c1 = 0.0;             // 2 lambda_GB^(2/a) b12_GF / (a R1^2)
    double c2 = 0.0;             // 2 b12_GB lambda_GF^(2/a) / (a R1^2)
    double near_slope_gb = 0.0;  // 2 R1^a / ((a+2) lambda_GB); F_near(z) ~ slope * z
    double near_slope_gf = 0.0;  // 2 R1^a / ((a+2) lambda_GF), the paper's C3

    // Branch boundaries (valid only on their theorem branches)
    double sigma1() const { return gamma_gb / (rho_gf * (1.0 - gamma_gb)); }
    double sigma2() const { return gamma_gf / rho_gf; }
    double sigma3() const { return gamma_gf / (rho_gb * (1.0 - gamma_gf)); }
    double sigma4() const { return gamma_gb / rho_gb; }
    double sigma5(double tau_th) const {
        return gamma_gf * rho_gb / (rho_gf * tau_th - gamma_gf);
    }
    double upsilon() const { return near_slope_gb * gamma_gb / rho_gb; }

    const UserCoeffs& of(User u) const { return u == User::GB ? gb : gf; }
    const UserCoeffs& near_user(Scenario s) const { return s == Scenario::I ? gb : gf; }
    const UserCoeffs& far_user(Scenario s) const { return s == Scenario::I ? gf : gb; }
};

DerivedCoefficients derive_coefficients(const GeometryConfig& geo, const RadioConfig& radio);

// Lemma-style combined-gain density of |h|^2 d^(-alpha) for a user in the
// given region. x must be positive.
double pdf_gain(Region region, const UserCoeffs& uc, double b3, double x);

// CDF through the incomplete-gamma form (production path; the small-x
// cancellation is removed internally). x <= 0 returns 0.
double cdf_gain_gamma(Region region, const UserCoeffs& uc, double b3, double x);

// Complement 1 - F(x), computed without cancellation at large x.
double cdf_gain_gamma_compl(Region region, const UserCoeffs& uc, double b3, double x);

// CDF through the 2F2 hypergeometric form (cross-validation path).
// Series divergence propagates for arguments beyond the series radius.
double cdf_gain_hyp(Region region, const UserCoeffs& uc, double b3, double x);

// One draw of |h|^2 d^(-alpha): d = R1 sqrt(u) (near) or
// sqrt(R1^2 + u (R2^2 - R1^2)) (far), |h|^2 exponential with mean lambda.
template <typename Rng>
double sample_gain(Region region, const GeometryConfig& geo, double lambda, Rng& rng) {
    double u = rng.uniform();
    double r1 = geo.disc_radius_m, r2 = geo.ring_radius_m;
    double d = region == Region::Near ? r1 * std::sqrt(u)
                                      : std::sqrt(r1 * r1 + u * (r2 * r2 - r1 * r1));
    double h2 = -lambda * std::log1p(-rng.uniform());
    return h2 * std::pow(d, -geo.path_loss_exp);
}

// Monte Carlo estimate of the open-loop threshold tau_th^ave, the mean of
// (P_GB/P_GF) |h_GB|^2 d_GB^(-alpha) with the GB user in gb_region.
// Distances below exclusion_radius_m are redrawn: for a near-region GB user
// with alpha > 2 the exact mean diverges as the exclusion radius goes to
// zero, so the estimate is only meaningful for a stated exclusion.
double tau_th_average(const GeometryConfig& geo, const RadioConfig& radio, Region gb_region,
                      double exclusion_radius_m, std::uint64_t n_draws, std::uint64_t seed);

// Closed-form mean of (P_GB/P_GF) |h|^2 d^(-alpha) for a far-region GB user
// (finite for alpha != 2); oracle for tau_th_average in Scenario II.
double tau_th_far_mean(const GeometryConfig& geo, const RadioConfig& radio);

} // namespace semigf
