#include "semigf/channel_statistics.hpp"

#include <cmath>

#include "semigf/special_functions.hpp"

namespace semigf {

void GeometryConfig::validate() const {
    if (!(disc_radius_m > 0.0)) throw std::invalid_argument("geometry: R1 must be > 0");
    if (!(ring_radius_m > disc_radius_m)) throw std::invalid_argument("geometry: R2 must exceed R1");
    if (!(path_loss_exp > 2.0)) {
        // b3 must stay inside (1, 2) or the gamma-function anchors blow up
        throw std::invalid_argument("geometry: path-loss exponent must exceed 2");
    }
}

void RadioConfig::validate() const {
    if (!(lambda_gb > 0.0) || !(lambda_gf > 0.0)) {
        throw std::invalid_argument("radio: fading means must be > 0");
    }
    if (!(rate_gb_bpcu > 0.0) || !(rate_gf_bpcu > 0.0)) {
        throw std::invalid_argument("radio: target rates must be > 0");
    }
    if (!std::isfinite(p_gb_dbm) || !std::isfinite(p_gf_dbm) || !std::isfinite(noise_dbm)) {
        throw std::invalid_argument("radio: powers must be finite");
    }
}

double RadioConfig::rho_gb() const { return db_to_linear(p_gb_dbm - noise_dbm); }
double RadioConfig::rho_gf() const { return db_to_linear(p_gf_dbm - noise_dbm); }
double RadioConfig::gamma_th_gb() const { return std::exp2(rate_gb_bpcu) - 1.0; }
double RadioConfig::gamma_th_gf() const { return std::exp2(rate_gf_bpcu) - 1.0; }

namespace {

UserCoeffs make_user_coeffs(const GeometryConfig& geo, double lambda) {
    double a = geo.path_loss_exp;
    double r1 = geo.disc_radius_m, r2 = geo.ring_radius_m;
    UserCoeffs uc;
    uc.lambda = lambda;
    uc.b11 = 2.0 * std::pow(lambda, 2.0 / a) / (a * r1 * r1);
    uc.b12 = 2.0 * std::pow(lambda, 2.0 / a) / (a * (r2 * r2 - r1 * r1));
    uc.b21 = std::pow(r1, a) / lambda;
    uc.b22 = std::pow(r2, a) / lambda;
    return uc;
}

} // namespace

DerivedCoefficients derive_coefficients(const GeometryConfig& geo, const RadioConfig& radio) {
    geo.validate();
    radio.validate();
    DerivedCoefficients d;
    d.geo = geo;
    double a = geo.path_loss_exp;
    d.two_over_alpha = 2.0 / a;
    d.b3 = d.two_over_alpha + 1.0;
    d.gb = make_user_coeffs(geo, radio.lambda_gb);
    d.gf = make_user_coeffs(geo, radio.lambda_gf);
    d.rho_gb = radio.rho_gb();
    d.rho_gf = radio.rho_gf();
    d.gamma_gb = radio.gamma_th_gb();
    d.gamma_gf = radio.gamma_th_gf();
    double r1 = geo.disc_radius_m;
    d.c1 = 2.0 * std::pow(radio.lambda_gb, d.two_over_alpha) * d.gf.b12 / (a * r1 * r1);
    d.c2 = 2.0 * d.gb.b12 * std::pow(radio.lambda_gf, d.two_over_alpha) / (a * r1 * r1);
    d.near_slope_gb = 2.0 * std::pow(r1, a) / ((a + 2.0) * radio.lambda_gb);
    d.near_slope_gf = 2.0 * std::pow(r1, a) / ((a + 2.0) * radio.lambda_gf);
    return d;
}

double pdf_gain(Region region, const UserCoeffs& uc, double b3, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("pdf_gain: x must be > 0");
    if (region == Region::Near) {
        return uc.b11 / std::pow(x, b3) * lower_inc_gamma(b3, uc.b21 * x);
    }
    return uc.b12 / std::pow(x, b3) *
           (lower_inc_gamma(b3, uc.b22 * x) - lower_inc_gamma(b3, uc.b21 * x));
}

double cdf_gain_gamma_compl(Region region, const UserCoeffs& uc, double b3, double x) {
    if (x <= 0.0) return 1.0;
    // 2/(a R1^2) lambda^(b3-1) = b11 since b3 - 1 = 2/alpha, and likewise for b12
    double s = b3 - 1.0;
    double xs = std::pow(x, -s);
    if (region == Region::Near) {
        return uc.b11 * xs * lower_inc_gamma(s, uc.b21 * x);
    }
    return uc.b12 * xs *
           (lower_inc_gamma(s, uc.b22 * x) - lower_inc_gamma(s, uc.b21 * x));
}

double cdf_gain_gamma(Region region, const UserCoeffs& uc, double b3, double x) {
    if (x <= 0.0) return 0.0;
    double s = b3 - 1.0;
    double z_hi = (region == Region::Near ? uc.b21 : uc.b22) * x;
    if (z_hi <= 1.0) {
        // The leading gamma-series terms of the complement cancel the 1
        // exactly; sum the remainder instead of subtracting.
        if (region == Region::Near) {
            return -uc.b11 * std::pow(x, -s) *
                   lower_inc_gamma_minus_leading(s, uc.b21 * x);
        }
        return -uc.b12 * std::pow(x, -s) *
               (lower_inc_gamma_minus_leading(s, uc.b22 * x) -
                lower_inc_gamma_minus_leading(s, uc.b21 * x));
    }
    return 1.0 - cdf_gain_gamma_compl(region, uc, b3, x);
}

double cdf_gain_hyp(Region region, const UserCoeffs& uc, double b3, double x) {
    if (x <= 0.0) return 0.0;
    const double denom[] = {b3 + 1.0, 2.0};
    const double numer[] = {b3, 1.0};
    if (region == Region::Near) {
        double f = gen_hypergeometric(numer, denom, -uc.b21 * x, {});
        return uc.b11 * std::pow(uc.b21, b3) / b3 * x * f;
    }
    double f2 = gen_hypergeometric(numer, denom, -uc.b22 * x, {});
    double f1 = gen_hypergeometric(numer, denom, -uc.b21 * x, {});
    return uc.b12 / b3 * x *
           (std::pow(uc.b22, b3) * f2 - std::pow(uc.b21, b3) * f1);
}

double tau_th_average(const GeometryConfig& geo, const RadioConfig& radio, Region gb_region,
                      double exclusion_radius_m, std::uint64_t n_draws, std::uint64_t seed) {
    geo.validate();
    if (exclusion_radius_m < 0.0) throw std::invalid_argument("tau_th_average: exclusion radius must be >= 0");
    if (n_draws == 0) throw std::invalid_argument("tau_th_average: n_draws must be > 0");
    double power_ratio = dbm_to_mw(radio.p_gb_dbm) / dbm_to_mw(radio.p_gf_dbm);
    double r1 = geo.disc_radius_m, r2 = geo.ring_radius_m, a = geo.path_loss_exp;
    Xoshiro256pp rng(mix_seed(seed, 0xA5A5A5A5ULL));
    double acc = 0.0;
    for (std::uint64_t i = 0; i < n_draws; ++i) {
        double d;
        do {
            double u = rng.uniform();
            d = gb_region == Region::Near ? r1 * std::sqrt(u)
                                          : std::sqrt(r1 * r1 + u * (r2 * r2 - r1 * r1));
        } while (d < exclusion_radius_m);
        double h2 = -radio.lambda_gb * std::log1p(-rng.uniform());
        acc += h2 * std::pow(d, -a);
    }
    return power_ratio * acc / static_cast<double>(n_draws);
}

double tau_th_far_mean(const GeometryConfig& geo, const RadioConfig& radio) {
    double power_ratio = dbm_to_mw(radio.p_gb_dbm) / dbm_to_mw(radio.p_gf_dbm);
    double r1 = geo.disc_radius_m, r2 = geo.ring_radius_m, a = geo.path_loss_exp;
    double moment = 2.0 * (std::pow(r2, 2.0 - a) - std::pow(r1, 2.0 - a)) /
                    ((2.0 - a) * (r2 * r2 - r1 * r1));
    return power_ratio * radio.lambda_gb * moment;
}

} // namespace semigf
