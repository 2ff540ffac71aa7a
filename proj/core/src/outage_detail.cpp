#include "outage_detail.hpp"

#include <limits>

namespace semigf::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RolePair make_role_pair(const DerivedCoefficients& d, Scenario sc) {
    RolePair p;
    p.b3 = d.b3;
    p.s = d.b3 - 1.0;
    double a = d.geo.path_loss_exp;
    double r1 = d.geo.disc_radius_m, r2 = d.geo.ring_radius_m;
    if (sc == Scenario::I) {
        p.nu = &d.gb;
        p.fu = &d.gf;
        p.rho_n = d.rho_gb;
        p.rho_f = d.rho_gf;
        p.gamma_n = d.gamma_gb;
        p.gamma_f = d.gamma_gf;
        p.c_pair = d.c1;
        p.near_slope = d.near_slope_gb;
    } else {
        p.nu = &d.gf;
        p.fu = &d.gb;
        p.rho_n = d.rho_gf;
        p.rho_f = d.rho_gb;
        p.gamma_n = d.gamma_gf;
        p.gamma_f = d.gamma_gb;
        p.c_pair = d.c2;
        p.near_slope = d.near_slope_gf;
    }
    p.far_slope = 2.0 * (std::pow(r2, 2.0 + a) - std::pow(r1, 2.0 + a)) /
                  ((2.0 + a) * (r2 * r2 - r1 * r1) * p.fu->lambda);
    return p;
}

std::vector<double> density_breakpoints(const RolePair& p, double lo, double hi) {
    std::vector<double> pts;
    for (double m : {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2}) {
        pts.push_back(m / p.fu->b22);
        pts.push_back(m / p.fu->b21);
    }
    if (hi > lo && std::isfinite(hi)) {
        for (double r : {1e-6, 1e-4, 1e-2, 0.1, 0.5}) pts.push_back(lo + (hi - lo) * r);
    }
    return pts;
}

namespace {

// clamp an integration range against the far-density mass cut
bool effective_range(const RolePair& p, double lo, double hi, double& lo_e, double& hi_e) {
    lo_e = std::max(lo, 0.0);
    hi_e = std::isfinite(hi) ? hi : lo_e + p.mass_cut();
    hi_e = std::min(hi_e, lo_e + p.mass_cut());
    return hi_e > lo_e;
}

double integrate_band(const RolePair& p, const std::function<double(double)>& f, double lo,
                      double hi, const AnalyticOptions& opt) {
    double lo_e, hi_e;
    if (!effective_range(p, lo, hi, lo_e, hi_e)) return 0.0;
    return integrate_adaptive(f, lo_e, hi_e, density_breakpoints(p, lo_e, hi_e), opt.quad).value;
}

} // namespace

double exact_first_user(const RolePair& p, double lo, double hi, const AnalyticOptions& opt) {
    auto f = [&p](double x) {
        return (p.F_near(p.upper(x)) - p.F_near(p.lower(x))) * p.f_far(x);
    };
    return integrate_band(p, f, lo, hi, opt);
}

double exact_fbar_upper(const RolePair& p, double lo, double hi, const AnalyticOptions& opt) {
    auto f = [&p](double x) { return p.Fbar_near(p.upper(x)) * p.f_far(x); };
    return integrate_band(p, f, lo, hi, opt);
}

double exact_fbar_lower(const RolePair& p, double lo, double hi, const AnalyticOptions& opt) {
    auto f = [&p](double x) { return p.Fbar_near(p.lower(x)) * p.f_far(x); };
    return integrate_band(p, f, lo, hi, opt);
}

double exact_f_upper(const RolePair& p, double lo, double hi, const AnalyticOptions& opt) {
    auto f = [&p](double x) { return p.F_near(p.upper(x)) * p.f_far(x); };
    return integrate_band(p, f, lo, hi, opt);
}

double exact_band_above(const RolePair& p, double lo, double tau, const AnalyticOptions& opt) {
    double fn_tau = p.F_near(tau);
    auto f = [&p, fn_tau](double x) { return (p.F_near(p.upper(x)) - fn_tau) * p.f_far(x); };
    return integrate_band(p, f, lo, kInf, opt);
}

namespace {

double far_gamma_diff(const RolePair& p, double x) {
    return lower_inc_gamma(p.b3, p.fu->b22 * x) - lower_inc_gamma(p.b3, p.fu->b21 * x);
}

template <typename Kernel>
double cheb_sum(const RolePair& p, double a, double b, int order, Kernel&& kernel) {
    double b_eff = std::min(b, a + p.mass_cut());
    if (!(b_eff > a)) return 0.0;
    const QuadratureNodes& q = QuadratureNodes::cached(order);
    double half = 0.5 * (b_eff - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        double iota = (q.nodes[static_cast<std::size_t>(i)] + 1.0) * half + a;
        sum += q.sin_nodes[static_cast<std::size_t>(i)] * kernel(iota);
    }
    return sum * q.weight * half;
}

} // namespace

double quad_fbar_upper(const RolePair& p, double a, double b, int order) {
    return cheb_sum(p, a, b, order, [&p](double x) {
        double z = p.upper(x);
        return p.c_pair * std::pow(z, -p.s) * lower_inc_gamma(p.s, p.nu->b21 * z) *
               std::pow(x, -p.b3) * far_gamma_diff(p, x);
    });
}

double quad_fbar_lower(const RolePair& p, double a, double b, int order) {
    double ratio = p.rho_f / p.rho_n;
    return cheb_sum(p, a, b, order, [&p, ratio](double x) {
        return p.c_pair * std::pow(ratio, -p.s) * std::pow(x, 1.0 - 2.0 * p.b3) *
               lower_inc_gamma(p.s, p.nu->b21 * ratio * x) * far_gamma_diff(p, x);
    });
}

double quad_f_upper(const RolePair& p, double a, double b, int order, NearCdfForm form) {
    return cheb_sum(p, a, b, order, [&p, form](double x) {
        double z = p.upper(x);
        double fn = form == NearCdfForm::Gamma
                        ? p.F_near(z)
                        : cdf_gain_hyp(Region::Near, *p.nu, p.b3, z);
        return fn * p.f_far(x);
    });
}

double closed_fbar_linear(const RolePair& p, double kappa) {
    double a = p.nu->b21 * kappa;
    double ud = helper_U(a, p.fu->b22, p.b3) - helper_U(a, p.fu->b21, p.b3);
    return p.c_pair * std::pow(kappa, -p.s) * ud;
}

double series_fbar_upper(const RolePair& p, double sigma, const SeriesControl& ctrl,
                         int* terms_used) {
    const double s = p.s;
    const int n_max = std::min(ctrl.max_terms, 60);  // no stated truncation in the source forms
    double total = 0.0;
    int used = 0;
    bool infinite = !std::isfinite(sigma);

    for (int which = 0; which < 2; ++which) {
        double delta = which == 0 ? p.fu->b22 : p.fu->b21;
        double sign = which == 0 ? 1.0 : -1.0;
        double r2 = -p.gamma_n * p.nu->b21 * p.rho_f / (p.rho_n * delta);
        if (infinite && std::abs(r2) >= 0.995) {
            throw SeriesDivergence(
                "series_fbar_upper: term ratio gamma rho_f b21 / (rho_n delta) is not below 1");
        }
        double v2 = delta / p.rho_f;
        double acc = 0.0;
        double min_mag = kInf;
        int grow_streak = 0;
        bool converged = false;

        if (infinite) {
            // sum_n r^n/(n+s) sum_t v^t / (t! (n-t-s)), times delta^s at the end
            for (int n = 0; n <= n_max; ++n) {
                double tsum = 0.0;
                double vpow = 1.0, tfact = 1.0;
                for (int t = 0; t <= n; ++t) {
                    if (t > 0) {
                        vpow *= v2;
                        tfact *= t;
                    }
                    tsum += vpow / (tfact * (n - t - s));
                }
                double sn = std::pow(r2, n) / (n + s) * tsum;
                acc += sn;
                ++used;
                double mag = std::abs(sn);
                if (mag < ctrl.rel_tolerance * std::abs(acc) + 1e-300) {
                    converged = true;
                    break;
                }
                if (mag < min_mag) {
                    min_mag = mag;
                    grow_streak = 0;
                } else if (++grow_streak > 4 && n > 8) {
                    throw SeriesDivergence("series_fbar_upper: terms stopped decaying");
                }
            }
            if (!converged) throw SeriesDivergence("series_fbar_upper: term budget exhausted");
            total += sign * std::pow(delta, s) * acc;
        } else {
            double g_b3 = lower_inc_gamma(p.b3, delta * sigma);
            double sp = std::pow(sigma, -s);
            double r1 = -p.gamma_n * p.nu->b21 / p.rho_n;
            double base1 = p.rho_f * sigma;
            double ds = std::pow(delta, s);
            for (int n = 0; n <= n_max; ++n) {
                double sn = 0.0;
                double tfact = 1.0;
                for (int t = 0; t <= n; ++t) {
                    if (t > 0) tfact *= t;
                    double q = n - t - s;
                    double ntfact = std::tgamma(static_cast<double>(n - t) + 1.0);
                    double f1 = g_b3 * sp * std::pow(r1, n) * std::pow(base1, n - t);
                    double f2 = ds * lower_inc_gamma(static_cast<double>(n - t) + 1.0, delta * sigma) *
                                std::pow(r2, n) * std::pow(v2, t);
                    sn += (f1 - f2) / (tfact * ntfact * (s + n) * q);
                }
                acc += sn;
                ++used;
                double mag = std::abs(sn);
                if (mag < ctrl.rel_tolerance * std::abs(acc) + 1e-300) {
                    converged = true;
                    break;
                }
                if (mag < min_mag) {
                    min_mag = mag;
                    grow_streak = 0;
                } else if (++grow_streak > 4 && n > 8) {
                    throw SeriesDivergence("series_fbar_upper: terms stopped decaying");
                }
            }
            if (!converged) throw SeriesDivergence("series_fbar_upper: term budget exhausted");
            total += sign * acc;
        }
    }
    if (terms_used) *terms_used = used;
    return p.c_pair * std::pow(p.nu->b21, s) * total;
}

double far_moment1(const RolePair& p) {
    return p.fu->b12 / (2.0 - p.b3) *
           (std::pow(p.fu->b21, p.b3 - 2.0) - std::pow(p.fu->b22, p.b3 - 2.0));
}

double m_delta(const RolePair& p, double y, double ap) {
    return helper_M(y, ap, p.b3, p.fu->b22) - helper_M(y, ap, p.b3, p.fu->b21);
}

double p_inf_openloop(const RolePair& p, double y) {
    double upsilon = p.near_slope * p.gamma_n / p.rho_n;
    return upsilon * (p.rho_f * p.fu->b12 * m_delta(p, y, 2.0 - p.b3) + p.F_far(y));
}

double p_inf_openloop_limit(const RolePair& p) {
    double upsilon = p.near_slope * p.gamma_n / p.rho_n;
    return upsilon * (p.rho_f * far_moment1(p) + 1.0);
}

double q4(const RolePair& p, double y) { return p.F_far(y) - p_inf_openloop(p, y); }

double asym_first_gt1_uform(const RolePair& p) {
    return closed_fbar_linear(p, p.rho_f / p.rho_n) - 1.0 + p_inf_openloop_limit(p);
}

double asym_first_gt1_linear(const RolePair& p) {
    double m1 = far_moment1(p);
    return p.near_slope / p.rho_n * (p.gamma_n + (p.gamma_n - 1.0) * p.rho_f * m1);
}

double asym_first_le1(const RolePair& p) {
    double s1 = p.sigma_near();
    return p.near_slope / p.rho_n *
           (p.gamma_n * p.F_far(s1) -
            (1.0 - p.gamma_n) * p.rho_f * p.fu->b12 * m_delta(p, s1, 2.0 - p.b3));
}

} // namespace semigf::detail
