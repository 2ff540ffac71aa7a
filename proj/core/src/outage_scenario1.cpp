#include "semigf/outage_scenario1.hpp"

#include <cmath>
#include <limits>

#include "outage_detail.hpp"

namespace semigf::s1 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using detail::RolePair;

RolePair role(const DerivedCoefficients& d) { return detail::make_role_pair(d, Scenario::I); }

OutageEstimate estimate(double v, Method m, std::string branch, Diagnostics diag = {}) {
    OutageEstimate e;
    e.value = v;
    e.method = m;
    e.branch = std::move(branch);
    e.diag = std::move(diag);
    return e;
}

// warn when the series closed form is used outside its comfortable region
void maybe_warn_low_rho_gf(const RolePair& p, Diagnostics& diag) {
    if (p.rho_f < 1e3) {
        diag.warnings.push_back("closed form assumes large rho_GF; rho_GF < 30 dB");
    }
}

} // namespace

OutageEstimate op_gb_dynamic_s1(const DerivedCoefficients& d, Method method,
                                const AnalyticOptions& opt) {
    RolePair p = role(d);
    bool gt1 = p.gamma_n >= 1.0;  // the gamma = 1 boundary belongs to the upper branch
    double limit = gt1 ? kInf : p.sigma_near();
    std::string branch = gt1 ? "thr_gt_1" : "thr_le_1";

    if (method == Method::Exact) {
        double v = detail::exact_first_user(p, 0.0, limit, opt);
        return estimate(v, method, branch);
    }
    if (method == Method::Asymptotic) return op_gb_dynamic_s1_asym(d, opt);

    Diagnostics diag;
    diag.quad_order = opt.cheb_order;
    if (gt1) {
        maybe_warn_low_rho_gf(p, diag);
        double i1 = detail::closed_fbar_linear(p, p.rho_f / p.rho_n);
        double i2 = detail::series_fbar_upper(p, kInf, opt.series, &diag.series_terms);
        return estimate(i1 - i2, method, branch + "|series", diag);
    }
    double s1v = p.sigma_near();
    double v = detail::quad_fbar_lower(p, 0.0, s1v, opt.cheb_order) -
               detail::quad_fbar_upper(p, 0.0, s1v, opt.cheb_order);
    return estimate(v, method, branch + "|quad", diag);
}

namespace {

// Q1 = Pr{SINR_GB above threshold, GF below its own threshold, admitted}.
// Region splits at sigma1 when gamma_GB < gamma_GF/(1+gamma_GF).
struct Q1Split {
    bool split;           // lower-bound segment present
    double upper_end;     // end of the interference-bound segment
    double far_end;       // sigma2 = gamma_GF / rho_GF
};

Q1Split q1_split(const RolePair& p) {
    double s2 = p.sigma_far();
    bool split = p.gamma_n < 1.0 && p.sigma_near() < s2;
    return {split, split ? p.sigma_near() : s2, s2};
}

double q1_exact(const RolePair& p, const AnalyticOptions& opt) {
    Q1Split q = q1_split(p);
    double v = detail::exact_fbar_upper(p, 0.0, q.upper_end, opt);
    if (q.split) v += detail::exact_fbar_lower(p, q.upper_end, q.far_end, opt);
    return v;
}

double q1_closed(const RolePair& p, const AnalyticOptions& opt) {
    Q1Split q = q1_split(p);
    double v = detail::quad_fbar_upper(p, 0.0, q.upper_end, opt.cheb_order);
    if (q.split) v += detail::quad_fbar_lower(p, q.upper_end, q.far_end, opt.cheb_order);
    return v;
}

} // namespace

OutageEstimate op_gf_dynamic_s1(const DerivedCoefficients& d, Method method,
                                const AnalyticOptions& opt) {
    RolePair p = role(d);
    if (method == Method::Asymptotic) return op_gf_dynamic_s1_asym(d, opt);
    OutageEstimate gb = op_gb_dynamic_s1(d, method, opt);
    Q1Split q = q1_split(p);
    std::string branch = q.split ? "q1_split" : "q1_single";
    double q1 = method == Method::Exact ? q1_exact(p, opt) : q1_closed(p, opt);
    OutageEstimate e = estimate(gb.value + q1, method, branch + "+" + gb.branch, gb.diag);
    if (method == Method::ClosedForm) e.diag.quad_order = opt.cheb_order;
    return e;
}

OutageEstimate op_gb_openloop_s1(const DerivedCoefficients& d, double tau_th, Method method,
                                 const AnalyticOptions& opt) {
    if (!(tau_th > 0.0)) throw BranchDomainError("open-loop requires tau_th > 0");
    RolePair p = role(d);
    if (method == Method::Exact) {
        double v = detail::exact_f_upper(p, 0.0, tau_th, opt);
        return estimate(v, method, "admit_below_tau");
    }
    if (method == Method::Asymptotic) return op_gb_openloop_s1_asym(d, tau_th, opt);
    Diagnostics diag;
    diag.quad_order = opt.cheb_order;
    double v = detail::quad_f_upper(p, 0.0, tau_th, opt.cheb_order, detail::NearCdfForm::Gamma);
    return estimate(v, method, "admit_below_tau|quad", diag);
}

OutageEstimate op_gf_openloop_s1(const DerivedCoefficients& d, double tau_th, Method method,
                                 const AnalyticOptions& opt) {
    if (!(tau_th > 0.0)) throw BranchDomainError("open-loop requires tau_th > 0");
    RolePair p = role(d);
    if (method == Method::Asymptotic) return op_gf_openloop_s1_asym(d, tau_th, opt);
    double s0 = std::min(p.sigma_far(), tau_th);
    std::string branch = tau_th <= p.sigma_far() ? "sigma0_tau" : "sigma0_own";
    OutageEstimate gb = op_gb_openloop_s1(d, tau_th, method, opt);
    double q2 = method == Method::Exact
                    ? detail::exact_fbar_upper(p, 0.0, s0, opt)
                    : detail::quad_fbar_upper(p, 0.0, s0, opt.cheb_order);
    return estimate(gb.value + q2, method, branch + "+" + gb.branch, gb.diag);
}

OutageEstimate op_gb_dynamic_s1_asym(const DerivedCoefficients& d, const AnalyticOptions& opt) {
    RolePair p = role(d);
    (void)opt;
    if (p.gamma_n >= 1.0) {
        return estimate(detail::asym_first_gt1_uform(p), Method::Asymptotic, "thr_gt_1");
    }
    return estimate(detail::asym_first_le1(p), Method::Asymptotic, "thr_le_1");
}

OutageEstimate op_gf_dynamic_s1_asym(const DerivedCoefficients& d, const AnalyticOptions& opt) {
    RolePair p = role(d);
    OutageEstimate gb = op_gb_dynamic_s1_asym(d, opt);
    Q1Split q = q1_split(p);
    double v;
    if (!q.split) {
        v = detail::q4(p, q.far_end) + gb.value;
    } else {
        double mid = p.F_far(q.far_end) - p.F_far(q.upper_end) -
                     p.near_slope * (p.rho_f / p.rho_n) * p.fu->b12 *
                         (detail::m_delta(p, q.far_end, 2.0 - p.b3) -
                          detail::m_delta(p, q.upper_end, 2.0 - p.b3));
        v = detail::q4(p, q.upper_end) + mid + gb.value;
    }
    return estimate(v, Method::Asymptotic, (q.split ? "q1_split+" : "q1_single+") + gb.branch);
}

OutageEstimate op_gb_openloop_s1_asym(const DerivedCoefficients& d, double tau_th,
                                      const AnalyticOptions& opt) {
    (void)opt;
    RolePair p = role(d);
    return estimate(detail::p_inf_openloop(p, tau_th), Method::Asymptotic, "admit_below_tau");
}

OutageEstimate op_gf_openloop_s1_asym(const DerivedCoefficients& d, double tau_th,
                                      const AnalyticOptions& opt) {
    (void)opt;
    RolePair p = role(d);
    double m = std::min(p.sigma_far(), tau_th);
    double v = p.F_far(m) - detail::p_inf_openloop(p, m) + detail::p_inf_openloop(p, tau_th);
    return estimate(v, Method::Asymptotic, tau_th <= p.sigma_far() ? "sigma0_tau" : "sigma0_own");
}

double q1_series(const DerivedCoefficients& d, const SeriesControl& ctrl) {
    RolePair p = role(d);
    if (p.gamma_n < p.gamma_f / (1.0 + p.gamma_f)) {
        throw BranchDomainError("q1_series: requires gamma_GB > gamma_GF/(1+gamma_GF)");
    }
    return detail::series_fbar_upper(p, p.sigma_far(), ctrl, nullptr);
}

double q1_quadrature(const DerivedCoefficients& d, int cheb_order) {
    RolePair p = role(d);
    AnalyticOptions opt;
    opt.cheb_order = cheb_order;
    return q1_closed(p, opt);
}

double q2_series(const DerivedCoefficients& d, double tau_th, const SeriesControl& ctrl) {
    RolePair p = role(d);
    return detail::series_fbar_upper(p, std::min(p.sigma_far(), tau_th), ctrl, nullptr);
}

double q2_quadrature(const DerivedCoefficients& d, double tau_th, int cheb_order) {
    RolePair p = role(d);
    return detail::quad_fbar_upper(p, 0.0, std::min(p.sigma_far(), tau_th), cheb_order);
}

double gb_openloop_closed_gamma(const DerivedCoefficients& d, double tau_th, int cheb_order) {
    RolePair p = role(d);
    return detail::quad_f_upper(p, 0.0, tau_th, cheb_order, detail::NearCdfForm::Gamma);
}

double gb_openloop_closed_hyp(const DerivedCoefficients& d, double tau_th, int cheb_order) {
    RolePair p = role(d);
    return detail::quad_f_upper(p, 0.0, tau_th, cheb_order, detail::NearCdfForm::Hypergeometric);
}

double gb_openloop_large_tau(const DerivedCoefficients& d, double tau_th) {
    RolePair p = role(d);
    double fn_tau = p.F_near(tau_th);
    return fn_tau - detail::closed_fbar_linear(p, p.gamma_n * p.rho_f / p.rho_n);
}

double gb_openloop_asym_limit(const DerivedCoefficients& d) {
    return detail::p_inf_openloop_limit(role(d));
}

} // namespace semigf::s1
