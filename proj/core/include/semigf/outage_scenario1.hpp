#pragma once

// Analytic outage probabilities for Scenario I: the grant-based user sits in
// the disc (near, decoded first, sees grant-free interference), the
// grant-free user in the ring (far, decoded last, clean after SIC).
//
// Every operation supports three methods:
//   Exact      - adaptive quadrature of the defining joint-probability
//                integrals over the combined-gain densities,
//   ClosedForm - the special-function evaluations (series, helper U/M,
//                Chebyshev-Gauss node sums),
//   Asymptotic - high-rho_GB expressions; may leave [0, 1] at low SNR and
//                are tagged, never clamped.

#include "semigf/outage_common.hpp"

namespace semigf::s1 {

// GB user, dynamic protocol: Pr{SINR_GB < gamma_GB and admitted}, admission
// rho_GF g_GF < rho_GB g_GB. Branches on gamma_GB vs 1 (the boundary routes
// to the > 1 branch where sigma1 is not needed).
OutageEstimate op_gb_dynamic_s1(const DerivedCoefficients& d, Method method,
                                const AnalyticOptions& opt = {});

// GF user, dynamic protocol: adds the SIC-success-but-GF-outage term Q1.
OutageEstimate op_gf_dynamic_s1(const DerivedCoefficients& d, Method method,
                                const AnalyticOptions& opt = {});

// GB user, open-loop protocol with admission g_GF < tau_th.
OutageEstimate op_gb_openloop_s1(const DerivedCoefficients& d, double tau_th, Method method,
                                 const AnalyticOptions& opt = {});

// GF user, open-loop protocol: adds Q2 over (0, min(gamma_GF/rho_GF, tau)).
OutageEstimate op_gf_openloop_s1(const DerivedCoefficients& d, double tau_th, Method method,
                                 const AnalyticOptions& opt = {});

// High-SNR expressions (also reachable through Method::Asymptotic above).
OutageEstimate op_gb_dynamic_s1_asym(const DerivedCoefficients& d, const AnalyticOptions& opt = {});
OutageEstimate op_gf_dynamic_s1_asym(const DerivedCoefficients& d, const AnalyticOptions& opt = {});
OutageEstimate op_gb_openloop_s1_asym(const DerivedCoefficients& d, double tau_th,
                                      const AnalyticOptions& opt = {});
OutageEstimate op_gf_openloop_s1_asym(const DerivedCoefficients& d, double tau_th,
                                      const AnalyticOptions& opt = {});

// Alternate closed forms kept for cross-validation:
// Q1 via the incomplete-gamma expansion + binomial double series (the node
// sum is the production path inside op_gf_dynamic_s1).
double q1_series(const DerivedCoefficients& d, const SeriesControl& ctrl = {});
double q1_quadrature(const DerivedCoefficients& d, int cheb_order = 400);
// Q2 alternates, same pairing.
double q2_series(const DerivedCoefficients& d, double tau_th, const SeriesControl& ctrl = {});
double q2_quadrature(const DerivedCoefficients& d, double tau_th, int cheb_order = 400);
// The two node-sum variants of the open-loop GB closed form (gamma-CDF and
// hypergeometric-CDF integrands).
double gb_openloop_closed_gamma(const DerivedCoefficients& d, double tau_th, int cheb_order = 400);
double gb_openloop_closed_hyp(const DerivedCoefficients& d, double tau_th, int cheb_order = 400);
// Saturated-admission approximation of the open-loop GB outage (tau -> inf).
double gb_openloop_large_tau(const DerivedCoefficients& d, double tau_th);
// Fully saturated high-SNR limit (the tau -> inf asymptote).
double gb_openloop_asym_limit(const DerivedCoefficients& d);

} // namespace semigf::s1
