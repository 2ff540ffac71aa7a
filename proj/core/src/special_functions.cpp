#include "semigf/special_functions.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace semigf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

// Regularized series for gamma(a, x), x < a + 1.
double lower_gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x));
}

// Continued fraction (modified Lentz) for Gamma(a, x), x >= a + 1.
double upper_gamma_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

} // namespace

double gamma_fn(double x) {
    require_finite(x, "gamma_fn argument");
    if (x <= 0.0 && x == std::floor(x)) {
        throw std::invalid_argument("gamma_fn: nonpositive integer argument");
    }
    return std::tgamma(x);
}

double lower_inc_gamma(double a, double x) {
    require_finite(a, "a");
    require_finite(x, "x");
    if (a <= 0.0) throw std::invalid_argument("lower_inc_gamma: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("lower_inc_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return lower_gamma_series(a, x);
    return std::tgamma(a) - upper_gamma_cf(a, x);
}

double upper_inc_gamma(double a, double x) {
    require_finite(a, "a");
    require_finite(x, "x");
    if (a <= 0.0) throw std::invalid_argument("upper_inc_gamma: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("upper_inc_gamma: x must be >= 0");
    if (x == 0.0) return std::tgamma(a);
    if (x >= a + 1.0) return upper_gamma_cf(a, x);
    return std::tgamma(a) - lower_gamma_series(a, x);
}

double lower_inc_gamma_minus_leading(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("lower_inc_gamma_minus_leading: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("lower_inc_gamma_minus_leading: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x <= 1.5) {
        // sum_{n>=1} (-1)^n x^(a+n) / (n! (a+n)), alternating and fast here
        double sum = 0.0;
        double pow_term = std::pow(x, a);  // x^(a+n) built incrementally
        double fact = 1.0;
        for (int n = 1; n < 200; ++n) {
            pow_term *= x;
            fact *= n;
            double term = pow_term / (fact * (a + n));
            sum += (n % 2 == 0) ? term : -term;
            if (term < kEps * std::max(std::abs(sum), 1e-300)) break;
        }
        return sum;
    }
    return lower_inc_gamma(a, x) - std::pow(x, a) / a;
}

double truncated_gamma_expansion(double a, double x, int n_terms) {
    require_finite(a, "a");
    require_finite(x, "x");
    if (a <= 0.0) throw std::invalid_argument("truncated_gamma_expansion: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("truncated_gamma_expansion: x must be >= 0");
    if (n_terms < 1) throw std::invalid_argument("truncated_gamma_expansion: n_terms must be >= 1");
    if (x == 0.0) return 0.0;
    double sum = 0.0;
    double pow_term = std::pow(x, a);
    double fact = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        if (n > 0) {
            pow_term *= x;
            fact *= n;
        }
        double term = pow_term / (fact * (a + n));
        sum += (n % 2 == 0) ? term : -term;
    }
    return sum;
}

double gen_hypergeometric(std::span<const double> numer, std::span<const double> denom,
                          double z, const SeriesControl& ctrl) {
    for (double b : denom) {
        if (b <= 0.0 && b == std::floor(b)) {
            throw std::invalid_argument("gen_hypergeometric: denominator parameter is a nonpositive integer");
        }
    }
    require_finite(z, "z");
    if (z == 0.0) return 1.0;

    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;  // Kahan correction, the alternating 2F2 sums cancel hard
    for (int k = 0; k < ctrl.max_terms; ++k) {
        double ratio = z / (k + 1.0);
        for (double a : numer) ratio *= (a + k);
        for (double b : denom) ratio /= (b + k);
        term *= ratio;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < ctrl.rel_tolerance * std::abs(sum)) return sum;
        if (!std::isfinite(term)) break;
    }
    throw SeriesDivergence("gen_hypergeometric: series did not converge");
}

double hyp2f1_11(double c, double z) {
    if (z < 0.0 || z >= 1.0) throw std::invalid_argument("hyp2f1_11: z must be in [0, 1)");
    if (z <= 0.75) {
        // sum_k k! z^k / (c)_k
        double term = 1.0, sum = 1.0;
        for (int k = 0; k < 100000; ++k) {
            term *= (k + 1.0) * z / (c + k);
            sum += term;
            if (term < kEps * sum) return sum;
        }
        throw SeriesDivergence("hyp2f1_11: direct series stalled");
    }
    // Gauss connection in powers of 1 - z; valid for non-integer c - 2.
    double w = 1.0 - z;
    double a1 = std::tgamma(c) * std::tgamma(c - 2.0) / std::pow(std::tgamma(c - 1.0), 2.0);
    double f1 = 1.0, term = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (1.0 + k) * (1.0 + k) * w / ((3.0 - c + k) * (k + 1.0));
        f1 += term;
        if (std::abs(term) < kEps * std::abs(f1)) break;
    }
    double a2 = std::tgamma(c) * std::tgamma(2.0 - c) * std::pow(w, c - 2.0) * std::pow(z, 1.0 - c);
    return a1 * f1 + a2;
}

double helper_U(double a, double t, double b3) {
    if (!(a > 0.0) || !(t > 0.0)) throw std::invalid_argument("helper_U: a and t must be > 0");
    if (!(b3 > 1.0 && b3 < 2.0)) {
        throw std::invalid_argument("helper_U: b3 must lie in (1, 2); requires path-loss exponent > 2");
    }
    double z = t / a;
    if (z < 0.9) {
        const double numer[] = {1.0, b3, 2.0 - b3};
        const double denom[] = {b3 + 1.0, 3.0 - b3};
        double f = gen_hypergeometric(numer, denom, -z, {});
        double theta1 = -std::pow(t, b3) / (b3 * (2.0 - b3) * std::pow(a, 2.0 - b3));
        double theta2 = std::tgamma(2.0 - b3) * std::tgamma(b3 - 1.0) /
                        (2.0 * (1.0 - b3) * std::pow(t, 2.0 * (1.0 - b3)));
        return f * theta1 - theta2;
    }
    // Equivalent representation with arguments inside [0, 1):
    //   U = a^(b3-1) t^b3 / (2 (b3-1) (a+t)) *
    //       [ 2F1(1,1;b3+1; t/(a+t))/b3 + 2F1(1,1;b3; a/(a+t))/(b3-1) ]
    double s = a + t;
    double part = hyp2f1_11(b3 + 1.0, t / s) / b3 + hyp2f1_11(b3, a / s) / (b3 - 1.0);
    return std::pow(a, b3 - 1.0) * std::pow(t, b3) / (2.0 * (b3 - 1.0) * s) * part;
}

double helper_M_hyp(double t, double alpha_p, double beta_p, double delta_p,
                    const SeriesControl& ctrl) {
    if (t == 0.0) return 0.0;
    double zd = delta_p * t;
    const double numer[] = {beta_p, alpha_p + beta_p};
    const double denom[] = {beta_p + 1.0, alpha_p + beta_p + 1.0};
    double f = gen_hypergeometric(numer, denom, -zd, ctrl);
    // B(1, alpha+beta) = 1 / (alpha+beta); t^(alpha+beta) delta^beta = t^alpha (t delta)^beta
    return std::pow(t, alpha_p) * std::pow(zd, beta_p) / (beta_p * (alpha_p + beta_p)) * f;
}

double helper_M(double t, double alpha_p, double beta_p, double delta_p) {
    require_finite(t, "t");
    if (t < 0.0) throw std::invalid_argument("helper_M: t must be >= 0");
    if (!(beta_p > 0.0)) throw std::invalid_argument("helper_M: beta must be > 0");
    if (!(alpha_p + beta_p > 0.0)) throw std::invalid_argument("helper_M: alpha + beta must be > 0");
    if (alpha_p == 0.0) throw std::invalid_argument("helper_M: alpha must be nonzero");
    if (!(delta_p > 0.0)) throw std::invalid_argument("helper_M: delta must be > 0");
    if (t == 0.0) return 0.0;
    double zd = delta_p * t;
    if (zd <= 30.0) return helper_M_hyp(t, alpha_p, beta_p, delta_p);
    // M = t^alpha [gamma(beta, zd) - zd^(-alpha) gamma(alpha+beta, zd)] / alpha
    double g1 = lower_inc_gamma(beta_p, zd);
    double g2 = lower_inc_gamma(alpha_p + beta_p, zd);
    return std::pow(t, alpha_p) * (g1 - std::pow(zd, -alpha_p) * g2) / alpha_p;
}

QuadratureNodes QuadratureNodes::make(int order) {
    if (order < 1) throw std::invalid_argument("QuadratureNodes: order must be >= 1");
    QuadratureNodes q;
    q.order = order;
    q.nodes.resize(static_cast<std::size_t>(order));
    q.sin_nodes.resize(static_cast<std::size_t>(order));
    q.weight = M_PI / order;
    for (int s = 1; s <= order; ++s) {
        double phase = (2.0 * s - 1.0) * M_PI / (2.0 * order);
        q.nodes[static_cast<std::size_t>(s - 1)] = std::cos(phase);
        q.sin_nodes[static_cast<std::size_t>(s - 1)] = std::sin(phase);
    }
    return q;
}

const QuadratureNodes& QuadratureNodes::cached(int order) {
    static std::mutex mtx;
    static std::map<int, QuadratureNodes> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make(order)).first;
    return it->second;
}

double cheb_gauss_integrate(const std::function<double(double)>& f, double a, double b,
                            int order) {
    if (!(a < b)) throw std::invalid_argument("cheb_gauss_integrate: requires a < b");
    const QuadratureNodes& q = QuadratureNodes::cached(order);
    double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int s = 0; s < order; ++s) {
        double t = (q.nodes[static_cast<std::size_t>(s)] + 1.0) * half + a;
        sum += q.sin_nodes[static_cast<std::size_t>(s)] * f(t);
    }
    return sum * q.weight * half;
}

} // namespace semigf
