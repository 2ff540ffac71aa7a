#include "semigf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace semigf {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1] with the embedded
// 7-point Gauss rule (Patterson tables).
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
    double a, b, value, error;
    bool operator<(const Segment& other) const {
        if (error != other.error) return error < other.error;
        return a > other.a;  // deterministic tie-break
    }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = f(center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double abscissa = half * kXgk[j];
        double f1 = f(center - abscissa);
        double f2 = f(center + abscissa);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }
    double value = result_kronrod * half;
    double err = std::abs((result_kronrod - result_gauss) * half);
    return {a, b, value, err};
}

QuadResult run_adaptive(const std::function<double(double)>& f,
                        std::vector<Segment> segments, const AdaptiveQuadOptions& opt) {
    std::priority_queue<Segment> heap(segments.begin(), segments.end());
    int count = static_cast<int>(segments.size());
    double total_value = 0.0, total_error = 0.0;
    for (const auto& s : segments) {
        total_value += s.value;
        total_error += s.error;
    }
    while (count < opt.max_intervals &&
           total_error > std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value))) {
        Segment worst = heap.top();
        heap.pop();
        if (!(worst.b > worst.a) || !std::isfinite(worst.error)) {
            heap.push(worst);
            break;
        }
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval at double resolution
            heap.push(worst);
            break;
        }
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    return {total_value, total_error, count};
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const AdaptiveQuadOptions& opt) {
    return integrate_adaptive(f, a, b, {}, opt);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breakpoints,
                              const AdaptiveQuadOptions& opt) {
    if (a == b) return {0.0, 0.0, 0};
    std::vector<double> edges{a};
    for (double p : breakpoints) {
        if (p > a && p < b) edges.push_back(p);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<Segment> segments;
    segments.reserve(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        segments.push_back(gk15(f, edges[i], edges[i + 1]));
    }
    return run_adaptive(f, std::move(segments), opt);
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double scale, const AdaptiveQuadOptions& opt) {
    auto g = [&f, a, scale](double u) {
        double om = 1.0 - u;
        double x = a + scale * u / om;
        double jac = scale / (om * om);
        return f(x) * jac;
    };
    // Seed with splits that map to x - a ~ scale * {1e-4 .. 1e4}
    std::vector<double> pts;
    for (double r : {1e-4, 1e-3, 1e-2, 1e-1, 0.5, 1.0, 1e1, 1e2, 1e3, 1e4}) {
        pts.push_back(r / (1.0 + r));
    }
    return integrate_adaptive(g, 0.0, 1.0, pts, opt);
}

} // namespace semigf
