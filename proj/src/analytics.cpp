#include "qhelly/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace qhelly {

namespace {

double section_density(int d, double t) {
    return std::pow(1.0 - t * t, (d - 1) / 2.0);
}

double adaptive_simpson(int d, double a, double b, double fa, double fm, double fb, double whole,
                        double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = section_density(d, lm), frm = section_density(d, rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(d, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(d, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double section_integral(int d, double a, double b, double eps) {
    if (a >= b) return 0.0;
    double fa = section_density(d, a);
    double fb = section_density(d, b);
    double m = 0.5 * (a + b);
    double fm = section_density(d, m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(d, a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace

double cap_fraction(int d, double h) {
    if (d < 1) throw std::invalid_argument("cap_fraction: dimension must be positive");
    if (h < 0.0 || h > 1.0) throw std::invalid_argument("cap_fraction: height outside [0, 1]");
    if (h == 1.0) return 0.0;
    // Relative target 1e-10; the full integral is of order 1/sqrt(d).
    double full = 2.0 * section_integral(d, 0.0, 1.0, 1e-14);
    double cap = section_integral(d, h, 1.0, 1e-14);
    return cap / full;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    // Continued fraction (Lentz), with the symmetry flip for convergence.
    double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    double front = std::exp(a * std::log(x) + b * std::log(1.0 - x) - log_beta);
    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);

    const double tiny = 1e-300;
    double f = 1.0, c = 1.0, d_ = 0.0;
    for (int i = 0; i <= 400; ++i) {
        int m = i / 2;
        double numerator;
        if (i == 0)
            numerator = 1.0;
        else if (i % 2 == 0)
            numerator = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
        else
            numerator = -((a + m) * (a + b + m) * x) / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
        d_ = 1.0 + numerator * d_;
        if (std::fabs(d_) < tiny) d_ = tiny;
        d_ = 1.0 / d_;
        c = 1.0 + numerator / c;
        if (std::fabs(c) < tiny) c = tiny;
        double cd = c * d_;
        f *= cd;
        if (std::fabs(1.0 - cd) < 1e-15) return front * (f - 1.0) / a;
    }
    return front * (f - 1.0) / a;  // did not fully converge; best effort
}

double cap_fraction_beta(int d, double h) {
    if (d < 1) throw std::invalid_argument("cap_fraction_beta: dimension must be positive");
    if (h < 0.0 || h > 1.0) throw std::invalid_argument("cap_fraction_beta: height outside [0, 1]");
    return 0.5 * regularized_incomplete_beta((d + 1) / 2.0, 0.5, 1.0 - h * h);
}

GammaEval eval_gamma(double c, int d_max) {
    if (!(c > 0.0) || !(c < std::sqrt(2.0)))
        throw std::invalid_argument("eval_gamma: c must lie in (0, sqrt(2))");
    if (d_max < 2) throw std::invalid_argument("eval_gamma: d_max must be at least 2");
    GammaEval out;
    out.c = c;
    out.d_max = d_max;
    out.value = 1.0;
    for (int d = 2; d <= d_max; ++d) {
        double two_caps = 2.0 * cap_fraction(d, c / std::sqrt(static_cast<double>(d)));
        out.per_d.push_back(two_caps);
        if (two_caps < out.value) out.value = two_caps;
    }
    // Sections of the volume-one ball converge to a Gaussian profile, so the
    // two-cap fraction tends to the two-sided normal tail beyond c.
    out.gaussian_limit = std::erfc(c / std::sqrt(2.0));
    if (out.gaussian_limit < out.value) out.value = out.gaussian_limit;
    return out;
}

double unit_volume_ball_radius(int d) {
    if (d < 1) throw std::invalid_argument("unit_volume_ball_radius: dimension must be positive");
    // vol(B_d) = pi^{d/2} / Gamma(d/2 + 1); r_d = vol^{-1/d}
    double log_vol = 0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d + 1.0);
    return std::exp(-log_vol / d);
}

BetaEval beta_fractional(double alpha, double c, int d, bool colorful, int gamma_d_max) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("beta_fractional: alpha must lie in (0, 1]");
    if (d < 2) throw std::invalid_argument("beta_fractional: d must be at least 2");
    BetaEval out;
    out.gamma = eval_gamma(c, gamma_d_max).value;
    double root = std::pow(1.0 - alpha * out.gamma, 1.0 / (2.0 * d));
    out.value = colorful ? 1.0 - 2.0 * d * root : 1.0 - root;
    out.vacuous = out.value <= 0.0;
    return out;
}

}  // namespace qhelly
