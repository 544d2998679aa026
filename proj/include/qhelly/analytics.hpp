#pragma once

#include <vector>

namespace qhelly {

// Fraction of the unit ball's volume in the cap {x : <x,u> >= h}, by
// adaptive quadrature of the one-dimensional section integral
//   int_h^1 (1-t^2)^{(d-1)/2} dt / int_{-1}^1 (1-t^2)^{(d-1)/2} dt
// to relative error 1e-10.
double cap_fraction(int d, double h);

// Same quantity through the regularized incomplete beta identity
//   cap_fraction(d, h) = I_{1-h^2}((d+1)/2, 1/2) / 2,
// kept as an independent cross-check path.
double cap_fraction_beta(int d, double h);

// Two opposite caps at height c*d^{-1/2}, minimized over the dimension
// range [2, d_max] plus the Gaussian limit. The true quantity is an
// infimum over all d >= 2; this is a truncation and is flagged as such.
struct GammaEval {
    double c = 0;
    int d_max = 0;
    std::vector<double> per_d;  // per_d[i] is the two-cap fraction at dimension i+2
    double gaussian_limit = 0;
    double value = 0;
    bool truncated = true;
};

GammaEval eval_gamma(double c, int d_max = 200);

// Radius of the d-dimensional Euclidean ball of volume one.
double unit_volume_ball_radius(int d);

struct BetaEval {
    double value = 0;
    double gamma = 0;
    bool vacuous = false;  // colorful beta can drop to zero or below
};

// 1 - (1 - alpha*gamma(c))^{1/2d}; the colorful variant multiplies the
// root by 2d and may be vacuous.
BetaEval beta_fractional(double alpha, double c, int d, bool colorful, int gamma_d_max = 200);

double regularized_incomplete_beta(double a, double b, double x);

}  // namespace qhelly
