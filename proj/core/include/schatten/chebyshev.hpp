#pragma once

#include <cstdint>
#include <vector>

#include "schatten/linops.hpp"
#include "schatten/probes.hpp"
#include "schatten/report.hpp"

namespace schatten {

/// Spectral enclosure [a, b] with 0 < a <= b. The accelerated estimator
/// requires the operator spectrum strictly positive, hence a > 0.
struct SpectralInterval {
    double a = 0.0;
    double b = 0.0;
};

/// Degree-N Chebyshev interpolant of g(x) = x^q on [a, b].
///
/// Coefficients follow the convention that c_0 is stored already halved, so
/// evaluation is c_0 T_0 + sum_{j>=1} c_j T_j with no special casing (for the
/// interpolant c_N is likewise halved).
struct ChebyshevModel {
    int degree = 0;            // N
    SpectralInterval interval; // [a, b]
    double exponent = 0.0;     // q
    std::vector<double> coeffs;  // c_0 .. c_N
};

/// Chebyshev interpolant of x^q on [a, b], built by evaluating g at the N+1
/// Chebyshev extreme points of the mapped interval and applying the discrete
/// cosine construction. Requires a > 0. The degenerate interval b == a is
/// exact: a degree-0 model with c_0 = a^q.
ChebyshevModel cheby_coeffs(double exponent, SpectralInterval interval,
                            int degree);

/// psi_N(x) by Clenshaw recurrence on the mapped variable. Evaluation outside
/// [a, b] is permitted mechanically but the error bound is invalid there.
double cheby_eval(const ChebyshevModel& model, double x);

/// Uniform error bound for the degree-N Chebyshev approximation of x^q on
/// [a, b]: 4U / ((rho - 1) rho^N) with U = (a+b)^q and
/// rho = (sqrt(b) + sqrt(a)) / (sqrt(b) - sqrt(a)). Returns 0 when b == a.
double trefethen_bound(double exponent, SpectralInterval interval, int degree);
double trefethen_bound(const ChebyshevModel& model);

/// Smallest Chebyshev degree guaranteeing
/// |tr(phi_N(A)) - ||A||_p^p| <= (epsilon/2) ||A||_p^p for any SPD A whose
/// spectrum lies in an interval with kappa = sqrt(b/a):
///
///   N >= log( (4/eps) (kappa^2+1)^{p/2} (kappa-1)
///             (kappa^p + sqrt(eps/2 + kappa^{2p})) ) / log((kappa+1)/(kappa-1))
///
/// kappa == 1 returns 0 (single-point spectrum, exact); kappa < 1 is an error.
int degree_bound(double epsilon, double p, double kappa);

/// Sample count making the Chebyshev estimator an (epsilon, delta) estimator:
/// ceil(72 epsilon^-2 ln(2/delta)).
std::size_t cheby_sample_bound(double epsilon, double delta);

/// Chebyshev-accelerated Schatten-p estimator. Per sample runs the mapped
/// three-term recurrence
///   y_1 = (2/(b-a)) A w - ((b+a)/(b-a)) w
///   y_{k+1} = (4/(b-a)) A y_k - (2(b+a)/(b-a)) y_k - y_{k-1}
/// accumulating z = sum_k c_k y_k, and adds z^T z / M; the estimate is the
/// accumulated mean to the power 1/p. Consumes exactly N * M operator
/// applies. p may be any real >= 1; N >= 1, M >= 1.
///
/// The estimator targets (tr phi_N(A))^(1/p) with phi_N = psi_N^2, which is
/// SPSD by construction; every per-sample z^T z is a squared norm and hence
/// nonnegative. A negative accumulated mean is impossible for finite input
/// and raises NumericalError if it is ever observed.
EstimateReport cheby_schatten_estimate(const LinearOperator& op,
                                       SpectralInterval interval, double p,
                                       int degree, std::size_t num_samples,
                                       const ProbeStream& stream,
                                       int threads = 1,
                                       bool store_samples = true);

}  // namespace schatten
