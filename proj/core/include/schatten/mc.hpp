#pragma once

#include <cstdint>

#include "schatten/linops.hpp"
#include "schatten/probes.hpp"
#include "schatten/report.hpp"

namespace schatten {

/// Configuration for the plain Monte Carlo Schatten-p estimator.
///
/// p is restricted to positive integers here; non-integer p belongs to the
/// Chebyshev path (the floor/parity structure of the sampling loop requires
/// integrality).
struct McConfig {
    int p = 1;                     // Schatten degree, >= 1
    std::size_t num_samples = 1;   // M, >= 1
    Distribution distribution = Distribution::gaussian;
    std::uint64_t seed = 0;
    bool store_samples = true;     // false: streaming mode, O(M/256) memory
    int threads = 1;               // 0 = auto
};

/// Monte Carlo trace estimator: value = (1/M) sum_j w_j^T A w_j.
/// Consumes exactly M operator applies. Identical to schatten_estimate with
/// p = 1 and the same stream parameters, bit for bit.
EstimateReport trace_estimate(const LinearOperator& op, std::size_t num_samples,
                              const ProbeStream& stream, int threads = 1,
                              bool store_samples = true);

/// Monte Carlo Schatten-p estimator. Per sample draws w_j, forms
/// y = A^floor(p/2) w_j, and accumulates y^T A y (p odd) or y^T y (p even);
/// the estimate is the p-th root of the accumulated mean. Consumes exactly
/// ceil(p/2) * M operator applies.
///
/// Throws NumericalError if the accumulated mean is negative (possible only
/// for non-PSD input with odd p) rather than taking a complex root.
EstimateReport schatten_estimate(const LinearOperator& op, const McConfig& cfg);

/// Exact Schatten p-norm (sum of eigenvalues^p)^(1/p) of a dense symmetric
/// matrix via eigendecomposition; the oracle for all statistical tests.
/// Eigenvalues in [-1e-10 * ||A||_2, 0) are clipped to zero; anything lower
/// raises NumericalError (the matrix is not SPSD). p is any real >= 1.
double schatten_exact(const Matrix& a, double p);
double schatten_exact(const DenseSymOp& op, double p);

/// Exact Schatten p-norm from a known eigenvalue vector (same clipping rule).
double schatten_from_eigenvalues(const Vector& eigenvalues, double p);

/// Least M such that the estimator is an (epsilon, delta) estimator with
/// Gaussian probes: ceil(8 epsilon^-2 ln(2/delta)). epsilon in (0,1],
/// delta in (0,1).
std::size_t sample_bound(double epsilon, double delta);

/// Upper bound on Var(X_M): 2 ||A^p||_F^2 / (M ||A||_p^(2p-2)), evaluated
/// from the dense eigendecomposition. Throws for the zero matrix.
double variance_bound(const DenseSymOp& op, double p, std::size_t num_samples);
double variance_bound(const Matrix& a, double p, std::size_t num_samples);

}  // namespace schatten
