#include "schatten/mc.hpp"

#include <chrono>
#include <cmath>

#include "sample_driver.hpp"

namespace schatten {
namespace {

EstimateReport run_mc(const LinearOperator& op, int p, std::size_t num_samples,
                      const ProbeStream& stream, int threads,
                      bool store_samples) {
    if (p < 1) throw InvalidArgument("Schatten degree p must be a positive integer");
    if (num_samples < 1) throw InvalidArgument("sample count M must be >= 1");
    if (stream.dim() != op.dim())
        throw DimensionError("probe stream dimension does not match operator");

    const int half_power = p / 2;
    const bool odd = (p % 2) != 0;
    const std::uint64_t matvecs_before = op.matvec_count();
    const auto t0 = std::chrono::steady_clock::now();

    auto block_fn = [&](std::size_t begin, std::size_t end, double* out) {
        const auto count = static_cast<Eigen::Index>(end - begin);
        Matrix ys = stream.probe_block(begin, count);
        if (half_power > 0) ys = apply_power_block(op, std::move(ys), half_power);
        if (odd) {
            const Matrix ays = op.apply_block(ys);
            for (Eigen::Index c = 0; c < count; ++c)
                out[c] = ys.col(c).dot(ays.col(c));
        } else {
            for (Eigen::Index c = 0; c < count; ++c)
                out[c] = ys.col(c).squaredNorm();
        }
    };

    detail::SampleRun run =
        detail::run_samples(num_samples, threads, store_samples, block_fn);
    if (run.mean < 0.0)
        throw NumericalError(
            "accumulated mean of quadratic forms is negative (" +
            std::to_string(run.mean) + "); the operator is not PSD");

    EstimateReport report;
    report.p_power_mean = run.mean;
    report.value = std::pow(run.mean, 1.0 / static_cast<double>(p));
    report.samples = std::move(run.samples);
    report.matvecs = op.matvec_count() - matvecs_before;
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.p = static_cast<double>(p);
    report.method = "mc";
    report.num_samples = num_samples;
    report.seed = stream.master_seed();
    report.distribution = to_string(stream.distribution());
    return report;
}

}  // namespace

EstimateReport trace_estimate(const LinearOperator& op, std::size_t num_samples,
                              const ProbeStream& stream, int threads,
                              bool store_samples) {
    return run_mc(op, 1, num_samples, stream, threads, store_samples);
}

EstimateReport schatten_estimate(const LinearOperator& op, const McConfig& cfg) {
    const ProbeStream stream(cfg.distribution, cfg.seed, op.dim());
    return run_mc(op, cfg.p, cfg.num_samples, stream, cfg.threads,
                  cfg.store_samples);
}

double schatten_from_eigenvalues(const Vector& eigenvalues, double p) {
    if (p < 1.0) throw InvalidArgument("Schatten p must be >= 1");
    const Eigen::Index n = eigenvalues.size();
    if (n == 0) throw InvalidArgument("empty eigenvalue vector");
    const double lam_max = eigenvalues.cwiseAbs().maxCoeff();
    if (lam_max == 0.0) return 0.0;
    double sum = 0.0;  // sum of (lambda / lam_max)^p, overflow-safe for large p
    for (Eigen::Index i = 0; i < n; ++i) {
        double lam = eigenvalues[i];
        if (lam < 0.0) {
            if (lam < -1e-10 * lam_max)
                throw NumericalError("eigenvalue " + std::to_string(lam) +
                                     " below the SPSD tolerance");
            lam = 0.0;
        }
        sum += std::pow(lam / lam_max, p);
    }
    return lam_max * std::pow(sum, 1.0 / p);
}

double schatten_exact(const Matrix& a, double p) {
    if (a.rows() != a.cols()) throw DimensionError("matrix must be square");
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1e-300, a.cwiseAbs().maxCoeff()))
        throw InvalidArgument("matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a, Eigen::EigenvaluesOnly);
    return schatten_from_eigenvalues(eig.eigenvalues(), p);
}

double schatten_exact(const DenseSymOp& op, double p) {
    return schatten_exact(Matrix(op.matrix()), p);
}

std::size_t sample_bound(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw InvalidArgument("epsilon must be in (0, 1]");
    if (!(delta > 0.0 && delta < 1.0))
        throw InvalidArgument("delta must be in (0, 1)");
    const double m = 8.0 / (epsilon * epsilon) * std::log(2.0 / delta);
    return static_cast<std::size_t>(std::ceil(m));
}

double variance_bound(const Matrix& a, double p, std::size_t num_samples) {
    if (p < 1.0) throw InvalidArgument("Schatten p must be >= 1");
    if (num_samples < 1) throw InvalidArgument("sample count M must be >= 1");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a, Eigen::EigenvaluesOnly);
    const Vector& lam = eig.eigenvalues();
    const double lam_max = lam.cwiseAbs().maxCoeff();
    if (lam_max == 0.0) throw NumericalError("variance bound undefined for the zero matrix");
    // 2 ||A^p||_F^2 / (M ||A||_p^(2p-2)), scaled by lam_max^p to avoid overflow:
    //   = 2 lam_max^2 sum((lam/lam_max)^(2p)) / (M (sum((lam/lam_max)^p))^(2-2/p))
    double sum_p = 0.0, sum_2p = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        double x = lam[i];
        if (x < 0.0) {
            if (x < -1e-10 * lam_max)
                throw NumericalError("matrix is not SPSD");
            x = 0.0;
        }
        const double r = std::pow(x / lam_max, p);
        sum_p += r;
        sum_2p += r * r;
    }
    return 2.0 * lam_max * lam_max * sum_2p /
           (static_cast<double>(num_samples) * std::pow(sum_p, 2.0 - 2.0 / p));
}

double variance_bound(const DenseSymOp& op, double p, std::size_t num_samples) {
    return variance_bound(Matrix(op.matrix()), p, num_samples);
}

}  // namespace schatten
